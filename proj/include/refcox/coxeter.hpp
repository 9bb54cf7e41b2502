#pragma once

#include <map>
#include <string>
#include <vector>

#include "refcox/cartan.hpp"
#include "refcox/intpoly.hpp"
#include "refcox/poset.hpp"

namespace refcox {

// The pair (phi0, phi1) attached to a poset S: for every triangular algebra
// and vertex, phi of the insertion equals phi_Lambda*phi0 + phi_Lambda^-*phi1.
struct RefinedPair {
    IntPoly phi0;
    IntPoly phi1;
    enum class Source { minor_formula, recovery_formula } source = Source::minor_formula;
};

// Exact integer determinant by fraction-free Bareiss elimination.
Int bareiss_det(std::vector<std::vector<Int>> m);

// det(xC + C^T), computed by evaluating the integer determinant at
// x = 0..n and interpolating. The result must be monic of degree n and
// self-reciprocal; anything else reports an internal bug.
IntPoly coxeter_poly(const CartanAlgebra& lambda);
IntPoly coxeter_poly(const Poset& s);

// Refined pair from the bordered-minor derivation: subtract the pivot row
// and column of xC + C^T from the others, take the principal minor for
// phi0, and recover phi1 = phi_S - (x+1) phi0.
RefinedPair refined_pair_minor(const Poset& s, int pivot = 0);

// Refined pair from phi_S and phi of S-with-a-top-element:
// phi0 = ((x+1) phi_S - phi_Shat)/x, phi1 = (-(x^2+x+1) phi_S + (x+1) phi_Shat)/x.
RefinedPair refined_pair_recovery(const Poset& s);

// Default derivation (minor formula; recovery for the empty poset).
RefinedPair refined_pair(const Poset& s);

// phi_Lambda * phi0_S + phi_Lambda^- * phi1_S
IntPoly predicted_insertion(const IntPoly& phi_lambda, const IntPoly& phi_lambda_minus,
                            const RefinedPair& pair);

// Componentwise bilinear rule for the refined pair of an insertion.
RefinedPair refined_insertion(const RefinedPair& pair_x, const RefinedPair& pair_x_minus,
                              const RefinedPair& pair_s);

struct MultiInsertResult {
    IntPoly phi;
    RefinedPair pair;  // meaningful only when the base is a poset
    bool has_pair = false;
};

// Simultaneous insertion at pairwise distinct vertices, evaluated by the
// 2^n-term inclusion formula over vertex subsets.
MultiInsertResult multi_insert(const Poset& base, const std::map<std::string, Poset>& assignments);
IntPoly multi_insert(const CartanAlgebra& base, const std::map<std::string, Poset>& assignments);

// Coxeter polynomial of an ordinal sum from the refined pairs of the
// summands; symmetric in its arguments.
IntPoly ordinal_sum_poly(const std::vector<RefinedPair>& pairs);

// phi_Lambda*phi_S + phi_Lambda^-*phi_Shat - (x+1)*phi_Lambda^-*phi_S,
// the insertion formula for a poset with a fresh top element.
IntPoly insert_hat_formula(const IntPoly& phi_lambda, const IntPoly& phi_lambda_minus,
                           const IntPoly& phi_s, const IntPoly& phi_s_hat);

} // namespace refcox
