#pragma once

#include <string>
#include <vector>

#include "refcox/cartan.hpp"
#include "refcox/coxeter.hpp"
#include "refcox/polyspec.hpp"

namespace refcox {

struct TowerLevel {
    std::string label;
    IntPoly phi;
    IntPoly q;  // representing polynomial, phi(x^2) = x^deg * q(x + 1/x)
    MahlerResult mahler;
};

struct TowerReport {
    std::vector<TowerLevel> levels;
    bool degree_ok = false;       // degrees grow by exactly one
    bool recurrence_ok = false;   // phi_{i+1} = (x+1) phi_i - x phi_{i-1}
    bool sturm0_ok = false;       // roots of q_0 real and simple
    bool interlacing_ok = false;  // consecutive q's interlace wherever testable
};

struct InterlacedVerdict {
    bool degree_ok = false;
    bool recurrence_ok = false;
    bool sturm0_ok = false;
    bool all() const { return degree_ok && recurrence_ok && sturm0_ok; }
};

// Levels remove(lambda, v), lambda, and insert(lambda, v, chain(i)) for
// 2 <= i <= top_length, each Coxeter polynomial computed directly from its
// Cartan matrix so the recurrence is observed rather than assumed.
TowerReport build_tower(const CartanAlgebra& lambda, const std::string& v, int top_length,
                        double mahler_tol = 1e-12);

// Conditions for an interlaced tower on an arbitrary phi sequence.
InterlacedVerdict verify_interlaced(const std::vector<IntPoly>& phis);

// The three reference towers. Names: ext-canonical-234, tree-11, e8-star.
TowerReport counterexample(const std::string& name);
std::vector<std::string> counterexample_names();

// Fixture behind "tree-11": a nine-vertex tree, a path of seven with hanging
// vertices at positions three and five; the tower grows the middle vertex.
CartanAlgebra tree_fixture();

} // namespace refcox
