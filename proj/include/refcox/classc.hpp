#pragma once

#include <string>
#include <vector>

#include "refcox/coxeter.hpp"
#include "refcox/poset.hpp"
#include "refcox/polyspec.hpp"

namespace refcox {

/*
  Constructive membership certificate: each step extends the current poset
  by one virtual element (with the given strict lower and upper sets) and
  then inserts an oriented-cycle poset at that element.
*/
struct ClassCStep {
    std::vector<std::string> down_set;
    std::vector<std::string> up_set;
    std::vector<int> atilde_runs;
};

using ClassCCertificate = std::vector<ClassCStep>;

// Replay a certificate starting from the empty poset. The virtual element of
// step i is labeled "v<i>". Throws input_error on inconsistent step sets.
Poset build_class_c(const ClassCCertificate& cert);

struct ClassCReport {
    IntPoly phi;
    IntPoly phi0;
    bool phi0_zero = false;
    bool cyclotomic = false;
    CyclotomicProfile profile;
    bool certified() const { return phi0_zero && cyclotomic; }
};

// Check the two guaranteed properties of class members: vanishing phi0 and
// a cyclotomic Coxeter polynomial.
ClassCReport verify_class_c(const Poset& s);

// Concatenation helper: a certificate for the ordinal sum of two certified
// posets (extend by a new top element, then insert the second poset's
// construction on top of it step by step).
ClassCCertificate concat_certificates_ordinal(const ClassCCertificate& first,
                                              const ClassCCertificate& second);

// All members of the class with 4..max_size elements, up to isomorphism,
// in a deterministic order. max_size <= 12.
std::vector<Poset> enumerate_class_c(int max_size);

// Certificates building the three reference posets with eight elements.
std::vector<ClassCCertificate> figure_certificates();

} // namespace refcox
