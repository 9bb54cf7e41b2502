#pragma once

#include <string>
#include <utility>
#include <vector>

#include "refcox/numeric.hpp"
#include "refcox/poset.hpp"

namespace refcox {

/*
  Triangular algebra seen at K-theory level: a labeled square integer matrix
  C with C[i][j] = dim Hom(P_i, P_j). Unit diagonal and acyclic off-diagonal
  support, so some simultaneous permutation makes it triangular with unit
  diagonal and det C = 1.
*/
class CartanAlgebra {
public:
    CartanAlgebra() = default;
    CartanAlgebra(std::vector<std::string> labels, std::vector<std::vector<Int>> matrix);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<Int>>& matrix() const { return matrix_; }
    const Int& entry(int i, int j) const { return matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int index_of(const std::string& label) const;

    friend bool operator==(const CartanAlgebra& a, const CartanAlgebra& b) {
        return a.labels_ == b.labels_ && a.matrix_ == b.matrix_;
    }

private:
    void validate() const;
    std::vector<std::string> labels_;
    std::vector<std::vector<Int>> matrix_;
};

// Cartan matrix of the incidence algebra: C[x][y] = 1 iff y <= x.
CartanAlgebra cartan_from_poset(const Poset& x);

// Cartan matrix of the path algebra of an acyclic quiver:
// C[i][j] = number of directed paths from j to i. Parallel arrows allowed.
CartanAlgebra cartan_from_quiver(std::vector<std::string> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& arrows);

// Path algebra of the star with the given arm weights: a hub with, per
// weight p, a chain of p-1 extra vertices oriented away from the hub.
// Vertex labels: "hub", "arm<i>_<k>".
CartanAlgebra star(const std::vector<int>& arm_weights);

// Canonical algebra with t >= 2 weights: hub, per-arm internal chains,
// common sink; the hub-to-sink Hom space has dimension 2 (t parallel arm
// monomials modulo t-2 relations). Labels: "hub", "arm<i>_<k>", "sink".
CartanAlgebra canonical_algebra(const std::vector<int>& weights);

// Canonical algebra extended by a source vertex "src" with one arrow into
// the hub; both src-to-sink and hub-to-sink Hom spaces have dimension 2.
CartanAlgebra extended_canonical(const std::vector<int>& weights);

// Insertion of a poset at a vertex, at Cartan level: new entries copy the
// v-row and v-column for the inserted block, and the block itself carries
// the Cartan matrix of S. Empty S is plain removal.
CartanAlgebra cartan_insert(const CartanAlgebra& lambda, const std::string& v, const Poset& s);

// Delete the row and column of v.
CartanAlgebra cartan_remove(const CartanAlgebra& lambda, const std::string& v);

// Same algebra with rows/columns sorted by label; used to compare results
// of different construction routes entry by entry.
CartanAlgebra sort_by_label(const CartanAlgebra& a);

} // namespace refcox
