#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refcox/errors.hpp"

namespace refcox {

struct HasseQuiver {
    std::vector<std::string> vertices;
    // (i, j) with j covering i; indices into vertices
    std::vector<std::pair<int, int>> arrows;
};

/*
  Finite poset: distinct labels plus the full reflexive order relation.
  Instances are immutable after construction and safe to share.
*/
class Poset {
public:
    Poset() = default;

    // Reflexive-transitive closure of arbitrary generating pairs (a < b).
    // Throws input_error on duplicate labels, unknown labels or a cycle.
    static Poset from_relations(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& pairs);
    // Same, with index pairs against the given label list.
    static Poset from_index_relations(std::vector<std::string> labels,
                                      const std::vector<std::pair<int, int>>& pairs);

    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const;  // throws input_error if unknown

    bool leq(int i, int j) const { return i == j || less_[at(i, j)]; }
    bool less(int i, int j) const { return less_[at(i, j)]; }

    HasseQuiver hasse() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.labels_ == b.labels_ && a.less_ == b.less_;
    }

private:
    size_t at(int i, int j) const { return static_cast<size_t>(i) * labels_.size() + static_cast<size_t>(j); }
    std::vector<std::string> labels_;
    std::vector<char> less_;  // strict order, row-major
};

Poset chain(int n);
Poset antichain(int n);
// S with one new element above everything (the label stays clear of S's).
Poset add_max(const Poset& s);
Poset add_min(const Poset& s);
// Induced order on the remaining elements.
Poset remove_element(const Poset& x, const std::string& label);

// Insertion of S into X at v: the elements below v sit below all of S, the
// elements above v sit above all of S. Labels of S get prefixed "v/".
Poset poset_insert(const Poset& x, const std::string& v, const Poset& s);

Poset ordinal_sum(const std::vector<Poset>& parts);
Poset disjoint_union(const std::vector<Poset>& parts);

// Poset whose Hasse quiver is an oriented cycle: runs[0] clockwise arrows,
// runs[1] anticlockwise, alternating. Needs at least two runs of each kind.
Poset a_tilde(const std::vector<int>& runs);

// (p, q) with p >= q when the Hasse quiver is an oriented cycle on >= 4
// vertices with at least two sources; nullopt otherwise.
std::optional<std::pair<int, int>> is_a_tilde(const Poset& s);

// True iff no two distinct directed paths in the Hasse quiver share both
// endpoints, i.e. the incidence algebra is the path algebra of the quiver.
bool is_path_algebra_poset(const Poset& s);

// Reverse all arrows at a source or sink of the Hasse quiver and take the
// path order. Refuses posets that are not path-algebra posets, vertices that
// are neither source nor sink, and reflections whose reversed quiver is no
// longer a Hasse diagram.
Poset bgp_reflect(const Poset& s, const std::string& v);

// Isomorphism-invariant canonical string: equal iff the posets are
// isomorphic. Sizes up to 12 only.
std::string canonical_form(const Poset& s);

bool is_isomorphic(const Poset& a, const Poset& b);

// All posets with 1..max_size elements up to isomorphism, in a deterministic
// order. Grown by adding maximal elements over order ideals.
std::vector<Poset> enumerate_posets(int max_size);

// All run sequences [n+_1, n-_1, ..., n+_k, n-_k] with k >= 2 and total n.
std::vector<std::vector<int>> a_tilde_run_sequences(int n);

} // namespace refcox
