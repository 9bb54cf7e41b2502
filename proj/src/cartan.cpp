#include "refcox/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace refcox {

CartanAlgebra::CartanAlgebra(std::vector<std::string> labels, std::vector<std::vector<Int>> matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
    validate();
}

void CartanAlgebra::validate() const {
    const size_t n = labels_.size();
    if (matrix_.size() != n) throw input_error("cartan matrix size does not match labels");
    for (const auto& row : matrix_)
        if (row.size() != n) throw input_error("cartan matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (labels_[i] == labels_[j]) throw input_error("duplicate label \"" + labels_[i] + "\"");
    for (size_t i = 0; i < n; ++i)
        if (matrix_[i][i] != 1)
            throw input_error("cartan matrix needs 1 on the diagonal at \"" + labels_[i] + "\"");
    // acyclicity of the off-diagonal support via iterative removal of sinks
    std::vector<int> outdeg(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && matrix_[i][j] != 0) ++outdeg[i];
    std::vector<char> alive(n, 1);
    for (size_t removed = 0; removed < n;) {
        size_t pick = n;
        for (size_t i = 0; i < n; ++i)
            if (alive[i] && outdeg[i] == 0) { pick = i; break; }
        if (pick == n) throw input_error("cartan matrix support has a directed cycle");
        alive[pick] = 0;
        ++removed;
        for (size_t j = 0; j < n; ++j)
            if (alive[j] && j != pick && matrix_[j][pick] != 0) --outdeg[j];
    }
}

int CartanAlgebra::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[static_cast<size_t>(i)] == label) return i;
    throw input_error("unknown vertex \"" + label + "\"");
}

CartanAlgebra cartan_from_poset(const Poset& x) {
    const int n = x.size();
    std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (x.leq(j, i)) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    return CartanAlgebra(x.labels(), std::move(m));
}

CartanAlgebra cartan_from_quiver(std::vector<std::string> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& arrows) {
    const int n = static_cast<int>(vertices.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i)
        if (!index.emplace(vertices[static_cast<size_t>(i)], i).second)
            throw input_error("duplicate vertex \"" + vertices[static_cast<size_t>(i)] + "\"");
    std::vector<std::vector<int>> out(static_cast<size_t>(n));
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (const auto& [a, b] : arrows) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw input_error("arrow references unknown vertex");
        out[static_cast<size_t>(ia->second)].push_back(ib->second);
        ++indeg[static_cast<size_t>(ib->second)];
    }
    // topological order; fails on a cycle
    std::vector<int> order;
    std::vector<int> deg = indeg;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 0) order.push_back(v);
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : out[static_cast<size_t>(v)])
            if (--deg[static_cast<size_t>(w)] == 0) order.push_back(w);
    }
    if (order.size() != static_cast<size_t>(n)) throw input_error("quiver has an oriented cycle");
    std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int src = 0; src < n; ++src) {
        std::vector<Int> count(static_cast<size_t>(n), Int(0));
        count[static_cast<size_t>(src)] = 1;
        for (int u : order)
            if (count[static_cast<size_t>(u)] != 0)
                for (int w : out[static_cast<size_t>(u)])
                    count[static_cast<size_t>(w)] += count[static_cast<size_t>(u)];
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(src)] = count[static_cast<size_t>(i)];
    }
    return CartanAlgebra(std::move(vertices), std::move(m));
}

namespace {

struct ArmQuiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> arrows;
};

// hub plus per-weight chains of p-1 vertices oriented away from the hub
ArmQuiver star_quiver(const std::vector<int>& arm_weights) {
    if (arm_weights.empty()) throw input_error("star needs at least one arm");
    for (int p : arm_weights)
        if (p < 2) throw input_error("star arm weights must be at least 2");
    ArmQuiver q;
    q.vertices.push_back("hub");
    for (size_t i = 0; i < arm_weights.size(); ++i) {
        std::string prev = "hub";
        for (int k = 1; k < arm_weights[i]; ++k) {
            std::string v = "arm" + std::to_string(i + 1) + "_" + std::to_string(k);
            q.vertices.push_back(v);
            q.arrows.emplace_back(prev, v);
            prev = v;
        }
    }
    return q;
}

CartanAlgebra canonical_like(const std::vector<int>& weights, bool extended) {
    if (weights.size() < 2) throw input_error("canonical algebra needs at least two weights");
    ArmQuiver q = star_quiver(weights);
    if (extended) {
        q.vertices.insert(q.vertices.begin(), "src");
        q.arrows.emplace_back("src", "hub");
    }
    q.vertices.push_back("sink");
    for (size_t i = 0; i < weights.size(); ++i)
        q.arrows.emplace_back("arm" + std::to_string(i + 1) + "_" + std::to_string(weights[i] - 1), "sink");
    CartanAlgebra raw = cartan_from_quiver(q.vertices, q.arrows);
    // The t parallel arm monomials from hub (and src) to sink satisfy t-2
    // independent relations, leaving Hom spaces of dimension 2.
    auto m = raw.matrix();
    const size_t snk = static_cast<size_t>(raw.index_of("sink"));
    m[snk][static_cast<size_t>(raw.index_of("hub"))] = 2;
    if (extended) m[snk][static_cast<size_t>(raw.index_of("src"))] = 2;
    return CartanAlgebra(raw.labels(), std::move(m));
}

} // namespace

CartanAlgebra star(const std::vector<int>& arm_weights) {
    ArmQuiver q = star_quiver(arm_weights);
    return cartan_from_quiver(q.vertices, q.arrows);
}

CartanAlgebra canonical_algebra(const std::vector<int>& weights) { return canonical_like(weights, false); }
CartanAlgebra extended_canonical(const std::vector<int>& weights) { return canonical_like(weights, true); }

CartanAlgebra cartan_insert(const CartanAlgebra& lambda, const std::string& v, const Poset& s) {
    const int vi = lambda.index_of(v);
    const int n = lambda.size();
    std::vector<int> keep;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        if (i != vi) {
            keep.push_back(i);
            labels.push_back(lambda.labels()[static_cast<size_t>(i)]);
        }
    const int m = static_cast<int>(keep.size());
    for (const auto& sl : s.labels()) {
        std::string prefixed = v + "/" + sl;
        if (std::find(labels.begin(), labels.end(), prefixed) != labels.end())
            throw input_error("label collision after prefixing: \"" + prefixed + "\"");
        labels.push_back(prefixed);
    }
    CartanAlgebra cs = cartan_from_poset(s);
    const int total = m + s.size();
    std::vector<std::vector<Int>> out(static_cast<size_t>(total), std::vector<Int>(static_cast<size_t>(total), Int(0)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            out[static_cast<size_t>(a)][static_cast<size_t>(b)] = lambda.entry(keep[static_cast<size_t>(a)], keep[static_cast<size_t>(b)]);
    for (int a = 0; a < m; ++a)
        for (int sidx = 0; sidx < s.size(); ++sidx) {
            out[static_cast<size_t>(a)][static_cast<size_t>(m + sidx)] = lambda.entry(keep[static_cast<size_t>(a)], vi);
            out[static_cast<size_t>(m + sidx)][static_cast<size_t>(a)] = lambda.entry(vi, keep[static_cast<size_t>(a)]);
        }
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b)
            out[static_cast<size_t>(m + a)][static_cast<size_t>(m + b)] = cs.entry(a, b);
    return CartanAlgebra(std::move(labels), std::move(out));
}

CartanAlgebra cartan_remove(const CartanAlgebra& lambda, const std::string& v) {
    return cartan_insert(lambda, v, Poset{});
}

CartanAlgebra sort_by_label(const CartanAlgebra& a) {
    const int n = a.size();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return a.labels()[static_cast<size_t>(i)] < a.labels()[static_cast<size_t>(j)];
    });
    std::vector<std::string> labels;
    std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) labels.push_back(a.labels()[static_cast<size_t>(order[static_cast<size_t>(i)])]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.entry(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    return CartanAlgebra(std::move(labels), std::move(m));
}

} // namespace refcox
