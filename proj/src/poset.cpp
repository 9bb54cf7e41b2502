#include "refcox/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

namespace refcox {

namespace {

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t hash_combine(uint64_t h, uint64_t v) { return mix64(h ^ (v + (h << 6) + (h >> 2))); }

} // namespace

Poset Poset::from_relations(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            throw input_error("duplicate label \"" + labels[i] + "\"");
    }
    std::vector<std::pair<int, int>> ipairs;
    ipairs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw input_error("unknown label \"" + a + "\" in relation");
        if (ib == index.end()) throw input_error("unknown label \"" + b + "\" in relation");
        ipairs.emplace_back(ia->second, ib->second);
    }
    return from_index_relations(std::move(labels), ipairs);
}

Poset Poset::from_index_relations(std::vector<std::string> labels,
                                  const std::vector<std::pair<int, int>>& pairs) {
    Poset p;
    const int n = static_cast<int>(labels.size());
    p.labels_ = std::move(labels);
    p.less_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw input_error("relation index out of range");
        if (a == b) throw input_error("relation \"" + p.labels_[static_cast<size_t>(a)] +
                                      " < itself\" violates antisymmetry");
        p.less_[p.at(a, b)] = 1;
    }
    // Warshall closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!p.less_[p.at(i, k)]) continue;
            for (int j = 0; j < n; ++j)
                if (p.less_[p.at(k, j)]) p.less_[p.at(i, j)] = 1;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.less_[p.at(i, j)] && p.less_[p.at(j, i)])
                throw input_error("directed cycle through \"" + p.labels_[static_cast<size_t>(i)] +
                                  "\" and \"" + p.labels_[static_cast<size_t>(j)] + "\"");
    return p;
}

int Poset::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[static_cast<size_t>(i)] == label) return i;
    throw input_error("unknown element \"" + label + "\"");
}

HasseQuiver Poset::hasse() const {
    HasseQuiver q;
    q.vertices = labels_;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!less(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (less(i, k) && less(k, j)) cover = false;
            if (cover) q.arrows.emplace_back(i, j);
        }
    return q;
}

Poset chain(int n) {
    if (n < 0) throw input_error("chain of negative size");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Poset::from_index_relations(std::move(labels), pairs);
}

Poset antichain(int n) {
    if (n < 0) throw input_error("antichain of negative size");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
    return Poset::from_index_relations(std::move(labels), {});
}

namespace {

std::string fresh_label(const std::vector<std::string>& taken, std::string base) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
    return base;
}

Poset adjoin_extremum(const Poset& s, bool maximal, const std::string& base) {
    std::vector<std::string> labels = s.labels();
    labels.push_back(fresh_label(labels, base));
    const int n = s.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (s.less(i, j)) pairs.emplace_back(i, j);
    for (int i = 0; i < n; ++i)
        pairs.emplace_back(maximal ? i : n, maximal ? n : i);
    return Poset::from_index_relations(std::move(labels), pairs);
}

} // namespace

Poset add_max(const Poset& s) { return adjoin_extremum(s, true, "top"); }
Poset add_min(const Poset& s) { return adjoin_extremum(s, false, "bot"); }

Poset remove_element(const Poset& x, const std::string& label) {
    const int v = x.index_of(label);
    std::vector<std::string> labels;
    std::vector<int> keep;
    for (int i = 0; i < x.size(); ++i)
        if (i != v) {
            keep.push_back(i);
            labels.push_back(x.labels()[static_cast<size_t>(i)]);
        }
    std::vector<std::pair<int, int>> pairs;
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b)
            if (x.less(keep[a], keep[b])) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Poset::from_index_relations(std::move(labels), pairs);
}

Poset poset_insert(const Poset& x, const std::string& v, const Poset& s) {
    const int vi = x.index_of(v);
    std::vector<std::string> labels;
    std::vector<int> keep;
    for (int i = 0; i < x.size(); ++i)
        if (i != vi) {
            keep.push_back(i);
            labels.push_back(x.labels()[static_cast<size_t>(i)]);
        }
    const int m = static_cast<int>(keep.size());
    for (const auto& sl : s.labels()) {
        std::string prefixed = v + "/" + sl;
        if (std::find(labels.begin(), labels.end(), prefixed) != labels.end())
            throw input_error("label collision after prefixing: \"" + prefixed + "\"");
        labels.push_back(prefixed);
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (x.less(keep[static_cast<size_t>(a)], keep[static_cast<size_t>(b)])) pairs.emplace_back(a, b);
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b)
            if (s.less(a, b)) pairs.emplace_back(m + a, m + b);
    for (int a = 0; a < m; ++a) {
        if (x.less(keep[static_cast<size_t>(a)], vi))
            for (int b = 0; b < s.size(); ++b) pairs.emplace_back(a, m + b);
        if (x.less(vi, keep[static_cast<size_t>(a)]))
            for (int b = 0; b < s.size(); ++b) pairs.emplace_back(m + b, a);
    }
    return Poset::from_index_relations(std::move(labels), pairs);
}

namespace {

Poset sum_of_parts(const std::vector<Poset>& parts, bool ordinal) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> base;
    int offset = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
        base.push_back(offset);
        for (const auto& l : parts[p].labels())
            labels.push_back(std::to_string(p + 1) + "." + l);
        for (int a = 0; a < parts[p].size(); ++a)
            for (int b = 0; b < parts[p].size(); ++b)
                if (parts[p].less(a, b)) pairs.emplace_back(offset + a, offset + b);
        offset += parts[p].size();
    }
    if (ordinal)
        for (size_t p = 0; p < parts.size(); ++p)
            for (size_t r = p + 1; r < parts.size(); ++r)
                for (int a = 0; a < parts[p].size(); ++a)
                    for (int b = 0; b < parts[r].size(); ++b)
                        pairs.emplace_back(base[p] + a, base[r] + b);
    return Poset::from_index_relations(std::move(labels), pairs);
}

} // namespace

Poset ordinal_sum(const std::vector<Poset>& parts) { return sum_of_parts(parts, true); }
Poset disjoint_union(const std::vector<Poset>& parts) { return sum_of_parts(parts, false); }

Poset a_tilde(const std::vector<int>& runs) {
    if (runs.size() < 4 || runs.size() % 2 != 0)
        throw input_error("a_tilde needs at least two runs of each orientation");
    for (int r : runs)
        if (r < 1) throw input_error("a_tilde run lengths must be positive");
    std::vector<char> symbol;
    for (size_t i = 0; i < runs.size(); ++i)
        symbol.insert(symbol.end(), static_cast<size_t>(runs[i]), i % 2 == 0 ? '+' : '-');
    const int n = static_cast<int>(symbol.size());
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < n; ++j) {
        int a = j, b = (j + 1) % n;
        if (symbol[static_cast<size_t>(j)] == '+')
            pairs.emplace_back(a, b);
        else
            pairs.emplace_back(b, a);
    }
    return Poset::from_index_relations(std::move(labels), pairs);
}

std::optional<std::pair<int, int>> is_a_tilde(const Poset& s) {
    const int n = s.size();
    if (n < 4) return std::nullopt;
    auto h = s.hasse();
    std::vector<std::vector<int>> nbr(static_cast<size_t>(n));
    std::vector<int> indeg(static_cast<size_t>(n), 0), outdeg(static_cast<size_t>(n), 0);
    for (auto [a, b] : h.arrows) {
        nbr[static_cast<size_t>(a)].push_back(b);
        nbr[static_cast<size_t>(b)].push_back(a);
        ++outdeg[static_cast<size_t>(a)];
        ++indeg[static_cast<size_t>(b)];
    }
    for (int v = 0; v < n; ++v)
        if (nbr[static_cast<size_t>(v)].size() != 2) return std::nullopt;
    // walk the cycle from vertex 0 toward its smaller-indexed neighbour
    std::vector<int> order;
    int prev = 0;
    int cur = std::min(nbr[0][0], nbr[0][1]);
    order.push_back(0);
    while (cur != 0) {
        order.push_back(cur);
        int next = nbr[static_cast<size_t>(cur)][0] == prev ? nbr[static_cast<size_t>(cur)][1]
                                                            : nbr[static_cast<size_t>(cur)][0];
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;  // disconnected
    int sources = 0;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) ++sources;
    if (sources < 2) return std::nullopt;
    auto arrow_set = std::set<std::pair<int, int>>(h.arrows.begin(), h.arrows.end());
    int with = 0;
    for (int i = 0; i < n; ++i) {
        int a = order[static_cast<size_t>(i)], b = order[static_cast<size_t>((i + 1) % n)];
        if (arrow_set.count({a, b})) ++with;
    }
    int p = std::max(with, n - with), q = std::min(with, n - with);
    return std::make_pair(p, q);
}

namespace {

// Directed path counts in the Hasse quiver, saturated at 2.
std::vector<std::vector<int>> hasse_path_counts(const Poset& s) {
    const int n = s.size();
    auto h = s.hasse();
    std::vector<std::vector<int>> out(static_cast<size_t>(n));
    for (auto [a, b] : h.arrows) out[static_cast<size_t>(a)].push_back(b);
    // topological order: sort by number of elements below
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::vector<int> below(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (s.less(j, i)) ++below[static_cast<size_t>(i)];
    std::sort(order.begin(), order.end(), [&](int a, int b) { return below[static_cast<size_t>(a)] < below[static_cast<size_t>(b)]; });
    std::vector<std::vector<int>> count(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int src = 0; src < n; ++src) {
        auto& c = count[static_cast<size_t>(src)];
        c[static_cast<size_t>(src)] = 1;
        for (int u : order)
            if (c[static_cast<size_t>(u)] > 0)
                for (int w : out[static_cast<size_t>(u)])
                    c[static_cast<size_t>(w)] = std::min(2, c[static_cast<size_t>(w)] + c[static_cast<size_t>(u)]);
        c[static_cast<size_t>(src)] = 0;
    }
    return count;
}

} // namespace

bool is_path_algebra_poset(const Poset& s) {
    auto count = hasse_path_counts(s);
    for (const auto& row : count)
        for (int c : row)
            if (c > 1) return false;
    return true;
}

Poset bgp_reflect(const Poset& s, const std::string& v) {
    if (!is_path_algebra_poset(s))
        throw input_error("bgp_reflect requires a path-algebra poset");
    const int vi = s.index_of(v);
    auto h = s.hasse();
    int indeg = 0, outdeg = 0;
    for (auto [a, b] : h.arrows) {
        if (b == vi) ++indeg;
        if (a == vi) ++outdeg;
    }
    if (indeg != 0 && outdeg != 0)
        throw input_error("bgp_reflect: \"" + v + "\" is neither a source nor a sink");
    std::vector<std::pair<int, int>> arrows;
    for (auto [a, b] : h.arrows) {
        if (a == vi || b == vi)
            arrows.emplace_back(b, a);
        else
            arrows.emplace_back(a, b);
    }
    Poset reflected = Poset::from_index_relations(s.labels(), arrows);
    auto rh = reflected.hasse();
    auto sorted_pairs = [](std::vector<std::pair<int, int>> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted_pairs(rh.arrows) != sorted_pairs(arrows))
        throw input_error("bgp_reflect: reversed quiver is not the Hasse diagram of its path order");
    return reflected;
}

namespace {

struct CanonSearch {
    int n;
    std::vector<uint16_t> up, down;     // strict relation bit rows / columns
    std::vector<uint64_t> color;
    std::vector<uint16_t> twin;         // interchangeable elements
    std::vector<uint64_t> pos_color;    // class color required at each position
    std::vector<int> perm, tried;
    std::vector<char> cur, best;
    bool have_best = false;

    bool less(int i, int j) const { return (up[static_cast<size_t>(i)] >> j) & 1; }

    void refine() {
        for (int v = 0; v < n; ++v)
            color[static_cast<size_t>(v)] =
                hash_combine(static_cast<uint64_t>(std::popcount(up[static_cast<size_t>(v)])) * 31 + 7,
                             static_cast<uint64_t>(std::popcount(down[static_cast<size_t>(v)])));
        for (int round = 0; round < n; ++round) {
            std::vector<uint64_t> next(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) {
                std::vector<uint64_t> lows, highs;
                for (int u = 0; u < n; ++u) {
                    if (less(u, v)) lows.push_back(color[static_cast<size_t>(u)]);
                    if (less(v, u)) highs.push_back(color[static_cast<size_t>(u)]);
                }
                std::sort(lows.begin(), lows.end());
                std::sort(highs.begin(), highs.end());
                uint64_t h = color[static_cast<size_t>(v)];
                for (uint64_t x : lows) h = hash_combine(h, x);
                h = hash_combine(h, 0x5eedULL);
                for (uint64_t x : highs) h = hash_combine(h, x);
                next[static_cast<size_t>(v)] = h;
            }
            if (next == color) break;
            color = std::move(next);
        }
    }

    void compute_twins() {
        twin.assign(static_cast<size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) {
                if (less(u, w) || less(w, u)) continue;
                uint16_t mask = static_cast<uint16_t>(~((1u << u) | (1u << w)));
                if ((up[static_cast<size_t>(u)] & mask) == (up[static_cast<size_t>(w)] & mask) &&
                    (down[static_cast<size_t>(u)] & mask) == (down[static_cast<size_t>(w)] & mask)) {
                    twin[static_cast<size_t>(u)] |= static_cast<uint16_t>(1u << w);
                    twin[static_cast<size_t>(w)] |= static_cast<uint16_t>(1u << u);
                }
            }
    }

    void dfs(int depth, uint16_t used, bool lt) {
        if (depth == n) {
            // lt can be stale once best has been replaced below an ancestor,
            // so the leaf always compares outright.
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        std::vector<int> tried_here;
        for (int e = 0; e < n; ++e) {
            if ((used >> e) & 1) continue;
            if (color[static_cast<size_t>(e)] != pos_color[static_cast<size_t>(depth)]) continue;
            bool duplicate = false;
            for (int t : tried_here)
                if ((twin[static_cast<size_t>(e)] >> t) & 1) { duplicate = true; break; }
            if (duplicate) continue;
            tried_here.push_back(e);

            size_t mark = cur.size();
            bool prune = false;
            bool lt2 = lt;
            auto push_bit = [&](char bit) {
                if (prune) return;
                size_t pos = cur.size();
                if (!lt2 && have_best) {
                    if (bit > best[pos]) { prune = true; return; }
                    if (bit < best[pos]) lt2 = true;
                }
                cur.push_back(bit);
            };
            for (int j = 0; j < depth && !prune; ++j) push_bit(static_cast<char>(less(e, perm[static_cast<size_t>(j)])));
            for (int j = 0; j < depth && !prune; ++j) push_bit(static_cast<char>(less(perm[static_cast<size_t>(j)], e)));
            if (!prune) {
                perm.push_back(e);
                dfs(depth + 1, static_cast<uint16_t>(used | (1u << e)), lt2);
                perm.pop_back();
            }
            cur.resize(mark);
        }
    }
};

} // namespace

std::string canonical_form(const Poset& s) {
    const int n = s.size();
    if (n > 12) throw input_error("canonical_form limited to 12 elements");
    if (n == 0) return "0:";
    CanonSearch cs;
    cs.n = n;
    cs.up.assign(static_cast<size_t>(n), 0);
    cs.down.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (s.less(i, j)) {
                cs.up[static_cast<size_t>(i)] |= static_cast<uint16_t>(1u << j);
                cs.down[static_cast<size_t>(j)] |= static_cast<uint16_t>(1u << i);
            }
    cs.color.assign(static_cast<size_t>(n), 0);
    cs.refine();
    cs.compute_twins();
    std::vector<uint64_t> sorted_colors = cs.color;
    std::sort(sorted_colors.begin(), sorted_colors.end());
    cs.pos_color = sorted_colors;
    cs.dfs(0, 0, false);
    std::string out = std::to_string(n) + ":";
    static const char* hex = "0123456789abcdef";
    int nibble = 0, bits = 0;
    for (char b : cs.best) {
        nibble = (nibble << 1) | b;
        if (++bits == 4) {
            out += hex[nibble];
            nibble = 0;
            bits = 0;
        }
    }
    if (bits) out += hex[nibble << (4 - bits)];
    return out;
}

bool is_isomorphic(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<Poset> enumerate_posets(int max_size) {
    if (max_size > 8) throw input_error("enumerate_posets limited to 8 elements");
    std::vector<Poset> result;
    std::vector<Poset> current;
    if (max_size >= 1) {
        current.push_back(antichain(1));
        result.push_back(current.front());
    }
    for (int size = 2; size <= max_size; ++size) {
        std::map<std::string, Poset> next;
        for (const auto& p : current) {
            const int m = p.size();
            std::vector<std::pair<int, int>> base_pairs;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (p.less(i, j)) base_pairs.emplace_back(i, j);
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                // the new element's lower set must be an order ideal
                bool ideal = true;
                for (int i = 0; i < m && ideal; ++i) {
                    if (!((mask >> i) & 1)) continue;
                    for (int j = 0; j < m && ideal; ++j)
                        if (p.less(j, i) && !((mask >> j) & 1)) ideal = false;
                }
                if (!ideal) continue;
                auto labels = p.labels();
                labels.push_back("e" + std::to_string(size));
                auto pairs = base_pairs;
                for (int i = 0; i < m; ++i)
                    if ((mask >> i) & 1) pairs.emplace_back(i, m);
                Poset q = Poset::from_index_relations(std::move(labels), pairs);
                next.emplace(canonical_form(q), std::move(q));
            }
        }
        current.clear();
        for (auto& [key, q] : next) current.push_back(std::move(q));
        result.insert(result.end(), current.begin(), current.end());
    }
    return result;
}

std::vector<std::vector<int>> a_tilde_run_sequences(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 1) {
            if (remaining >= 1) {
                parts.push_back(remaining);
                out.push_back(parts);
                parts.pop_back();
            }
            return;
        }
        for (int f = 1; f <= remaining - slots + 1; ++f) {
            parts.push_back(f);
            self(self, remaining - f, slots - 1);
            parts.pop_back();
        }
    };
    for (int k = 2; 2 * k <= n; ++k) rec(rec, n, 2 * k);
    return out;
}

} // namespace refcox
