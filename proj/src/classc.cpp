#include "refcox/classc.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace refcox {

namespace {

void validate_step_sets(const Poset& p, const std::vector<int>& down, const std::vector<int>& up) {
    std::set<int> d(down.begin(), down.end()), u(up.begin(), up.end());
    for (int x : d)
        if (u.count(x)) throw input_error("step sets overlap at \"" + p.labels()[static_cast<size_t>(x)] + "\"");
    for (int x : d)
        for (int y = 0; y < p.size(); ++y)
            if (p.less(y, x) && !d.count(y))
                throw input_error("down set is not closed below \"" + p.labels()[static_cast<size_t>(x)] + "\"");
    for (int x : u)
        for (int y = 0; y < p.size(); ++y)
            if (p.less(x, y) && !u.count(y))
                throw input_error("up set is not closed above \"" + p.labels()[static_cast<size_t>(x)] + "\"");
    for (int x : d)
        for (int y : u)
            if (!p.less(x, y))
                throw input_error("step sets are inconsistent: \"" + p.labels()[static_cast<size_t>(x)] +
                                  "\" is not below \"" + p.labels()[static_cast<size_t>(y)] + "\"");
}

// Smallest fresh index for the next virtual element "v<k>".
int next_virtual_number(const Poset& p) {
    int best = 0;
    for (const auto& l : p.labels()) {
        if (l.size() < 2 || l[0] != 'v') continue;
        auto slash = l.find('/');
        if (slash == std::string::npos) continue;
        int k = 0;
        bool numeric = slash > 1;
        for (size_t i = 1; i < slash && numeric; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(l[i]))) numeric = false;
            else k = k * 10 + (l[i] - '0');
        }
        if (numeric) best = std::max(best, k);
    }
    return best + 1;
}

Poset apply_step(const Poset& p, const ClassCStep& step) {
    std::vector<int> down, up;
    for (const auto& l : step.down_set) down.push_back(p.index_of(l));
    for (const auto& l : step.up_set) up.push_back(p.index_of(l));
    validate_step_sets(p, down, up);
    const std::string v = "v" + std::to_string(next_virtual_number(p));
    std::vector<std::string> labels = p.labels();
    labels.push_back(v);
    const int vi = p.size();
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.less(a, b)) pairs.emplace_back(a, b);
    for (int x : down) pairs.emplace_back(x, vi);
    for (int x : up) pairs.emplace_back(vi, x);
    Poset extended = Poset::from_index_relations(std::move(labels), pairs);
    return poset_insert(extended, v, a_tilde(step.atilde_runs));
}

} // namespace

Poset build_class_c(const ClassCCertificate& cert) {
    Poset p;
    for (const auto& step : cert) p = apply_step(p, step);
    return p;
}

ClassCReport verify_class_c(const Poset& s) {
    ClassCReport report;
    report.phi = coxeter_poly(s);
    RefinedPair pair = refined_pair(s);
    report.phi0 = pair.phi0;
    report.phi0_zero = pair.phi0.is_zero();
    report.profile = cyclotomic_profile(report.phi);
    report.cyclotomic = report.profile.remainder == IntPoly{1};
    return report;
}

ClassCCertificate concat_certificates_ordinal(const ClassCCertificate& first,
                                              const ClassCCertificate& second) {
    ClassCCertificate out = first;
    // Labels of everything the first certificate builds; they all sit below
    // every element contributed by the second one.
    std::vector<std::string> base_labels = build_class_c(first).labels();
    const int shift = static_cast<int>(first.size());
    auto renumber = [&](const std::string& label) {
        auto slash = label.find('/');
        if (slash == std::string::npos || label.empty() || label[0] != 'v') return label;
        int idx = std::stoi(label.substr(1, slash - 1));
        return "v" + std::to_string(idx + shift) + label.substr(slash);
    };
    for (const auto& step : second) {
        ClassCStep adjusted;
        adjusted.atilde_runs = step.atilde_runs;
        adjusted.down_set = base_labels;
        for (const auto& l : step.down_set) adjusted.down_set.push_back(renumber(l));
        for (const auto& l : step.up_set) adjusted.up_set.push_back(renumber(l));
        out.push_back(std::move(adjusted));
    }
    return out;
}

std::vector<Poset> enumerate_class_c(int max_size) {
    if (max_size > 12) throw input_error("enumerate_class_c limited to 12 elements");
    std::map<std::string, Poset> seen;
    std::vector<Poset> frontier{Poset{}};
    while (!frontier.empty()) {
        std::vector<Poset> next;
        for (const auto& p : frontier) {
            for (int cycle_size = 4; cycle_size + p.size() <= max_size; ++cycle_size) {
                auto run_lists = a_tilde_run_sequences(cycle_size);
                // every admissible (down set, up set) extension of p
                const int m = p.size();
                for (unsigned dmask = 0; dmask < (1u << m); ++dmask) {
                    bool dok = true;
                    for (int i = 0; i < m && dok; ++i)
                        if ((dmask >> i) & 1)
                            for (int j = 0; j < m && dok; ++j)
                                if (p.less(j, i) && !((dmask >> j) & 1)) dok = false;
                    if (!dok) continue;
                    for (unsigned umask = 0; umask < (1u << m); ++umask) {
                        if (dmask & umask) continue;
                        bool uok = true;
                        for (int i = 0; i < m && uok; ++i)
                            if ((umask >> i) & 1)
                                for (int j = 0; j < m && uok; ++j)
                                    if (p.less(i, j) && !((umask >> j) & 1)) uok = false;
                        if (!uok) continue;
                        bool consistent = true;
                        for (int a = 0; a < m && consistent; ++a)
                            if ((dmask >> a) & 1)
                                for (int b = 0; b < m && consistent; ++b)
                                    if (((umask >> b) & 1) && !p.less(a, b)) consistent = false;
                        if (!consistent) continue;
                        ClassCStep step;
                        for (int i = 0; i < m; ++i) {
                            if ((dmask >> i) & 1) step.down_set.push_back(p.labels()[static_cast<size_t>(i)]);
                            if ((umask >> i) & 1) step.up_set.push_back(p.labels()[static_cast<size_t>(i)]);
                        }
                        for (const auto& runs : run_lists) {
                            step.atilde_runs = runs;
                            Poset q = apply_step(p, step);
                            std::string canon = canonical_form(q);
                            if (seen.emplace(canon, q).second) next.push_back(q);
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Poset> out;
    out.reserve(seen.size());
    for (auto& [canon, p] : seen) out.push_back(std::move(p));
    std::stable_sort(out.begin(), out.end(), [](const Poset& a, const Poset& b) { return a.size() < b.size(); });
    return out;
}

std::vector<ClassCCertificate> figure_certificates() {
    ClassCStep cycle4;
    cycle4.atilde_runs = {1, 1, 1, 1};

    // hanging below one sink of the first cycle
    ClassCCertificate first{cycle4, {{"v1/c0", "v1/c1", "v1/c2"}, {}, {1, 1, 1, 1}}};
    // between a source and the sink above it
    ClassCCertificate second{cycle4, {{"v1/c0"}, {"v1/c1"}, {1, 1, 1, 1}}};
    // stacked on top of the whole first cycle
    ClassCCertificate third{cycle4, {{"v1/c0", "v1/c1", "v1/c2", "v1/c3"}, {}, {1, 1, 1, 1}}};
    return {first, second, third};
}

} // namespace refcox
