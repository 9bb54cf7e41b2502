#include "refcox/coxeter.hpp"

#include <algorithm>

namespace refcox {

Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw input_error("determinant of a non-square matrix");
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = n;
            for (size_t i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { swap_row = i; break; }
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// Integer matrix tC + C^T.
std::vector<std::vector<Int>> coxeter_matrix_at(const CartanAlgebra& lambda, const Int& t) {
    const size_t n = static_cast<size_t>(lambda.size());
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = t * lambda.matrix()[i][j] + lambda.matrix()[j][i];
    return m;
}

} // namespace

IntPoly coxeter_poly(const CartanAlgebra& lambda) {
    const int n = lambda.size();
    std::vector<std::pair<Int, Int>> points;
    points.reserve(static_cast<size_t>(n) + 1);
    for (int t = 0; t <= n; ++t)
        points.emplace_back(Int(t), bareiss_det(coxeter_matrix_at(lambda, Int(t))));
    IntPoly phi = interpolate(points, n);
    if (phi.deg() != n || !phi.is_monic())
        throw internal_error("coxeter polynomial is not monic of the expected degree");
    if (!phi.reciprocal_check(n))
        throw internal_error("coxeter polynomial failed the reciprocity check");
    return phi;
}

IntPoly coxeter_poly(const Poset& s) { return coxeter_poly(cartan_from_poset(s)); }

RefinedPair refined_pair_minor(const Poset& s, int pivot) {
    if (s.empty()) return {IntPoly{}, IntPoly{1}, RefinedPair::Source::minor_formula};
    const int n = s.size();
    if (pivot < 0 || pivot >= n) throw input_error("refined_pair_minor: pivot out of range");
    CartanAlgebra c = cartan_from_poset(s);
    // phi0 = principal minor, after clearing the pivot row and column, on
    // the complement of the pivot; interpolated like the full determinant.
    std::vector<std::pair<Int, Int>> points;
    points.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        auto m = coxeter_matrix_at(c, Int(t));
        const size_t p = static_cast<size_t>(pivot);
        for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
            if (i == p) continue;
            for (size_t j = 0; j < static_cast<size_t>(n); ++j) m[i][j] -= m[p][j];
        }
        for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
            if (i == p) continue;
            for (size_t j = 0; j < static_cast<size_t>(n); ++j)
                if (j != p) m[j][i] -= m[j][p];
        }
        std::vector<std::vector<Int>> minor;
        for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
            if (i == p) continue;
            std::vector<Int> row;
            for (size_t j = 0; j < static_cast<size_t>(n); ++j)
                if (j != p) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        points.emplace_back(Int(t), bareiss_det(std::move(minor)));
    }
    RefinedPair pair;
    pair.source = RefinedPair::Source::minor_formula;
    pair.phi0 = interpolate(points, n - 1);
    pair.phi1 = coxeter_poly(s) - IntPoly{1, 1} * pair.phi0;
    return pair;
}

RefinedPair refined_pair_recovery(const Poset& s) {
    const IntPoly phi_s = coxeter_poly(s);
    const IntPoly phi_hat = coxeter_poly(add_max(s));
    const IntPoly xp1{1, 1};
    RefinedPair pair;
    pair.source = RefinedPair::Source::recovery_formula;
    pair.phi0 = (xp1 * phi_s - phi_hat).divide_by_x_exact();
    pair.phi1 = (xp1 * phi_hat - IntPoly{1, 1, 1} * phi_s).divide_by_x_exact();
    return pair;
}

RefinedPair refined_pair(const Poset& s) { return refined_pair_minor(s); }

IntPoly predicted_insertion(const IntPoly& phi_lambda, const IntPoly& phi_lambda_minus,
                            const RefinedPair& pair) {
    return phi_lambda * pair.phi0 + phi_lambda_minus * pair.phi1;
}

RefinedPair refined_insertion(const RefinedPair& pair_x, const RefinedPair& pair_x_minus,
                              const RefinedPair& pair_s) {
    RefinedPair out;
    out.phi0 = pair_x.phi0 * pair_s.phi0 + pair_x_minus.phi0 * pair_s.phi1;
    out.phi1 = pair_x.phi1 * pair_s.phi0 + pair_x_minus.phi1 * pair_s.phi1;
    out.source = pair_x.source;
    return out;
}

namespace {

std::vector<std::string> checked_vertices(const std::vector<std::string>& labels,
                                          const std::map<std::string, Poset>& assignments) {
    std::vector<std::string> vs;
    for (const auto& [v, s] : assignments) {
        (void)s;
        if (std::find(labels.begin(), labels.end(), v) == labels.end())
            throw input_error("unknown vertex \"" + v + "\" in multi-insert");
        vs.push_back(v);
    }
    return vs;  // std::map keys are already distinct and sorted
}

} // namespace

MultiInsertResult multi_insert(const Poset& base, const std::map<std::string, Poset>& assignments) {
    auto vs = checked_vertices(base.labels(), assignments);
    const size_t k = vs.size();
    std::vector<RefinedPair> pairs;
    pairs.reserve(k);
    for (const auto& v : vs) pairs.push_back(refined_pair(assignments.at(v)));
    MultiInsertResult result;
    result.has_pair = true;
    for (size_t subset = 0; subset < (1u << k); ++subset) {
        Poset reduced = base;
        for (size_t i = 0; i < k; ++i)
            if (subset & (1u << i)) reduced = remove_element(reduced, vs[i]);
        RefinedPair base_pair = refined_pair(reduced);
        IntPoly base_phi = coxeter_poly(reduced);
        IntPoly f{1};
        for (size_t i = 0; i < k; ++i)
            f = f * ((subset & (1u << i)) ? pairs[i].phi1 : pairs[i].phi0);
        result.phi = result.phi + base_phi * f;
        result.pair.phi0 = result.pair.phi0 + base_pair.phi0 * f;
        result.pair.phi1 = result.pair.phi1 + base_pair.phi1 * f;
    }
    return result;
}

IntPoly multi_insert(const CartanAlgebra& base, const std::map<std::string, Poset>& assignments) {
    auto vs = checked_vertices(base.labels(), assignments);
    const size_t k = vs.size();
    std::vector<RefinedPair> pairs;
    pairs.reserve(k);
    for (const auto& v : vs) pairs.push_back(refined_pair(assignments.at(v)));
    IntPoly phi;
    for (size_t subset = 0; subset < (1u << k); ++subset) {
        CartanAlgebra reduced = base;
        for (size_t i = 0; i < k; ++i)
            if (subset & (1u << i)) reduced = cartan_remove(reduced, vs[i]);
        IntPoly f{1};
        for (size_t i = 0; i < k; ++i)
            f = f * ((subset & (1u << i)) ? pairs[i].phi1 : pairs[i].phi0);
        phi = phi + coxeter_poly(reduced) * f;
    }
    return phi;
}

IntPoly ordinal_sum_poly(const std::vector<RefinedPair>& pairs) {
    const int n = static_cast<int>(pairs.size());
    // elementary[k] = sum over eps with |eps| = k of prod phi^{eps_i},
    // accumulated as coefficients of a formal marker variable.
    std::vector<IntPoly> elementary(static_cast<size_t>(n) + 1);
    elementary[0] = IntPoly{1};
    for (int i = 0; i < n; ++i) {
        for (int k = std::min(i + 1, n); k >= 0; --k) {
            IntPoly acc = elementary[static_cast<size_t>(k)] * pairs[static_cast<size_t>(i)].phi0;
            if (k > 0) acc = acc + elementary[static_cast<size_t>(k - 1)] * pairs[static_cast<size_t>(i)].phi1;
            elementary[static_cast<size_t>(k)] = std::move(acc);
        }
    }
    IntPoly result;
    for (int k = 0; k <= n; ++k)
        result = result + geometric_sum(n + 1 - k) * elementary[static_cast<size_t>(k)];
    return result;
}

IntPoly insert_hat_formula(const IntPoly& phi_lambda, const IntPoly& phi_lambda_minus,
                           const IntPoly& phi_s, const IntPoly& phi_s_hat) {
    return phi_lambda * phi_s + phi_lambda_minus * phi_s_hat -
           IntPoly{1, 1} * (phi_lambda_minus * phi_s);
}

} // namespace refcox
