#include "refcox/towers.hpp"

namespace refcox {

namespace {

IntPoly representing(const IntPoly& phi) { return represent(phi, phi.deg()); }

bool phi_recurrence(const std::vector<IntPoly>& phis) {
    const IntPoly xp1{1, 1};
    const IntPoly x{0, 1};
    for (size_t i = 1; i + 1 < phis.size(); ++i)
        if (phis[i + 1] != xp1 * phis[i] - x * phis[i - 1]) return false;
    return true;
}

bool degrees_step_by_one(const std::vector<IntPoly>& phis) {
    for (size_t i = 0; i + 1 < phis.size(); ++i)
        if (phis[i + 1].deg() != phis[i].deg() + 1) return false;
    return true;
}

} // namespace

TowerReport build_tower(const CartanAlgebra& lambda, const std::string& v, int top_length,
                        double mahler_tol) {
    if (top_length < 2) throw input_error("build_tower needs top_length >= 2");
    lambda.index_of(v);  // unknown-vertex check up front
    TowerReport report;
    std::vector<CartanAlgebra> algebras;
    algebras.push_back(cartan_remove(lambda, v));
    algebras.push_back(lambda);
    for (int i = 2; i <= top_length; ++i) algebras.push_back(cartan_insert(lambda, v, chain(i)));
    std::vector<IntPoly> phis;
    for (size_t i = 0; i < algebras.size(); ++i) {
        TowerLevel level;
        level.label = "L" + std::to_string(i);
        level.phi = coxeter_poly(algebras[i]);
        level.q = representing(level.phi);
        level.mahler = mahler_measure(level.phi, mahler_tol);
        phis.push_back(level.phi);
        report.levels.push_back(std::move(level));
    }
    report.degree_ok = degrees_step_by_one(phis);
    report.recurrence_ok = phi_recurrence(phis);
    report.sturm0_ok = sturm_real_simple(report.levels.front().q);
    // Interlacing is an observation: test every consecutive pair whose
    // representing polynomials both have real simple roots.
    report.interlacing_ok = true;
    const Rational tol(Int(1), Int(1) << 20);
    for (size_t i = 0; i + 1 < report.levels.size(); ++i) {
        const IntPoly& a = report.levels[i].q;
        const IntPoly& b = report.levels[i + 1].q;
        if (b.deg() != a.deg() + 1) continue;
        if (!sturm_real_simple(a) || !sturm_real_simple(b)) continue;
        if (a.deg() == 0) continue;
        if (!check_interlacing(a, b, tol)) report.interlacing_ok = false;
    }
    return report;
}

InterlacedVerdict verify_interlaced(const std::vector<IntPoly>& phis) {
    if (phis.size() < 3) throw input_error("verify_interlaced needs at least three levels");
    InterlacedVerdict verdict;
    verdict.degree_ok = degrees_step_by_one(phis);
    verdict.recurrence_ok = phi_recurrence(phis);
    IntPoly q0 = representing(phis.front());
    verdict.sturm0_ok = q0.deg() <= 0 ? true : sturm_real_simple(q0);
    return verdict;
}

CartanAlgebra tree_fixture() {
    std::vector<std::string> vertices{"b1", "b2", "b3", "t3", "mid", "b5", "t5", "b6", "b7"};
    std::vector<std::pair<std::string, std::string>> arrows{
        {"b1", "b2"}, {"b2", "b3"}, {"t3", "b3"}, {"b3", "mid"},
        {"mid", "b5"}, {"b5", "t5"}, {"b5", "b6"}, {"b6", "b7"},
    };
    return cartan_from_quiver(std::move(vertices), arrows);
}

std::vector<std::string> counterexample_names() {
    return {"ext-canonical-234", "tree-11", "e8-star"};
}

TowerReport counterexample(const std::string& name) {
    if (name == "ext-canonical-234")
        return build_tower(extended_canonical({2, 3, 4}), "arm3_2", 3);
    if (name == "tree-11")
        return build_tower(tree_fixture(), "mid", 3);
    if (name == "e8-star")
        return build_tower(star({2, 3, 6}), "arm3_5", 3);
    throw input_error("unknown counterexample \"" + name +
                      "\"; expected ext-canonical-234, tree-11 or e8-star");
}

} // namespace refcox
