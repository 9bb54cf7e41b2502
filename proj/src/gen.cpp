#include "refcox/gen.hpp"

#include <algorithm>

namespace refcox {

Poset random_poset(Rng& rng, int n) {
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(rng.below(i + 1))]);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(3, 10)) pairs.emplace_back(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return Poset::from_index_relations(std::move(labels), pairs);
}

CartanAlgebra random_cartan(Rng& rng, int n) {
    if (rng.chance(1, 2)) return cartan_from_poset(random_poset(rng, n));
    std::vector<std::string> vertices;
    for (int i = 0; i < n; ++i) vertices.push_back("q" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> arrows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rng.chance(3, 10)) {
                arrows.emplace_back(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)]);
                if (rng.chance(1, 8))  // occasional parallel arrow
                    arrows.emplace_back(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)]);
            }
        }
    return cartan_from_quiver(std::move(vertices), arrows);
}

std::pair<IntPoly, int> random_self_reciprocal(Rng& rng, int max_deg) {
    const int n = rng.in_range(0, max_deg);
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    for (int i = 0; 2 * i <= n; ++i) {
        Int c(rng.in_range(-9, 9));
        coeffs[static_cast<size_t>(i)] = c;
        coeffs[static_cast<size_t>(n - i)] = c;
    }
    return {IntPoly(std::move(coeffs)), n};
}

IntPoly random_poly(Rng& rng, int deg, int bound) {
    std::vector<Int> coeffs(static_cast<size_t>(deg) + 1);
    for (auto& c : coeffs) c = rng.in_range(-bound, bound);
    return IntPoly(std::move(coeffs));
}

} // namespace refcox
