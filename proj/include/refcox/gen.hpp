#pragma once

#include <cstdint>
#include <random>

#include "refcox/cartan.hpp"
#include "refcox/intpoly.hpp"
#include "refcox/poset.hpp"

namespace refcox {

/*
  Seeded instance generation for the randomized verification suites.
  mt19937_64 output is pinned by the standard and the mapping below avoids
  distribution classes, so a seed fully determines every instance on every
  platform.
*/
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    // uniform-ish value in [0, n); the modulo bias is irrelevant here
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int in_range(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool chance(int num, int den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

// Random poset on n elements: random edges on a shuffled linear order,
// transitively closed.
Poset random_poset(Rng& rng, int n);

// Random triangular algebra: either the incidence algebra of a random poset
// or the path algebra of a random acyclic quiver with occasional parallel
// arrows.
CartanAlgebra random_cartan(Rng& rng, int n);

// Random polynomial with coeff(i) == coeff(n-i), n <= max_deg, entries in [-9, 9].
// Returns the polynomial and the reciprocity index n.
std::pair<IntPoly, int> random_self_reciprocal(Rng& rng, int max_deg);

// Random polynomial with coefficients in [-bound, bound], degree exactly n
// unless everything drew zero.
IntPoly random_poly(Rng& rng, int deg, int bound);

} // namespace refcox
