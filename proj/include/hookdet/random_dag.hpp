#pragma once

#include <cstdint>
#include <random>

#include "hookdet/lgv.hpp"

namespace hookdet {

// Deterministic RNG wrapper. Reduction is done by hand because the
// distributions in <random> are implementation-defined and seeded output
// must be identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(int percent) { return range(1, 100) <= percent; }

 private:
  std::mt19937_64 engine_;
};

// Random weight drawn from a small pool: nonzero constants, single
// variables x[1,1,k], differences, and two-term affine combinations.
Polynomial random_small_polynomial(Rng& rng);

// Random DAG with at most max_vertices vertices and an equal number
// (at most max_terminals) of distinct sources and sinks, sources disjoint
// from sinks. Edges only go forward in vertex order, so the result is
// acyclic by construction.
Digraph random_dag(Rng& rng, int max_vertices = 10, int max_terminals = 3);

}  // namespace hookdet
