#include "hookdet/random_dag.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace hookdet {

Polynomial random_small_polynomial(Rng& rng) {
  switch (rng.range(0, 3)) {
    case 0: {
      int c = 0;
      while (c == 0) c = rng.range(-3, 3);
      return Polynomial(c);
    }
    case 1:
      return Polynomial::variable(1, 1, rng.range(1, 3));
    case 2: {
      const int k = rng.range(1, 3);
      return Polynomial::variable(1, 1, k) -
             Polynomial::variable(1, 1, k + 1);
    }
    default: {
      int c = 0;
      while (c == 0) c = rng.range(-2, 2);
      return Polynomial(c) * Polynomial::variable(1, 1, rng.range(1, 3)) +
             Polynomial(rng.range(-2, 2));
    }
  }
}

Digraph random_dag(Rng& rng, int max_vertices, int max_terminals) {
  const int nv = rng.range(std::min(4, max_vertices), max_vertices);
  const int nt = rng.range(1, std::min(max_terminals, nv / 2));
  Digraph g;
  for (int v = 0; v < nv; ++v) g.add_vertex("W" + std::to_string(v + 1));
  // Forward edges only; denser near the middle to make paths branch.
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      if (rng.chance(35)) g.add_edge(u, v, random_small_polynomial(rng));
  // Sources from the front half, sinks from the back, never overlapping.
  std::vector<int> sources, sinks;
  for (int i = 0; i < nt; ++i) sources.push_back(i);
  for (int i = 0; i < nt; ++i) sinks.push_back(nv - 1 - i);
  // Shuffle the sink order so sigma is not always near-identity.
  for (int i = nt - 1; i > 0; --i)
    std::swap(sinks[i], sinks[rng.range(0, i)]);
  g.set_sources(sources);
  g.set_sinks(sinks);
  return g;
}

}  // namespace hookdet
