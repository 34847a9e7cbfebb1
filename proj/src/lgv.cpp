#include "hookdet/lgv.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <sstream>

namespace hookdet {

int Digraph::add_vertex(std::string label) {
  prepared_ = false;
  labels_.push_back(std::move(label));
  return static_cast<int>(labels_.size()) - 1;
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw IndexOutOfRange("vertex id outside the graph");
}

void Digraph::add_edge(int from, int to, Polynomial weight) {
  check_vertex(from);
  check_vertex(to);
  prepared_ = false;
  edges_.push_back(DigraphEdge{from, to, std::move(weight)});
}

void Digraph::set_sources(std::vector<int> ids) {
  for (int v : ids) check_vertex(v);
  std::set<int> distinct(ids.begin(), ids.end());
  if (distinct.size() != ids.size())
    throw SizeMismatch("source vertices must be distinct");
  sources_ = std::move(ids);
}

void Digraph::set_sinks(std::vector<int> ids) {
  for (int v : ids) check_vertex(v);
  std::set<int> distinct(ids.begin(), ids.end());
  if (distinct.size() != ids.size())
    throw SizeMismatch("sink vertices must be distinct");
  sinks_ = std::move(ids);
}

const std::string& Digraph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

void Digraph::ensure_prepared() const {
  if (prepared_) return;
  const int n = vertex_count();
  adjacency_.assign(n, {});
  std::vector<int> indegree(n, 0);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    adjacency_[edges_[e].from].push_back(e);
    ++indegree[edges_[e].to];
  }
  for (auto& out : adjacency_)
    std::sort(out.begin(), out.end(), [this](int a, int b) {
      return edges_[a].to < edges_[b].to;
    });
  // Kahn's algorithm with an ordered frontier for determinism.
  topo_.clear();
  std::set<int> frontier;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) frontier.insert(v);
  while (!frontier.empty()) {
    int v = *frontier.begin();
    frontier.erase(frontier.begin());
    topo_.push_back(v);
    for (int e : adjacency_[v])
      if (--indegree[edges_[e].to] == 0) frontier.insert(edges_[e].to);
  }
  if (static_cast<int>(topo_.size()) != n)
    throw CyclicGraph("graph has a directed cycle");
  prepared_ = true;
}

const std::vector<int>& Digraph::out_edges(int v) const {
  check_vertex(v);
  ensure_prepared();
  return adjacency_[v];
}

const std::vector<int>& Digraph::topological_order() const {
  ensure_prepared();
  return topo_;
}

std::string Digraph::to_dot(const std::string& name) const {
  ensure_prepared();
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  for (int v = 0; v < vertex_count(); ++v)
    out << "  \"" << labels_[v] << "\";\n";
  std::vector<int> order(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) order[e] = static_cast<int>(e);
  std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
    if (edges_[a].from != edges_[b].from) return edges_[a].from < edges_[b].from;
    return edges_[a].to < edges_[b].to;
  });
  for (int e : order)
    out << "  \"" << labels_[edges_[e].from] << "\" -> \""
        << labels_[edges_[e].to] << "\" [label=\"" << edges_[e].weight.str()
        << "\"];\n";
  out << "}\n";
  return out.str();
}

PolyMatrix path_matrix(const Digraph& g, bool count_empty_path) {
  const int n = static_cast<int>(g.sources().size());
  if (n == 0 || g.sinks().size() != static_cast<std::size_t>(n))
    throw SizeMismatch("need equally many sources and sinks");
  const auto& topo = g.topological_order();
  PolyMatrix out(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Polynomial> acc(g.vertex_count());
    acc[g.sources()[i]] = Polynomial(1);
    for (int v : topo) {
      if (acc[v].is_zero()) continue;
      for (int e : g.out_edges(v)) {
        const auto& edge = g.edges()[e];
        acc[edge.to] += acc[v] * edge.weight;
      }
    }
    for (int j = 0; j < n; ++j) {
      Polynomial entry = acc[g.sinks()[j]];
      if (!count_empty_path && g.sinks()[j] == g.sources()[i])
        entry -= Polynomial(1);
      out.at(i + 1, j + 1) = std::move(entry);
    }
  }
  return out;
}

namespace {

// Saturating per-pair path counts, used only by the explosion guard.
std::vector<std::vector<double>> path_count_matrix(const Digraph& g,
                                                   bool count_empty_path) {
  const int n = static_cast<int>(g.sources().size());
  const auto& topo = g.topological_order();
  std::vector<std::vector<double>> counts(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    std::vector<double> acc(g.vertex_count(), 0.0);
    acc[g.sources()[i]] = 1.0;
    for (int v : topo) {
      if (acc[v] == 0.0) continue;
      for (int e : g.out_edges(v)) acc[g.edges()[e].to] += acc[v];
    }
    for (int j = 0; j < n; ++j) {
      double c = acc[g.sinks()[j]];
      if (!count_empty_path && g.sinks()[j] == g.sources()[i]) c -= 1.0;
      counts[i][j] = c;
    }
  }
  return counts;
}

// Ryser's formula in floating point; exactness is irrelevant for a guard.
// Beyond 20 sources the estimate itself would be the bottleneck, and any
// sane bound is exceeded anyway.
double permanent_estimate(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  if (n > 20) return std::numeric_limits<double>::infinity();
  double total = 0.0;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    double prod = 1.0;
    for (int i = 0; i < n && prod != 0.0; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j)
        if (s & (1u << j)) row += a[i][j];
      prod *= row;
    }
    const int k = std::popcount(s);
    total += ((n - k) % 2 == 0 ? prod : -prod);
  }
  return total;
}

// All simple paths source -> sink, lexicographic by vertex sequence.
std::vector<Path> enumerate_paths(const Digraph& g, int source, int sink,
                                  bool count_empty_path) {
  std::vector<Path> result;
  // Restrict the walk to vertices that still reach the sink.
  std::vector<char> reaches(g.vertex_count(), 0);
  reaches[sink] = 1;
  const auto& topo = g.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (int e : g.out_edges(*it))
      if (reaches[g.edges()[e].to]) reaches[*it] = 1;

  std::vector<int> stack{source};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[source] = 1;
  std::function<void(int, Polynomial)> dfs = [&](int v, Polynomial w) {
    if (v == sink && (stack.size() > 1 || count_empty_path))
      result.push_back(Path{stack, w});
    for (int e : g.out_edges(v)) {
      const auto& edge = g.edges()[e];
      if (on_path[edge.to] || !reaches[edge.to]) continue;
      on_path[edge.to] = 1;
      stack.push_back(edge.to);
      dfs(edge.to, w * edge.weight);
      stack.pop_back();
      on_path[edge.to] = 0;
    }
  };
  if (reaches[source]) dfs(source, Polynomial(1));
  return result;
}

int permutation_sign(const std::vector<int>& sigma) {
  int sign = 1;
  const int n = static_cast<int>(sigma.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sigma[i] > sigma[j]) sign = -sign;
  return sign;
}

}  // namespace

std::vector<PathSystem> enumerate_vd_systems(const Digraph& g,
                                             const EnumerationOptions& options) {
  const int n = static_cast<int>(g.sources().size());
  if (n == 0 || g.sinks().size() != static_cast<std::size_t>(n))
    throw SizeMismatch("need equally many sources and sinks");
  g.topological_order();  // acyclicity gate

  const auto counts = path_count_matrix(g, options.count_empty_path);
  const double candidates = permanent_estimate(counts);
  if (!(candidates <= options.max_candidates)) {
    std::ostringstream msg;
    msg << "enumeration would visit about " << candidates
        << " candidate systems (bound " << options.max_candidates << ")";
    throw ExplosionGuard(msg.str());
  }
  double total_paths = 0.0;
  for (const auto& row : counts)
    for (double c : row) total_paths += c;
  if (!(total_paths <= static_cast<double>(options.max_paths))) {
    std::ostringstream msg;
    msg << "materializing about " << total_paths << " paths (bound "
        << options.max_paths << ")";
    throw ExplosionGuard(msg.str());
  }

  std::vector<std::vector<std::vector<Path>>> paths(n);
  for (int i = 0; i < n; ++i) {
    paths[i].reserve(n);
    for (int j = 0; j < n; ++j)
      paths[i].push_back(enumerate_paths(g, g.sources()[i], g.sinks()[j],
                                         options.count_empty_path));
  }

  std::vector<PathSystem> systems;
  std::vector<char> used_vertex(g.vertex_count(), 0);
  std::vector<char> used_sink(n, 0);
  std::vector<int> sigma(n, 0);
  std::vector<const Path*> chosen(n, nullptr);

  std::function<void(int)> backtrack = [&](int i) {
    if (i == n) {
      PathSystem sys;
      sys.sigma = sigma;
      sys.sign = permutation_sign(sigma);
      sys.weight = Polynomial(1);
      sys.paths.reserve(n);
      for (int q = 0; q < n; ++q) {
        sys.paths.push_back(*chosen[q]);
        sys.weight *= chosen[q]->weight;
      }
      systems.push_back(std::move(sys));
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used_sink[j]) continue;
      for (const Path& p : paths[i][j]) {
        bool collision = false;
        for (int v : p.vertices)
          if (used_vertex[v]) {
            collision = true;
            break;
          }
        if (collision) continue;
        for (int v : p.vertices) used_vertex[v] = 1;
        used_sink[j] = 1;
        sigma[i] = j + 1;
        chosen[i] = &p;
        backtrack(i + 1);
        used_sink[j] = 0;
        for (int v : p.vertices) used_vertex[v] = 0;
      }
    }
  };
  backtrack(0);
  return systems;
}

Polynomial lgv_signed_sum(const Digraph& g, const EnumerationOptions& options) {
  Polynomial total;
  for (const PathSystem& sys : enumerate_vd_systems(g, options)) {
    if (sys.sign > 0)
      total += sys.weight;
    else
      total -= sys.weight;
  }
  return total;
}

bool check_all_length_one(const std::vector<PathSystem>& systems) {
  for (const PathSystem& sys : systems)
    for (const Path& p : sys.paths)
      if (p.length() != 1) return false;
  return true;
}

Digraph build_gamma_m(int m) {
  if (m < 1) throw InvalidOrder("need m >= 1");
  Digraph g;
  std::vector<int> us(m), vs(m);
  for (int i = 1; i <= m; ++i) us[i - 1] = g.add_vertex("U" + std::to_string(i));
  for (int i = 1; i <= m; ++i) vs[i - 1] = g.add_vertex("V" + std::to_string(i));
  for (int i = 1; i < m; ++i) {
    g.add_edge(us[i], us[i - 1], Polynomial(1));  // U_{i+1} -> U_i
    g.add_edge(vs[i - 1], vs[i], Polynomial(1));  // V_i -> V_{i+1}
  }
  for (int i = 1; i <= m; ++i) {
    Polynomial w = Polynomial::variable(1, 1, m - i + 1);
    if (m - i + 2 <= m) w -= Polynomial::variable(1, 1, m - i + 2);
    g.add_edge(us[i - 1], vs[i - 1], std::move(w));
  }
  g.set_sources(us);
  g.set_sinks(vs);
  return g;
}

Digraph build_gamma_Nm(int N, int m, const std::set<int>& rev_source_rows,
                       const std::set<int>& rev_sink_cols) {
  if (N < 1 || m < 1) throw InvalidOrder("need N >= 1 and m >= 1");
  for (int t : rev_source_rows)
    if (t < 1 || t > N) throw IndexOutOfRange("reversed block-row outside [1, N]");
  for (int r : rev_sink_cols)
    if (r < 1 || r > N) throw IndexOutOfRange("reversed block-col outside [1, N]");
  Digraph g;
  std::vector<int> us(N * m), vs(N * m);
  for (int a = 1; a <= N * m; ++a) us[a - 1] = g.add_vertex("U" + std::to_string(a));
  for (int a = 1; a <= N * m; ++a) vs[a - 1] = g.add_vertex("V" + std::to_string(a));
  // Within-block chains: U descending, V ascending; no edges cross blocks.
  for (int t = 0; t < N; ++t)
    for (int i = 1; i < m; ++i) {
      g.add_edge(us[t * m + i], us[t * m + i - 1], Polynomial(1));
      g.add_edge(vs[t * m + i - 1], vs[t * m + i], Polynomial(1));
    }
  // Layer i: complete bipartite between level-i source and sink vertices,
  // weight x[t+1,r+1,m-i+1] - x[t+1,r+1,m-i+2] (level m+1 vanishes).
  for (int i = 1; i <= m; ++i)
    for (int t = 0; t < N; ++t)
      for (int r = 0; r < N; ++r) {
        Polynomial w = Polynomial::variable(t + 1, r + 1, m - i + 1);
        if (m - i + 2 <= m) w -= Polynomial::variable(t + 1, r + 1, m - i + 2);
        g.add_edge(us[t * m + i - 1], vs[r * m + i - 1], std::move(w));
      }
  std::vector<int> source_order, sink_order;
  source_order.reserve(N * m);
  sink_order.reserve(N * m);
  for (int t = 0; t < N; ++t) {
    const bool rev_s = rev_source_rows.contains(t + 1);
    const bool rev_k = rev_sink_cols.contains(t + 1);
    for (int i = 1; i <= m; ++i) {
      source_order.push_back(us[t * m + (rev_s ? m - i : i - 1)]);
      sink_order.push_back(vs[t * m + (rev_k ? m - i : i - 1)]);
    }
  }
  g.set_sources(source_order);
  g.set_sinks(sink_order);
  return g;
}

ReversalSchedule family_reversal_schedule(BlockFamily f, int N) {
  if (N < 1) throw InvalidOrder("need N >= 1");
  ReversalSchedule r;
  auto rows_where = [N](bool even) {
    std::set<int> s;
    for (int i = 1; i <= N; ++i)
      if ((i % 2 == 0) == even) s.insert(i);
    return s;
  };
  const std::set<int> all = [N] {
    std::set<int> s;
    for (int i = 1; i <= N; ++i) s.insert(i);
    return s;
  }();
  switch (f) {
    case BlockFamily::A: break;
    case BlockFamily::B: r.source_rows = all; r.sink_cols = all; break;
    case BlockFamily::C: r.source_rows = all; break;
    case BlockFamily::D: r.sink_cols = all; break;
    case BlockFamily::E: r.source_rows = rows_where(true); break;
    case BlockFamily::Ep: r.source_rows = rows_where(false); break;
    case BlockFamily::F: r.source_rows = rows_where(false); r.sink_cols = all; break;
    case BlockFamily::Fp: r.source_rows = rows_where(true); r.sink_cols = all; break;
    case BlockFamily::G:
      r.source_rows = rows_where(false);
      r.sink_cols = rows_where(false);
      break;
    case BlockFamily::Gp:
      r.source_rows = rows_where(true);
      r.sink_cols = rows_where(true);
      break;
  }
  return r;
}

}  // namespace hookdet
