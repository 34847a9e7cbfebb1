#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hookdet/blockhook.hpp"

namespace hookdet {

struct DigraphEdge {
  int from;
  int to;
  Polynomial weight;
};

// Weighted acyclic digraph with designated ordered source and sink
// sequences. Mutating calls invalidate the cached topological order;
// every query re-validates acyclicity on demand.
class Digraph {
 public:
  int add_vertex(std::string label);
  void add_edge(int from, int to, Polynomial weight);
  void set_sources(std::vector<int> ids);
  void set_sinks(std::vector<int> ids);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const;
  const std::vector<DigraphEdge>& edges() const { return edges_; }
  const std::vector<int>& sources() const { return sources_; }
  const std::vector<int>& sinks() const { return sinks_; }

  // Edge indices leaving v, ordered by target id (drives the deterministic
  // lexicographic path order everywhere).
  const std::vector<int>& out_edges(int v) const;

  // Kahn's algorithm; throws CyclicGraph if no topological order exists.
  const std::vector<int>& topological_order() const;

  // Byte-stable DOT rendering: vertices in id order, edges sorted by
  // (from, to), labels in canonical polynomial form.
  std::string to_dot(const std::string& name = "hook_graph") const;

 private:
  void ensure_prepared() const;
  void check_vertex(int v) const;

  std::vector<std::string> labels_;
  std::vector<DigraphEdge> edges_;
  std::vector<int> sources_;
  std::vector<int> sinks_;

  mutable bool prepared_ = false;
  mutable std::vector<std::vector<int>> adjacency_;
  mutable std::vector<int> topo_;
};

struct Path {
  std::vector<int> vertices;  // distinct, consecutive pairs are edges
  Polynomial weight;          // product of edge weights; 1 for the empty path

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct PathSystem {
  std::vector<int> sigma;   // sigma[i] = 1-based sink index of source i+1
  std::vector<Path> paths;  // paths[i] runs source i+1 -> sink sigma[i]
  int sign = 1;             // sgn(sigma)
  Polynomial weight;        // product of path weights
};

struct EnumerationOptions {
  // Candidate systems are (sigma, path-choice) tuples; the estimate is the
  // permanent of the per-pair path-count matrix. The required desk-scale
  // cases top out near 1.1e7 candidates, hence the default.
  double max_candidates = 1e8;
  // Separate cap on materialized per-pair path lists.
  std::size_t max_paths = 1'000'000;
  // When source i and sink j are one vertex, count the empty path with
  // weight 1. None of the constructed graphs exercise this.
  bool count_empty_path = true;
};

// Entry (i,j) = sum of path weights source_i -> sink_j, by dynamic
// programming over a topological order.
PolyMatrix path_matrix(const Digraph& g, bool count_empty_path = true);

// Exhaustive, duplicate-free enumeration of vertex-disjoint path systems:
// backtracking over sinks in ascending order and per-pair paths in
// lexicographic order, pruning on vertex collisions.
std::vector<PathSystem> enumerate_vd_systems(
    const Digraph& g, const EnumerationOptions& options = {});

// Sum of sign * weight over all vertex-disjoint systems; equals
// det(path_matrix(g)).
Polynomial lgv_signed_sum(const Digraph& g,
                          const EnumerationOptions& options = {});

bool check_all_length_one(const std::vector<PathSystem>& systems);

// Chain-plus-verticals graph on sources U_1..U_m, sinks V_1..V_m whose path
// matrix is the order-m shape-A hook pattern.
Digraph build_gamma_m(int m);

// N blocks of m source/sink levels joined by m complete-bipartite layers
// with telescoping weights; with empty reversal sets the path matrix is
// block_hook_matrix(A, N, m). Reversing a source block-row (sink block-col)
// lists that block's vertices in descending level order, which realizes the
// other nine families.
Digraph build_gamma_Nm(int N, int m, const std::set<int>& rev_source_rows = {},
                       const std::set<int>& rev_sink_cols = {});

// Which block-rows/cols to reverse so that path_matrix(build_gamma_Nm(...))
// equals block_hook_matrix(f, N, m).
struct ReversalSchedule {
  std::set<int> source_rows;
  std::set<int> sink_cols;
};
ReversalSchedule family_reversal_schedule(BlockFamily f, int N);

}  // namespace hookdet
