#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "hookdet/poly.hpp"

namespace hookdet {

// Dense square matrix of polynomials. Public indexing is 1-based to match
// the R_i / C_j row-operation notation used throughout.
class PolyMatrix {
 public:
  explicit PolyMatrix(int order);

  int order() const { return n_; }
  Polynomial& at(int r, int c);
  const Polynomial& at(int r, int c) const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  int n_;
  std::vector<Polynomial> entries_;
};

// Ordered row and column interchanges, 1-based. Sign contribution of the
// schedule is (-1)^size().
struct SwapSchedule {
  std::vector<std::pair<int, int>> row_swaps;
  std::vector<std::pair<int, int>> col_swaps;

  std::size_t size() const { return row_swaps.size() + col_swaps.size(); }
  int sign() const { return size() % 2 == 0 ? 1 : -1; }
};

struct SwapResult {
  PolyMatrix matrix;
  int sign;  // det(matrix) = sign * det(input)
};

SwapResult apply_swaps(const PolyMatrix& m, const SwapSchedule& s);

// Reference oracle: first-row cofactor expansion. Factorial cost, so the
// order guard is deliberately low.
inline constexpr int kCofactorMaxOrder = 7;
Polynomial det_cofactor(const PolyMatrix& m);

// Division-free Laplace expansion memoized over column subsets,
// O(2^n * n) polynomial operations.
inline constexpr int kSubsetDpMaxOrder = 14;
Polynomial det_subset_dp(const PolyMatrix& m);

// Evaluates entries at the assignment, then runs fraction-free elimination
// over exact integers. No order guard; divisions are exact by construction.
BigInt det_eval_bareiss(const PolyMatrix& m, const Assignment& assignment);

// Places blocks[i][j] (all of equal order) at block position (i+1, j+1) of
// an N*m result.
PolyMatrix assemble_blocks(const std::vector<std::vector<PolyMatrix>>& blocks);

// Union of the variables of every entry.
std::set<VarId> matrix_variables(const PolyMatrix& m);

// JSON wire format: {"order": n, "entries": [[<canonical-poly>, ...], ...]}.
nlohmann::json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace hookdet
