#include "hookdet/matrix.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>

namespace hookdet {

PolyMatrix::PolyMatrix(int order) : n_(order) {
  if (order < 1) throw InvalidOrder("matrix order must be >= 1");
  entries_.resize(static_cast<std::size_t>(order) * order);
}

Polynomial& PolyMatrix::at(int r, int c) {
  return const_cast<Polynomial&>(std::as_const(*this).at(r, c));
}

const Polynomial& PolyMatrix::at(int r, int c) const {
  if (r < 1 || r > n_ || c < 1 || c > n_) {
    std::ostringstream msg;
    msg << "entry (" << r << "," << c << ") outside order-" << n_ << " matrix";
    throw IndexOutOfRange(msg.str());
  }
  return entries_[static_cast<std::size_t>(r - 1) * n_ + (c - 1)];
}

SwapResult apply_swaps(const PolyMatrix& m, const SwapSchedule& s) {
  const int n = m.order();
  auto check = [n](const std::pair<int, int>& sw) {
    auto [a, b] = sw;
    if (a < 1 || a > n || b < 1 || b > n)
      throw IndexOutOfRange("swap index outside matrix order");
    if (a == b) throw IndexOutOfRange("swap indices must be distinct");
  };
  // Row/col permutations commute, so applying all row swaps first is safe.
  std::vector<int> row(n), col(n);
  for (int i = 0; i < n; ++i) row[i] = col[i] = i;
  for (const auto& sw : s.row_swaps) {
    check(sw);
    std::swap(row[sw.first - 1], row[sw.second - 1]);
  }
  for (const auto& sw : s.col_swaps) {
    check(sw);
    std::swap(col[sw.first - 1], col[sw.second - 1]);
  }
  PolyMatrix out(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      out.at(r, c) = m.at(row[r - 1] + 1, col[c - 1] + 1);
  return SwapResult{std::move(out), s.sign()};
}

namespace {

Polynomial det_cofactor_rec(const PolyMatrix& m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  Polynomial acc;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t t = 0; t < k; ++t) {
    const Polynomial& pivot = m.at(rows[0], cols[t]);
    if (pivot.is_zero()) continue;
    std::vector<int> sub_cols;
    sub_cols.reserve(k - 1);
    for (std::size_t u = 0; u < k; ++u)
      if (u != t) sub_cols.push_back(cols[u]);
    Polynomial minor = det_cofactor_rec(m, sub_rows, sub_cols);
    if (t % 2 == 0)
      acc += pivot * minor;
    else
      acc -= pivot * minor;
  }
  return acc;
}

}  // namespace

Polynomial det_cofactor(const PolyMatrix& m) {
  if (m.order() > kCofactorMaxOrder)
    throw OrderTooLarge("det_cofactor handles order <= " +
                        std::to_string(kCofactorMaxOrder));
  std::vector<int> idx(m.order());
  for (int i = 0; i < m.order(); ++i) idx[i] = i + 1;
  return det_cofactor_rec(m, idx, idx);
}

Polynomial det_subset_dp(const PolyMatrix& m) {
  const int n = m.order();
  if (n > kSubsetDpMaxOrder)
    throw OrderTooLarge("det_subset_dp handles order <= " +
                        std::to_string(kSubsetDpMaxOrder));
  // f[S] = det of the top |S| rows restricted to column set S. Subsets are
  // processed by popcount level so the previous level can be freed; the
  // table holds 2^n polynomials at peak otherwise.
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::vector<std::uint32_t>> by_level(n + 1);
  for (std::uint32_t s = 1; s <= full; ++s)
    by_level[std::popcount(s)].push_back(s);
  std::vector<Polynomial> f(full + 1);
  f[0] = Polynomial(1);
  for (int k = 1; k <= n; ++k) {
    for (std::uint32_t s : by_level[k]) {
      Polynomial acc;
      int t = 0;
      for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
        ++t;
        const int c = std::countr_zero(rest) + 1;
        const Polynomial& entry = m.at(k, c);
        if (entry.is_zero()) continue;
        Polynomial term = entry * f[s & ~(1u << (c - 1))];
        // Laplace along row k: the t-th smallest column carries (-1)^(k+t).
        if ((k + t) % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      f[s] = std::move(acc);
    }
    if (k >= 2)
      for (std::uint32_t s : by_level[k - 1]) f[s] = Polynomial();
  }
  return f[full];
}

BigInt det_eval_bareiss(const PolyMatrix& m, const Assignment& assignment) {
  const int n = m.order();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = m.at(r + 1, c + 1).eval(assignment);
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

PolyMatrix assemble_blocks(
    const std::vector<std::vector<PolyMatrix>>& blocks) {
  const std::size_t big_n = blocks.size();
  if (big_n == 0) throw DimensionMismatch("no blocks to assemble");
  const int m = blocks[0].empty() ? 0 : blocks[0][0].order();
  for (const auto& row : blocks) {
    if (row.size() != big_n)
      throw DimensionMismatch("block array must be square");
    for (const auto& b : row)
      if (b.order() != m)
        throw DimensionMismatch("all blocks must share one order");
  }
  PolyMatrix out(static_cast<int>(big_n) * m);
  for (std::size_t i = 0; i < big_n; ++i)
    for (std::size_t j = 0; j < big_n; ++j)
      for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= m; ++c)
          out.at(static_cast<int>(i) * m + r, static_cast<int>(j) * m + c) =
              blocks[i][j].at(r, c);
  return out;
}

std::set<VarId> matrix_variables(const PolyMatrix& m) {
  std::set<VarId> vars;
  for (int r = 1; r <= m.order(); ++r)
    for (int c = 1; c <= m.order(); ++c)
      for (VarId v : m.at(r, c).variables()) vars.insert(v);
  return vars;
}

nlohmann::json matrix_to_json(const PolyMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 1; r <= m.order(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 1; c <= m.order(); ++c) row.push_back(m.at(r, c).str());
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"order", m.order()}, {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("entries"))
    throw ParseError("matrix JSON needs \"order\" and \"entries\"");
  if (!j["order"].is_number_integer())
    throw ParseError("matrix \"order\" must be an integer");
  const int n = j["order"].get<int>();
  if (n < 1) throw InvalidOrder("matrix order must be >= 1");
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("\"entries\" must hold order-many rows");
  PolyMatrix out(n);
  for (int r = 0; r < n; ++r) {
    const auto& row = entries[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw DimensionMismatch("row length must equal the order");
    for (int c = 0; c < n; ++c) {
      if (!row[c].is_string())
        throw ParseError("matrix entries must be polynomial strings");
      out.at(r + 1, c + 1) = Polynomial::parse(row[c].get<std::string>());
    }
  }
  return out;
}

}  // namespace hookdet
