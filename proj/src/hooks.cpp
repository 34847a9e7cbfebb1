#include "hookdet/hooks.hpp"

#include <algorithm>
#include <string>

namespace hookdet {

const char* to_string(HookShape s) {
  switch (s) {
    case HookShape::A: return "A";
    case HookShape::B: return "B";
    case HookShape::C: return "C";
    case HookShape::D: return "D";
  }
  throw Error("unreachable hook shape");
}

HookShape hook_shape_from_string(std::string_view s) {
  if (s == "A") return HookShape::A;
  if (s == "B") return HookShape::B;
  if (s == "C") return HookShape::C;
  if (s == "D") return HookShape::D;
  throw ParseError("unknown hook shape '" + std::string(s) + "'");
}

int hook_entry_level(HookShape shape, int m, int r, int c) {
  if (m < 1) throw InvalidOrder("hook order must be >= 1");
  if (r < 1 || r > m || c < 1 || c > m)
    throw IndexOutOfRange("hook entry outside the matrix");
  switch (shape) {
    case HookShape::A: return m - std::min(r, c) + 1;
    case HookShape::B: return std::max(r, c);
    case HookShape::C: return std::max(m - c + 1, r);
    case HookShape::D: return std::max(m - r + 1, c);
  }
  throw Error("unreachable hook shape");
}

PolyMatrix hook_matrix(HookShape shape, int m, int block_row, int block_col) {
  if (m < 1) throw InvalidOrder("hook order must be >= 1");
  PolyMatrix out(m);
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= m; ++c)
      out.at(r, c) = Polynomial::variable(
          block_row, block_col, hook_entry_level(shape, m, r, c));
  return out;
}

int hook_sign_exponent(HookShape shape, int m) {
  if (m < 1) throw InvalidOrder("hook order must be >= 1");
  return (shape == HookShape::C || shape == HookShape::D) ? m / 2 : 0;
}

Polynomial hook_det_formula(HookShape shape, int m, int block_row,
                            int block_col) {
  if (m < 1) throw InvalidOrder("hook order must be >= 1");
  Polynomial prod(hook_sign_exponent(shape, m) % 2 == 0 ? 1 : -1);
  for (int k = 1; k <= m; ++k) {
    Polynomial factor = Polynomial::variable(block_row, block_col, k);
    if (k < m) factor -= Polynomial::variable(block_row, block_col, k + 1);
    prod *= factor;
  }
  return prod;
}

SwapSchedule hook_reversal_schedule(HookShape shape, int m) {
  if (m < 1) throw InvalidOrder("hook order must be >= 1");
  SwapSchedule s;
  const bool rows = shape == HookShape::B || shape == HookShape::C;
  const bool cols = shape == HookShape::B || shape == HookShape::D;
  for (int i = 1; i <= m / 2; ++i) {
    if (rows) s.row_swaps.emplace_back(i, m - i + 1);
    if (cols) s.col_swaps.emplace_back(i, m - i + 1);
  }
  return s;
}

}  // namespace hookdet
