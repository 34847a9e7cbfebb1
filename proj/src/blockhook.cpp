#include "hookdet/blockhook.hpp"

#include <chrono>
#include <random>
#include <string>

namespace hookdet {

const char* to_string(BlockFamily f) {
  switch (f) {
    case BlockFamily::A: return "A";
    case BlockFamily::B: return "B";
    case BlockFamily::C: return "C";
    case BlockFamily::D: return "D";
    case BlockFamily::E: return "E";
    case BlockFamily::Ep: return "Ep";
    case BlockFamily::F: return "F";
    case BlockFamily::Fp: return "Fp";
    case BlockFamily::G: return "G";
    case BlockFamily::Gp: return "Gp";
  }
  throw Error("unreachable block family");
}

BlockFamily block_family_from_string(std::string_view s) {
  for (BlockFamily f : kAllFamilies)
    if (s == to_string(f)) return f;
  throw ParseError("unknown block family '" + std::string(s) + "'");
}

HookShape family_shape(BlockFamily f, int block_row, int block_col) {
  if (block_row < 1 || block_col < 1)
    throw IndexOutOfRange("block indices are 1-based");
  const bool row_even = block_row % 2 == 0;
  const bool col_even = block_col % 2 == 0;
  switch (f) {
    case BlockFamily::A: return HookShape::A;
    case BlockFamily::B: return HookShape::B;
    case BlockFamily::C: return HookShape::C;
    case BlockFamily::D: return HookShape::D;
    case BlockFamily::E: return row_even ? HookShape::C : HookShape::A;
    case BlockFamily::Ep: return row_even ? HookShape::A : HookShape::C;
    case BlockFamily::F: return row_even ? HookShape::D : HookShape::B;
    case BlockFamily::Fp: return row_even ? HookShape::B : HookShape::D;
    case BlockFamily::G:
      if (row_even) return col_even ? HookShape::A : HookShape::D;
      return col_even ? HookShape::C : HookShape::B;
    case BlockFamily::Gp:
      if (row_even) return col_even ? HookShape::B : HookShape::C;
      return col_even ? HookShape::D : HookShape::A;
  }
  throw Error("unreachable block family");
}

PolyMatrix block_hook_matrix(BlockFamily f, int N, int m) {
  if (N < 1 || m < 1) throw InvalidOrder("need N >= 1 and m >= 1");
  std::vector<std::vector<PolyMatrix>> blocks;
  blocks.reserve(N);
  for (int i = 1; i <= N; ++i) {
    std::vector<PolyMatrix> row;
    row.reserve(N);
    for (int j = 1; j <= N; ++j)
      row.push_back(hook_matrix(family_shape(f, i, j), m, i, j));
    blocks.push_back(std::move(row));
  }
  return assemble_blocks(blocks);
}

PolyMatrix x_difference_matrix(int i, int N, int m) {
  if (N < 1 || m < 1) throw InvalidOrder("need N >= 1 and m >= 1");
  if (i < 1 || i > m) throw IndexOutOfRange("difference level must be in [1, m]");
  PolyMatrix out(N);
  for (int r = 1; r <= N; ++r)
    for (int s = 1; s <= N; ++s) {
      Polynomial e = Polynomial::variable(r, s, i);
      if (i + 1 <= m) e -= Polynomial::variable(r, s, i + 1);
      out.at(r, s) = e;
    }
  return out;
}

namespace {

// all_blocks=false selects 1-based even block indices, the alternating-swap
// derivations; true selects every block.
SwapSchedule block_swaps(int N, int m, bool rows, bool cols,
                         bool all_blocks) {
  SwapSchedule s;
  for (int k = 0; k < N; ++k) {
    if (!all_blocks && k % 2 == 0) continue;
    for (int i = 1; i <= m / 2; ++i) {
      if (rows) s.row_swaps.emplace_back(k * m + i, k * m + (m - i + 1));
      if (cols) s.col_swaps.emplace_back(k * m + i, k * m + (m - i + 1));
    }
  }
  return s;
}

}  // namespace

Derivation derivation_schedule(BlockFamily f, int N, int m) {
  if (N < 1 || m < 1) throw InvalidOrder("need N >= 1 and m >= 1");
  using enum BlockFamily;
  switch (f) {
    case A: return {A, SwapSchedule{}};
    case B: return {A, block_swaps(N, m, true, true, true)};
    case C: return {A, block_swaps(N, m, true, false, true)};
    case D: return {A, block_swaps(N, m, false, true, true)};
    case E: return {A, block_swaps(N, m, true, false, false)};
    case Ep: return {C, block_swaps(N, m, true, false, false)};
    case F: return {B, block_swaps(N, m, true, false, false)};
    case Fp: return {D, block_swaps(N, m, true, false, false)};
    case G: return {B, block_swaps(N, m, true, true, false)};
    case Gp: return {A, block_swaps(N, m, true, true, false)};
  }
  throw Error("unreachable block family");
}

long sign_exponent(BlockFamily f, int N, int m) {
  Derivation d = derivation_schedule(f, N, m);
  long count = static_cast<long>(d.swaps.size());
  if (d.base == f) return count;
  return count + sign_exponent(d.base, N, m);
}

long case_form_exponent(BlockFamily f, int N, int m) {
  if (N < 1 || m < 1) throw InvalidOrder("need N >= 1 and m >= 1");
  switch (f) {
    case BlockFamily::A:
    case BlockFamily::B:
    case BlockFamily::G:
    case BlockFamily::Gp:
      return 0;
    case BlockFamily::C:
    case BlockFamily::D:
      return m % 2 == 0 ? static_cast<long>(N) * m / 2
                        : static_cast<long>(N) * (m - 1) / 2;
    case BlockFamily::E:
    case BlockFamily::Ep:
    case BlockFamily::F:
    case BlockFamily::Fp: {
      const long a = N % 2 == 0 ? N : N - 1;
      const long b = m % 2 == 0 ? m : m - 1;
      return a * b / 4;
    }
  }
  throw Error("unreachable block family");
}

Polynomial block_det_formula(BlockFamily f, int N, int m) {
  Polynomial prod(sign_exponent(f, N, m) % 2 == 0 ? 1 : -1);
  for (int i = 1; i <= m; ++i) prod *= det_subset_dp(x_difference_matrix(i, N, m));
  return prod;
}

nlohmann::json VerificationReport::to_json(bool with_millis) const {
  nlohmann::json j{{"family", family},
                   {"N", N},
                   {"m", m},
                   {"symbolic_ok", symbolic_ok},
                   {"derivation_ok", derivation_ok},
                   {"eval_checks", eval_checks}};
  if (with_millis) j["millis"] = millis;
  return j;
}

VerificationReport verify_family(BlockFamily f, int N, int m, int eval_count,
                                 std::uint64_t seed) {
  if (N < 1 || m < 1) throw InvalidOrder("need N >= 1 and m >= 1");
  if (N * m > kSubsetDpMaxOrder)
    throw OrderTooLarge("symbolic verification needs N*m <= " +
                        std::to_string(kSubsetDpMaxOrder));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.family = to_string(f);
  report.N = N;
  report.m = m;

  const PolyMatrix matrix = block_hook_matrix(f, N, m);
  const Polynomial formula = block_det_formula(f, N, m);
  report.symbolic_ok = det_subset_dp(matrix) == formula;

  const Derivation d = derivation_schedule(f, N, m);
  report.derivation_ok =
      apply_swaps(block_hook_matrix(d.base, N, m), d.swaps).matrix == matrix;

  std::mt19937_64 rng(seed);
  for (int t = 0; t < eval_count; ++t) {
    Assignment assignment;
    for (int r = 1; r <= N; ++r)
      for (int s = 1; s <= N; ++s)
        for (int k = 1; k <= m; ++k)
          assignment[VarId{r, s, k}] =
              static_cast<int>(rng() % 19) - 9;  // exact values in [-9, 9]
    if (det_eval_bareiss(matrix, assignment) == formula.eval(assignment))
      ++report.eval_checks;
  }

  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

}  // namespace hookdet
