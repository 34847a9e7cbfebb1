#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hookdet/hooks.hpp"

namespace hookdet {

// The ten block families. Ep, Fp, Gp are the primed variants.
enum class BlockFamily { A, B, C, D, E, Ep, F, Fp, G, Gp };

inline constexpr BlockFamily kAllFamilies[] = {
    BlockFamily::A, BlockFamily::B,  BlockFamily::C, BlockFamily::D,
    BlockFamily::E, BlockFamily::Ep, BlockFamily::F, BlockFamily::Fp,
    BlockFamily::G, BlockFamily::Gp};

const char* to_string(BlockFamily f);
BlockFamily block_family_from_string(std::string_view s);

// Hook shape of block (i,j), 1-based. A/B/C/D are constant; E and Ep
// alternate by block row, F and Fp mix B/D by block row, G and Gp use all
// four shapes keyed on the parities of (i,j).
HookShape family_shape(BlockFamily f, int block_row, int block_col);

// Order N*m matrix whose block (i,j) is hook_matrix(family_shape(f,i,j), m)
// over the block-(i,j) variable family.
PolyMatrix block_hook_matrix(BlockFamily f, int N, int m);

// N x N matrix with entry (r,s) = x[r,s,i] - x[r,s,i+1]; level m+1 is zero.
PolyMatrix x_difference_matrix(int i, int N, int m);

// The swap schedule whose application to block_hook_matrix(base, N, m)
// yields block_hook_matrix(f, N, m). Each family follows one derivation:
// B, C, D swap every block; E, Ep, F, Fp, G, Gp swap alternating blocks.
struct Derivation {
  BlockFamily base;
  SwapSchedule swaps;
};
Derivation derivation_schedule(BlockFamily f, int N, int m);

// Total interchange count accumulated along the derivation chain down to
// family A. This is the exponent used in block_det_formula; it is computed
// from the schedules, never from a closed form.
long sign_exponent(BlockFamily f, int N, int m);

// The two-case (C, D) and four-case (E, Ep, F, Fp) parity closed forms,
// zero for A, B, G, Gp. Matches the swap count of the family's own
// derivation step; for Ep and Fp it deliberately excludes the base
// family's contribution (see sign_exponent for the full prefactor).
long case_form_exponent(BlockFamily f, int N, int m);

// (-1)^sign_exponent * prod_{i=1..m} det(x_difference_matrix(i, N, m)).
Polynomial block_det_formula(BlockFamily f, int N, int m);

struct VerificationReport {
  std::string family;
  int N = 0;
  int m = 0;
  bool symbolic_ok = false;
  bool derivation_ok = false;
  int eval_checks = 0;  // seeded integer evaluations that agreed
  long long millis = 0;

  bool ok(int requested_evals) const {
    return symbolic_ok && derivation_ok && eval_checks == requested_evals;
  }
  // millis is omitted unless asked for: default output must be byte-stable.
  nlohmann::json to_json(bool with_millis = false) const;
};

// Bundles the identity checks for one (family, N, m): symbolic determinant
// vs. product formula, swap-derivation equality, and eval_count random
// integer evaluations of Bareiss vs. the formula.
VerificationReport verify_family(BlockFamily f, int N, int m,
                                 int eval_count = 50,
                                 std::uint64_t seed = 0);

}  // namespace hookdet
