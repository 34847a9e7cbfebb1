#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookdet/blockhook.hpp"

namespace hookdet {

struct SuiteCase {
  std::string id;
  bool ok = false;
  std::string note;  // empty when ok
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteCase> cases;
  long long millis = 0;

  bool ok() const;
  int failed() const;
  nlohmann::json to_json(bool with_millis = false) const;
};

// Each suite runs one verification grid end to end and never throws on a
// mathematical mismatch; failures land in the per-case notes.

// Four shapes x m in 1..5: cofactor determinant equals the closed formula;
// plus the swap-schedule route and the L-shaped equal-entry regions.
SuiteResult run_hook_suite();

// Ten families x (N,m) in {1,2,3}^2: symbolic determinant equals the signed
// product formula; swap derivation reproduces the matrix.
SuiteResult run_block_suite();

// N,m in 1..6: parity of each family's own derivation swap count equals the
// published two/four-case closed forms.
SuiteResult run_sign_suite();

// Chain graphs: path matrix is the shape-A pattern (m <= 5); the single
// vertex-disjoint system gives the telescoped product (m <= 4).
SuiteResult run_gamma_m_suite();

// Layered graphs without reversals, N,m <= 3: path matrix, (N!)^m system
// count, all paths length 1, signed sum equals the determinant.
SuiteResult run_gamma_nm_suite();

// Ten families, N,m <= 3: the reversal schedule's path matrix equals the
// block matrix and the signed sum equals the family formula.
SuiteResult run_family_schedule_suite();

// count seeded random DAGs: signed sum equals det(path matrix).
SuiteResult run_random_dag_suite(std::uint64_t seed, int count = 100);

// Engine agreement on the constructed corpus: cofactor == subset-DP at
// order <= 7, and per block instance evals seeded integer checks of
// Bareiss against the evaluated symbolic determinant.
SuiteResult run_cross_engine_suite(std::uint64_t seed, int evals = 50);

// Scope names accepted by the CLI: hooks | blocks | lgv | all.
std::vector<SuiteResult> run_scope(const std::string& scope,
                                   std::uint64_t seed, int evals);

}  // namespace hookdet
