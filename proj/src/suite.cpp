#include "hookdet/suite.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <utility>

#include "hookdet/lgv.hpp"
#include "hookdet/random_dag.hpp"

namespace hookdet {

bool SuiteResult::ok() const {
  for (const auto& c : cases)
    if (!c.ok) return false;
  return true;
}

int SuiteResult::failed() const {
  int n = 0;
  for (const auto& c : cases)
    if (!c.ok) ++n;
  return n;
}

nlohmann::json SuiteResult::to_json(bool with_millis) const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json jc{{"id", c.id}, {"ok", c.ok}};
    if (!c.note.empty()) jc["note"] = c.note;
    cs.push_back(std::move(jc));
  }
  nlohmann::json j{{"suite", name},
                   {"ok", ok()},
                   {"cases", cases.size()},
                   {"failed", failed()},
                   {"results", std::move(cs)}};
  if (with_millis) j["millis"] = millis;
  return j;
}

namespace {

class Stopwatch {
 public:
  long long millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void add_case(SuiteResult& suite, std::string id, bool ok,
              std::string note = {}) {
  suite.cases.push_back(SuiteCase{std::move(id), ok, ok ? "" : std::move(note)});
}

// The level-k entries of each shape must form one full row segment and one
// full column segment meeting at the shape's pivot for that level.
bool hook_regions_are_ls(HookShape shape, int m) {
  for (int k = 1; k <= m; ++k) {
    std::set<std::pair<int, int>> expected;
    auto row_arm = [&](int r, int c0, int c1) {
      for (int c = c0; c <= c1; ++c) expected.insert({r, c});
    };
    auto col_arm = [&](int c, int r0, int r1) {
      for (int r = r0; r <= r1; ++r) expected.insert({r, c});
    };
    switch (shape) {
      case HookShape::A: {
        const int p = m - k + 1;  // pivot (p,p), arms right and below
        row_arm(p, p, m);
        col_arm(p, p, m);
        break;
      }
      case HookShape::B:  // pivot (k,k), arms left and above
        row_arm(k, 1, k);
        col_arm(k, 1, k);
        break;
      case HookShape::C:  // pivot (k, m-k+1), arms right and above
        row_arm(k, m - k + 1, m);
        col_arm(m - k + 1, 1, k);
        break;
      case HookShape::D:  // pivot (m-k+1, k), arms left and below
        row_arm(m - k + 1, 1, k);
        col_arm(k, m - k + 1, m);
        break;
    }
    std::set<std::pair<int, int>> actual;
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c <= m; ++c)
        if (hook_entry_level(shape, m, r, c) == k) actual.insert({r, c});
    if (actual != expected) return false;
  }
  return true;
}

}  // namespace

SuiteResult run_hook_suite() {
  Stopwatch watch;
  SuiteResult suite{.name = "hooks", .cases = {}, .millis = 0};
  for (HookShape shape :
       {HookShape::A, HookShape::B, HookShape::C, HookShape::D}) {
    for (int m = 1; m <= 5; ++m) {
      std::string id = std::string("det{") + to_string(shape) + "," +
                       std::to_string(m) + "}";
      const bool ok =
          det_cofactor(hook_matrix(shape, m)) == hook_det_formula(shape, m);
      add_case(suite, id, ok, "determinant differs from the closed formula");
    }
    for (int m = 1; m <= 6; ++m) {
      const SwapSchedule schedule = hook_reversal_schedule(shape, m);
      const bool matrix_ok =
          apply_swaps(hook_matrix(HookShape::A, m), schedule).matrix ==
          hook_matrix(shape, m);
      const bool parity_ok = static_cast<int>(schedule.size() % 2) ==
                             hook_sign_exponent(shape, m) % 2;
      add_case(suite,
               std::string("swap{") + to_string(shape) + "," +
                   std::to_string(m) + "}",
               matrix_ok && parity_ok,
               matrix_ok ? "swap parity disagrees with the sign exponent"
                         : "swapped pattern differs");
      add_case(suite,
               std::string("region{") + to_string(shape) + "," +
                   std::to_string(m) + "}",
               hook_regions_are_ls(shape, m),
               "equal-entry region is not the expected L");
    }
  }
  suite.millis = watch.millis();
  return suite;
}

SuiteResult run_block_suite() {
  Stopwatch watch;
  SuiteResult suite{.name = "blocks", .cases = {}, .millis = 0};
  for (BlockFamily f : kAllFamilies) {
    for (int N = 1; N <= 3; ++N) {
      for (int m = 1; m <= 3; ++m) {
        std::string id = std::string(to_string(f)) + "(" + std::to_string(N) +
                         "," + std::to_string(m) + ")";
        const PolyMatrix matrix = block_hook_matrix(f, N, m);
        const bool symbolic =
            det_subset_dp(matrix) == block_det_formula(f, N, m);
        const Derivation d = derivation_schedule(f, N, m);
        const bool derived =
            apply_swaps(block_hook_matrix(d.base, N, m), d.swaps).matrix ==
            matrix;
        add_case(suite, id, symbolic && derived,
                 symbolic ? "swap derivation does not reproduce the matrix"
                          : "determinant differs from the product formula");
      }
    }
  }
  suite.millis = watch.millis();
  return suite;
}

SuiteResult run_sign_suite() {
  Stopwatch watch;
  SuiteResult suite{.name = "signs", .cases = {}, .millis = 0};
  for (BlockFamily f : kAllFamilies) {
    for (int N = 1; N <= 6; ++N) {
      for (int m = 1; m <= 6; ++m) {
        std::string id = std::string(to_string(f)) + "(" + std::to_string(N) +
                         "," + std::to_string(m) + ")";
        const long own = static_cast<long>(derivation_schedule(f, N, m).swaps.size());
        const bool ok = own % 2 == case_form_exponent(f, N, m) % 2;
        add_case(suite, id, ok,
                 "schedule swap parity differs from the case closed form");
      }
    }
  }
  suite.millis = watch.millis();
  return suite;
}

SuiteResult run_gamma_m_suite() {
  Stopwatch watch;
  SuiteResult suite{.name = "gamma_m", .cases = {}, .millis = 0};
  for (int m = 1; m <= 5; ++m) {
    const Digraph g = build_gamma_m(m);
    add_case(suite, "path_matrix{m=" + std::to_string(m) + "}",
             path_matrix(g) == hook_matrix(HookShape::A, m),
             "path matrix is not the shape-A pattern");
  }
  for (int m = 1; m <= 4; ++m) {
    const Digraph g = build_gamma_m(m);
    const auto systems = enumerate_vd_systems(g);
    const bool unique = systems.size() == 1;
    const bool sum_ok =
        lgv_signed_sum(g) == hook_det_formula(HookShape::A, m);
    add_case(suite, "systems{m=" + std::to_string(m) + "}", unique && sum_ok,
             unique ? "signed sum differs from the telescoped product"
                    : "expected exactly one vertex-disjoint system");
  }
  suite.millis = watch.millis();
  return suite;
}

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long power(long base, int exp) {
  long p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

}  // namespace

SuiteResult run_gamma_nm_suite() {
  Stopwatch watch;
  SuiteResult suite{.name = "gamma_nm", .cases = {}, .millis = 0};
  for (int N = 1; N <= 3; ++N) {
    for (int m = 1; m <= 3; ++m) {
      std::string id = "gamma(" + std::to_string(N) + "," + std::to_string(m) + ")";
      const Digraph g = build_gamma_Nm(N, m);
      const PolyMatrix pm = path_matrix(g);
      const bool matrix_ok = pm == block_hook_matrix(BlockFamily::A, N, m);
      const auto systems = enumerate_vd_systems(g);
      const bool count_ok =
          static_cast<long>(systems.size()) == power(factorial(N), m);
      const bool lengths_ok = check_all_length_one(systems);
      const bool sum_ok = lgv_signed_sum(g) == det_subset_dp(pm);
      std::ostringstream note;
      if (!matrix_ok) note << "path matrix mismatch; ";
      if (!count_ok)
        note << "got " << systems.size() << " systems, expected "
             << power(factorial(N), m) << "; ";
      if (!lengths_ok) note << "a path longer than one edge appeared; ";
      if (!sum_ok) note << "signed sum differs from the determinant; ";
      add_case(suite, id, matrix_ok && count_ok && lengths_ok && sum_ok,
               note.str());
    }
  }
  suite.millis = watch.millis();
  return suite;
}

SuiteResult run_family_schedule_suite() {
  Stopwatch watch;
  SuiteResult suite{.name = "family_schedules", .cases = {}, .millis = 0};
  for (BlockFamily f : kAllFamilies) {
    for (int N = 1; N <= 3; ++N) {
      for (int m = 1; m <= 3; ++m) {
        std::string id = std::string(to_string(f)) + "(" + std::to_string(N) +
                         "," + std::to_string(m) + ")";
        const ReversalSchedule r = family_reversal_schedule(f, N);
        const Digraph g = build_gamma_Nm(N, m, r.source_rows, r.sink_cols);
        const bool matrix_ok =
            path_matrix(g) == block_hook_matrix(f, N, m);
        const bool sum_ok = lgv_signed_sum(g) == block_det_formula(f, N, m);
        add_case(suite, id, matrix_ok && sum_ok,
                 matrix_ok ? "signed sum differs from the family formula"
                           : "path matrix differs from the block matrix");
      }
    }
  }
  suite.millis = watch.millis();
  return suite;
}

SuiteResult run_random_dag_suite(std::uint64_t seed, int count) {
  Stopwatch watch;
  SuiteResult suite{.name = "random_dags", .cases = {}, .millis = 0};
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    const Digraph g = random_dag(rng);
    const PolyMatrix pm = path_matrix(g);
    const bool ok = lgv_signed_sum(g) == det_cofactor(pm);
    add_case(suite, "dag{" + std::to_string(t) + "}", ok,
             "signed sum differs from det(path matrix)");
  }
  suite.millis = watch.millis();
  return suite;
}

SuiteResult run_cross_engine_suite(std::uint64_t seed, int evals) {
  Stopwatch watch;
  SuiteResult suite{.name = "cross_engine", .cases = {}, .millis = 0};
  Rng rng(seed);

  // The corpus: every hook pattern m <= 5, every block instance N,m <= 3,
  // and the difference matrices they factor through.
  std::vector<std::pair<std::string, PolyMatrix>> corpus;
  for (HookShape shape :
       {HookShape::A, HookShape::B, HookShape::C, HookShape::D})
    for (int m = 1; m <= 5; ++m)
      corpus.emplace_back(std::string("hook{") + to_string(shape) + "," +
                              std::to_string(m) + "}",
                          hook_matrix(shape, m));
  for (BlockFamily f : kAllFamilies)
    for (int N = 1; N <= 3; ++N)
      for (int m = 1; m <= 3; ++m)
        corpus.emplace_back(std::string("block{") + to_string(f) + "," +
                                std::to_string(N) + "," + std::to_string(m) +
                                "}",
                            block_hook_matrix(f, N, m));
  for (int N = 1; N <= 3; ++N)
    for (int m = 1; m <= 3; ++m)
      for (int i = 1; i <= m; ++i)
        corpus.emplace_back("xdiff{" + std::to_string(i) + "," +
                                std::to_string(N) + "," + std::to_string(m) +
                                "}",
                            x_difference_matrix(i, N, m));

  for (const auto& [id, matrix] : corpus) {
    const Polynomial symbolic = det_subset_dp(matrix);
    if (matrix.order() <= kCofactorMaxOrder) {
      add_case(suite, "engines:" + id, det_cofactor(matrix) == symbolic,
               "cofactor and subset-DP disagree");
    }
    int agreed = 0;
    for (int t = 0; t < evals; ++t) {
      Assignment assignment;
      for (VarId v : matrix_variables(matrix))
        assignment[v] = rng.range(-9, 9);
      if (det_eval_bareiss(matrix, assignment) == symbolic.eval(assignment))
        ++agreed;
    }
    add_case(suite, "evals:" + id, agreed == evals,
             std::to_string(evals - agreed) + " integer evaluations differ");
  }
  suite.millis = watch.millis();
  return suite;
}

std::vector<SuiteResult> run_scope(const std::string& scope,
                                   std::uint64_t seed, int evals) {
  std::vector<SuiteResult> results;
  const bool all = scope == "all";
  if (all || scope == "hooks") results.push_back(run_hook_suite());
  if (all || scope == "blocks") {
    results.push_back(run_block_suite());
    results.push_back(run_sign_suite());
  }
  if (all || scope == "lgv") {
    results.push_back(run_gamma_m_suite());
    results.push_back(run_gamma_nm_suite());
    results.push_back(run_family_schedule_suite());
    results.push_back(run_random_dag_suite(seed));
  }
  if (all) results.push_back(run_cross_engine_suite(seed, evals));
  if (results.empty())
    throw ParseError("unknown suite scope '" + scope +
                     "' (expected hooks|blocks|lgv|all)");
  return results;
}

}  // namespace hookdet
