#include <doctest.h>

#include <hookdet/hooks.hpp>
#include <hookdet/matrix.hpp>

#include <vector>

using namespace hookdet;

namespace {

// Entry levels as integer grids, so shapes can be pinned at a glance.
std::vector<std::vector<int>> level_grid(const PolyMatrix& mat, int m) {
  std::vector<std::vector<int>> grid(m, std::vector<int>(m, 0));
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= m; ++c) {
      auto vars = mat.at(r, c).variables();
      REQUIRE(vars.size() == 1);
      grid[r - 1][c - 1] = vars.begin()->level;
    }
  return grid;
}

}  // namespace

TEST_CASE("entry level closed forms") {
  CHECK(hook_entry_level(HookShape::A, 3, 2, 3) == 2);
  CHECK(hook_entry_level(HookShape::B, 3, 2, 3) == 3);
  CHECK(hook_entry_level(HookShape::C, 3, 2, 1) == 3);
  CHECK(hook_entry_level(HookShape::D, 3, 2, 1) == 2);
  CHECK_THROWS_AS(hook_entry_level(HookShape::A, 3, 0, 1), IndexOutOfRange);
  CHECK_THROWS_AS(hook_entry_level(HookShape::A, 3, 1, 4), IndexOutOfRange);
}

TEST_CASE("matrix level grids") {
  CHECK(level_grid(hook_matrix(HookShape::A, 2), 2) ==
        std::vector<std::vector<int>>{{2, 2}, {2, 1}});
  CHECK(level_grid(hook_matrix(HookShape::D, 2), 2) ==
        std::vector<std::vector<int>>{{2, 2}, {1, 2}});
  CHECK(level_grid(hook_matrix(HookShape::C, 3), 3) ==
        std::vector<std::vector<int>>{{3, 2, 1}, {3, 2, 2}, {3, 3, 3}});
  CHECK(level_grid(hook_matrix(HookShape::B, 3), 3) ==
        std::vector<std::vector<int>>{{1, 2, 3}, {2, 2, 3}, {3, 3, 3}});
}

TEST_CASE("order one matrices coincide") {
  for (HookShape s : {HookShape::A, HookShape::B, HookShape::C, HookShape::D})
    CHECK(hook_matrix(s, 1).at(1, 1) == Polynomial::variable(1, 1, 1));
}

TEST_CASE("determinant matches product formula") {
  for (HookShape s : {HookShape::A, HookShape::B, HookShape::C, HookShape::D})
    for (int m = 1; m <= 5; ++m)
      CHECK(det_cofactor(hook_matrix(s, m)) == hook_det_formula(s, m));
}

TEST_CASE("signed product for order two") {
  // det C_2 = -(x1 - x2) * x2
  CHECK(hook_det_formula(HookShape::C, 2).str() ==
        "-x[1,1,1]*x[1,1,2] + x[1,1,2]^2");
  CHECK(hook_sign_exponent(HookShape::C, 2) == 1);
  CHECK(hook_sign_exponent(HookShape::A, 6) == 0);
  CHECK(hook_sign_exponent(HookShape::D, 5) == 2);
}

TEST_CASE("formula evaluates to integer determinant") {
  Assignment a;
  a[VarId{1, 1, 1}] = 5;
  a[VarId{1, 1, 2}] = 3;
  a[VarId{1, 1, 3}] = 2;
  // floor(3/2) = 1 swap, so -(5-3)(3-2)(2-0) = -4
  CHECK(hook_det_formula(HookShape::D, 3).eval(a) == -4);
  CHECK(det_eval_bareiss(hook_matrix(HookShape::D, 3), a) == -4);
}

TEST_CASE("reversal schedules route every shape to the first") {
  for (HookShape s : {HookShape::B, HookShape::C, HookShape::D}) {
    for (int m = 1; m <= 6; ++m) {
      SwapSchedule sched = hook_reversal_schedule(s, m);
      SwapResult res = apply_swaps(hook_matrix(HookShape::A, m), sched);
      CHECK(res.matrix == hook_matrix(s, m));
      int expected = hook_sign_exponent(s, m) % 2;
      CHECK((res.sign == 1 ? 0 : 1) == expected);
    }
  }
  CHECK(hook_reversal_schedule(HookShape::A, 4).size() == 0);
}

TEST_CASE("named shapes parse and print") {
  CHECK(hook_shape_from_string("C") == HookShape::C);
  CHECK(to_string(HookShape::D) == std::string("D"));
  CHECK_THROWS_AS(hook_shape_from_string("E"), ParseError);
}

TEST_CASE("rejects non positive order") {
  CHECK_THROWS_AS(hook_matrix(HookShape::A, 0), InvalidOrder);
  CHECK_THROWS_AS(hook_det_formula(HookShape::B, -1), InvalidOrder);
}
