#include <doctest.h>

#include <hookdet/hooks.hpp>
#include <hookdet/matrix.hpp>

#include <json.hpp>

#include "test_util.hpp"

using namespace hookdet;
using test::random_assignment;
using test::random_poly;

namespace {

Polynomial x(int k) { return Polynomial::variable(1, 1, k); }

PolyMatrix random_matrix(Rng& rng, int n) {
  PolyMatrix mat(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) mat.at(r, c) = random_poly(rng, 3, 2);
  return mat;
}

PolyMatrix constant_matrix(const std::vector<std::vector<int>>& grid) {
  PolyMatrix mat(static_cast<int>(grid.size()));
  for (int r = 1; r <= mat.order(); ++r)
    for (int c = 1; c <= mat.order(); ++c)
      mat.at(r, c) = Polynomial(grid[r - 1][c - 1]);
  return mat;
}

}  // namespace

TEST_CASE("cofactor determinant base cases") {
  PolyMatrix one(1);
  one.at(1, 1) = x(1) - x(2);
  CHECK(det_cofactor(one) == x(1) - x(2));

  PolyMatrix two(2);
  two.at(1, 1) = x(2);
  two.at(1, 2) = x(2);
  two.at(2, 1) = x(2);
  two.at(2, 2) = x(1);
  CHECK(det_cofactor(two) == x(1) * x(2) - x(2) * x(2));
}

TEST_CASE("integer determinant cross-check") {
  PolyMatrix m = constant_matrix({{2, 2, 2}, {2, 3, 3}, {2, 3, 5}});
  CHECK(det_cofactor(m) == Polynomial(4));
  CHECK(det_subset_dp(m) == Polynomial(4));
}

TEST_CASE("engine order guards") {
  CHECK_THROWS_AS(det_cofactor(PolyMatrix(8)), OrderTooLarge);
  CHECK_THROWS_AS(det_subset_dp(PolyMatrix(15)), OrderTooLarge);
}

TEST_CASE("subset dp on identity") {
  PolyMatrix id(4);
  for (int i = 1; i <= 4; ++i) id.at(i, i) = Polynomial(1);
  CHECK(det_subset_dp(id) == Polynomial(1));
}

TEST_CASE("cofactor and subset dp agree on random matrices") {
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    PolyMatrix m = random_matrix(rng, 5);
    CHECK(det_cofactor(m) == det_subset_dp(m));
  }
}

TEST_CASE("integer evaluation determinant") {
  PolyMatrix zero(3);
  CHECK(det_eval_bareiss(zero, Assignment{}) == 0);

  PolyMatrix a3 = hook_matrix(HookShape::A, 3);
  Assignment a;
  a[VarId{1, 1, 1}] = 5;
  a[VarId{1, 1, 2}] = 3;
  a[VarId{1, 1, 3}] = 2;
  // (5-3)*(3-2)*(2-0) = 4
  CHECK(det_eval_bareiss(a3, a) == 4);

  Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    PolyMatrix m = random_matrix(rng, 4);
    Assignment v = random_assignment(rng);
    CHECK(det_eval_bareiss(m, v) == det_cofactor(m).eval(v));
  }
}

TEST_CASE("row swaps flip determinant sign") {
  Rng rng(23);
  PolyMatrix m = random_matrix(rng, 4);
  SwapSchedule sched;
  sched.row_swaps = {{1, 3}};
  SwapResult res = apply_swaps(m, sched);
  CHECK(res.sign == -1);
  CHECK(det_cofactor(res.matrix) == -det_cofactor(m));

  sched.col_swaps = {{2, 4}};
  res = apply_swaps(m, sched);
  CHECK(res.sign == 1);
  CHECK(det_cofactor(res.matrix) == det_cofactor(m));
}

TEST_CASE("determinant is linear in a row") {
  Rng rng(24);
  PolyMatrix m = random_matrix(rng, 3);
  PolyMatrix scaled = m;
  for (int c = 1; c <= 3; ++c) scaled.at(2, c) = m.at(2, c) * Polynomial(7);
  CHECK(det_cofactor(scaled) == Polynomial(7) * det_cofactor(m));
}

TEST_CASE("block assembly") {
  PolyMatrix b(2);
  b.at(1, 1) = x(1);
  b.at(2, 2) = x(2);
  PolyMatrix same = assemble_blocks({{b}});
  CHECK(same == b);

  PolyMatrix a2 = hook_matrix(HookShape::A, 2);
  PolyMatrix b2 = hook_matrix(HookShape::B, 2);
  PolyMatrix big = assemble_blocks({{a2, a2}, {b2, b2}});
  CHECK(big.order() == 4);
  CHECK(big.at(1, 1) == a2.at(1, 1));
  CHECK(big.at(3, 2) == b2.at(1, 2));
  CHECK(big.at(4, 4) == b2.at(2, 2));

  PolyMatrix odd(3);
  CHECK_THROWS_AS(assemble_blocks({{a2, odd}}), DimensionMismatch);
  CHECK_THROWS_AS(assemble_blocks({{a2, a2}}), DimensionMismatch);
}

TEST_CASE("json round trip") {
  Rng rng(25);
  PolyMatrix m = random_matrix(rng, 3);
  nlohmann::json j = matrix_to_json(m);
  CHECK(j["order"] == 3);
  CHECK(matrix_from_json(j) == m);

  PolyMatrix one(1);
  one.at(1, 1) = x(1);
  CHECK(matrix_to_json(one).dump() ==
        R"({"entries":[["x[1,1,1]"]],"order":1})");
}

TEST_CASE("json rejects malformed matrices") {
  using nlohmann::json;
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"order":2})")),
                  ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"order":2,"entries":[["1","1"]]})")),
      DimensionMismatch);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"order":0,"entries":[]})")),
      InvalidOrder);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(
          R"({"order":1,"entries":[["x[1,1]"]]})")),
      ParseError);
}

TEST_CASE("matrix variable collection") {
  PolyMatrix m(2);
  m.at(1, 1) = x(1);
  m.at(2, 2) = x(3) * x(3);
  auto vars = matrix_variables(m);
  CHECK(vars.size() == 2);
  CHECK(vars.count(VarId{1, 1, 3}) == 1);
}
