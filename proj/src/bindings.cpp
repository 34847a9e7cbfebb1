#include <pybind11/pybind11.h>

#include <json.hpp>

#include "hookdet/lgv.hpp"
#include "hookdet/suite.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// The bound surface exchanges JSON/canonical strings only: no polynomial
// object marshalling, and byte-stable output on both sides of the bridge.

std::string hook_matrix_json(const std::string& shape, int m) {
  return hookdet::matrix_to_json(
             hookdet::hook_matrix(hookdet::hook_shape_from_string(shape), m))
      .dump();
}

std::string block_matrix_json(const std::string& family, int N, int m) {
  return hookdet::matrix_to_json(
             hookdet::block_hook_matrix(
                 hookdet::block_family_from_string(family), N, m))
      .dump();
}

std::string hook_formula(const std::string& shape, int m) {
  return hookdet::hook_det_formula(hookdet::hook_shape_from_string(shape), m)
      .str();
}

std::string block_formula(const std::string& family, int N, int m) {
  return hookdet::block_det_formula(
             hookdet::block_family_from_string(family), N, m)
      .str();
}

std::string det(const std::string& matrix_json) {
  const json parsed = json::parse(matrix_json, nullptr, false);
  if (parsed.is_discarded())
    throw hookdet::ParseError("input is not valid JSON");
  const hookdet::PolyMatrix matrix = hookdet::matrix_from_json(parsed);
  if (matrix.order() <= hookdet::kCofactorMaxOrder)
    return hookdet::det_cofactor(matrix).str();
  return hookdet::det_subset_dp(matrix).str();
}

std::string verify_family_json(const std::string& family, int N, int m,
                               int evals, std::uint64_t seed) {
  return hookdet::verify_family(hookdet::block_family_from_string(family), N,
                                m, evals, seed)
      .to_json()
      .dump();
}

hookdet::Digraph graph_for(int N, int m, const std::string& family) {
  if (family.empty()) return hookdet::build_gamma_Nm(N, m);
  const auto f = hookdet::block_family_from_string(family);
  const auto r = hookdet::family_reversal_schedule(f, N);
  return hookdet::build_gamma_Nm(N, m, r.source_rows, r.sink_cols);
}

std::string lgv_report_json(int N, int m, const std::string& family) {
  const hookdet::Digraph g = graph_for(N, m, family);
  const hookdet::PolyMatrix pm = hookdet::path_matrix(g);
  const auto systems = hookdet::enumerate_vd_systems(g);
  const hookdet::Polynomial sum = hookdet::lgv_signed_sum(g);
  const hookdet::Polynomial determinant = hookdet::det_subset_dp(pm);
  const auto f = hookdet::block_family_from_string(
      family.empty() ? "A" : family);
  json report{{"N", N},
              {"m", m},
              {"family", hookdet::to_string(f)},
              {"systems", systems.size()},
              {"all_length_one", hookdet::check_all_length_one(systems)},
              {"signed_sum_equals_det", sum == determinant},
              {"path_matrix_matches_family",
               pm == hookdet::block_hook_matrix(f, N, m)},
              {"det", determinant.str()}};
  return report.dump();
}

std::string gamma_dot(int N, int m, const std::string& family) {
  return graph_for(N, m, family).to_dot();
}

std::string suite_json(const std::string& scope, std::uint64_t seed,
                       int evals) {
  json list = json::array();
  bool ok = true;
  for (const auto& r : hookdet::run_scope(scope, seed, evals)) {
    ok = ok && r.ok();
    list.push_back(r.to_json());
  }
  return json{{"scope", scope}, {"ok", ok}, {"suites", std::move(list)}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_hookdet, mod) {
  mod.doc() = "exact hook / block-hook determinant kernels";

  py::register_exception<hookdet::Error>(mod, "HookdetError",
                                         PyExc_RuntimeError);

  mod.def("hook_matrix_json", &hook_matrix_json, py::arg("shape"),
          py::arg("m"), "order-m hook pattern as matrix JSON");
  mod.def("block_matrix_json", &block_matrix_json, py::arg("family"),
          py::arg("n"), py::arg("m"), "N*m block hook matrix as JSON");
  mod.def("hook_formula", &hook_formula, py::arg("shape"), py::arg("m"),
          "closed-form determinant, canonical text");
  mod.def("block_formula", &block_formula, py::arg("family"), py::arg("n"),
          py::arg("m"), "signed product formula, canonical text");
  mod.def("det", &det, py::arg("matrix_json"),
          "exact determinant of a matrix-JSON string");
  mod.def("verify_family_json", &verify_family_json, py::arg("family"),
          py::arg("n"), py::arg("m"), py::arg("evals") = 50,
          py::arg("seed") = 0, "verification report as JSON");
  mod.def("lgv_report_json", &lgv_report_json, py::arg("n"), py::arg("m"),
          py::arg("family") = std::string(),
          "vertex-disjoint path-system report as JSON");
  mod.def("gamma_dot", &gamma_dot, py::arg("n"), py::arg("m"),
          py::arg("family") = std::string(), "layered graph in DOT form");
  mod.def("suite_json", &suite_json, py::arg("scope") = std::string("hooks"),
          py::arg("seed") = 0, py::arg("evals") = 50,
          "verification grid summary as JSON");
}
