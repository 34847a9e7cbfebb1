#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookdet/lgv.hpp"
#include "hookdet/random_dag.hpp"
#include "hookdet/suite.hpp"

namespace {

using nlohmann::json;

// stdout unless --out was given; JSON is compact by default so identical
// argv + seed produce byte-identical output.
void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw hookdet::Error("cannot write to '" + out_path + "'");
  out << payload;
}

void emit_json(const json& j, const std::string& out_path, bool pretty) {
  emit((pretty ? j.dump(2) : j.dump()) + "\n", out_path);
}

hookdet::ReversalSchedule parse_custom_schedule(const std::string& text,
                                                int N) {
  // Syntax: "rows=1,3;cols=2" with either part optional.
  hookdet::ReversalSchedule r;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw hookdet::ParseError("schedule parts look like rows=1,3 or cols=2");
    const std::string key = part.substr(0, eq);
    std::set<int>* target = nullptr;
    if (key == "rows")
      target = &r.source_rows;
    else if (key == "cols")
      target = &r.sink_cols;
    else
      throw hookdet::ParseError("unknown schedule key '" + key + "'");
    std::stringstream items(part.substr(eq + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      int idx = 0;
      try {
        idx = std::stoi(item);
      } catch (const std::exception&) {
        throw hookdet::ParseError("schedule index '" + item +
                                  "' is not an integer");
      }
      if (idx < 1 || idx > N)
        throw hookdet::IndexOutOfRange("schedule index outside [1, N]");
      target->insert(idx);
    }
  }
  return r;
}

struct GraphChoice {
  hookdet::Digraph graph;
  std::string schedule_kind;
  std::optional<hookdet::BlockFamily> family;
};

GraphChoice choose_graph(int N, int m, const std::string& schedule,
                         const std::string& family_tag) {
  GraphChoice choice;
  choice.schedule_kind = schedule;
  if (schedule == "none") {
    choice.family = hookdet::BlockFamily::A;
    choice.graph = hookdet::build_gamma_Nm(N, m);
  } else if (schedule == "family") {
    if (family_tag.empty())
      throw hookdet::ParseError("--schedule family needs --family");
    const auto f = hookdet::block_family_from_string(family_tag);
    choice.family = f;
    const auto r = hookdet::family_reversal_schedule(f, N);
    choice.graph = hookdet::build_gamma_Nm(N, m, r.source_rows, r.sink_cols);
  } else {
    const auto r = parse_custom_schedule(schedule, N);
    choice.graph = hookdet::build_gamma_Nm(N, m, r.source_rows, r.sink_cols);
  }
  return choice;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hook and block-hook determinant toolkit"};
  app.require_subcommand(1);

  std::string shape_tag, family_tag, schedule = "none", out_path, in_path;
  std::string engine = "auto", scope = "all";
  int N = 1, m = 1, evals = 50;
  std::uint64_t seed = 0;
  double max_candidates = 1e8;
  bool pretty = false, timings = false, corrupt = false;

  auto add_common = [&](CLI::App* cmd, bool with_out = true) {
    if (with_out) cmd->add_option("--out", out_path, "write output to a file");
    cmd->add_flag("--pretty", pretty, "indent JSON output");
  };

  CLI::App* gen = app.add_subcommand("gen", "emit a matrix as JSON");
  gen->add_option("--shape", shape_tag, "hook shape A|B|C|D");
  gen->add_option("--family", family_tag, "block family A..D|E|Ep|F|Fp|G|Gp");
  gen->add_option("--N", N, "number of block rows");
  gen->add_option("--m", m, "order of each block");
  add_common(gen);

  CLI::App* det = app.add_subcommand("det", "determinant of a JSON matrix");
  det->add_option("--in", in_path, "matrix file (stdin when omitted)");
  det->add_option("--engine", engine, "auto|cofactor|subset")
      ->check(CLI::IsMember({"auto", "cofactor", "subset"}));
  add_common(det);

  CLI::App* formula = app.add_subcommand(
      "formula", "closed-form determinant, canonical polynomial text");
  formula->add_option("--shape", shape_tag, "hook shape A|B|C|D");
  formula->add_option("--family", family_tag, "block family");
  formula->add_option("--N", N, "number of block rows");
  formula->add_option("--m", m, "order of each block");
  formula->add_option("--out", out_path, "write output to a file");

  CLI::App* verify = app.add_subcommand(
      "verify", "check determinant = formula and the swap derivation");
  verify->add_option("--shape", shape_tag, "hook shape A|B|C|D");
  verify->add_option("--family", family_tag, "block family");
  verify->add_option("--N", N, "number of block rows");
  verify->add_option("--m", m, "order of each block");
  verify->add_option("--evals", evals, "random integer evaluations");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_flag("--timings", timings, "include millis in the report");
  verify->add_flag("--corrupt-formula", corrupt)->group("");  // failure drill
  add_common(verify);

  CLI::App* lgv = app.add_subcommand(
      "lgv", "enumerate vertex-disjoint path systems and check the identity");
  lgv->add_option("--N", N, "number of blocks");
  lgv->add_option("--m", m, "levels per block");
  lgv->add_option("--family", family_tag, "block family for --schedule family");
  lgv->add_option("--schedule", schedule,
                  "none | family | rows=i,j;cols=k (reversed blocks)");
  lgv->add_option("--max-candidates", max_candidates,
                  "explosion-guard bound on candidate systems");
  add_common(lgv);

  CLI::App* dot = app.add_subcommand("dot", "emit the graph in DOT form");
  dot->add_option("--N", N, "number of blocks");
  dot->add_option("--m", m, "levels per block");
  dot->add_option("--family", family_tag, "block family for --schedule family");
  dot->add_option("--schedule", schedule, "none | family | rows=..;cols=..");
  dot->add_option("--out", out_path, "write output to a file");

  CLI::App* suite = app.add_subcommand("suite", "run a verification grid");
  suite->add_option("scope", scope, "hooks|blocks|lgv|all");
  suite->add_option("--seed", seed, "RNG seed");
  suite->add_option("--evals", evals, "random evaluations per instance");
  suite->add_flag("--timings", timings, "include millis per suite");
  add_common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (shape_tag.empty() == family_tag.empty())
        throw hookdet::ParseError("gen needs exactly one of --shape/--family");
      hookdet::PolyMatrix matrix =
          shape_tag.empty()
              ? hookdet::block_hook_matrix(
                    hookdet::block_family_from_string(family_tag), N, m)
              : hookdet::hook_matrix(
                    hookdet::hook_shape_from_string(shape_tag), m);
      emit_json(hookdet::matrix_to_json(matrix), out_path, pretty);
      return 0;
    }

    if (det->parsed()) {
      json parsed;
      if (in_path.empty()) {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        parsed = json::parse(buffer.str(), nullptr, false);
      } else {
        std::ifstream in(in_path);
        if (!in) throw hookdet::Error("cannot read '" + in_path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        parsed = json::parse(buffer.str(), nullptr, false);
      }
      if (parsed.is_discarded())
        throw hookdet::ParseError("input is not valid JSON");
      const hookdet::PolyMatrix matrix = hookdet::matrix_from_json(parsed);
      std::string used = engine;
      if (engine == "auto")
        used = matrix.order() <= hookdet::kCofactorMaxOrder ? "cofactor"
                                                            : "subset";
      const hookdet::Polynomial d = used == "cofactor"
                                        ? hookdet::det_cofactor(matrix)
                                        : hookdet::det_subset_dp(matrix);
      emit_json(json{{"order", matrix.order()},
                     {"engine", used},
                     {"det", d.str()}},
                out_path, pretty);
      return 0;
    }

    if (formula->parsed()) {
      if (shape_tag.empty() == family_tag.empty())
        throw hookdet::ParseError(
            "formula needs exactly one of --shape/--family");
      const hookdet::Polynomial p =
          shape_tag.empty()
              ? hookdet::block_det_formula(
                    hookdet::block_family_from_string(family_tag), N, m)
              : hookdet::hook_det_formula(
                    hookdet::hook_shape_from_string(shape_tag), m);
      emit(p.str() + "\n", out_path);
      return 0;
    }

    if (verify->parsed()) {
      if (shape_tag.empty() == family_tag.empty())
        throw hookdet::ParseError(
            "verify needs exactly one of --shape/--family");
      if (!family_tag.empty()) {
        const auto f = hookdet::block_family_from_string(family_tag);
        hookdet::VerificationReport report =
            hookdet::verify_family(f, N, m, evals, seed);
        if (corrupt) report.symbolic_ok = !report.symbolic_ok;
        emit_json(report.to_json(timings), out_path, pretty);
        return report.ok(evals) ? 0 : 1;
      }
      const auto shape = hookdet::hook_shape_from_string(shape_tag);
      const hookdet::PolyMatrix matrix = hookdet::hook_matrix(shape, m);
      hookdet::Polynomial expected = hookdet::hook_det_formula(shape, m);
      if (corrupt) expected = -expected;
      const bool symbolic_ok = hookdet::det_cofactor(matrix) == expected;
      const auto schedule_to_shape = hookdet::hook_reversal_schedule(shape, m);
      const bool derivation_ok =
          hookdet::apply_swaps(hookdet::hook_matrix(hookdet::HookShape::A, m),
                               schedule_to_shape)
              .matrix == matrix;
      hookdet::Rng rng(seed);
      int agreed = 0;
      for (int t = 0; t < evals; ++t) {
        hookdet::Assignment assignment;
        for (hookdet::VarId v : hookdet::matrix_variables(matrix))
          assignment[v] = rng.range(-9, 9);
        if (hookdet::det_eval_bareiss(matrix, assignment) ==
            expected.eval(assignment))
          ++agreed;
      }
      emit_json(json{{"shape", shape_tag},
                     {"m", m},
                     {"symbolic_ok", symbolic_ok},
                     {"derivation_ok", derivation_ok},
                     {"eval_checks", agreed}},
                out_path, pretty);
      return symbolic_ok && derivation_ok && agreed == evals ? 0 : 1;
    }

    if (lgv->parsed()) {
      GraphChoice choice = choose_graph(N, m, schedule, family_tag);
      hookdet::EnumerationOptions options;
      options.max_candidates = max_candidates;
      const hookdet::PolyMatrix pm = hookdet::path_matrix(choice.graph);
      const auto systems = hookdet::enumerate_vd_systems(choice.graph, options);
      const hookdet::Polynomial sum =
          hookdet::lgv_signed_sum(choice.graph, options);
      const hookdet::Polynomial determinant = hookdet::det_subset_dp(pm);
      json report{{"N", N},
                  {"m", m},
                  {"schedule", schedule},
                  {"vertices", choice.graph.vertex_count()},
                  {"systems", systems.size()},
                  {"all_length_one", hookdet::check_all_length_one(systems)},
                  {"signed_sum_equals_det", sum == determinant},
                  {"det", determinant.str()}};
      bool ok = sum == determinant;
      if (choice.family) {
        const bool matches =
            pm == hookdet::block_hook_matrix(*choice.family, N, m);
        report["family"] = hookdet::to_string(*choice.family);
        report["path_matrix_matches_family"] = matches;
        ok = ok && matches;
      }
      emit_json(report, out_path, pretty);
      return ok ? 0 : 1;
    }

    if (dot->parsed()) {
      GraphChoice choice = choose_graph(N, m, schedule, family_tag);
      emit(choice.graph.to_dot(), out_path);
      return 0;
    }

    if (suite->parsed()) {
      const auto results = hookdet::run_scope(scope, seed, evals);
      bool ok = true;
      json list = json::array();
      for (const auto& r : results) {
        ok = ok && r.ok();
        list.push_back(r.to_json(timings));
      }
      emit_json(json{{"scope", scope}, {"ok", ok}, {"suites", std::move(list)}},
                out_path, pretty);
      return ok ? 0 : 1;
    }
  } catch (const hookdet::ExplosionGuard& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const hookdet::OrderTooLarge& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const hookdet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
