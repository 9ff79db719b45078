// Command line front end. Every run prints one report (JSON by default,
// CSV where tabular) to stdout or --out, written once at the end, so
// identical invocations produce byte-identical output.
//
// Exit codes: 0 success / check passed; 1 check failed (verification gap,
// not Clifford); 2 invalid input or request; 3 indeterminate verdict.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "oneway/clifford.hpp"
#include "oneway/json_io.hpp"
#include "oneway/rac.hpp"

namespace {

using oneway::json;

struct RunConfig {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t budget = 100000000;
  std::string format = "json";
  std::string out;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw oneway::validation_error("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw oneway::validation_error("file '" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

// Precedence per option: explicit flag > environment > config file > default.
void layer_config(RunConfig& cfg, const CLI::App& app, const std::string& config_path) {
  if (!config_path.empty()) {
    const json j = read_json_file(config_path);
    if (!j.is_object()) throw oneway::validation_error("config file must be a JSON object");
    if (app.count("--tol") == 0 && j.contains("tol")) cfg.tol = j.at("tol").get<double>();
    if (app.count("--seed") == 0 && j.contains("seed"))
      cfg.seed = j.at("seed").get<std::uint64_t>();
    if (app.count("--samples") == 0 && j.contains("samples"))
      cfg.samples = j.at("samples").get<std::uint64_t>();
    if (app.count("--budget") == 0 && j.contains("budget"))
      cfg.budget = j.at("budget").get<std::uint64_t>();
    if (app.count("--format") == 0 && j.contains("format"))
      cfg.format = j.at("format").get<std::string>();
    if (app.count("--out") == 0 && j.contains("out")) cfg.out = j.at("out").get<std::string>();
  }
  if (const char* env = std::getenv("ONEWAY_TOL"); env && app.count("--tol") == 0)
    cfg.tol = std::strtod(env, nullptr);
  if (const char* env = std::getenv("ONEWAY_BUDGET"); env && app.count("--budget") == 0)
    cfg.budget = std::strtoull(env, nullptr, 10);
  if (cfg.format != "json" && cfg.format != "csv")
    throw oneway::validation_error("format must be json or csv");
  if (!(cfg.tol > 0.0)) throw oneway::validation_error("tol must be positive");
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw oneway::validation_error("cannot write to '" + cfg.out + "'");
  out << content;
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

[[noreturn]] void csv_unavailable(const char* what) {
  throw oneway::validation_error(std::string(what) + " has no CSV form; use --format json");
}

json bloch_json(const oneway::BlochVector& n) {
  return {{"nx", n.nx}, {"ny", n.ny}, {"nz", n.nz}};
}

std::vector<int> parse_bases(const std::string& word) {
  std::vector<int> bases;
  for (char c : word) {
    switch (c) {
      case 'Z': case 'z': bases.push_back(1); break;
      case 'X': case 'x': bases.push_back(2); break;
      case 'Y': case 'y': bases.push_back(3); break;
      default:
        throw oneway::validation_error("bases word may only contain Z, X, Y");
    }
  }
  return bases;
}

int cmd_mub(const RunConfig& cfg, int dim, bool overlaps) {
  const oneway::PrimeDim d(dim);
  if (cfg.format == "csv") {
    if (!overlaps) csv_unavailable("the projector listing");
    std::string out = "r1,r2,overlap\n";
    const int total = dim * (dim + 1);
    for (int r1 = 1; r1 <= total; ++r1)
      for (int r2 = 1; r2 <= total; ++r2)
        out += std::to_string(r1) + "," + std::to_string(r2) + "," +
               oneway::to_string(oneway::overlap(d, oneway::vertex_id(d, r1),
                                                 oneway::vertex_id(d, r2))) +
               "\n";
    emit(cfg, out);
    return 0;
  }
  json bases = json::array();
  for (int k = 1; k <= dim + 1; ++k) {
    const oneway::PauliLabel label = oneway::mub_operator_label(d, k);
    json projectors = json::array();
    for (int j = 0; j < dim; ++j)
      projectors.push_back(oneway::dense_to_json(oneway::mub_projector(d, {k, j})));
    bases.push_back({{"k", k},
                     {"operator_label", {{"a1", label.a1}, {"a2", label.a2}}},
                     {"projectors", std::move(projectors)}});
  }
  json report{{"dim", dim}, {"bases", std::move(bases)}};
  if (overlaps) {
    const int total = dim * (dim + 1);
    json table = json::array();
    for (int r1 = 1; r1 <= total; ++r1) {
      json row = json::array();
      for (int r2 = 1; r2 <= total; ++r2)
        row.push_back(oneway::to_string(
            oneway::overlap(d, oneway::vertex_id(d, r1), oneway::vertex_id(d, r2))));
      table.push_back(std::move(row));
    }
    report["overlaps"] = std::move(table);
  }
  emit_json(cfg, report);
  return 0;
}

int cmd_gk_verify(const RunConfig& cfg, int dim, const std::string& partitions_path) {
  std::optional<oneway::TaskSpaces> spaces;
  oneway::Partitions parts;
  if (partitions_path.empty()) {
    if (dim == 0)
      throw oneway::validation_error("gk-verify needs --dim or --partitions");
    const oneway::PrimeDim d(dim);
    spaces = oneway::maximal_task(d);
    parts = oneway::maximal_partitions(d);
  } else {
    auto loaded = oneway::partitions_from_json(read_json_file(partitions_path));
    if (dim != 0 && dim != loaded.first.dim())
      throw oneway::validation_error("--dim disagrees with the partition file");
    spaces = std::move(loaded.first);
    parts = std::move(loaded.second);
  }

  const oneway::SimulationCheck exact = oneway::verify_simulation(*spaces, parts);
  bool pass = exact.pass;
  json checks = json::array();
  checks.push_back({{"mode", exact.mode},
                    {"max_deviation", exact.max_deviation},
                    {"tolerance", exact.tolerance},
                    {"pass", exact.pass}});
  if (cfg.samples > 0) {
    const oneway::SimulationCheck sampled =
        oneway::verify_simulation_sampled(*spaces, parts, cfg.samples, cfg.seed);
    pass = pass && sampled.pass;
    checks.push_back({{"mode", sampled.mode},
                      {"max_deviation", sampled.max_deviation},
                      {"tolerance", sampled.tolerance},
                      {"samples", sampled.samples},
                      {"seed", sampled.seed},
                      {"pass", sampled.pass}});
  }
  const oneway::Correlation table = oneway::classical_simulation_exact(*spaces, parts);
  if (cfg.format == "csv") {
    emit(cfg, oneway::correlation_to_csv(table));
  } else {
    emit_json(cfg, json{{"dim", spaces->dim()},
                        {"checks", std::move(checks)},
                        {"classical_table", oneway::correlation_to_json(table)}});
  }
  return pass ? 0 : 1;
}

int cmd_clifford_check(const RunConfig& cfg, const std::string& matrix_path) {
  const oneway::Matrix u = oneway::dense_from_json(read_json_file(matrix_path));
  if (u.rows() != u.cols()) throw oneway::validation_error("matrix must be square");
  const oneway::PrimeDim d(static_cast<int>(u.rows()));
  const oneway::CliffordVerdict v = oneway::is_clifford(d, u, cfg.tol);

  const auto image_json = [](const oneway::ConjugateImage& im) {
    json j{{"a1", im.label.a1},
           {"a2", im.label.a2},
           {"phase_re", im.phase.real()},
           {"phase_im", im.phase.imag()}};
    if (im.phase_is_exact) j["phase_exponent"] = im.phase_exp;
    return j;
  };
  json report{{"dim", d.value()}, {"residual", v.residual}};
  int code = 1;
  switch (v.status) {
    case oneway::CliffordStatus::yes:
      report["status"] = "clifford";
      report["x_image"] = image_json(v.x_image);
      report["z_image"] = image_json(v.z_image);
      code = 0;
      break;
    case oneway::CliffordStatus::no:
      report["status"] = "not-clifford";
      code = 1;
      break;
    case oneway::CliffordStatus::indeterminate:
      report["status"] = "indeterminate";
      code = 3;
      break;
  }
  if (cfg.format == "csv") csv_unavailable("the verdict report");
  emit_json(cfg, report);
  return code;
}

json success_json(const oneway::RacTask& task, const oneway::SuccessReport& rep) {
  json per = json::object();
  for (std::size_t x = 0; x < task.n_strings(); ++x) {
    if (rep.exact)
      per[task.spaces().X()[x]] = oneway::to_string(rep.per_string[x]);
    else
      per[task.spaces().X()[x]] = rep.per_string_value[x];
  }
  json j{{"arithmetic", rep.exact ? "exact" : "floating"},
         {"average_value", rep.average_value},
         {"per_string", std::move(per)}};
  if (rep.exact) j["average"] = oneway::to_string(rep.average);
  return j;
}

int cmd_rac_eval(const RunConfig& cfg, int n_bits, const std::string& strategy) {
  std::optional<oneway::RacTask> task;
  oneway::SuccessReport rep;
  std::string tag = strategy;
  if (strategy == "meid") {
    task.emplace(n_bits);
    rep = oneway::rac_success(
        *task, oneway::eval_classical(task->spaces(), oneway::meid_strategy(*task)));
  } else if (strategy == "onmq" || strategy == "enmq") {
    task.emplace(n_bits);
    const oneway::QuantumStrategy q =
        strategy == "onmq" ? oneway::onmq_strategy(*task) : oneway::enmq_strategy(*task);
    rep = oneway::rac_success(*task, oneway::eval_stabilizer_exact(task->spaces(), q));
  } else {
    auto loaded = oneway::strategy_from_json(read_json_file(strategy));
    if (loaded.first.dim() != 2)
      throw oneway::validation_error("this task is defined over qubit messages");
    task.emplace(n_bits);
    if (!(loaded.first == task->spaces()))
      throw oneway::validation_error("strategy file alphabets do not match the " +
                                     std::to_string(n_bits) + "-bit task");
    tag = "custom";
    if (oneway::is_stabilizer_typed(loaded.second))
      rep = oneway::rac_success(*task,
                                oneway::eval_stabilizer_exact(loaded.first, loaded.second));
    else
      rep = oneway::rac_success(
          *task, oneway::eval_quantum(loaded.first, loaded.second, cfg.tol));
  }

  if (cfg.format == "csv") {
    std::string out = "x,success\n";
    for (std::size_t x = 0; x < task->n_strings(); ++x) {
      out += task->spaces().X()[x] + ",";
      out += rep.exact ? oneway::to_string(rep.per_string[x])
                       : oneway::format_double(rep.per_string_value[x]);
      out += "\n";
    }
    out += "average,";
    out += rep.exact ? oneway::to_string(rep.average)
                     : oneway::format_double(rep.average_value);
    out += "\n";
    emit(cfg, out);
    return 0;
  }
  json j = success_json(*task, rep);
  j["bits"] = n_bits;
  j["strategy"] = tag;
  emit_json(cfg, j);
  return 0;
}

int cmd_rac_optimize(const RunConfig& cfg, int n_bits, const std::string& restrict_mode,
                     std::string bases_word, int case_id, bool all_bases,
                     const std::string& method, double refine_tol) {
  const oneway::RacTask task(n_bits);
  if (case_id != 0) {
    const std::vector<int> case_bases = oneway::rac3_case_bases(case_id);
    if (n_bits != 3) throw oneway::validation_error("--case applies to --n 3");
    bases_word = case_bases[0] == 1 ? "Z" : (case_bases[0] == 2 ? "X" : "Y");
    bases_word += case_bases[1] == 1 ? "Z" : (case_bases[1] == 2 ? "X" : "Y");
    bases_word += case_bases[2] == 1 ? "Z" : (case_bases[2] == 2 ? "X" : "Y");
  }
  std::vector<int> bases;
  if (!bases_word.empty()) {
    bases = parse_bases(bases_word);
  } else if (n_bits == 2) {
    bases = oneway::rac2_bases();
  } else if (n_bits == 3) {
    bases = oneway::rac3_case_bases(2);
  } else if (restrict_mode != "classical" && !all_bases) {
    throw oneway::validation_error("--bases is required for --n > 3");
  }

  json j{{"bits", n_bits}, {"restrict", restrict_mode}};
  if (!bases.empty()) j["bases"] = bases;

  if (restrict_mode == "classical") {
    const oneway::PayoffTable pay = oneway::rac_payoff(task);
    const oneway::OptReport rep =
        method == "decomposed"
            ? oneway::classical_optimum_decomposed(task.spaces(), pay, cfg.budget)
            : oneway::classical_optimum(task.spaces(), pay, cfg.budget);
    j["best"] = oneway::to_string(rep.best);
    j["best_value"] = rep.best_value;
    j["method"] = rep.method;
    j["search_size"] = rep.search_size;
  } else if (restrict_mode == "stabilizer") {
    if (all_bases) {
      const oneway::AssignmentOptimum opt = oneway::stabilizer_vertex_optimum_all(task);
      j["best"] = oneway::to_string(opt.best);
      j["best_value"] = oneway::to_double(opt.best);
      j["bases"] = opt.basis_per_y;
      j["assignments"] = opt.assignments;
    } else {
      const oneway::VertexOptimum opt = oneway::stabilizer_vertex_optimum(task, bases);
      j["best"] = oneway::to_string(opt.best);
      j["best_value"] = oneway::to_double(opt.best);
      j["method"] = opt.method;
      json arg = json::array();
      for (const auto& id : opt.argmax) arg.push_back({{"k", id.k}, {"j", id.j}});
      j["argmax"] = std::move(arg);
    }
  } else if (restrict_mode == "none" || restrict_mode == "one-magic") {
    const oneway::BallOptimum opt =
        restrict_mode == "none" ? oneway::optimize_unrestricted(task, bases, refine_tol)
                                : oneway::single_magic_optimum(task, bases, refine_tol);
    j["best_value"] = opt.best;
    j["analytic_value"] = opt.analytic;
    j["gap"] = opt.gap;
    j["evaluations"] = opt.evaluations;
    json arg = json::array();
    for (const auto& n : opt.argmax) arg.push_back(bloch_json(n));
    j["argmax"] = std::move(arg);
  } else {
    throw oneway::validation_error(
        "restrict must be none, stabilizer, one-magic, or classical");
  }
  if (cfg.format == "csv") csv_unavailable("the optimization report");
  emit_json(cfg, j);
  return 0;
}

int cmd_rac_uplift(const RunConfig& cfg, int n_bits, int k, double theta, int last_bit) {
  if (n_bits < 2) throw oneway::validation_error("uplift needs --n >= 2");
  if (last_bit != 0 && last_bit != 1)
    throw oneway::validation_error("--last-bit must be 0 or 1");
  const oneway::RacTask task(n_bits);
  const int window = n_bits - 1;
  const int margin = n_bits % 2 == 1 ? 2 * k : 2 * k + 1;
  if (k < 0 || margin > window)
    throw oneway::validation_error("no string of " + std::to_string(n_bits) +
                                   " bits has margin coefficient " + std::to_string(margin));
  // Lexicographically smallest target: majority zeros packed to the left.
  const int zeros = (window + margin) / 2;
  std::size_t x = 0;
  for (int y = zeros; y < window; ++y) x |= std::size_t{1} << (n_bits - 1 - y);
  if (last_bit == 1) x |= 1;

  const oneway::BlochVector r{std::sin(theta), 0.0, std::cos(theta)};
  const oneway::UpliftReport rep = oneway::single_magic_uplift(task, x, r);

  json j{{"bits", n_bits},
         {"target", task.spaces().X()[x]},
         {"replacement", bloch_json(r)},
         {"theta", theta},
         {"base_protocol", "majority-eigenstate"},
         {"target_base", oneway::to_string(rep.target_base)},
         {"target_born", rep.target_born},
         {"target_closed_form", rep.target_closed_form},
         {"closed_form_deviation", std::abs(rep.target_born - rep.target_closed_form)},
         {"coefficient", rep.coefficient},
         {"tie", rep.tie},
         {"gain_scaled", rep.gain_scaled},
         {"optimal_theta", rep.optimal_theta},
         {"optimal_replacement", bloch_json(rep.optimal_bloch)},
         {"max_gain_scaled", rep.max_gain_scaled},
         {"magic", rep.magic},
         {"plane_excess", rep.plane_excess},
         {"strategy_average", rep.strategy.average_value}};
  if (cfg.format == "csv") csv_unavailable("the uplift report");
  emit_json(cfg, j);
  return 0;
}

int cmd_rac_region(const RunConfig& cfg, const std::string& task_name, double step) {
  oneway::RegionTask task;
  if (task_name == "rac2")
    task = oneway::RegionTask::rac2;
  else if (task_name == "rac3")
    task = oneway::RegionTask::rac3;
  else
    throw oneway::validation_error("region task must be rac2 or rac3");
  const std::vector<oneway::RegionSample> samples = oneway::advantage_region(task, step);
  if (cfg.format == "csv") {
    std::string out = "nx,nz,class,success\n";
    for (const auto& s : samples)
      out += oneway::format_double(s.nx) + "," + oneway::format_double(s.nz) + "," +
             oneway::region_class_name(s.cls) + "," + oneway::format_double(s.success) + "\n";
    emit(cfg, out);
    return 0;
  }
  json arr = json::array();
  for (const auto& s : samples)
    arr.push_back({{"nx", s.nx},
                   {"nz", s.nz},
                   {"class", oneway::region_class_name(s.cls)},
                   {"success", s.success}});
  emit_json(cfg, json{{"task", task_name}, {"step", step}, {"samples", std::move(arr)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-way communication over a prime-dimensional system"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  app.add_option("--tol", cfg.tol, "verdict tolerance");
  app.add_option("--seed", cfg.seed, "sampling seed");
  app.add_option("--samples", cfg.samples, "Monte Carlo rounds (0 = skip)");
  app.add_option("--budget", cfg.budget, "search budget in candidates");
  app.add_option("--format", cfg.format, "json or csv");
  app.add_option("--out", cfg.out, "write the report here instead of stdout");
  app.add_option("--config", config_path, "JSON file with defaults for these options");

  auto* mub = app.add_subcommand("mub", "emit the d+1 bases and their exact overlaps");
  int mub_dim = 2;
  bool mub_overlaps = false;
  mub->add_option("--dim", mub_dim, "prime dimension")->required();
  mub->add_flag("--overlaps", mub_overlaps, "include the exact overlap table");
  mub->fallthrough();

  auto* gk = app.add_subcommand(
      "gk-verify", "check the shared-dit classical simulation against the Born table");
  int gk_dim = 0;
  std::string gk_partitions;
  gk->add_option("--dim", gk_dim, "prime dimension (defaults to the maximal task)");
  gk->add_option("--partitions", gk_partitions, "partition file (JSON)");
  gk->fallthrough();

  auto* cliff = app.add_subcommand("clifford", "Clifford group utilities");
  cliff->require_subcommand(1);
  cliff->fallthrough();
  auto* cliff_check =
      cliff->add_subcommand("check", "decide whether a unitary normalizes the Pauli group");
  std::string cliff_matrix;
  cliff_check->add_option("--matrix", cliff_matrix, "dense operator file (JSON)")->required();
  cliff_check->fallthrough();

  auto* rac = app.add_subcommand("rac", "random-access coding tasks");
  rac->require_subcommand(1);
  rac->fallthrough();

  auto* rac_eval = rac->add_subcommand("eval", "success of a named or custom strategy");
  int eval_bits = 0;
  std::string eval_strategy;
  rac_eval->add_option("--n", eval_bits, "bit count")->required();
  rac_eval->add_option("--strategy", eval_strategy, "meid, onmq, enmq, or a strategy file")
      ->required();
  rac_eval->fallthrough();

  auto* rac_opt = rac->add_subcommand("optimize", "optimize encodings under a restriction");
  int opt_bits = 0;
  std::string opt_restrict = "none", opt_bases, opt_method = "exhaustive";
  int opt_case = 0;
  bool opt_all_bases = false;
  double opt_refine_tol = 1e-9;
  rac_opt->add_option("--n", opt_bits, "bit count")->required();
  rac_opt->add_option("--restrict", opt_restrict, "none, stabilizer, one-magic, classical");
  rac_opt->add_option("--bases", opt_bases, "measured basis per question, e.g. ZXY");
  rac_opt->add_option("--case", opt_case, "decoding family for --n 3 (1, 2, or 3)");
  rac_opt->add_flag("--all-bases", opt_all_bases, "enumerate all 3^N basis assignments");
  rac_opt->add_option("--method", opt_method, "exhaustive or decomposed (classical only)");
  rac_opt->add_option("--refine-tol", opt_refine_tol, "refinement stop for ball searches");
  rac_opt->fallthrough();

  auto* rac_uplift =
      rac->add_subcommand("uplift", "free one prepared state of the eigenstate protocol");
  int up_bits = 0, up_k = 1, up_last = 0;
  double up_theta = 0.0;
  rac_uplift->add_option("--n", up_bits, "bit count")->required();
  rac_uplift->add_option("--k", up_k, "margin parameter of the target string");
  rac_uplift->add_option("--theta", up_theta, "XZ-plane angle of the replacement (radians)")
      ->required();
  rac_uplift->add_option("--last-bit", up_last, "final bit of the target string");
  rac_uplift->fallthrough();

  auto* rac_region = rac->add_subcommand("region", "scan the XZ plane for advantage");
  std::string region_task;
  double region_step = 0.01;
  rac_region->add_option("--task", region_task, "rac2 or rac3")->required();
  rac_region->add_option("--step", region_step, "grid step");
  rac_region->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    layer_config(cfg, app, config_path);
    if (mub->parsed()) return cmd_mub(cfg, mub_dim, mub_overlaps);
    if (gk->parsed()) return cmd_gk_verify(cfg, gk_dim, gk_partitions);
    if (cliff->parsed() && cliff_check->parsed()) return cmd_clifford_check(cfg, cliff_matrix);
    if (rac->parsed()) {
      if (rac_eval->parsed()) return cmd_rac_eval(cfg, eval_bits, eval_strategy);
      if (rac_opt->parsed())
        return cmd_rac_optimize(cfg, opt_bits, opt_restrict, opt_bases, opt_case,
                                opt_all_bases, opt_method, opt_refine_tol);
      if (rac_uplift->parsed()) return cmd_rac_uplift(cfg, up_bits, up_k, up_theta, up_last);
      if (rac_region->parsed()) return cmd_rac_region(cfg, region_task, region_step);
    }
    std::cerr << "no subcommand dispatched\n";
    return 2;
  } catch (const oneway::validation_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const oneway::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
