#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "bcs/bcs.hpp"

namespace bcs::cli {
namespace {

enum class GraphClass { Interval, CircularArc, Permutation, General };

GraphClass parse_class(const std::string& text) {
  if (text == "interval") return GraphClass::Interval;
  if (text == "circular-arc") return GraphClass::CircularArc;
  if (text == "permutation") return GraphClass::Permutation;
  if (text == "general") return GraphClass::General;
  throw InputError("unknown class \"" + text + "\"");
}

struct SolveArgs {
  std::string cls;
  std::string input;
  std::string algorithm = "auto";
  int k = -1;
  double delta = 0.01;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  int workers = 1;
  int max_vertices = 18;
};

struct VerifyArgs {
  std::string cls;
  std::string check = "bcs";
  int n = 10;
  int trials = 100;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct BenchArgs {
  std::string cls;
  std::vector<int> sizes{20, 40, 80};
  int trials = 1;
  int k = 4;
  std::uint64_t seed = 0;
};

struct GenArgs {
  std::string cls;
  int n = 10;
  std::uint64_t seed = 0;
  double edge_probability = 0.3;
};

struct ReduceArgs {
  std::string points;
  int budget = 0;
  std::string shape = "disk";
  std::string graph;
  int k = 1;
};

template <typename Model>
const Model& expect_model(const Instance& instance, const char* cls) {
  const auto* m = std::get_if<Model>(&instance);
  if (m == nullptr) {
    throw InputError(std::string("instance type does not match --class ") + cls);
  }
  return *m;
}

FptOptions fpt_options(const SolveArgs& a) {
  FptOptions o;
  o.hash.mode = a.exhaustive ? HashMode::Deterministic : HashMode::Randomized;
  o.hash.delta = a.delta;
  o.hash.seed = a.seed;
  o.workers = a.workers;
  return o;
}

Solution dispatch(GraphClass cls, const Instance& instance, const BicoloredGraph& g,
                  const SolveArgs& a) {
  if (a.algorithm == "oracle") return bcs_oracle(g, {a.max_vertices, 8});
  switch (cls) {
    case GraphClass::Interval:
      if (a.algorithm != "auto") break;
      return bcs_interval(expect_model<IntervalModel>(instance, "interval"));
    case GraphClass::CircularArc:
      if (a.algorithm != "auto") break;
      return bcs_circular_arc(expect_model<CircularArcModel>(instance, "circular-arc"));
    case GraphClass::Permutation:
      if (a.algorithm != "auto") break;
      return bcs_permutation(expect_model<PermutationModel>(instance, "permutation"));
    case GraphClass::General:
      if (a.algorithm != "auto" && a.algorithm != "fpt") break;
      return max_bcs_fpt(g, a.k < 0 ? g.size() : a.k, fpt_options(a));
  }
  throw InputError("algorithm \"" + a.algorithm + "\" is not available for this class");
}

std::string instance_type(const Instance& instance) {
  return to_json(instance).at("type").get<std::string>();
}

int cmd_solve(const SolveArgs& a, bool oracle, std::ostream& out) {
  const GraphClass cls = parse_class(a.cls);
  const Instance instance = instance_from_json(read_json_file(a.input));
  const BicoloredGraph g = instance_graph(instance);
  SolveArgs args = a;
  if (oracle) args.algorithm = "oracle";

  const auto start = std::chrono::steady_clock::now();
  const Solution sol = dispatch(cls, instance, g, args);
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool valid = validate_solution(g, sol) && sol.size() <= balance_upper_bound(g);

  Json report;
  report["class"] = a.cls;
  report["algorithm"] = sol.algorithm;
  report["instance"] = {{"type", instance_type(instance)},
                        {"n", g.size()},
                        {"red", g.count(Color::Red)},
                        {"blue", g.count(Color::Blue)}};
  report["solution"] = to_json(sol);
  report["valid"] = valid;
  report["millis"] = millis;
  if (sol.algorithm == kFptTag && !args.exhaustive) report["seed"] = args.seed;
  out << report.dump(2) << '\n';
  return valid ? kOk : kInvalidSolution;
}

Instance generate(GraphClass cls, int n, std::uint64_t seed, double edge_probability) {
  switch (cls) {
    case GraphClass::Interval:
      return random_interval_model(n, seed);
    case GraphClass::CircularArc:
      return random_arc_model(n, seed);
    case GraphClass::Permutation:
      return random_permutation_model(n, seed);
    case GraphClass::General:
      return random_graph(n, edge_probability, seed);
  }
  return BicoloredGraph{};
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.n < 0) throw InputError("--n must be non-negative");
  out << to_json(generate(parse_class(a.cls), a.n, a.seed, a.edge_probability)).dump(2) << '\n';
  return kOk;
}

int cmd_reduce_rst(const ReduceArgs& a, std::ostream& out) {
  const Json j = read_json_file(a.points);
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array()) {
    throw InputError("points file must hold {\"points\": [[x, y], ...]}");
  }
  std::vector<GridPoint> points;
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw InputError("each point must be a pair of integers");
    }
    points.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  const ShapeKind shape = parse_shape(a.shape);
  const ReductionOutput r = shape == ShapeKind::UnitDisk     ? reduce_rst_to_unit_disk(points, a.budget)
                            : shape == ShapeKind::UnitSquare ? reduce_rst_to_unit_square(points, a.budget)
                                                             : reduce_rst_to_complete_grid(points, a.budget);
  out << to_json(r).dump(2) << '\n';
  return kOk;
}

int cmd_reduce_domset(const ReduceArgs& a, std::ostream& out) {
  const BicoloredGraph g = graph_from_json(read_json_file(a.graph));
  out << to_json(reduce_domset_to_outer_string(g, a.k)).dump(2) << '\n';
  return kOk;
}

struct TrialOutcome {
  bool match = false;
  std::string detail;
};

VertexSet sample_terminals(const BicoloredGraph& g, std::mt19937_64& rng) {
  const auto labels = component_labels(g);
  const Vertex seed_vertex = std::uniform_int_distribution<int>(0, g.size() - 1)(rng);
  VertexSet comp;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (labels[static_cast<std::size_t>(v)] == labels[static_cast<std::size_t>(seed_vertex)]) {
      comp.push_back(v);
    }
  }
  std::shuffle(comp.begin(), comp.end(), rng);
  const int t = std::uniform_int_distribution<int>(1, std::min<int>(5, static_cast<int>(comp.size())))(rng);
  comp.resize(static_cast<std::size_t>(t));
  std::sort(comp.begin(), comp.end());
  return comp;
}

TrialOutcome steiner_trial(GraphClass cls, const Instance& instance, const BicoloredGraph& g,
                           std::mt19937_64& rng) {
  const VertexSet terminals = sample_terminals(g, rng);
  const auto exact = steiner_exact_oracle(g, terminals);
  int fast = -1;
  if (cls == GraphClass::Interval) {
    fast = static_cast<int>(
        select_steiners_interval(std::get<IntervalModel>(instance), g, terminals).steiner_vertices.size());
  } else {
    const auto& m = std::get<PermutationModel>(instance);
    const auto order = top_order(m);
    std::vector<int> bottom;
    std::vector<char> flag;
    for (Vertex v : order) {
      bottom.push_back(m.items[static_cast<std::size_t>(v)].bottom - 1);
      flag.push_back(std::binary_search(terminals.begin(), terminals.end(), v) ? 1 : 0);
    }
    const auto chosen = permutation_steiner_in_top_order(bottom, flag);
    if (chosen) fast = static_cast<int>(chosen->size() - terminals.size());
  }
  const int want = static_cast<int>(exact.steiner_vertices.size());
  TrialOutcome o;
  o.match = exact.connected && fast == want;
  o.detail = "steiner " + std::to_string(fast) + " vs oracle " + std::to_string(want);
  return o;
}

TrialOutcome bcs_trial(GraphClass cls, const Instance& instance, const BicoloredGraph& g) {
  Solution sol;
  switch (cls) {
    case GraphClass::Interval:
      sol = bcs_interval(std::get<IntervalModel>(instance));
      break;
    case GraphClass::CircularArc:
      sol = bcs_circular_arc(std::get<CircularArcModel>(instance));
      break;
    case GraphClass::Permutation:
      sol = bcs_permutation(std::get<PermutationModel>(instance));
      break;
    case GraphClass::General: {
      FptOptions o;
      o.hash.mode = HashMode::Deterministic;
      sol = max_bcs_fpt(g, g.size(), o);
      break;
    }
  }
  const Solution truth = bcs_oracle(g);
  TrialOutcome o;
  o.match = validate_solution(g, sol) && sol.size() == truth.size();
  o.detail = "solver " + std::to_string(sol.size()) + " vs oracle " + std::to_string(truth.size());
  return o;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const GraphClass cls = parse_class(a.cls);
  if (a.check != "bcs" && a.check != "steiner") throw InputError("--check must be bcs or steiner");
  if (a.check == "steiner" && cls != GraphClass::Interval && cls != GraphClass::Permutation) {
    throw InputError("steiner checks exist for interval and permutation classes");
  }
  if (a.n < 1 || a.trials < 0) throw InputError("--n must be positive and --trials non-negative");

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(a.trials));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(a.trials));
  auto run_trial = [&](int i) {
    try {
      std::mt19937_64 rng(a.seed + static_cast<std::uint64_t>(i));
      const int n = std::uniform_int_distribution<int>(1, a.n)(rng);
      const Instance instance = generate(cls, n, rng(), 0.3);
      const BicoloredGraph g = instance_graph(instance);
      outcomes[static_cast<std::size_t>(i)] =
          a.check == "bcs" ? bcs_trial(cls, instance, g) : steiner_trial(cls, instance, g, rng);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };
  const int workers = std::max(1, std::min(a.workers, a.trials));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < a.trials; i += workers) run_trial(i);
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  int matched = 0;
  for (int i = 0; i < a.trials; ++i) {
    const auto& o = outcomes[static_cast<std::size_t>(i)];
    if (o.match) {
      ++matched;
    } else {
      out << "trial " << i << " mismatch: " << o.detail << '\n';
    }
  }
  out << matched << '/' << a.trials << " match\n";
  return matched == a.trials ? kOk : kInvalidSolution;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const GraphClass cls = parse_class(a.cls);
  out << "n,class,algorithm,millis,size\n";
  for (int n : a.sizes) {
    if (n < 0) throw InputError("sizes must be non-negative");
    for (int t = 0; t < a.trials; ++t) {
      const Instance instance = generate(cls, n, a.seed + static_cast<std::uint64_t>(t), 0.3);
      const BicoloredGraph g = instance_graph(instance);
      SolveArgs s;
      s.k = a.k;
      s.delta = 0.1;
      s.seed = a.seed + static_cast<std::uint64_t>(t);
      const auto start = std::chrono::steady_clock::now();
      const Solution sol = dispatch(cls, instance, g, s);
      const double millis =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out << n << ',' << a.cls << ',' << sol.algorithm << ',' << std::fixed << std::setprecision(3)
          << millis << ',' << sol.size() << '\n';
      out.unsetf(std::ios::floatfield);
    }
  }
  return kOk;
}

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("BCS_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced connected subgraph toolkit"};
  app.name("bcs");
  app.require_subcommand(1);

  const std::vector<std::string> classes{"interval", "circular-arc", "permutation", "general"};
  const int workers = default_workers();

  SolveArgs solve;
  solve.workers = workers;
  auto add_solve_flags = [&](CLI::App* cmd) {
    cmd->add_option("--class", solve.cls, "Graph class")->required()->check(CLI::IsMember(classes));
    cmd->add_option("--input", solve.input, "Instance JSON file")->required();
    cmd->add_option("--seed", solve.seed, "Seed for randomized hashing");
    cmd->add_option("--max-vertices", solve.max_vertices, "Oracle vertex cap");
  };
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  add_solve_flags(solve_cmd);
  solve_cmd->add_option("--algorithm", solve.algorithm, "auto, fpt or oracle")
      ->check(CLI::IsMember({"auto", "fpt", "oracle"}));
  solve_cmd->add_option("--k", solve.k, "Largest subgraph size tried by fpt");
  solve_cmd->add_option("--delta", solve.delta, "Failure probability of randomized hashing");
  solve_cmd->add_flag("--exhaustive", solve.exhaustive, "Deterministic hash family");
  solve_cmd->add_option("--workers", solve.workers, "Worker threads");

  auto* oracle_cmd = app.add_subcommand("oracle", "Solve one instance by brute force");
  add_solve_flags(oracle_cmd);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print a random instance");
  gen_cmd->add_option("--class", gen.cls, "Graph class")->required()->check(CLI::IsMember(classes));
  gen_cmd->add_option("--n", gen.n, "Number of vertices");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--p", gen.edge_probability, "Edge probability (general class)");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a hardness-reduction instance");
  reduce_cmd->require_subcommand(1);
  auto* rst_cmd = reduce_cmd->add_subcommand("rst", "From rectilinear Steiner tree");
  rst_cmd->add_option("--points", reduce.points, "JSON file {\"points\": [[x,y],...]}")->required();
  rst_cmd->add_option("--L", reduce.budget, "Tree length bound")->required();
  rst_cmd->add_option("--shape", reduce.shape, "disk, square or grid")
      ->check(CLI::IsMember({"disk", "square", "grid"}));
  auto* dom_cmd = reduce_cmd->add_subcommand("domset", "From dominating set");
  dom_cmd->add_option("--graph", reduce.graph, "Graph JSON file")->required();
  dom_cmd->add_option("--k", reduce.k, "Dominating set size")->required();

  VerifyArgs verify;
  verify.workers = workers;
  auto* verify_cmd = app.add_subcommand("verify", "Compare solvers with the oracles");
  verify_cmd->add_option("--class", verify.cls, "Graph class")->required()->check(CLI::IsMember(classes));
  verify_cmd->add_option("--n", verify.n, "Largest instance size");
  verify_cmd->add_option("--trials", verify.trials, "Number of random trials");
  verify_cmd->add_option("--seed", verify.seed, "First trial seed");
  verify_cmd->add_option("--check", verify.check, "bcs or steiner");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time solvers over sizes, CSV output");
  bench_cmd->add_option("--class", bench.cls, "Graph class")->required()->check(CLI::IsMember(classes));
  bench_cmd->add_option("--n", bench.sizes, "Comma-separated sizes")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Instances per size");
  bench_cmd->add_option("--k", bench.k, "Largest size tried by fpt (general class)");
  bench_cmd->add_option("--seed", bench.seed, "Seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, false, out);
    if (*oracle_cmd) return cmd_solve(solve, true, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*rst_cmd) return cmd_reduce_rst(reduce, out);
    if (*dom_cmd) return cmd_reduce_domset(reduce, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kInvalidSolution;
  }
  return kInputError;
}

}  // namespace bcs::cli
