#include "mapf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "mapf/hub_route.hpp"
#include "mapf/io.hpp"
#include "mapf/kernel.hpp"
#include "mapf/reductions.hpp"
#include "mapf/solvers.hpp"
#include "mapf/time_expansion.hpp"

namespace mapf::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string second;  // schedule file for verify, source file for generate
  std::string generator;
  std::string out;
  std::string solver = "auto";
  std::string solvers = "joint,tx";
  std::int64_t budget = kDefaultBudget;
  int lmax = 32;
  int joint_limit = 18;
  int cover_budget = kDefaultCoverBudget;
  std::uint64_t seed = 1;
  int count = 1000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::Feasible:
      return kFeasible;
    case Outcome::Infeasible:
      return kInfeasible;
    case Outcome::Aborted:
      return kAborted;
  }
  return kAborted;
}

Instance load_instance(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_instance(in);
}

struct Solved {
  SolveResult result;
  std::string note;
};

Solved solve_with(const std::string& solver, const Instance& inst, const RunConfig& cfg) {
  const bool swaps = inst.swap_policy == SwapPolicy::SwapsAllowed;
  if (solver == "joint") return {solve_joint_bfs(inst, cfg.budget), ""};
  if (solver == "tx") return {solve_time_expanded(inst, cfg.budget), ""};
  if (solver == "matching") {
    if (inst.makespan != 2 || !swaps) throw UsageError("matching solver needs makespan 2 with swaps allowed");
    return {solve_makespan2_swaps(inst), ""};
  }
  if (solver == "hub") {
    try {
      HubRoute route = hub_route(inst);
      const int length = route.result.schedule->makespan();
      if (length > inst.makespan) {
        SolveResult r;
        r.outcome = Outcome::Aborted;
        r.stats = route.result.stats;
        return {r, "hub route needs " + std::to_string(length) + " turns"};
      }
      route.result.schedule = pad_schedule(inst, *route.result.schedule, inst.makespan);
      return {route.result, ""};
    } catch (const NoHubError& e) {
      SolveResult r;
      r.outcome = Outcome::Aborted;
      return {r, e.what()};
    }
  }
  if (solver == "auto") {
    if (inst.makespan == 2 && swaps) return {solve_makespan2_swaps(inst), "matching"};
    Solved s{solve_time_expanded(inst, cfg.budget), ""};
    if (s.result.outcome == Outcome::Aborted &&
        static_cast<long long>(inst.agent_count()) * (inst.makespan + 1) <= cfg.joint_limit) {
      SolveResult joint = solve_joint_bfs(inst, cfg.budget);
      joint.stats.nodes += s.result.stats.nodes;
      joint.stats.millis += s.result.stats.millis;
      return {joint, "tx aborted, joint"};
    }
    return s;
  }
  throw UsageError("unknown solver '" + solver + "'");
}

void emit_schedule(const Schedule& sched, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    write_schedule(out, sched);
  } else {
    std::ostringstream ss;
    write_schedule(ss, sched);
    write_file(cfg.out, ss.str());
  }
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(cfg.input);
  const Solved s = solve_with(cfg.solver, inst, cfg);
  out << outcome_name(s.result.outcome) << "\n";
  if (!s.note.empty()) err << s.note << "\n";
  if (s.result.schedule) emit_schedule(*s.result.schedule, cfg, out);
  return outcome_code(s.result.outcome);
}

int cmd_optimal(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Instance inst = load_instance(cfg.input);
  const OptimalResult r = optimal_makespan(inst, cfg.lmax, cfg.budget);
  out << outcome_name(r.outcome);
  if (r.outcome == Outcome::Feasible) out << " makespan " << r.makespan;
  out << "\n";
  if (r.schedule) emit_schedule(*r.schedule, cfg, out);
  return outcome_code(r.outcome);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Instance inst = load_instance(cfg.input);
  std::istringstream in(read_file(cfg.second));
  const Schedule sched = parse_schedule(in, inst.agent_count());
  const auto bad = first_schedule_violation(inst, sched);
  if (bad) {
    out << "INVALID " << *bad << "\n";
    return kInfeasible;
  }
  out << "VALID\n";
  return kFeasible;
}

int cmd_kernelize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(cfg.input);
  KernelOutput k;
  try {
    k = kernelize(inst, cfg.cover_budget);
  } catch (const CoverBudgetExceeded& e) {
    err << e.what() << "\n";
    return kCoverBudget;
  }
  out << "original vertices " << inst.graph.vertex_count() << "\n";
  out << "kernel vertices " << k.kernel.graph.vertex_count() << "\n";
  out << "cover " << k.cover.size() << "\n";
  out << "bound " << k.size_bound() << "\n";
  std::ostringstream map;
  for (std::size_t i = 0; i < k.vertex_map.size(); ++i) map << i << " " << k.vertex_map[i] << "\n";
  if (cfg.out.empty()) {
    write_instance(out, k.kernel);
  } else {
    write_file(cfg.out, instance_to_string(k.kernel));
    write_file(cfg.out + ".map", map.str());
  }
  return kFeasible;
}

GeneratedInstance generate(const RunConfig& cfg) {
  const std::string& g = cfg.generator;
  const bool random = cfg.second.empty();
  Rng rng(cfg.seed);
  auto source = [&]() {
    if (random) throw UsageError("generator '" + g + "' needs a source file");
    return std::istringstream(read_file(cfg.second));
  };
  if (g == "3sat-swaps" || g == "3sat-noswaps") {
    CnfFormula phi;
    if (random) {
      phi = random_formula(rng, 4, 6);
    } else {
      auto in = source();
      phi = parse_dimacs(in);
    }
    return g == "3sat-swaps" ? from_3sat_swaps(phi) : from_3sat_noswaps(phi);
  }
  if (g == "dsp") {
    auto in = source();
    return from_disjoint_shortest_paths(parse_dag_source(in));
  }
  if (g == "tokenswap") {
    TokenSwapSource src;
    if (random) {
      src.tree = random_tree(rng, 4);
      src.perm = {0, 1, 2, 3};
      rng.shuffle(src.perm);
    } else {
      auto in = source();
      src = parse_tokenswap_source(in);
    }
    GeneratedInstance gen = from_token_swapping_tree(src.tree, src.perm, src.rounds);
    if (gen.instance.graph.max_degree() > 5) throw std::logic_error("generated tree has degree above 5");
    return gen;
  }
  if (g == "beup") {
    BeupSource src;
    if (random) {
      src.graph = random_graph(rng, 5, 50);
      src.s = 0;
      src.t = 4;
      src.k = 2;
      src.d = 2;
    } else {
      auto in = source();
      src = parse_beup_source(in);
    }
    return from_beup(src.graph, src.s, src.t, src.k, src.d);
  }
  throw UsageError("unknown generator '" + g + "'");
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const GeneratedInstance gen = generate(cfg);
  if (cfg.out.empty()) {
    write_instance(out, gen.instance);
    out << metadata_text(gen);
  } else {
    write_file(cfg.out + ".mapf", instance_to_string(gen.instance));
    write_file(cfg.out + ".meta", metadata_text(gen));
  }
  return kFeasible;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Instance inst = load_instance(cfg.input);
  const TimeExpandedGraph teg = build_expansion(inst.graph, inst.makespan, mode_for(inst.swap_policy));
  if (cfg.out.empty()) {
    write_expansion(out, teg);
  } else {
    std::ostringstream ss;
    write_expansion(ss, teg);
    write_file(cfg.out, ss.str());
  }
  return kFeasible;
}

int cmd_corpus(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  fs::create_directories(cfg.input);
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    std::ostringstream name;
    name << "inst_" << std::setw(4) << std::setfill('0') << i << ".mapf";
    write_file((fs::path(cfg.input) / name.str()).string(), instance_to_string(random_small_instance(rng)));
  }
  out << "wrote " << cfg.count << " instances\n";
  return kFeasible;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

int thread_cap() {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("MAPF_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

struct BenchRow {
  std::string solver;
  std::string outcome;
  std::int64_t nodes = 0;
  double millis = 0;
};

struct BenchEntry {
  std::string name;
  std::vector<BenchRow> rows;
  std::vector<std::string> problems;
  bool error = false;
};

BenchEntry bench_one(const fs::path& file, const std::vector<std::string>& solvers, const RunConfig& cfg) {
  BenchEntry entry;
  entry.name = file.filename().string();
  Instance inst;
  try {
    inst = load_instance(file.string());
  } catch (const std::exception& e) {
    entry.error = true;
    entry.rows.push_back({"-", "ERROR", 0, 0});
    entry.problems.push_back(entry.name + ": " + e.what());
    return entry;
  }
  std::map<std::string, Outcome> decided;
  for (const auto& solver : solvers) {
    Solved s;
    try {
      s = solve_with(solver, inst, cfg);
    } catch (const UsageError&) {
      entry.rows.push_back({solver, "SKIPPED", 0, 0});
      continue;
    }
    const SolveResult& r = s.result;
    entry.rows.push_back({solver, outcome_name(r.outcome), r.stats.nodes, r.stats.millis});
    if (r.outcome == Outcome::Aborted) continue;
    if (r.schedule && !verify_schedule(inst, *r.schedule)) {
      entry.problems.push_back(entry.name + ": " + solver + " schedule does not verify");
    }
    decided[solver] = r.outcome;
  }
  for (const auto& [solver, outcome] : decided) {
    if (outcome != decided.begin()->second) {
      entry.problems.push_back(entry.name + ": " + decided.begin()->first + " says " +
                               outcome_name(decided.begin()->second) + ", " + solver + " says " +
                               outcome_name(outcome));
    }
  }
  return entry;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(cfg.input)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  const auto solvers = split_list(cfg.solvers);
  if (solvers.empty()) throw UsageError("no solvers given");

  std::vector<BenchEntry> entries(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) entries[i] = bench_one(files[i], solvers, cfg);
  };
  const int threads = std::min<int>(thread_cap(), std::max<std::size_t>(1, files.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "instance,solver,outcome,nodes,millis\n";
  int errors = 0;
  std::vector<std::string> disagreements;
  for (const auto& entry : entries) {
    for (const auto& row : entry.rows) {
      csv << entry.name << "," << row.solver << "," << row.outcome << "," << row.nodes << "," << std::fixed
          << std::setprecision(3) << row.millis << "\n";
    }
    if (entry.error) {
      ++errors;
      for (const auto& p : entry.problems) err << "error " << p << "\n";
    } else {
      disagreements.insert(disagreements.end(), entry.problems.begin(), entry.problems.end());
    }
  }
  if (cfg.out.empty()) {
    out << csv.str();
  } else {
    write_file(cfg.out, csv.str());
  }
  for (const auto& d : disagreements) err << "disagreement " << d << "\n";
  err << "instances " << entries.size() << ", errors " << errors << ", disagreements " << disagreements.size()
      << "\n";
  return disagreements.empty() ? kFeasible : kInfeasible;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact multiagent path finding tools"};
  app.require_subcommand(1, 1);
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "search budget")->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "solve an instance at its makespan");
  solve->add_option("instance", cfg.input)->required();
  solve->add_option("--solver", cfg.solver)->check(CLI::IsMember({"auto", "joint", "tx", "matching", "hub"}));
  solve->add_option("--out", cfg.out, "schedule file");
  solve->add_option("--joint-limit", cfg.joint_limit, "joint fallback when k*(l+1) is at most this");
  budget(solve);

  auto* optimal = app.add_subcommand("optimal", "smallest feasible makespan");
  optimal->add_option("instance", cfg.input)->required();
  optimal->add_option("--lmax", cfg.lmax)->check(CLI::NonNegativeNumber);
  optimal->add_option("--out", cfg.out, "schedule file");
  budget(optimal);

  auto* verify = app.add_subcommand("verify", "check a schedule");
  verify->add_option("instance", cfg.input)->required();
  verify->add_option("schedule", cfg.second)->required();

  auto* kern = app.add_subcommand("kernelize", "vertex cover kernel");
  kern->add_option("instance", cfg.input)->required();
  kern->add_option("--out", cfg.out, "kernel instance file; the vertex map goes to <out>.map");
  kern->add_option("--cover-budget", cfg.cover_budget)->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("generate", "instance from a hardness construction");
  gen->add_option("generator", cfg.generator, "3sat-swaps, 3sat-noswaps, dsp, tokenswap or beup")->required();
  gen->add_option("source", cfg.second, "source description; random from --seed when omitted");
  gen->add_option("--out", cfg.out, "writes <out>.mapf and <out>.meta");
  gen->add_option("--seed", cfg.seed);

  auto* expand = app.add_subcommand("expand", "write the time-expanded graph");
  expand->add_option("instance", cfg.input)->required();
  expand->add_option("--out", cfg.out);

  auto* corpus = app.add_subcommand("corpus", "write seeded random small instances");
  corpus->add_option("directory", cfg.input)->required();
  corpus->add_option("--seed", cfg.seed);
  corpus->add_option("--count", cfg.count)->check(CLI::NonNegativeNumber);

  auto* bench = app.add_subcommand("bench", "run solvers over a directory");
  bench->add_option("directory", cfg.input)->required()->check(CLI::ExistingDirectory);
  bench->add_option("--solvers", cfg.solvers, "comma separated");
  bench->add_option("--out", cfg.out, "CSV file");
  bench->add_option("--joint-limit", cfg.joint_limit);
  budget(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kUsage;
  }

  try {
    if (*solve) return cmd_solve(cfg, out, err);
    if (*optimal) return cmd_optimal(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*kern) return cmd_kernelize(cfg, out, err);
    if (*gen) return cmd_generate(cfg, out, err);
    if (*expand) return cmd_expand(cfg, out, err);
    if (*corpus) return cmd_corpus(cfg, out, err);
    if (*bench) return cmd_bench(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}

}  // namespace mapf::cli
