#include "shopsched/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>

#include "shopsched/cdsdhp.hpp"
#include "shopsched/dominoes.hpp"
#include "shopsched/f2_solver.hpp"
#include "shopsched/fm_solver.hpp"
#include "shopsched/gantt.hpp"
#include "shopsched/hardness_gen.hpp"
#include "shopsched/io.hpp"
#include "shopsched/verify.hpp"

namespace shopsched::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

template <typename Range>
std::string join_one_based(const Range& values) {
  std::string s;
  for (auto v : values) {
    if (!s.empty()) s += ',';
    s += std::to_string(v + 1);
  }
  return s;
}

template <typename Range>
std::string join(const Range& values) {
  std::string s;
  for (auto v : values) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::ParseError(0, "cannot open '" + path + "'");
  return in;
}

int report_exit(const RunReport& r) {
  switch (r.status) {
    case RunStatus::Feasible:
      return kExitOk;
    case RunStatus::Infeasible:
      return kExitInfeasible;
    case RunStatus::Error:
      break;
  }
  return kExitError;
}

int cmd_solve(const std::string& path, bool json, std::ostream& out) {
  const FlowShopInstance inst = io::read_instance_file(path);
  validate_instance(inst);
  const auto t0 = Clock::now();
  const bool two_machines = inst.machines() == 2;
  const Solution sol = two_machines ? solve_f2(inst) : solve_fm(inst);
  const RunReport report = make_report(sol, two_machines ? "f2" : "fm", elapsed_ms(t0));
  write_report(out, report, json);
  return report_exit(report);
}

int cmd_verify(const std::string& path, const std::string& sequence, std::ostream& out) {
  const FlowShopInstance inst = io::read_instance_file(path);
  validate_instance(inst);
  const JobSequence seq = io::parse_sequence(sequence);
  validate_sequence(inst, seq);
  const Timeline tl = earliest_no_wait_timeline(inst, seq);
  const FeasibilityReport rep = check_no_idle_no_wait(inst, seq, tl);

  out << "status=" << (rep.empty() ? "feasible" : "infeasible") << '\n';
  out << "makespan=" << tl.makespan(inst) << '\n';
  out << "sequence=" << join_one_based(seq.order) << '\n';
  for (std::size_t i = 0; i < inst.machines(); ++i) {
    out << "start.M" << i + 1 << '=' << join(tl.start[i]) << '\n';
  }
  for (const IdleGap& g : rep.idle) {
    out << "idle machine=" << g.machine + 1 << " after_position=" << g.position + 1
        << " length=" << g.length << '\n';
  }
  for (const WaitGap& w : rep.waits) {
    out << "wait job=" << w.job + 1 << " after_machine=" << w.machine + 1
        << " length=" << w.length << '\n';
  }
  for (const Overlap& o : rep.overlaps) {
    out << "overlap machine=" << o.machine + 1 << " job=" << o.job + 1 << '\n';
  }
  return rep.empty() ? kExitOk : kExitInfeasible;
}

int cmd_oracle(const std::string& path, const std::string& kind, bool json, std::ostream& out) {
  if (kind == "flow") {
    const FlowShopInstance inst = io::read_instance_file(path);
    const auto t0 = Clock::now();
    const Solution sol = brute_force_flow(inst);
    const RunReport report = make_report(sol, "oracle-flow", elapsed_ms(t0));
    write_report(out, report, json);
    return report_exit(report);
  }

  auto in = open_input(path);
  const ShopInstance shop = io::read_shop(in);
  if (to_string(shop.kind) != kind) {
    throw io::ParseError(0, "file holds a " + std::string(to_string(shop.kind)) +
                                " instance but --kind is " + kind);
  }
  const auto sched = brute_force_shop(shop);
  if (!sched) {
    out << "status=infeasible\nsolver=oracle-" << kind << '\n';
    return kExitInfeasible;
  }
  std::vector<std::string> routes;
  for (Route r : sched->routes) routes.emplace_back(to_string(r));
  std::string route_list;
  for (const auto& r : routes) route_list += (route_list.empty() ? "" : ",") + r;
  out << "status=feasible\n"
      << "solver=oracle-" << kind << '\n'
      << "makespan=" << sched->makespan << '\n'
      << "m1_order=" << join_one_based(sched->m1_order) << '\n'
      << "m2_order=" << join_one_based(sched->m2_order) << '\n'
      << "routes=" << route_list << '\n'
      << "m1_start=" << join(sched->m1_start) << '\n'
      << "m2_start=" << join(sched->m2_start) << '\n';
  return kExitOk;
}

int cmd_dominoes(const std::string& path, std::ostream& out) {
  auto in = open_input(path);
  const auto tiles = io::read_tiles(in);
  const DominoChain chain = solve_ospd(tiles);
  if (!chain) {
    out << "status=nochain\nreason=" << to_string(*chain.failure) << '\n';
    return kExitInfeasible;
  }
  out << "status=chain\nchain=" << join_one_based(chain.tile_ids) << '\n';
  return kExitOk;
}

int cmd_hampath(const std::string& path, bool emit_f2, std::ostream& out) {
  auto in = open_input(path);
  const Digraph g = io::read_digraph(in);
  if (emit_f2) {
    io::write_instance(out, generate_f2_from_digraph(g));
    return kExitOk;
  }
  const auto found = hamiltonian_path(g);
  if (!found) {
    out << "status=nopath\n";
    return kExitInfeasible;
  }
  out << "status=path\npath=" << join_one_based(*found) << '\n';
  return kExitOk;
}

int cmd_reduce(const std::string& source, const std::string& path, const std::string& target,
               std::ostream& out) {
  if (source != "nmts") throw io::ParseError(0, "only 'reduce nmts' is supported");
  auto in = open_input(path);
  const NmtsInstance nm = io::read_nmts(in);
  const Reduction red = target == "j2" ? nmts_to_j2(nm) : nmts_to_o2(nm);
  io::write_shop(out, red.shop);
  io::write_certificate(out, red.certificate);
  return kExitOk;
}

int cmd_gantt(const std::string& path, const std::string& sequence, std::size_t width,
              std::ostream& out) {
  const FlowShopInstance inst = io::read_instance_file(path);
  validate_instance(inst);
  const JobSequence seq = io::parse_sequence(sequence);
  validate_sequence(inst, seq);
  const Timeline tl = earliest_no_wait_timeline(inst, seq);
  out << render_gantt(inst, seq, tl, width);
  return kExitOk;
}

int cmd_bench(std::size_t n, std::uint64_t seed, std::ostream& out) {
  const FlowShopInstance inst = make_chain_instance(n, seed);
  const auto t0 = Clock::now();
  const Solution sol = solve_f2(inst);
  const double ms = elapsed_ms(t0);
  out << "n=" << n << '\n' << "wall_ms=" << ms << '\n';
  if (sol.feasible()) out << "cmax=" << sol.schedule().cmax << '\n';
  return sol.feasible() ? kExitOk : kExitError;
}

}  // namespace

RunReport make_report(const Solution& sol, std::string solver, double wall_ms) {
  RunReport r;
  r.solver = std::move(solver);
  r.wall_ms = wall_ms;
  if (sol.feasible()) {
    r.status = RunStatus::Feasible;
    r.cmax = sol.schedule().cmax;
    r.sequence = sol.schedule().sequence;
    r.chain_case = sol.schedule().chain_case;
  } else {
    r.status = RunStatus::Infeasible;
    r.reason = to_string(sol.reason());
  }
  return r;
}

void write_report(std::ostream& out, const RunReport& report, bool json) {
  const char* status = report.status == RunStatus::Feasible     ? "feasible"
                       : report.status == RunStatus::Infeasible ? "infeasible"
                                                                : "error";
  if (json) {
    nlohmann::json doc;
    doc["status"] = status;
    doc["solver"] = report.solver;
    if (report.cmax) doc["cmax"] = *report.cmax;
    if (report.chain_case) doc["case"] = to_string(*report.chain_case);
    if (report.sequence) {
      std::vector<std::size_t> jobs;
      for (std::size_t j : report.sequence->order) jobs.push_back(j + 1);
      doc["sequence"] = jobs;
    }
    if (report.reason) doc["reason"] = *report.reason;
    doc["wall_ms"] = report.wall_ms;
    out << doc.dump() << '\n';
    return;
  }
  out << "status=" << status << '\n' << "solver=" << report.solver << '\n';
  if (report.cmax) out << "cmax=" << *report.cmax << '\n';
  if (report.chain_case) out << "case=" << to_string(*report.chain_case) << '\n';
  if (report.sequence) out << "sequence=" << join_one_based(report.sequence->order) << '\n';
  if (report.reason) out << "reason=" << *report.reason << '\n';
  out << "wall_ms=" << report.wall_ms << '\n';
}

FlowShopInstance make_chain_instance(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> slot(n);
  std::iota(slot.begin(), slot.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(slot.begin(), slot.end(), rng);
  std::vector<std::vector<Duration>> rows(2, std::vector<Duration>(n));
  for (std::size_t k = 0; k < n; ++k) {
    rows[0][slot[k]] = k + 1;
    rows[1][slot[k]] = k + 2;
  }
  return FlowShopInstance(std::move(rows));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for no-idle/no-wait shop scheduling", "shopsched"};
  app.require_subcommand(1);

  std::string file;
  std::string sequence;
  bool json = false;

  auto* solve = app.add_subcommand("solve", "Solve a flow shop instance exactly");
  solve->add_option("file", file, "Instance file")->required();
  solve->add_flag("--machines-auto", "Pick the solver from the machine count (default)");
  solve->add_flag("--json", json, "Print the report as JSON");

  auto* verify = app.add_subcommand("verify", "Check a sequence for idle and wait gaps");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("--sequence", sequence, "Comma-separated 1-based job numbers")->required();

  std::string kind = "flow";
  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum (small instances only)");
  oracle->add_option("file", file, "Instance file")->required();
  oracle->add_option("--kind", kind, "Instance kind")
      ->check(CLI::IsMember({"flow", "jobshop", "openshop"}));
  oracle->add_flag("--json", json, "Print the report as JSON (flow only)");

  auto* dominoes = app.add_subcommand("dominoes", "Chain oriented dominoes");
  dominoes->add_option("file", file, "Tile file")->required();

  bool emit_f2 = false;
  auto* hampath = app.add_subcommand("hampath", "Hamiltonian path on a common/distinct successor digraph");
  hampath->add_option("file", file, "Digraph file")->required();
  hampath->add_flag("--emit-f2", emit_f2, "Print the generated two-machine instance instead");

  std::string source;
  std::string target;
  auto* reduce = app.add_subcommand("reduce", "Build a hard shop instance from NMTS");
  reduce->add_option("source", source, "Source problem (nmts)")->required();
  reduce->add_option("file", file, "NMTS file")->required();
  reduce->add_option("--target", target, "Target shop")->required()->check(CLI::IsMember({"j2", "o2"}));

  std::size_t width = 200;
  auto* gantt = app.add_subcommand("gantt", "ASCII Gantt chart of a sequence");
  gantt->add_option("file", file, "Instance file")->required();
  gantt->add_option("--sequence", sequence, "Comma-separated 1-based job numbers")->required();
  gantt->add_option("--width", width, "Maximum chart columns")->check(CLI::PositiveNumber);

  std::size_t chain_size = 0;
  std::uint64_t seed = 1;
  auto* bench = app.add_subcommand("bench", "Time the two-machine solver on a chain instance");
  bench->add_option("--chain-size", chain_size, "Number of jobs")->required()->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Shuffle seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve) return cmd_solve(file, json, out);
    if (*verify) return cmd_verify(file, sequence, out);
    if (*oracle) return cmd_oracle(file, kind, json, out);
    if (*dominoes) return cmd_dominoes(file, out);
    if (*hampath) return cmd_hampath(file, emit_f2, out);
    if (*reduce) return cmd_reduce(source, file, target, out);
    if (*gantt) return cmd_gantt(file, sequence, width, out);
    if (*bench) return cmd_bench(chain_size, seed, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace shopsched::cli
