#include "shopsched/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace shopsched {

const char* to_string(Route r) {
  switch (r) {
    case Route::M1First:
      return "12";
    case Route::M2First:
      return "21";
    case Route::Free:
      return "free";
  }
  return "?";
}

const char* to_string(ShopKind k) { return k == ShopKind::JobShop ? "jobshop" : "openshop"; }

void validate_shop(const ShopInstance& inst) {
  if (inst.jobs.empty()) throw std::invalid_argument("shop instance has no jobs");
  for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
    const ShopJob& job = inst.jobs[j];
    if (job.m1 == 0 || job.m2 == 0) {
      throw std::invalid_argument("job " + std::to_string(j + 1) + " has a zero duration");
    }
    const bool free = job.route == Route::Free;
    if (inst.kind == ShopKind::JobShop && free) {
      throw std::invalid_argument("job shop job " + std::to_string(j + 1) + " has no route");
    }
    if (inst.kind == ShopKind::OpenShop && !free) {
      throw std::invalid_argument("open shop job " + std::to_string(j + 1) + " has a fixed route");
    }
  }
}

namespace {

using Signed = std::int64_t;

// ---------------------------------------------------------------------------
// Flow shop
// ---------------------------------------------------------------------------

struct FlowCandidate {
  Duration cmax = std::numeric_limits<Duration>::max();
  std::vector<std::size_t> order;
  bool found() const { return !order.empty(); }
};

bool no_idle_no_wait(const FlowShopInstance& inst, const JobSequence& seq, Duration& cmax) {
  const Timeline tl = earliest_no_wait_timeline(inst, seq);
  if (!check_no_idle_no_wait(inst, seq, tl).empty()) return false;
  cmax = tl.makespan(inst);
  return true;
}

// Chain closes on itself: head vector of the first job equals the tail
// vector of the last.
ChainCase chain_case_of(const FlowShopInstance& inst, const std::vector<std::size_t>& order) {
  for (std::size_t i = 0; i + 1 < inst.machines(); ++i) {
    if (inst.time(i, order.front()) != inst.time(i + 1, order.back())) return ChainCase::Case1;
  }
  return ChainCase::Case2;
}

Solution to_solution(const FlowShopInstance& inst, FlowCandidate best) {
  if (!best.found()) return Infeasible{InfeasibleReason::ConditionC1Violated};
  const ChainCase c = chain_case_of(inst, best.order);
  return Feasible{JobSequence{std::move(best.order)}, best.cmax, c};
}

void check_flow_size(const FlowShopInstance& inst) {
  validate_instance(inst);
  if (inst.jobs() > kFlowOracleMaxJobs) throw OracleTooLarge(inst.jobs(), kFlowOracleMaxJobs);
}

// All permutations starting with `first`, in lexicographic order.
FlowCandidate best_flow_branch(const FlowShopInstance& inst, std::size_t first) {
  const std::size_t n = inst.jobs();
  JobSequence seq;
  seq.order.push_back(first);
  for (std::size_t j = 0; j < n; ++j) {
    if (j != first) seq.order.push_back(j);
  }
  FlowCandidate best;
  do {
    Duration cmax = 0;
    if (no_idle_no_wait(inst, seq, cmax) && cmax < best.cmax) {
      best.cmax = cmax;
      best.order = seq.order;
    }
  } while (std::next_permutation(seq.order.begin() + 1, seq.order.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Job shop / open shop
// ---------------------------------------------------------------------------

struct ShopCandidate {
  Duration makespan = std::numeric_limits<Duration>::max();
  std::vector<std::size_t> m1_order;
  std::vector<std::size_t> m2_order;
  std::vector<Route> routes;
  bool found() const { return !m1_order.empty(); }
};

void check_shop_size(const ShopInstance& inst) {
  validate_shop(inst);
  if (inst.jobs.size() > kShopOracleMaxJobs) {
    throw OracleTooLarge(inst.jobs.size(), kShopOracleMaxJobs);
  }
}

// Enumerates machine-2 orders and routes for one fixed machine-1 order.
class ShopEnumerator {
 public:
  explicit ShopEnumerator(const ShopInstance& inst)
      : inst_(inst),
        n_(inst.jobs.size()),
        start1_(n_),
        start2_(n_),
        delta_m1_first_(n_),
        delta_m2_first_(n_) {
    for (const ShopJob& j : inst.jobs) {
      load1_ += static_cast<Signed>(j.m1);
      load2_ += static_cast<Signed>(j.m2);
    }
    if (inst.kind == ShopKind::JobShop) {
      for (const ShopJob& j : inst.jobs) fixed_routes_.push_back(j.route);
    }
  }

  void visit_m1_order(const std::vector<std::size_t>& m1_order, ShopCandidate& best) {
    Signed t = 0;
    for (std::size_t j : m1_order) {
      start1_[j] = t;
      t += static_cast<Signed>(inst_.jobs[j].m1);
    }
    std::vector<std::size_t> m2_order(n_);
    std::iota(m2_order.begin(), m2_order.end(), std::size_t{0});
    do {
      t = 0;
      for (std::size_t j : m2_order) {
        start2_[j] = t;
        t += static_cast<Signed>(inst_.jobs[j].m2);
      }
      // Offset S2 - S1 each job forces, per route.
      for (std::size_t j = 0; j < n_; ++j) {
        delta_m1_first_[j] = start1_[j] + static_cast<Signed>(inst_.jobs[j].m1) - start2_[j];
        delta_m2_first_[j] = start1_[j] - start2_[j] - static_cast<Signed>(inst_.jobs[j].m2);
      }
      if (inst_.kind == ShopKind::JobShop) {
        try_routes(fixed_routes_, m1_order, m2_order, best);
      } else {
        std::vector<Route> routes(n_);
        const std::uint32_t masks = 1u << n_;
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
          for (std::size_t j = 0; j < n_; ++j) {
            routes[j] = ((mask >> (n_ - 1 - j)) & 1u) != 0 ? Route::M2First : Route::M1First;
          }
          try_routes(routes, m1_order, m2_order, best);
        }
      }
    } while (std::next_permutation(m2_order.begin(), m2_order.end()));
  }

 private:
  void try_routes(const std::vector<Route>& routes, const std::vector<std::size_t>& m1_order,
                  const std::vector<std::size_t>& m2_order, ShopCandidate& best) const {
    auto forced = [&](std::size_t j) {
      return routes[j] == Route::M1First ? delta_m1_first_[j] : delta_m2_first_[j];
    };
    const Signed delta = forced(0);
    for (std::size_t j = 1; j < n_; ++j) {
      if (forced(j) != delta) return;
    }
    const Signed s1 = std::max<Signed>(0, -delta);
    const Signed s2 = s1 + delta;
    const auto makespan = static_cast<Duration>(std::max(s1 + load1_, s2 + load2_));
    if (makespan < best.makespan) {
      best.makespan = makespan;
      best.m1_order = m1_order;
      best.m2_order = m2_order;
      best.routes = routes;
    }
  }

  const ShopInstance& inst_;
  std::size_t n_;
  Signed load1_ = 0;
  Signed load2_ = 0;
  std::vector<Route> fixed_routes_;
  std::vector<Signed> start1_;
  std::vector<Signed> start2_;
  std::vector<Signed> delta_m1_first_;
  std::vector<Signed> delta_m2_first_;
};

std::optional<ShopSchedule> materialize(const ShopInstance& inst, const ShopCandidate& best) {
  if (!best.found()) return std::nullopt;
  return schedule_for_orders(inst, best.m1_order, best.m2_order, best.routes);
}

bool better_shop(const ShopCandidate& a, const ShopCandidate& b) {
  return a.found() && (!b.found() || a.makespan < b.makespan);
}

void dfs_hamiltonian(const Digraph& g, std::vector<std::size_t>& path, std::vector<bool>& used,
                     bool& done) {
  if (path.size() == g.vertex_count()) {
    done = true;
    return;
  }
  for (std::size_t next : g.successors(path.back())) {
    if (used[next]) continue;
    used[next] = true;
    path.push_back(next);
    dfs_hamiltonian(g, path, used, done);
    if (done) return;
    path.pop_back();
    used[next] = false;
  }
}

}  // namespace

std::optional<ShopSchedule> schedule_for_orders(const ShopInstance& inst,
                                                const std::vector<std::size_t>& m1_order,
                                                const std::vector<std::size_t>& m2_order,
                                                const std::vector<Route>& routes) {
  const std::size_t n = inst.jobs.size();
  std::vector<Signed> rel1(n);
  std::vector<Signed> rel2(n);
  Signed load1 = 0;
  Signed load2 = 0;
  for (std::size_t j : m1_order) {
    rel1[j] = load1;
    load1 += static_cast<Signed>(inst.jobs[j].m1);
  }
  for (std::size_t j : m2_order) {
    rel2[j] = load2;
    load2 += static_cast<Signed>(inst.jobs[j].m2);
  }

  std::optional<Signed> delta;
  for (std::size_t j = 0; j < n; ++j) {
    Signed forced = 0;
    if (routes[j] == Route::M1First) {
      forced = rel1[j] + static_cast<Signed>(inst.jobs[j].m1) - rel2[j];
    } else if (routes[j] == Route::M2First) {
      forced = rel1[j] - rel2[j] - static_cast<Signed>(inst.jobs[j].m2);
    } else {
      throw std::invalid_argument("routes must be resolved");
    }
    if (delta && *delta != forced) return std::nullopt;
    delta = forced;
  }

  const Signed s1 = std::max<Signed>(0, -*delta);
  const Signed s2 = s1 + *delta;
  ShopSchedule sched;
  sched.m1_order = m1_order;
  sched.m2_order = m2_order;
  sched.routes = routes;
  sched.m1_start.resize(n);
  sched.m2_start.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sched.m1_start[j] = static_cast<Duration>(s1 + rel1[j]);
    sched.m2_start[j] = static_cast<Duration>(s2 + rel2[j]);
  }
  sched.makespan = static_cast<Duration>(std::max(s1 + load1, s2 + load2));
  return sched;
}

std::vector<std::string> replay_shop_schedule(const ShopInstance& inst, const ShopSchedule& sched) {
  std::vector<std::string> problems;
  const std::size_t n = inst.jobs.size();
  if (sched.m1_start.size() != n || sched.m2_start.size() != n || sched.routes.size() != n) {
    problems.emplace_back("schedule size does not match the instance");
    return problems;
  }

  struct Op {
    Duration start;
    Duration end;
    std::size_t job;
  };
  Duration earliest = std::numeric_limits<Duration>::max();
  Duration latest = 0;
  for (int machine = 0; machine < 2; ++machine) {
    std::vector<Op> ops;
    for (std::size_t j = 0; j < n; ++j) {
      const Duration s = machine == 0 ? sched.m1_start[j] : sched.m2_start[j];
      const Duration d = machine == 0 ? inst.jobs[j].m1 : inst.jobs[j].m2;
      ops.push_back({s, s + d, j});
      earliest = std::min(earliest, s);
      latest = std::max(latest, s + d);
    }
    std::sort(ops.begin(), ops.end(), [](const Op& a, const Op& b) { return a.start < b.start; });
    const auto& order = machine == 0 ? sched.m1_order : sched.m2_order;
    for (std::size_t k = 0; k < n; ++k) {
      if (k < order.size() && ops[k].job != order[k]) {
        problems.push_back("M" + std::to_string(machine + 1) + " order disagrees with start times");
        break;
      }
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (ops[k + 1].start < ops[k].end) {
        problems.push_back("overlap on M" + std::to_string(machine + 1));
      } else if (ops[k + 1].start > ops[k].end) {
        problems.push_back("idle time on M" + std::to_string(machine + 1));
      }
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    const Route declared = inst.jobs[j].route;
    const Route used = sched.routes[j];
    if (used == Route::Free || (declared != Route::Free && declared != used)) {
      problems.push_back("job " + std::to_string(j + 1) + " does not follow its route");
      continue;
    }
    const ShopJob& job = inst.jobs[j];
    const bool ok = used == Route::M1First ? sched.m1_start[j] + job.m1 == sched.m2_start[j]
                                           : sched.m2_start[j] + job.m2 == sched.m1_start[j];
    if (!ok) problems.push_back("job " + std::to_string(j + 1) + " waits or overlaps itself");
  }
  if (earliest != 0) problems.emplace_back("schedule does not start at time 0");
  if (latest != sched.makespan) problems.emplace_back("reported makespan is wrong");
  return problems;
}

Solution brute_force_flow(const FlowShopInstance& inst) {
  check_flow_size(inst);
  const std::size_t n = inst.jobs();
  std::vector<FlowCandidate> branch(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t first = 0; first < n; ++first) {
    branch[first] = best_flow_branch(inst, first);
  }
  FlowCandidate best;
  for (auto& b : branch) {
    if (b.found() && b.cmax < best.cmax) best = std::move(b);
  }
  return to_solution(inst, std::move(best));
}

std::optional<ShopSchedule> brute_force_shop(const ShopInstance& inst) {
  check_shop_size(inst);
  const std::size_t n = inst.jobs.size();
  std::vector<ShopCandidate> branch(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t first = 0; first < n; ++first) {
    ShopEnumerator enumerator(inst);
    std::vector<std::size_t> m1_order{first};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != first) m1_order.push_back(j);
    }
    do {
      enumerator.visit_m1_order(m1_order, branch[first]);
    } while (std::next_permutation(m1_order.begin() + 1, m1_order.end()));
  }
  ShopCandidate best;
  for (auto& b : branch) {
    if (better_shop(b, best)) best = std::move(b);
  }
  return materialize(inst, best);
}

std::optional<std::vector<std::size_t>> brute_force_hamiltonian(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kHamiltonOracleMaxVertices) throw OracleTooLarge(n, kHamiltonOracleMaxVertices);
  if (n == 0) return std::nullopt;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> path{start};
    std::vector<bool> used(n, false);
    used[start] = true;
    bool done = false;
    dfs_hamiltonian(g, path, used, done);
    if (done) return path;
  }
  return std::nullopt;
}

namespace serial {

Solution brute_force_flow(const FlowShopInstance& inst) {
  check_flow_size(inst);
  JobSequence seq;
  seq.order.resize(inst.jobs());
  std::iota(seq.order.begin(), seq.order.end(), std::size_t{0});
  FlowCandidate best;
  do {
    Duration cmax = 0;
    if (no_idle_no_wait(inst, seq, cmax) && cmax < best.cmax) {
      best.cmax = cmax;
      best.order = seq.order;
    }
  } while (std::next_permutation(seq.order.begin(), seq.order.end()));
  return to_solution(inst, std::move(best));
}

std::optional<ShopSchedule> brute_force_shop(const ShopInstance& inst) {
  check_shop_size(inst);
  ShopEnumerator enumerator(inst);
  std::vector<std::size_t> m1_order(inst.jobs.size());
  std::iota(m1_order.begin(), m1_order.end(), std::size_t{0});
  ShopCandidate best;
  do {
    enumerator.visit_m1_order(m1_order, best);
  } while (std::next_permutation(m1_order.begin(), m1_order.end()));
  return materialize(inst, best);
}

}  // namespace serial

}  // namespace shopsched
