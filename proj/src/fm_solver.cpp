#include "shopsched/fm_solver.hpp"

#include <algorithm>
#include <numeric>

#include "shopsched/f2_solver.hpp"

namespace shopsched {

namespace {

// Vector id v < n is the head vector of job v, otherwise the tail vector of
// job v - n. Component c of vector v is inst.time(c + offset, job).
struct VectorView {
  const FlowShopInstance& inst;
  std::size_t n;

  Duration component(std::size_t v, std::size_t c) const {
    return v < n ? inst.time(c, v) : inst.time(c + 1, v - n);
  }

  int compare(std::size_t a, std::size_t b) const {
    const std::size_t len = inst.machines() - 1;
    for (std::size_t c = 0; c < len; ++c) {
      const Duration x = component(a, c);
      const Duration y = component(b, c);
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }
};

}  // namespace

VectorRanks vector_ranks(const FlowShopInstance& inst) {
  const std::size_t n = inst.jobs();
  const VectorView view{inst, n};
  std::vector<std::size_t> ids(2 * n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  std::sort(ids.begin(), ids.end(),
            [&](std::size_t a, std::size_t b) { return view.compare(a, b) < 0; });

  VectorRanks ranks;
  ranks.head.assign(n, 0);
  ranks.tail.assign(n, 0);
  Duration rank = 0;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k == 0 || view.compare(ids[k - 1], ids[k]) != 0) ++rank;
    const std::size_t v = ids[k];
    if (v < n) {
      ranks.head[v] = rank;
    } else {
      ranks.tail[v - n] = rank;
    }
  }
  ranks.distinct = static_cast<std::size_t>(rank);
  return ranks;
}

std::optional<std::size_t> first_multiset_violation(const FlowShopInstance& inst) {
  for (std::size_t i = 0; i + 1 < inst.machines(); ++i) {
    std::vector<Duration> a = inst.row(i);
    std::vector<Duration> b = inst.row(i + 1);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Duration> only_a;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    if (only_a.size() > 1) return i;
  }
  return std::nullopt;
}

Solution solve_fm(const FlowShopInstance& inst, const FmOptions& options) {
  validate_instance(inst);
  if (options.multiset_prefilter && first_multiset_violation(inst)) {
    return Infeasible{InfeasibleReason::ConditionC1Violated};
  }

  const VectorRanks ranks = vector_ranks(inst);
  const FlowShopInstance reduced(std::vector<std::vector<Duration>>{ranks.head, ranks.tail});
  Solution sub = solve_f2(reduced);
  if (!sub.feasible()) return sub;

  JobSequence seq = sub.schedule().sequence;
  const std::size_t n = inst.jobs();
  const bool cyclic = ranks.head[seq.order.front()] == ranks.tail[seq.order.back()];
  if (cyclic) {
    std::size_t best = 0;
    Duration best_sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Duration sum = 0;
      for (std::size_t i = 0; i + 1 < inst.machines(); ++i) sum += inst.time(i, k);
      if (k == 0 || sum < best_sum) {
        best = k;
        best_sum = sum;
      }
    }
    auto pos = std::find(seq.order.begin(), seq.order.end(), best);
    std::rotate(seq.order.begin(), pos, seq.order.end());
  }

  const Duration cmax = chain_makespan(inst, seq.front());
  return Feasible{std::move(seq), cmax, cyclic ? ChainCase::Case2 : ChainCase::Case1};
}

}  // namespace shopsched
