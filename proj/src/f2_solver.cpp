#include "shopsched/f2_solver.hpp"

#include <algorithm>

#include "shopsched/euler.hpp"

namespace shopsched {

Solution solve_f2(const FlowShopInstance& inst) {
  validate_instance(inst);
  if (inst.machines() != 2) {
    throw std::invalid_argument("solve_f2 needs exactly two machines");
  }
  const std::size_t n = inst.jobs();
  const auto& first = inst.row(0);
  const auto& second = inst.row(1);

  std::vector<std::pair<Label, Label>> pairs(n);
  for (std::size_t j = 0; j < n; ++j) pairs[j] = {first[j], second[j]};
  const DirectedMultigraph g = DirectedMultigraph::build(pairs);

  const DegreeSummary deg = degree_summary(g);
  const StartRule rule = start_rule(deg);
  if (!rule.degrees_ok) return Infeasible{InfeasibleReason::DegreeImbalance};

  VertexId start = 0;
  ChainCase chain_case = ChainCase::Case1;
  if (rule.forced_start) {
    start = *rule.forced_start;
  } else {
    // Balanced: start at the smallest label (vertex 0), which has an out-arc.
    start = 0;
    chain_case = ChainCase::Case2;
  }

  EulerResult path = eulerian_path(g, start);
  if (!path) {
    return Infeasible{*path.failure == PathFailure::Disconnected ? InfeasibleReason::Disconnected
                                                                 : InfeasibleReason::DegreeImbalance};
  }

  JobSequence seq{std::move(path.payloads)};
  if (chain_case == ChainCase::Case2) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (first[j] < first[best]) best = j;
    }
    auto pos = std::find(seq.order.begin(), seq.order.end(), best);
    std::rotate(seq.order.begin(), pos, seq.order.end());
  }

  const Duration cmax = chain_makespan(inst, seq.front());
  return Feasible{std::move(seq), cmax, chain_case};
}

}  // namespace shopsched
