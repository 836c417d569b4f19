#include <gtest/gtest.h>

#include "generators.hpp"
#include "shopsched/f2_solver.hpp"
#include "shopsched/verify.hpp"

using namespace shopsched;

namespace {

FlowShopInstance nine_jobs() {
  return FlowShopInstance({{5, 3, 4, 6, 1, 5, 3, 2, 4}, {3, 4, 6, 1, 5, 3, 2, 4, 5}});
}

void expect_feasible_schedule(const FlowShopInstance& inst, const Solution& sol) {
  ASSERT_TRUE(sol.feasible());
  const JobSequence& seq = sol.schedule().sequence;
  ASSERT_NO_THROW(validate_sequence(inst, seq));
  const Timeline tl = earliest_no_wait_timeline(inst, seq);
  EXPECT_TRUE(check_no_idle_no_wait(inst, seq, tl).empty());
  EXPECT_EQ(tl.makespan(inst), sol.schedule().cmax);
}

}  // namespace

TEST(SolveF2, NineJobs) {
  const FlowShopInstance inst = nine_jobs();
  const Solution sol = solve_f2(inst);
  expect_feasible_schedule(inst, sol);
  EXPECT_EQ(sol.schedule().cmax, 34u);
  EXPECT_EQ(inst.time(0, sol.schedule().sequence.front()), 1u);
  EXPECT_EQ(sol.schedule().chain_case, ChainCase::Case2);
}

TEST(SolveF2, TwoJobExamplePicksShorterOrder) {
  const FlowShopInstance inst = FlowShopInstance::from_pairs({{2, 1}, {1, 2}});
  const Solution sol = solve_f2(inst);
  expect_feasible_schedule(inst, sol);
  EXPECT_EQ(sol.schedule().sequence.order, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(sol.schedule().cmax, 4u);
}

TEST(SolveF2, ForcedChainIsCase1) {
  const FlowShopInstance inst = FlowShopInstance::from_pairs({{2, 3}, {1, 2}, {3, 4}});
  const Solution sol = solve_f2(inst);
  expect_feasible_schedule(inst, sol);
  EXPECT_EQ(sol.schedule().chain_case, ChainCase::Case1);
  EXPECT_EQ(sol.schedule().sequence.order, (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(sol.schedule().cmax, 1u + 9u);
}

TEST(SolveF2, Infeasible) {
  EXPECT_EQ(solve_f2(FlowShopInstance::from_pairs({{1, 2}, {3, 4}})).reason(),
            InfeasibleReason::DegreeImbalance);
  EXPECT_EQ(solve_f2(FlowShopInstance::from_pairs({{1, 2}, {2, 1}, {3, 4}, {4, 3}})).reason(),
            InfeasibleReason::Disconnected);
}

TEST(SolveF2, SingleJob) {
  const Solution sol = solve_f2(FlowShopInstance::from_pairs({{3, 4}}));
  ASSERT_TRUE(sol.feasible());
  EXPECT_EQ(sol.schedule().cmax, 7u);
}

TEST(SolveF2, RejectsBadInput) {
  EXPECT_THROW(solve_f2(FlowShopInstance({{1}, {1}, {1}})), std::invalid_argument);
  EXPECT_THROW(solve_f2(FlowShopInstance({{1, 0}, {1, 1}})), ValidationError);
}

TEST(SolveF2Property, MatchesOracle) {
  testgen::Rng rng(2024);
  int feasible = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = testgen::uniform(rng, 1, 7);
    const FlowShopInstance inst = iter % 3 == 0 ? testgen::chain_instance(rng, 2, n, 4, iter % 2)
                                                : testgen::random_instance(rng, 2, n, 4);
    const Solution fast = solve_f2(inst);
    const Solution slow = serial::brute_force_flow(inst);
    ASSERT_EQ(fast.feasible(), slow.feasible()) << "iteration " << iter;
    if (fast.feasible()) {
      ++feasible;
      expect_feasible_schedule(inst, fast);
      EXPECT_EQ(fast.schedule().cmax, slow.schedule().cmax);
      EXPECT_EQ(fast.schedule().chain_case, slow.schedule().chain_case);
    }
  }
  EXPECT_GT(feasible, 100);
}
