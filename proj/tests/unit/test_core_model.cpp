#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "shopsched/core_model.hpp"

using namespace shopsched;

namespace {

FlowShopInstance nine_jobs() {
  return FlowShopInstance({{5, 3, 4, 6, 1, 5, 3, 2, 4}, {3, 4, 6, 1, 5, 3, 2, 4, 5}});
}

ValidationErrorKind validation_kind(const FlowShopInstance& inst) {
  try {
    validate_instance(inst);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "instance was accepted";
  return ValidationErrorKind::DimensionMismatch;
}

}  // namespace

TEST(Validate, AcceptsPositiveMatrix) {
  EXPECT_NO_THROW(validate_instance(FlowShopInstance({{1, 2}, {3, 4}})));
}

TEST(Validate, ZeroEntryNamesItsCell) {
  try {
    validate_instance(FlowShopInstance({{1, 0}, {3, 4}}));
    FAIL() << "zero entry accepted";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationErrorKind::NonPositiveTime);
    EXPECT_EQ(e.machine(), 0u);
    EXPECT_EQ(e.job(), 1u);
  }
}

TEST(Validate, ShapeErrors) {
  EXPECT_EQ(validation_kind(FlowShopInstance({{1, 2, 3}, {4, 5}})),
            ValidationErrorKind::DimensionMismatch);
  EXPECT_EQ(validation_kind(FlowShopInstance({{1, 2, 3}})), ValidationErrorKind::TooFewMachines);
  EXPECT_EQ(validation_kind(FlowShopInstance()), ValidationErrorKind::DimensionMismatch);
  EXPECT_EQ(validation_kind(FlowShopInstance({{}, {}})), ValidationErrorKind::DimensionMismatch);
}

TEST(Validate, SequenceMustBePermutation) {
  const FlowShopInstance inst({{1, 2, 3}, {1, 2, 3}});
  EXPECT_NO_THROW(validate_sequence(inst, {{2, 0, 1}}));
  EXPECT_THROW(validate_sequence(inst, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(validate_sequence(inst, {{0, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(validate_sequence(inst, {{0, 1, 3}}), std::invalid_argument);
}

TEST(Aggregates, FirstAndLastMachineTotals) {
  const InstanceAggregates agg = aggregates(FlowShopInstance({{1, 2}, {5, 5}, {3, 4}}));
  EXPECT_EQ(agg.first_machine_total, 3u);
  EXPECT_EQ(agg.last_machine_total, 7u);
}

TEST(Timeline, SingleJob) {
  const FlowShopInstance inst = FlowShopInstance::from_pairs({{3, 4}});
  const Timeline tl = earliest_no_wait_timeline(inst, {{0}});
  EXPECT_EQ(tl.start[0][0], 0u);
  EXPECT_EQ(tl.start[1][0], 3u);
  EXPECT_EQ(tl.makespan(inst), 7u);
}

TEST(Timeline, SecondJobWaitsForSecondMachine) {
  const FlowShopInstance inst = FlowShopInstance::from_pairs({{2, 1}, {1, 2}});
  const Timeline tl = earliest_no_wait_timeline(inst, {{0, 1}});
  EXPECT_EQ(tl.start[0][1], 2u);
  EXPECT_EQ(tl.start[1][1], 3u);
}

TEST(Timeline, NineJobCycleKeepsSecondMachineBusy) {
  const FlowShopInstance inst = nine_jobs();
  const JobSequence seq{{4, 5, 6, 7, 8, 0, 1, 2, 3}};
  const Timeline tl = earliest_no_wait_timeline(inst, seq);
  EXPECT_EQ(tl.start[1][4], 1u);
  EXPECT_EQ(tl.makespan(inst), 34u);
  Duration t = 1;
  for (std::size_t j : seq.order) {
    EXPECT_EQ(tl.start[1][j], t);
    t += inst.time(1, j);
  }
  EXPECT_TRUE(check_no_idle_no_wait(inst, seq, tl).empty());
}

TEST(Checker, MismatchedNeighboursAreReported) {
  const FlowShopInstance inst = FlowShopInstance::from_pairs({{1, 2}, {3, 4}});
  const JobSequence seq{{0, 1}};
  const FeasibilityReport rep = check_no_idle_no_wait(inst, seq, earliest_no_wait_timeline(inst, seq));
  EXPECT_FALSE(rep.empty());
  EXPECT_FALSE(rep.idle.empty());
}

TEST(Checker, TwoJobExample) {
  const FlowShopInstance inst = FlowShopInstance::from_pairs({{2, 1}, {1, 2}});
  const JobSequence seq{{1, 0}};
  const Timeline tl = earliest_no_wait_timeline(inst, seq);
  EXPECT_TRUE(check_no_idle_no_wait(inst, seq, tl).empty());
  EXPECT_EQ(tl.makespan(inst), 4u);
  EXPECT_EQ(chain_makespan(inst, 1), 4u);
}

TEST(Checker, HandBuiltOverlapAndWait) {
  const FlowShopInstance inst = FlowShopInstance::from_pairs({{2, 2}, {2, 2}});
  const JobSequence seq{{0, 1}};
  Timeline overlap{{{0, 1}, {2, 4}}};
  EXPECT_FALSE(check_no_idle_no_wait(inst, seq, overlap).overlaps.empty());
  Timeline wait{{{0, 2}, {3, 5}}};
  const FeasibilityReport rep = check_no_idle_no_wait(inst, seq, wait);
  ASSERT_FALSE(rep.waits.empty());
  EXPECT_EQ(rep.waits.front().job, 0u);
  EXPECT_EQ(rep.waits.front().length, 1u);
}

// Feasible exactly when every neighbour pair chains; then the makespan is the
// chain formula and the timeline is reproducible.
TEST(CheckerProperty, FeasibleIffNeighboursChain) {
  testgen::Rng rng(11);
  std::size_t feasible = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t m = testgen::uniform(rng, 2, 4);
    const std::size_t n = testgen::uniform(rng, 1, 6);
    const FlowShopInstance inst = iter % 2 == 0
                                      ? testgen::random_instance(rng, m, n, 3)
                                      : testgen::chain_instance(rng, m, n, 3, iter % 4 == 1);
    JobSequence seq{std::vector<std::size_t>(n)};
    std::iota(seq.order.begin(), seq.order.end(), std::size_t{0});
    std::shuffle(seq.order.begin(), seq.order.end(), rng);

    const Timeline tl = earliest_no_wait_timeline(inst, seq);
    ASSERT_EQ(tl, earliest_no_wait_timeline(inst, seq));
    bool chained = true;
    for (std::size_t k = 0; k + 1 < n; ++k)
      chained = chained && testgen::chains(inst, seq.order[k], seq.order[k + 1]);

    const FeasibilityReport rep = check_no_idle_no_wait(inst, seq, tl);
    ASSERT_EQ(rep.empty(), chained) << "iteration " << iter;
    EXPECT_TRUE(rep.overlaps.empty());
    if (chained) {
      ++feasible;
      EXPECT_EQ(tl.makespan(inst), chain_makespan(inst, seq.front()));
    }
  }
  EXPECT_GT(feasible, 100u);
}
