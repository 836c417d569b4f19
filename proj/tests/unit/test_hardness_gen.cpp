#include <gtest/gtest.h>

#include "generators.hpp"
#include "shopsched/hardness_gen.hpp"

using namespace shopsched;

namespace {

NmtsErrorKind nmts_error(const NmtsInstance& nm) {
  try {
    validate_nmts(nm);
  } catch (const NmtsError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "instance was accepted";
  return NmtsErrorKind::SizeMismatch;
}

// Independent recomputation of both machine loads.
std::pair<Duration, Duration> loads(const ShopInstance& shop) {
  Duration a = 0;
  Duration b = 0;
  for (const ShopJob& j : shop.jobs) {
    a += j.m1;
    b += j.m2;
  }
  return {a, b};
}

}  // namespace

TEST(Nmts, Validation) {
  EXPECT_NO_THROW(validate_nmts({{1, 2}, {3, 4}, {4, 6}}));
  EXPECT_EQ(nmts_error({{1, 2}, {3, 4}, {4, 7}}), NmtsErrorKind::SumMismatch);
  EXPECT_EQ(nmts_error({{0, 2}, {3, 4}, {3, 6}}), NmtsErrorKind::NonPositive);
  EXPECT_EQ(nmts_error({{1}, {3, 4}, {4, 4}}), NmtsErrorKind::SizeMismatch);
  EXPECT_EQ(nmts_error({{}, {}, {}}), NmtsErrorKind::SizeMismatch);
}

TEST(NmtsToJ2, TwoTargetExample) {
  const Reduction red = nmts_to_j2({{1, 2}, {3, 4}, {4, 6}});
  EXPECT_EQ(red.certificate.P, 20u);
  EXPECT_EQ(red.certificate.L, 134u);
  EXPECT_EQ(red.certificate.L1, 134u);
  EXPECT_EQ(red.certificate.L2, 134u);
  EXPECT_EQ(loads(red.shop), (std::pair<Duration, Duration>{134, 134}));
  const std::vector<ShopJob> expected = {
      {1, 21, Route::M1First},  {1, 22, Route::M1First},  {1, 43, Route::M2First},
      {1, 44, Route::M2First},  {64, 2, Route::M1First},  {66, 2, Route::M1First}};
  EXPECT_EQ(red.shop.jobs, expected);
  EXPECT_EQ(red.shop.kind, ShopKind::JobShop);
  EXPECT_EQ(red.certificate.roles, (std::vector<JobRole>{JobRole::X, JobRole::X, JobRole::Y,
                                                         JobRole::Y, JobRole::T, JobRole::T}));
}

TEST(NmtsToJ2, SingleTargetExample) {
  const Reduction red = nmts_to_j2({{1}, {3}, {4}});
  EXPECT_EQ(red.certificate.P, 8u);
  EXPECT_EQ(red.certificate.L, 30u);
  const std::vector<ShopJob> expected = {
      {1, 9, Route::M1First}, {1, 19, Route::M2First}, {28, 2, Route::M1First}};
  EXPECT_EQ(red.shop.jobs, expected);
  EXPECT_EQ(loads(red.shop), (std::pair<Duration, Duration>{30, 30}));
}

TEST(NmtsToO2, SameDurationsFreeRoutes) {
  const NmtsInstance nm{{1, 2}, {3, 4}, {4, 6}};
  const Reduction j2 = nmts_to_j2(nm);
  const Reduction o2 = nmts_to_o2(nm);
  EXPECT_EQ(o2.shop.kind, ShopKind::OpenShop);
  ASSERT_EQ(o2.shop.jobs.size(), j2.shop.jobs.size());
  for (std::size_t k = 0; k < o2.shop.jobs.size(); ++k) {
    EXPECT_EQ(o2.shop.jobs[k].m1, j2.shop.jobs[k].m1);
    EXPECT_EQ(o2.shop.jobs[k].m2, j2.shop.jobs[k].m2);
    EXPECT_EQ(o2.shop.jobs[k].route, Route::Free);
  }
  EXPECT_EQ(o2.certificate.L, 134u);
  EXPECT_NO_THROW(validate_shop(o2.shop));
}

TEST(Reduction, RejectsInvalidNmts) {
  EXPECT_THROW(nmts_to_j2({{1, 2}, {3, 4}, {4, 7}}), NmtsError);
  EXPECT_THROW(nmts_to_o2({{0}, {1}, {1}}), NmtsError);
}

TEST(NmtsBruteForce, Examples) {
  const NmtsInstance straight{{1, 2}, {3, 4}, {4, 6}};
  const auto a = nmts_brute_force(straight);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}}));

  const NmtsInstance crossed{{1, 2}, {3, 4}, {5, 5}};
  const auto b = nmts_brute_force(crossed);
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(is_valid_matching(crossed, *b));
  EXPECT_EQ(b->pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}}));

  EXPECT_FALSE(nmts_brute_force({{1, 1}, {1, 1}, {1, 3}}).has_value());
  const NmtsInstance big{std::vector<Duration>(9, 1), std::vector<Duration>(9, 1),
                         std::vector<Duration>(9, 2)};
  EXPECT_THROW(nmts_brute_force(big), OracleTooLarge);
}

TEST(NmtsBruteForce, MatchingValidator) {
  const NmtsInstance nm{{1, 2}, {3, 4}, {4, 6}};
  EXPECT_TRUE(is_valid_matching(nm, {{{0, 0}, {1, 1}}}));
  EXPECT_FALSE(is_valid_matching(nm, {{{0, 1}, {1, 0}}}));
  EXPECT_FALSE(is_valid_matching(nm, {{{0, 0}, {0, 1}}}));
  EXPECT_FALSE(is_valid_matching(nm, {{{0, 0}}}));
}

TEST(ExtractMatching, FromOracleSchedule) {
  const NmtsInstance nm{{1}, {3}, {4}};
  const Reduction red = nmts_to_j2(nm);
  const auto sched = brute_force_shop(red.shop);
  ASSERT_TRUE(sched.has_value());
  const auto matching = extract_matching(nm, red, *sched);
  ASSERT_TRUE(matching.has_value());
  EXPECT_TRUE(is_valid_matching(nm, *matching));
}

TEST(ReductionProperty, LoadsAndDurationBands) {
  testgen::Rng rng(31);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t m = testgen::uniform(rng, 1, 6);
    NmtsInstance nm;
    Duration total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      nm.sx.push_back(testgen::uniform(rng, 1, 50));
      nm.sy.push_back(testgen::uniform(rng, 1, 50));
      total += nm.sx.back() + nm.sy.back();
    }
    // Split the total into m positive targets.
    nm.t.assign(m, 1);
    for (Duration rest = total - m; rest > 0; --rest) ++nm.t[testgen::uniform(rng, 0, m - 1)];

    for (const Reduction& red : {nmts_to_j2(nm), nmts_to_o2(nm)}) {
      const ReductionCertificate& c = red.certificate;
      EXPECT_EQ(c.P, 2 * total);
      const auto [l1, l2] = loads(red.shop);
      EXPECT_EQ(l1, c.L1);
      EXPECT_EQ(l2, c.L2);
      EXPECT_EQ(c.L1, c.L2);
      EXPECT_EQ(c.L, 2 * m + 3 * m * c.P + total);
      ASSERT_EQ(red.shop.jobs.size(), 3 * m);
      for (std::size_t i = 0; i < m; ++i) {
        EXPECT_GT(red.shop.jobs[i].m2, c.P);
        EXPECT_GT(red.shop.jobs[m + i].m2, 2 * c.P);
        EXPECT_GT(red.shop.jobs[2 * m + i].m1, 3 * c.P);
      }
    }
  }
}
