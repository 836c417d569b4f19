#include "shopsched/hardness_gen.hpp"

#include <algorithm>
#include <numeric>

namespace shopsched {

void validate_nmts(const NmtsInstance& nm) {
  const std::size_t m = nm.size();
  if (m == 0 || nm.sx.size() != m || nm.sy.size() != m) {
    throw NmtsError(NmtsErrorKind::SizeMismatch, "X, Y and the target vector need the same size");
  }
  for (const auto* v : {&nm.sx, &nm.sy, &nm.t}) {
    if (std::find(v->begin(), v->end(), Duration{0}) != v->end()) {
      throw NmtsError(NmtsErrorKind::NonPositive, "NMTS sizes and targets must be positive");
    }
  }
  const auto sum = [](const std::vector<Duration>& v) {
    return std::accumulate(v.begin(), v.end(), Duration{0});
  };
  if (sum(nm.t) != sum(nm.sx) + sum(nm.sy)) {
    throw NmtsError(NmtsErrorKind::SumMismatch, "targets do not sum to the total element size");
  }
}

namespace {

Reduction build_reduction(const NmtsInstance& nm, ShopKind kind) {
  validate_nmts(nm);
  const std::size_t m = nm.size();
  const auto sum = [](const std::vector<Duration>& v) {
    return std::accumulate(v.begin(), v.end(), Duration{0});
  };
  const Duration sum_t = sum(nm.t);
  const Duration P = sum_t + sum(nm.sx) + sum(nm.sy);
  const bool open = kind == ShopKind::OpenShop;

  Reduction red;
  red.shop.kind = kind;
  red.shop.jobs.reserve(3 * m);
  auto add = [&](Duration m1, Duration m2, Route route, JobRole role) {
    red.shop.jobs.push_back({m1, m2, open ? Route::Free : route});
    red.certificate.roles.push_back(role);
  };
  for (std::size_t i = 0; i < m; ++i) add(1, nm.sx[i] + P, Route::M1First, JobRole::X);
  for (std::size_t i = 0; i < m; ++i) add(1, nm.sy[i] + 2 * P, Route::M2First, JobRole::Y);
  for (std::size_t i = 0; i < m; ++i) add(nm.t[i] + 3 * P, 2, Route::M1First, JobRole::T);

  ReductionCertificate& cert = red.certificate;
  cert.P = P;
  for (const ShopJob& j : red.shop.jobs) {
    cert.L1 += j.m1;
    cert.L2 += j.m2;
  }
  cert.L = std::max(cert.L1, cert.L2);
  return red;
}

}  // namespace

Reduction nmts_to_j2(const NmtsInstance& nm) { return build_reduction(nm, ShopKind::JobShop); }

Reduction nmts_to_o2(const NmtsInstance& nm) { return build_reduction(nm, ShopKind::OpenShop); }

bool is_valid_matching(const NmtsInstance& nm, const NmtsMatching& matching) {
  const std::size_t m = nm.size();
  if (matching.pairs.size() != m) return false;
  std::vector<bool> used_x(m, false);
  std::vector<bool> used_y(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [x, y] = matching.pairs[i];
    if (x >= m || y >= m || used_x[x] || used_y[y]) return false;
    used_x[x] = used_y[y] = true;
    if (nm.sx[x] + nm.sy[y] != nm.t[i]) return false;
  }
  return true;
}

std::optional<NmtsMatching> nmts_brute_force(const NmtsInstance& nm) {
  validate_nmts(nm);
  const std::size_t m = nm.size();
  if (m > kNmtsOracleMaxSize) throw OracleTooLarge(m, kNmtsOracleMaxSize);

  std::vector<std::size_t> x_for_target(m);
  std::iota(x_for_target.begin(), x_for_target.end(), std::size_t{0});
  do {
    NmtsMatching matching;
    std::vector<bool> used_y(m, false);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      const Duration x_size = nm.sx[x_for_target[i]];
      ok = false;
      if (x_size >= nm.t[i]) break;
      const Duration need = nm.t[i] - x_size;
      for (std::size_t y = 0; y < m; ++y) {
        if (!used_y[y] && nm.sy[y] == need) {
          used_y[y] = true;
          matching.pairs.emplace_back(x_for_target[i], y);
          ok = true;
          break;
        }
      }
    }
    if (ok) return matching;
  } while (std::next_permutation(x_for_target.begin(), x_for_target.end()));
  return std::nullopt;
}

std::optional<NmtsMatching> extract_matching(const NmtsInstance& nm, const Reduction& red,
                                             const ShopSchedule& sched) {
  const std::size_t m = nm.size();
  const auto& jobs = red.shop.jobs;
  NmtsMatching matching;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t tjob = 2 * m + i;
    const Duration from = sched.m1_start[tjob];
    const Duration to = from + jobs[tjob].m1;
    std::optional<std::size_t> x;
    std::optional<std::size_t> y;
    for (std::size_t j = 0; j < 2 * m; ++j) {
      const Duration s = sched.m2_start[j];
      if (s < from || s + jobs[j].m2 > to) continue;
      auto& slot = j < m ? x : y;
      if (slot) return std::nullopt;
      slot = j < m ? j : j - m;
    }
    if (!x || !y) return std::nullopt;
    matching.pairs.emplace_back(*x, *y);
  }
  if (!is_valid_matching(nm, matching)) return std::nullopt;
  return matching;
}

}  // namespace shopsched
