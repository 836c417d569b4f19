#pragma once

// Numerical Matching with Target Sums (NMTS) and its reductions to the
// two-machine no-idle/no-wait job shop and open shop.
//
// For an NMTS instance with m targets the generated shop has 3m jobs:
//   x-job i      M1 = 1,          M2 = sx[i] + P,   route M1 -> M2
//   y-job i      M1 = 1,          M2 = sy[i] + 2P,  route M2 -> M1
//   t-job i      M1 = t[i] + 3P,  M2 = 2,           route M1 -> M2
// with P = sum(t) + sum(sx) + sum(sy). Both machine loads equal
// L = 2m + 3mP + sum(t). A schedule of makespan L + 1 exists iff the NMTS
// instance is a yes-instance; otherwise the optimum exceeds L + P or no
// schedule exists. Open-shop instances use the same durations, routes free.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shopsched/core_model.hpp"
#include "shopsched/verify.hpp"

namespace shopsched {

inline constexpr std::size_t kNmtsOracleMaxSize = 8;

struct NmtsInstance {
  std::vector<Duration> sx;
  std::vector<Duration> sy;
  std::vector<Duration> t;

  std::size_t size() const noexcept { return t.size(); }
  bool operator==(const NmtsInstance&) const = default;
};

enum class NmtsErrorKind { SizeMismatch, NonPositive, SumMismatch };

class NmtsError : public std::invalid_argument {
 public:
  NmtsError(NmtsErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  NmtsErrorKind kind() const noexcept { return kind_; }

 private:
  NmtsErrorKind kind_;
};

void validate_nmts(const NmtsInstance& nm);

enum class JobRole { X, Y, T };

struct ReductionCertificate {
  Duration P = 0;
  Duration L1 = 0;
  Duration L2 = 0;
  Duration L = 0;
  std::vector<JobRole> roles;
};

struct Reduction {
  ShopInstance shop;
  ReductionCertificate certificate;
};

/// Job order: x-jobs 0..m-1, y-jobs m..2m-1, t-jobs 2m..3m-1.
Reduction nmts_to_j2(const NmtsInstance& nm);
Reduction nmts_to_o2(const NmtsInstance& nm);

/// pairs[i] = (x index, y index) matched to target i.
struct NmtsMatching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

bool is_valid_matching(const NmtsInstance& nm, const NmtsMatching& matching);

/// Tries every assignment of X elements to targets and fills each target's
/// remaining gap from Y. Throws OracleTooLarge for m > 8.
std::optional<NmtsMatching> nmts_brute_force(const NmtsInstance& nm);

/// Reads a makespan-(L+1) schedule back into a matching: each t-job's
/// machine-1 operation sits over exactly one x-job and one y-job on
/// machine 2, and their sizes add up to the target. nullopt when the
/// schedule does not have that shape.
std::optional<NmtsMatching> extract_matching(const NmtsInstance& nm, const Reduction& red,
                                             const ShopSchedule& sched);

}  // namespace shopsched
