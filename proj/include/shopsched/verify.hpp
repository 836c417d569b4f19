#pragma once

// Exhaustive oracles. They enumerate everything and stay deliberately naive;
// every polynomial solver in the library is tested against them.
//
// brute_force_flow and brute_force_shop split the enumeration over the first
// job of the (first-machine) sequence with OpenMP and reduce per branch in a
// fixed order, so results are identical to the serial:: reference versions.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shopsched/cdsdhp.hpp"
#include "shopsched/core_model.hpp"

namespace shopsched {

inline constexpr std::size_t kFlowOracleMaxJobs = 10;
inline constexpr std::size_t kShopOracleMaxJobs = 7;
inline constexpr std::size_t kHamiltonOracleMaxVertices = 10;

class OracleTooLarge : public std::length_error {
 public:
  OracleTooLarge(std::size_t size, std::size_t limit)
      : std::length_error("oracle input of size " + std::to_string(size) +
                          " exceeds the limit of " + std::to_string(limit)),
        size_(size) {}
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_;
};

enum class Route { M1First, M2First, Free };
enum class ShopKind { JobShop, OpenShop };

const char* to_string(Route r);
const char* to_string(ShopKind k);

/// Durations are per machine, whatever the route.
struct ShopJob {
  Duration m1 = 0;
  Duration m2 = 0;
  Route route = Route::M1First;
  bool operator==(const ShopJob&) const = default;
};

struct ShopInstance {
  ShopKind kind = ShopKind::JobShop;
  std::vector<ShopJob> jobs;
  bool operator==(const ShopInstance&) const = default;
};

/// Throws std::invalid_argument: zero durations, Free routes in a job shop,
/// fixed routes in an open shop, or no jobs.
void validate_shop(const ShopInstance& inst);

struct ShopSchedule {
  std::vector<std::size_t> m1_order;
  std::vector<std::size_t> m2_order;
  std::vector<Route> routes;  // resolved: never Free
  std::vector<Duration> m1_start;
  std::vector<Duration> m2_start;
  Duration makespan = 0;
  bool operator==(const ShopSchedule&) const = default;
};

/// Fixed machine orders and resolved routes. No-idle makes each machine one
/// contiguous block, so only the offset between the two block starts is
/// free; every job pins that offset through its no-wait constraint. Returns
/// the schedule when all jobs agree, shifted so the earliest block starts
/// at 0.
std::optional<ShopSchedule> schedule_for_orders(const ShopInstance& inst,
                                                const std::vector<std::size_t>& m1_order,
                                                const std::vector<std::size_t>& m2_order,
                                                const std::vector<Route>& routes);

/// Problems found when replaying `sched` operation by operation: overlap,
/// idle time, waiting, wrong route, wrong makespan. Empty means valid.
std::vector<std::string> replay_shop_schedule(const ShopInstance& inst, const ShopSchedule& sched);

/// Optimal no-idle/no-wait permutation over all n! orders; ties go to the
/// lexicographically smallest sequence. An infeasible answer carries no
/// diagnosis beyond "no order chains": its reason is ConditionC1Violated.
/// Throws OracleTooLarge for n > 10.
Solution brute_force_flow(const FlowShopInstance& inst);

/// Optimal shop schedule over all machine orders (and routes, for open
/// shops); nullopt if none is feasible. Throws OracleTooLarge for n > 7.
std::optional<ShopSchedule> brute_force_shop(const ShopInstance& inst);

/// DFS over vertex orders; first path in lexicographic order. Throws
/// OracleTooLarge for more than 10 vertices.
std::optional<std::vector<std::size_t>> brute_force_hamiltonian(const Digraph& g);

namespace serial {

Solution brute_force_flow(const FlowShopInstance& inst);
std::optional<ShopSchedule> brute_force_shop(const ShopInstance& inst);

}  // namespace serial

}  // namespace shopsched
