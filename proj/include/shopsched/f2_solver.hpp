#pragma once

#include "shopsched/core_model.hpp"

namespace shopsched {

/// Exact O(n) solver for the two-machine no-idle/no-wait flow shop.
///
/// Each job becomes an arc p1 -> p2 in a multigraph over processing-time
/// labels; feasible sequences are exactly the Eulerian paths. With one +1/-1
/// vertex pair the path is forced (Case1). With every vertex balanced the
/// path is a circuit (Case2) and it is rotated to start at the lowest-index
/// job with minimum first-machine time, which minimises
/// cmax = p1[first] + sum(p2).
///
/// Throws ValidationError for invalid instances and std::invalid_argument
/// when the instance does not have exactly two machines.
Solution solve_f2(const FlowShopInstance& inst);

}  // namespace shopsched
