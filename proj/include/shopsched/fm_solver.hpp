#pragma once

#include <optional>

#include "shopsched/core_model.hpp"

namespace shopsched {

/// Dense lexicographic ranks (1-based) of every job's head vector
/// (machines 1..m-1) and tail vector (machines 2..m) among all 2n vectors.
struct VectorRanks {
  std::vector<Duration> head;
  std::vector<Duration> tail;
  std::size_t distinct = 0;
};

VectorRanks vector_ranks(const FlowShopInstance& inst);

/// Cheap necessary condition: for every adjacent machine pair (i, i+1) the
/// multisets of times may differ in at most one element each. Returns the
/// first failing pair index i, or nullopt.
std::optional<std::size_t> first_multiset_violation(const FlowShopInstance& inst);

struct FmOptions {
  /// Reject with ConditionC1Violated when first_multiset_violation() fires,
  /// before building the reduced instance.
  bool multiset_prefilter = false;
};

/// Exact O(mn log n) solver for the m-machine no-idle/no-wait flow shop.
///
/// Ranks replace head/tail vectors, so a chain of the m-machine instance is
/// a chain of the two-machine rank instance. The two-machine solver finds
/// the chain; in the cyclic case the rotation is recomputed here to start at
/// the job minimising the sum over machines 1..m-1, because the rank
/// instance's lexicographic minimum need not minimise that sum.
Solution solve_fm(const FlowShopInstance& inst, const FmOptions& options = {});

}  // namespace shopsched
