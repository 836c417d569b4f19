#pragma once

// Random instance generators shared by the unit and acceptance tests. All of
// them take the engine by reference so a fixed seed reproduces a whole run.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "shopsched/cdsdhp.hpp"
#include "shopsched/core_model.hpp"
#include "shopsched/verify.hpp"

namespace testgen {

using Rng = std::mt19937_64;
using shopsched::Duration;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline shopsched::FlowShopInstance random_instance(Rng& rng, std::size_t m, std::size_t n,
                                                   Duration hi) {
  std::vector<std::vector<Duration>> rows(m, std::vector<Duration>(n));
  for (auto& row : rows)
    for (auto& v : row) v = uniform(rng, 1, hi);
  return shopsched::FlowShopInstance(std::move(rows));
}

/// A feasible chain presented in shuffled job order. Job k of the hidden
/// chain has p[i][k] = a[k + i], so its tail vector is the next job's head
/// vector. With `cyclic` the sequence a is periodic and the chain closes.
inline shopsched::FlowShopInstance chain_instance(Rng& rng, std::size_t m, std::size_t n,
                                                  Duration hi, bool cyclic) {
  std::vector<Duration> a(n + m - 1);
  for (auto& v : a) v = uniform(rng, 1, hi);
  if (cyclic) {
    for (std::size_t k = n; k < a.size(); ++k) a[k] = a[k % n];
  }
  std::vector<std::size_t> column(n);
  std::iota(column.begin(), column.end(), std::size_t{0});
  std::shuffle(column.begin(), column.end(), rng);
  std::vector<std::vector<Duration>> rows(m, std::vector<Duration>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < m; ++i) rows[i][column[k]] = a[k + i];
  return shopsched::FlowShopInstance(std::move(rows));
}

/// Every vertex gets a class c(v) and at most one target class t(u); arc
/// v -> u exists iff t(u) == c(v). Vertices of one class share a successor
/// set and different classes have disjoint ones, so the successor property
/// holds. Every such digraph arises this way.
inline shopsched::Digraph property_digraph(Rng& rng, std::size_t vertices) {
  const std::size_t classes = uniform(rng, 1, vertices);
  std::vector<std::size_t> cls(vertices);
  std::vector<std::size_t> target(vertices);
  for (auto& c : cls) c = uniform(rng, 0, classes - 1);
  // `classes` means "no target"; weighted so most vertices have predecessors.
  for (auto& t : target) t = uniform(rng, 0, 4) == 0 ? classes : uniform(rng, 0, classes - 1);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t v = 0; v < vertices; ++v)
    for (std::size_t u = 0; u < vertices; ++u)
      if (target[u] == cls[v]) arcs.emplace_back(v, u);
  return shopsched::Digraph(vertices, arcs);
}

inline shopsched::Digraph random_digraph(Rng& rng, std::size_t vertices, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t v = 0; v < vertices; ++v)
    for (std::size_t u = 0; u < vertices; ++u)
      if (coin(rng)) arcs.emplace_back(v, u);
  return shopsched::Digraph(vertices, arcs);
}

inline shopsched::ShopInstance random_shop(Rng& rng, shopsched::ShopKind kind, std::size_t n,
                                           Duration hi) {
  shopsched::ShopInstance shop{kind, {}};
  for (std::size_t j = 0; j < n; ++j) {
    shopsched::Route route = shopsched::Route::Free;
    if (kind == shopsched::ShopKind::JobShop) {
      route = uniform(rng, 0, 1) == 0 ? shopsched::Route::M1First : shopsched::Route::M2First;
    }
    shop.jobs.push_back({uniform(rng, 1, hi), uniform(rng, 1, hi), route});
  }
  return shop;
}

/// p_{m-1..} tail vector of job j equals the head vector of job k.
inline bool chains(const shopsched::FlowShopInstance& inst, std::size_t j, std::size_t k) {
  for (std::size_t i = 0; i + 1 < inst.machines(); ++i)
    if (inst.time(i + 1, j) != inst.time(i, k)) return false;
  return true;
}

}  // namespace testgen
