#include "shopsched/cdsdhp.hpp"

#include <algorithm>
#include <string>

#include "shopsched/f2_solver.hpp"

namespace shopsched {

Digraph::Digraph(std::size_t vertex_count,
                 std::span<const std::pair<std::size_t, std::size_t>> arcs)
    : succ_(vertex_count), pred_(vertex_count) {
  for (const auto& [from, to] : arcs) {
    if (from >= vertex_count || to >= vertex_count) {
      throw std::out_of_range("arc endpoint outside the vertex range");
    }
    succ_[from].push_back(to);
    pred_[to].push_back(from);
  }
  for (auto* lists : {&succ_, &pred_}) {
    for (auto& l : *lists) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  }
}

bool Digraph::has_arc(std::size_t from, std::size_t to) const {
  return std::binary_search(succ_[from].begin(), succ_[from].end(), to);
}

std::size_t Digraph::arc_count() const noexcept {
  std::size_t total = 0;
  for (const auto& s : succ_) total += s.size();
  return total;
}

SuccessorPropertyError::SuccessorPropertyError(std::size_t a, std::size_t b)
    : std::invalid_argument("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                            " share some but not all successors"),
      a_(a),
      b_(b) {}

std::optional<std::pair<std::size_t, std::size_t>> check_successor_property(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t a = 0; a < n; ++a) {
    const auto& sa = g.successors(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& sb = g.successors(b);
      if (sa == sb) continue;
      std::vector<std::size_t> common;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::back_inserter(common));
      if (!common.empty()) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

FlowShopInstance generate_f2_from_digraph(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("digraph has no vertices");
  if (auto bad = check_successor_property(g)) {
    throw SuccessorPropertyError(bad->first, bad->second);
  }

  std::vector<std::optional<Duration>> p1(n);
  std::vector<std::optional<Duration>> p2(n);
  Duration count = 1;

  for (std::size_t k = 0; k < n; ++k) {
    if (p1[k] && p2[k]) continue;
    if (g.has_arc(k, k)) {
      p1[k] = p2[k] = count;
      count += 1;
    } else if (!p1[k] && !p2[k]) {
      p1[k] = count;
      p2[k] = count + 1;
      count += 2;
    } else if (!p1[k]) {
      p1[k] = count;
      count += 1;
    } else {
      p2[k] = count;
      count += 1;
    }

    for (std::size_t j : g.successors(k)) p1[j] = p2[k];
    for (std::size_t j : g.predecessors(k)) p2[j] = p1[k];
    // Vertices sharing a successor with k are exactly the predecessors of
    // k's successors; symmetrically for shared predecessors.
    for (std::size_t s : g.successors(k)) {
      for (std::size_t j : g.predecessors(s)) p2[j] = p2[k];
    }
    for (std::size_t q : g.predecessors(k)) {
      for (std::size_t j : g.successors(q)) p1[j] = p1[k];
    }
  }

  std::vector<std::vector<Duration>> rows(2, std::vector<Duration>(n));
  for (std::size_t j = 0; j < n; ++j) {
    rows[0][j] = *p1[j];
    rows[1][j] = *p2[j];
  }
  return FlowShopInstance(std::move(rows));
}

std::optional<std::vector<std::size_t>> hamiltonian_path(const Digraph& g) {
  const Solution sol = solve_f2(generate_f2_from_digraph(g));
  if (!sol.feasible()) return std::nullopt;
  return sol.schedule().sequence.order;
}

Digraph digraph_from_tiles(std::span<const OrientedTile> tiles) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    for (std::size_t j = 0; j < tiles.size(); ++j) {
      if (tiles[i].right == tiles[j].left) arcs.emplace_back(i, j);
    }
  }
  return Digraph(tiles.size(), arcs);
}

bool is_hamiltonian_path(const Digraph& g, std::span<const std::size_t> path) {
  const std::size_t n = g.vertex_count();
  if (path.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < path.size(); ++k) {
    const std::size_t v = path[k];
    if (v >= n || seen[v]) return false;
    seen[v] = true;
    if (k > 0 && !g.has_arc(path[k - 1], v)) return false;
  }
  return true;
}

}  // namespace shopsched
