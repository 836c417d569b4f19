#pragma once

// Hamiltonian paths on digraphs where any two vertices have either identical
// or disjoint successor sets. Such graphs map onto two-machine no-idle/no-wait
// flow shops, so the path comes out of the linear-time F2 solver.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shopsched/core_model.hpp"
#include "shopsched/dominoes.hpp"

namespace shopsched {

/// Simple digraph on vertices 0..V-1; self-loops allowed, parallel arcs
/// collapse. Successor and predecessor lists are sorted.
class Digraph {
 public:
  Digraph() = default;
  /// Throws std::out_of_range for endpoints >= vertex_count.
  Digraph(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> arcs);

  std::size_t vertex_count() const noexcept { return succ_.size(); }
  const std::vector<std::size_t>& successors(std::size_t v) const { return succ_[v]; }
  const std::vector<std::size_t>& predecessors(std::size_t v) const { return pred_[v]; }
  bool has_arc(std::size_t from, std::size_t to) const;
  std::size_t arc_count() const noexcept;

 private:
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
};

class SuccessorPropertyError : public std::invalid_argument {
 public:
  SuccessorPropertyError(std::size_t a, std::size_t b);
  std::pair<std::size_t, std::size_t> pair() const noexcept { return {a_, b_}; }

 private:
  std::size_t a_;
  std::size_t b_;
};

/// First pair (a, b), a < b in index order, whose successor sets overlap
/// without being equal; nullopt when the property holds.
std::optional<std::pair<std::size_t, std::size_t>> check_successor_property(const Digraph& g);

/// Label generation: one job per vertex, fresh labels from a counter starting
/// at 1, vertices visited in ascending index order. After labelling v_k,
/// successors take p1 = p2(v_k), predecessors take p2 = p1(v_k), vertices
/// sharing a successor with v_k take its p2 and vertices sharing a
/// predecessor take its p1. Guarantees arc (i -> j) implies p2[i] == p1[j].
///
/// Throws SuccessorPropertyError if the property fails and
/// std::invalid_argument for an empty graph.
FlowShopInstance generate_f2_from_digraph(const Digraph& g);

/// Vertex order of a Hamiltonian path, or nullopt if none exists. Same
/// errors as generate_f2_from_digraph().
std::optional<std::vector<std::size_t>> hamiltonian_path(const Digraph& g);

/// Vertex per tile, arc i -> j (including i == j) when tile i's right symbol
/// equals tile j's left symbol. The result always has the successor property.
Digraph digraph_from_tiles(std::span<const OrientedTile> tiles);

/// Simple, covering and arc-respecting.
bool is_hamiltonian_path(const Digraph& g, std::span<const std::size_t> path);

}  // namespace shopsched
