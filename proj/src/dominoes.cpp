#include "shopsched/dominoes.hpp"

#include <stdexcept>
#include <unordered_map>

namespace shopsched {

DominoChain solve_ospd(std::span<const OrientedTile> tiles) {
  if (tiles.empty()) throw std::invalid_argument("no tiles to chain");

  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(tiles.size());
  for (const OrientedTile& t : tiles) pairs.emplace_back(t.left, t.right);
  const DirectedMultigraph g = DirectedMultigraph::build(pairs);

  const StartRule rule = start_rule(degree_summary(g));
  DominoChain chain;
  if (!rule.degrees_ok) {
    chain.failure = PathFailure::DegreeImbalance;
    return chain;
  }
  // Balanced graphs accept any start; take the first tile's left symbol.
  const VertexId start = rule.forced_start.value_or(g.arcs().front().tail);
  EulerResult path = eulerian_path(g, start);
  if (!path) {
    chain.failure = path.failure;
    return chain;
  }
  chain.tile_ids.reserve(path.payloads.size());
  for (std::size_t k : path.payloads) chain.tile_ids.push_back(tiles[k].id);
  return chain;
}

bool is_valid_chain(std::span<const OrientedTile> tiles, std::span<const std::size_t> chain) {
  if (chain.size() != tiles.size()) return false;
  std::unordered_map<std::size_t, const OrientedTile*> by_id;
  for (const OrientedTile& t : tiles) by_id.emplace(t.id, &t);
  std::unordered_map<std::size_t, bool> used;
  const OrientedTile* prev = nullptr;
  for (std::size_t id : chain) {
    auto it = by_id.find(id);
    if (it == by_id.end() || used[id]) return false;
    used[id] = true;
    if (prev != nullptr && prev->right != it->second->left) return false;
    prev = it->second;
  }
  return true;
}

}  // namespace shopsched
