#pragma once

// Oriented single-player dominoes: lay every tile in one chain where each
// tile's right symbol equals the next tile's left symbol. Tiles may not be
// flipped.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shopsched/euler.hpp"

namespace shopsched {

struct OrientedTile {
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  std::size_t id = 0;
};

struct DominoChain {
  std::vector<std::size_t> tile_ids;  // empty on failure
  std::optional<PathFailure> failure;  // DegreeImbalance or Disconnected

  explicit operator bool() const noexcept { return !failure.has_value(); }
};

/// Throws std::invalid_argument on an empty tile list.
DominoChain solve_ospd(std::span<const OrientedTile> tiles);

/// True iff every junction matches and each tile id appears exactly once.
bool is_valid_chain(std::span<const OrientedTile> tiles, std::span<const std::size_t> chain);

}  // namespace shopsched
