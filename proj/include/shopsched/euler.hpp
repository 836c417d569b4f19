#pragma once

// Directed multigraphs over integer labels and Eulerian paths through them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace shopsched {

using Label = std::uint64_t;
using VertexId = std::uint32_t;

struct Arc {
  VertexId tail;
  VertexId head;
  std::size_t payload;
};

/// Vertex ids are the ranks of the distinct labels in ascending order; arc k
/// carries payload k. Out-arcs of a vertex are kept in insertion order.
class DirectedMultigraph {
 public:
  /// One arc per pair, tail = first label, head = second label.
  static DirectedMultigraph build(std::span<const std::pair<Label, Label>> pairs);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  Label label(VertexId v) const { return labels_[v]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::optional<VertexId> vertex_of(Label label) const;

  /// Indices into arcs() of the arcs leaving v, in insertion order.
  std::span<const std::size_t> out_arcs(VertexId v) const {
    return {out_index_.data() + out_begin_[v], out_begin_[v + 1] - out_begin_[v]};
  }
  /// Heads of out_arcs(v), same order.
  std::span<const VertexId> out_heads(VertexId v) const {
    return {out_head_.data() + out_begin_[v], out_begin_[v + 1] - out_begin_[v]};
  }

 private:
  std::vector<Label> labels_;  // ascending
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_begin_;  // CSR offsets, size vertex_count() + 1
  std::vector<std::size_t> out_index_;
  std::vector<VertexId> out_head_;
};

struct DegreeSummary {
  std::vector<std::size_t> out_degree;
  std::vector<std::size_t> in_degree;
  std::vector<std::int64_t> imbalance;  // out - in
  std::vector<VertexId> unbalanced;     // ascending vertex id
};

DegreeSummary degree_summary(const DirectedMultigraph& g);

/// True iff all vertices lie in one component when arc directions are
/// ignored. Every vertex of a built graph touches at least one arc.
bool is_weakly_connected(const DirectedMultigraph& g);

enum class PathFailure { DegreeImbalance, Disconnected, WrongStart };

const char* to_string(PathFailure f);

struct EulerResult {
  std::vector<std::size_t> payloads;  // empty on failure
  std::optional<PathFailure> failure;

  explicit operator bool() const noexcept { return !failure.has_value(); }
};

/// Where an Eulerian path must start, if one can exist on degree grounds:
/// the +1 vertex when exactly one +1/-1 pair is unbalanced, nullopt when
/// the graph is balanced (any vertex works), DegreeImbalance otherwise.
struct StartRule {
  std::optional<VertexId> forced_start;
  bool degrees_ok = false;
};

StartRule start_rule(const DegreeSummary& deg);

/// Hierholzer's algorithm with per-vertex arc cursors; O(V + A).
EulerResult eulerian_path(const DirectedMultigraph& g, VertexId start);

}  // namespace shopsched
