#include "shopsched/euler.hpp"

#include <algorithm>
#include <numeric>

namespace shopsched {

namespace {

struct Endpoint {
  Label label;
  std::size_t slot;  // 2k for the tail of arc k, 2k + 1 for its head
};

// Stable LSD radix sort on the label, skipping digits above the largest
// label. Stability keeps endpoints of equal labels in arc order.
void radix_sort(std::vector<Endpoint>& items) {
  constexpr unsigned kBits = 11;
  constexpr std::size_t kBuckets = std::size_t{1} << kBits;
  Label largest = 0;
  for (const Endpoint& e : items) largest = std::max(largest, e.label);

  std::vector<Endpoint> scratch(items.size());
  std::vector<std::size_t> offset(kBuckets + 1);
  for (unsigned shift = 0; shift < 64 && (largest >> shift) != 0; shift += kBits) {
    std::fill(offset.begin(), offset.end(), 0);
    for (const Endpoint& e : items) ++offset[((e.label >> shift) & (kBuckets - 1)) + 1];
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    for (const Endpoint& e : items) scratch[offset[(e.label >> shift) & (kBuckets - 1)]++] = e;
    items.swap(scratch);
  }
}

}  // namespace

DirectedMultigraph DirectedMultigraph::build(std::span<const std::pair<Label, Label>> pairs) {
  DirectedMultigraph g;
  const std::size_t na = pairs.size();
  std::vector<Endpoint> ends(2 * na);
  for (std::size_t k = 0; k < na; ++k) {
    ends[2 * k] = {pairs[k].first, 2 * k};
    ends[2 * k + 1] = {pairs[k].second, 2 * k + 1};
  }
  radix_sort(ends);

  // One sweep over the sorted endpoints assigns ranks and, because tails of
  // one label appear in arc order, yields the CSR out-lists directly.
  std::vector<VertexId> vertex(2 * na);
  g.out_begin_.push_back(0);
  g.out_index_.reserve(na);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (i == 0 || ends[i].label != ends[i - 1].label) {
      if (i > 0) g.out_begin_.push_back(g.out_index_.size());
      g.labels_.push_back(ends[i].label);
    }
    vertex[ends[i].slot] = static_cast<VertexId>(g.labels_.size() - 1);
    if (ends[i].slot % 2 == 0) g.out_index_.push_back(ends[i].slot / 2);
  }
  if (na > 0) g.out_begin_.push_back(g.out_index_.size());

  g.arcs_.resize(na);
  for (std::size_t k = 0; k < na; ++k) g.arcs_[k] = {vertex[2 * k], vertex[2 * k + 1], k};
  g.out_head_.resize(na);
  for (std::size_t i = 0; i < na; ++i) g.out_head_[i] = vertex[2 * g.out_index_[i] + 1];
  return g;
}

std::optional<VertexId> DirectedMultigraph::vertex_of(Label label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

DegreeSummary degree_summary(const DirectedMultigraph& g) {
  const std::size_t nv = g.vertex_count();
  DegreeSummary d;
  d.out_degree.assign(nv, 0);
  d.in_degree.assign(nv, 0);
  d.imbalance.assign(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto heads = g.out_heads(static_cast<VertexId>(v));
    d.out_degree[v] = heads.size();
    for (VertexId h : heads) ++d.in_degree[h];
  }
  for (std::size_t v = 0; v < nv; ++v) {
    d.imbalance[v] =
        static_cast<std::int64_t>(d.out_degree[v]) - static_cast<std::int64_t>(d.in_degree[v]);
    if (d.imbalance[v] != 0) d.unbalanced.push_back(static_cast<VertexId>(v));
  }
  return d;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace

bool is_weakly_connected(const DirectedMultigraph& g) {
  const std::size_t nv = g.vertex_count();
  if (nv <= 1) return true;
  DisjointSets sets(nv);
  std::size_t components = nv;
  for (VertexId v = 0; v < nv; ++v) {
    for (VertexId h : g.out_heads(v)) {
      if (sets.unite(v, h)) --components;
    }
  }
  return components == 1;
}

const char* to_string(PathFailure f) {
  switch (f) {
    case PathFailure::DegreeImbalance:
      return "DegreeImbalance";
    case PathFailure::Disconnected:
      return "Disconnected";
    case PathFailure::WrongStart:
      return "WrongStart";
  }
  return "Unknown";
}

StartRule start_rule(const DegreeSummary& deg) {
  if (deg.unbalanced.empty()) return {std::nullopt, true};
  if (deg.unbalanced.size() == 2) {
    const VertexId a = deg.unbalanced[0];
    const VertexId b = deg.unbalanced[1];
    if (deg.imbalance[a] == 1 && deg.imbalance[b] == -1) return {a, true};
    if (deg.imbalance[b] == 1 && deg.imbalance[a] == -1) return {b, true};
  }
  return {std::nullopt, false};
}

EulerResult eulerian_path(const DirectedMultigraph& g, VertexId start) {
  EulerResult result;
  const DegreeSummary deg = degree_summary(g);
  const StartRule rule = start_rule(deg);
  if (!rule.degrees_ok) {
    result.failure = PathFailure::DegreeImbalance;
    return result;
  }
  if (start >= g.vertex_count() || deg.out_degree[start] == 0 ||
      (rule.forced_start && *rule.forced_start != start)) {
    result.failure = PathFailure::WrongStart;
    return result;
  }
  if (!is_weakly_connected(g)) {
    result.failure = PathFailure::Disconnected;
    return result;
  }

  constexpr std::size_t kNoArc = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  // (vertex reached, arc used to reach it)
  std::vector<std::pair<VertexId, std::size_t>> stack;
  stack.reserve(g.arc_count() + 1);
  stack.emplace_back(start, kNoArc);
  std::vector<std::size_t> reversed;
  reversed.reserve(g.arc_count());

  while (!stack.empty()) {
    const VertexId v = stack.back().first;
    const auto out = g.out_arcs(v);
    if (cursor[v] < out.size()) {
      const std::size_t k = cursor[v]++;
      stack.emplace_back(g.out_heads(v)[k], out[k]);
    } else {
      if (stack.back().second != kNoArc) reversed.push_back(stack.back().second);
      stack.pop_back();
    }
  }

  // Payload k belongs to arc k, so arc indices are the payloads.
  result.payloads.assign(reversed.rbegin(), reversed.rend());
  return result;
}

}  // namespace shopsched
