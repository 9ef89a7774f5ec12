#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "glc/multigraph.hpp"

namespace glc {

/// Simple-graph adjacency as packed rows (see kernels.hpp). Parallel edges
/// collapse to one bit; loops are dropped since no simple path uses them.
class AdjacencyRows {
 public:
  static constexpr int kMaxVertices = 512;

  AdjacencyRows() = default;
  /// Room for `spare` extra vertices added later with add_vertex().
  AdjacencyRows(const Multigraph& g, int spare);

  int vertex_count() const { return n_; }
  std::size_t words() const { return words_; }
  const std::uint64_t* row(VertexId v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* data() const { return rows_.data(); }

  bool adjacent(VertexId a, VertexId b) const {
    return (row(a)[static_cast<std::size_t>(b) >> 6] >> (b & 63)) & 1U;
  }
  void link(VertexId a, VertexId b);
  void unlink(VertexId a, VertexId b);
  /// Appends an isolated vertex; throws SearchLimitError past the capacity.
  VertexId add_vertex();

  /// Copies rows and size from `base` without reallocating when possible.
  void assign(const AdjacencyRows& base);

 private:
  int n_ = 0;
  int capacity_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct PathQuery {
  /// The path starts at one of these, tried in order.
  std::span<const VertexId> starts;
  /// Every one of these lies on the path.
  std::span<const VertexId> required;
  /// When set, the path ends exactly here; otherwise it ends at the last
  /// required vertex it reaches (or at the start if nothing is required).
  std::optional<VertexId> end;
  /// Vertices the path may not use.
  std::span<const VertexId> forbidden;
};

/// Depth-first backtracking for a simple path (no repeated vertex) meeting
/// the query. Expansion is in increasing vertex id, so the result is
/// deterministic. Prunes when a required vertex (or the end) is no longer
/// reachable from the path's tip through unvisited vertices, when a required
/// vertex has too few unvisited neighbours left, and when a required vertex
/// lies outside every simple path from the tip to the target.
std::optional<std::vector<VertexId>> find_simple_path(const AdjacencyRows& adj, const PathQuery& q);

/// Lowest-id non-loop edge joining a and b, excluding `skip` (or -1).
std::optional<EdgeId> edge_between(const Multigraph& g, VertexId a, VertexId b, EdgeId skip = -1);

}  // namespace glc
