#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glc/multigraph.hpp"

namespace glc {

using GraphPtr = std::shared_ptr<const Multigraph>;

inline GraphPtr share(Multigraph g) { return std::make_shared<const Multigraph>(std::move(g)); }

/// Where a domain edge goes: onto a codomain edge, or collapsed to a vertex.
struct EdgeImage {
  enum class Kind { Edge, Vertex };
  Kind kind = Kind::Edge;
  int target = 0;

  static EdgeImage to_edge(EdgeId e) { return {Kind::Edge, e}; }
  static EdgeImage to_vertex(VertexId v) { return {Kind::Vertex, v}; }
  bool collapses() const { return kind == Kind::Vertex; }
  bool operator==(const EdgeImage&) const = default;
};

/// Vertex map plus edge map between two multigraphs. Construction checks
/// totality and incidence preservation; niceness is checked separately.
class GraphMorphism {
 public:
  GraphMorphism(GraphPtr domain, GraphPtr codomain, std::vector<VertexId> vertex_map,
                std::vector<EdgeImage> edge_map);

  static GraphMorphism identity(GraphPtr g);

  const Multigraph& domain() const { return *domain_; }
  const Multigraph& codomain() const { return *codomain_; }
  const GraphPtr& domain_ptr() const { return domain_; }
  const GraphPtr& codomain_ptr() const { return codomain_; }

  VertexId map_vertex(VertexId v) const { return vertex_map_[static_cast<std::size_t>(v)]; }
  const EdgeImage& map_edge(EdgeId e) const { return edge_map_[static_cast<std::size_t>(e)]; }
  const std::vector<VertexId>& vertex_map() const { return vertex_map_; }
  const std::vector<EdgeImage>& edge_map() const { return edge_map_; }

  /// The unique domain edge mapped onto codomain edge e, if exactly one exists.
  std::optional<EdgeId> preimage_edge(EdgeId e) const;
  /// Domain vertices mapped to codomain vertex x, increasing.
  std::vector<VertexId> fibre(VertexId x) const;

 private:
  GraphPtr domain_;
  GraphPtr codomain_;
  std::vector<VertexId> vertex_map_;
  std::vector<EdgeImage> edge_map_;
};

struct NicenessReport {
  bool vertex_surjective = true;
  bool edge_bijective = true;
  bool monotone = true;
  /// Codomain vertex whose fibre is disconnected (first found).
  std::optional<VertexId> disconnected_fibre;
  /// Codomain vertex with empty fibre, or codomain edge with 0 or 2+ preimages.
  std::optional<VertexId> missed_vertex;
  std::optional<EdgeId> bad_edge;

  bool nice() const { return vertex_surjective && edge_bijective && monotone; }
};

/// Surjectivity, monotonicity (connected fibres) and edge bijectivity.
/// Failures are reported, never thrown.
NicenessReport check_nice(const GraphMorphism& m);

struct VertexPartition {
  std::vector<std::vector<VertexId>> blocks;
};

/// Validates disjointness and coverage; returns block index per vertex.
std::vector<int> partition_index(const Multigraph& g, const VertexPartition& p);

struct QuotientOutcome {
  GraphPtr quotient;
  GraphMorphism morphism;
  /// provenance[e] is the input edge that became quotient edge e.
  std::vector<EdgeId> provenance;
};

/// Collapses every block to one vertex. Intra-block edges (and loops) are
/// absorbed; cross-block edges survive in input id order. Throws
/// MultiCutError if a block induces a disconnected subgraph.
QuotientOutcome quotient(const GraphPtr& g, const VertexPartition& p);

}  // namespace glc
