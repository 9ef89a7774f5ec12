#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace glc {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Finite multigraph with dense vertex ids 0..n-1 and dense edge ids 0..m-1.
/// Loops and parallel edges are allowed. Immutable after construction.
class Multigraph {
 public:
  Multigraph() = default;
  /// Edge i joins endpoints[i]. Throws InputError on an undeclared endpoint.
  Multigraph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& endpoints);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count_; }
  bool has_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Edges incident to v in increasing id order; a loop is listed once.
  std::span<const EdgeId> incident(VertexId v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }

  /// Incidence count at v; a loop contributes 2. Unchecked.
  int degree_unchecked(VertexId v) const { return degree_[static_cast<std::size_t>(v)]; }

  int loop_count(VertexId v) const;

  /// Connected as a topological space: every vertex reachable from vertex 0.
  /// The empty graph is not connected; a single vertex is.
  bool is_connected() const;

  bool operator==(const Multigraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<int> degree_;
};

/// K_n with edge (i, j), i < j, in lexicographic order.
Multigraph complete_graph(int n);

/// Id of edge {i, j} in complete_graph(n).
EdgeId complete_edge_id(int n, VertexId i, VertexId j);

/// Checked degree; throws InputError for an unknown vertex.
int degree(const Multigraph& g, VertexId v);

/// Throws InputError unless g is connected.
void require_connected(const Multigraph& g, const char* what);

struct EdgeCut {
  std::vector<VertexId> source_side;
  std::vector<EdgeId> cut_edges;
};

/// The edge cut between A and its complement. A must be a proper nonempty subset.
EdgeCut boundary_cut(const Multigraph& g, std::span<const VertexId> side);

/// Size of the cut between A and its complement; 0 for empty or full A.
int cut_size(const Multigraph& g, std::span<const VertexId> side);

struct SubmodularityReport {
  int cut_a = 0;
  int cut_b = 0;
  int cut_intersection = 0;
  int cut_union = 0;
  int cut_a_minus_b = 0;
  int cut_b_minus_a = 0;
  bool pass = false;
};

/// Checks |dA| + |dB| >= max(|d(A&B)| + |d(A|B)|, |d(A\B)| + |d(B\A)|).
SubmodularityReport check_submodularity(const Multigraph& g, std::span<const VertexId> a,
                                        std::span<const VertexId> b);

struct Subdivision {
  Multigraph graph;
  /// Fresh vertices in path order from the edge's u end to its v end.
  std::vector<VertexId> inserted;
  /// For every edge of the new graph, the edge of the input it came from.
  std::vector<EdgeId> edge_origin;
};

/// Replaces edge e by a path with `times` (1 or 2) fresh interior vertices.
/// The first new edge reuses e's id; other ids are appended.
Subdivision subdivide_edge(const Multigraph& g, EdgeId e, int times);

struct GlueOutcome {
  Multigraph graph;
  /// vertex_maps[c][v] is the glued vertex of vertex v of copy c.
  std::vector<std::vector<VertexId>> vertex_maps;
  /// The vertex each identification class collapsed to.
  std::vector<VertexId> class_vertices;
};

/// One member of an identification class: vertex `vertex` of copy `copy`.
struct GlueMember {
  int copy = 0;
  VertexId vertex = 0;
};

/// Disjoint union of the copies with each class identified to one vertex.
GlueOutcome glue(std::span<const Multigraph> copies,
                 const std::vector<std::vector<GlueMember>>& classes);

/// Vertex-induced component count of g minus the vertices flagged in `removed`.
int component_count_without(const Multigraph& g, const std::vector<char>& removed);

/// Component labels (0..k-1) of g minus the flagged vertices; removed
/// vertices get -1.
std::vector<int> component_labels(const Multigraph& g, const std::vector<char>& removed);

/// Converts a vertex list into a membership mask, validating ids.
std::vector<char> vertex_mask(const Multigraph& g, std::span<const VertexId> vertices);

}  // namespace glc
