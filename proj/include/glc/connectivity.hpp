#pragma once

#include <optional>
#include <vector>

#include "glc/multigraph.hpp"

namespace glc {

struct EdgeConnectivity {
  int value = 0;
  /// A minimum v-w edge cut, increasing edge ids.
  std::vector<EdgeId> min_cut;
  /// The side of that cut containing v.
  std::vector<VertexId> source_side;
  /// `value` pairwise edge-disjoint v-w paths, each as an edge sequence from v.
  std::vector<std::vector<EdgeId>> paths;
};

/// Unit-capacity max-flow between v and w; parallel edges count separately
/// and loops are ignored. Throws InputError when v == w or ids are unknown.
EdgeConnectivity edge_connectivity(const Multigraph& g, VertexId v, VertexId w);

/// Value only; stops augmenting once `cap` is reached (cap < 0: no cap).
int edge_connectivity_value(const Multigraph& g, VertexId v, VertexId w, int cap = -1);

struct PairConnectivity {
  VertexId v = 0;
  VertexId w = 0;
  int value = 0;
};

struct Spectrum {
  /// Distinct pairwise values, increasing.
  std::vector<int> values;
  /// Level the values were computed at (1 for a lone graph).
  int depth = 1;
  /// stability_window[i]: consecutive levels, ending at `depth`, whose
  /// spectrum contains values[i].
  std::vector<int> stability_window;
};

struct SpectrumTable {
  Spectrum spectrum;
  /// Every pair v < w in lexicographic order.
  std::vector<PairConnectivity> pairs;
};

/// All pairwise edge connectivities. Requires a connected graph with at least
/// two vertices.
SpectrumTable spectrum(const Multigraph& g, int threads = 1);

/// Vertices whose deletion disconnects the remaining graph.
std::vector<VertexId> cut_points(const Multigraph& g);

/// Points of the graph viewed as a 1-complex whose removal disconnects it.
/// This differs from cut_points when loops or bridges are present: a vertex
/// carrying a loop separates the loop's interior from the rest, and interior
/// points of a non-loop bridge are cut points too.
struct TopologicalCutPoints {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> bridges;
  bool empty() const { return vertices.empty() && bridges.empty(); }
};
TopologicalCutPoints topological_cut_points(const Multigraph& g);

/// Non-loop edges whose removal disconnects their endpoints.
std::vector<EdgeId> bridges(const Multigraph& g);

struct KCutting {
  std::vector<VertexId> separator;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
  bool nontrivial = false;
};

struct KConnectivityVerdict {
  bool holds = false;
  std::optional<KCutting> cutting;
};

/// True iff no set of fewer than k vertices disconnects g. Decided with
/// vertex-disjoint path flows from each of k fixed vertices; a failure comes
/// with the minimum separator found. Throws InputError when |V| < k or k < 1.
KConnectivityVerdict is_k_connected(const Multigraph& g, int k);

struct ToughnessVerdict {
  bool holds = false;
  std::vector<VertexId> violating_set;
  int components = 0;
};

/// (k,n)-toughness: every S with 1 <= |S| <= n leaves at most |S|/k
/// components. Subsets are enumerated by size, then lexicographically, so
/// the counterexample is the first such S.
ToughnessVerdict is_tough(const Multigraph& g, int k, int n);

}  // namespace glc
