#pragma once

// Brute-force reference implementations. Each one enumerates the definition
// directly and is only meant for graphs with a handful of vertices and edges.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "glc/certifier.hpp"
#include "glc/multigraph.hpp"

namespace glc::oracle {

/// Random multigraph with loops and parallel edges; connected when asked
/// (a random spanning tree first, then extra edges).
Multigraph random_multigraph(std::mt19937_64& rng, int vertices, int edges, bool connected, bool loops = true);

/// Minimum boundary over all vertex sets containing v but not w.
int edge_connectivity(const Multigraph& g, VertexId v, VertexId w);

/// Some trail (closed when `closed`) uses every edge of F. Enumerates all
/// edge-simple walks.
bool trail_covers(const Multigraph& g, std::span<const EdgeId> f, bool closed);

/// Every k-subset of edges, k = min(n, |E|), lies on a closed / any trail.
bool is_n_E(const Multigraph& g, int n);
bool is_n_oE(const Multigraph& g, int n);

/// Some simple cycle contains every edge of F (a loop is a cycle).
bool cycle_covers(const Multigraph& g, std::span<const EdgeId> f);

/// Some simple path of g hits every vertex in `required`; with anchors it
/// must start at one of them.
bool path_covers(const Multigraph& g, std::span<const VertexId> required, std::span<const VertexId> anchors);

/// Arc through the placed points, via the subdivided graph.
bool arc_covers(const Multigraph& g, const Placement& p, std::span<const VertexId> anchors = {});

/// Subset enumeration of (k, n)-toughness.
bool is_tough(const Multigraph& g, int k, int n);

/// No vertex set of size < k separates g (complete graphs: |V| > k - 1).
bool is_k_connected(const Multigraph& g, int k);

/// Vertices whose deletion leaves more components than before.
std::vector<VertexId> cut_vertices(const Multigraph& g);

/// Is there a trail from `from` to `to` (closed when equal and `closed`)
/// in K_N minus the matching that uses every required edge?
bool complete_trail_exists(int N, std::span<const std::pair<VertexId, VertexId>> matching,
                           std::span<const std::pair<VertexId, VertexId>> required, VertexId from, VertexId to);

}  // namespace glc::oracle
