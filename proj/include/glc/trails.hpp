#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glc/multigraph.hpp"

namespace glc {

/// v0, e1, v1, ..., em, vm with e_i joining v_{i-1} and v_i.
struct Trail {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool closed() const { return !edges.empty() && vertices.front() == vertices.back(); }
};

/// Empty string when the trail is well formed (incidence, no repeated edge),
/// otherwise the first problem found.
std::string trail_problem(const Multigraph& g, const Trail& t);

/// Connected edge subgraph H containing the required edges F.
struct EulerCover {
  std::vector<EdgeId> subgraph;
  std::vector<EdgeId> required;
  int odd_vertices = 0;
};

struct EulerVerdict {
  bool holds = false;
  std::optional<EulerCover> cover;
  /// A trail traversing every edge of the cover exactly once.
  std::optional<Trail> trail;
  /// How the answer was reached: "whole-graph", "exhaustive", "stitched",
  /// "odd-cut" or "trivial".
  std::string method;
};

/// Every degree even; the witness is an Euler circuit of g.
EulerVerdict is_eulerian(const Multigraph& g);

/// Is there a connected edge subgraph H containing F with no odd vertex?
/// (Equivalently: do the edges of F lie on a common closed trail?)
EulerVerdict check_edges_E(const Multigraph& g, std::span<const EdgeId> required);

/// As check_edges_E, allowing up to two odd vertices (an open trail).
EulerVerdict check_edges_oE(const Multigraph& g, std::span<const EdgeId> required);

/// Euler trail through exactly the edges of `subgraph`, which must be
/// connected with at most two odd vertices. Starts at the lowest odd vertex,
/// or the lowest touched vertex when all are even. An empty subgraph gives
/// the one-vertex trail at vertex 0.
Trail euler_trail(const Multigraph& g, std::span<const EdgeId> subgraph);

struct QuantifierOptions {
  int threads = 1;
  /// Check every size 1..n instead of only the largest.
  bool exhaustive_sizes = false;
};

struct QuantifiedVerdict {
  bool holds = false;
  /// First failing edge set (lexicographic within the failing size).
  std::vector<EdgeId> counterexample;
  std::uint64_t cases = 0;
};

/// Every min(n, |E|) edges lie on a common closed trail.
QuantifiedVerdict is_n_E(const Multigraph& g, int n, const QuantifierOptions& opt = {});
/// Every min(n, |E|) edges lie on a common trail.
QuantifiedVerdict is_n_oE(const Multigraph& g, int n, const QuantifierOptions& opt = {});

using VertexPair = std::pair<VertexId, VertexId>;

/// A trail in K_N minus a matching M through prescribed edges.
struct MatchingTrailRequest {
  int N = 0;
  /// Bound on the number of required edges; N >= 4n + 4 is enforced.
  int n = 0;
  std::vector<VertexPair> matching;
  std::vector<VertexPair> required;
  VertexId from = 0;
  VertexId to = 0;
  /// Closed variant: the trail returns to `from`, and `to` must equal it.
  bool closed = false;
};

/// Greedy stitching in K_N - M: from the current end, reach the next
/// uncovered required edge directly or through the lowest-id common
/// neighbour, cross it, and finally connect to the target the same way.
/// Edge ids refer to complete_graph(N). Returns nullopt only when an
/// exhaustive search confirms no trail exists (possible only below the
/// lemma's range n >= 2). Throws PreconditionError for N < 4n + 4 and
/// InputError for a non-matching M or bad required edges.
std::optional<Trail> complete_matching_trail(const MatchingTrailRequest& req);

/// Empty string when `t` satisfies every postcondition of the request.
std::string matching_trail_problem(const MatchingTrailRequest& req, const Trail& t);

}  // namespace glc
