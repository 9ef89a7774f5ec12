#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glc/connectivity.hpp"
#include "glc/multigraph.hpp"
#include "glc/trails.hpp"

namespace glc {

struct Tower;

/// Points in edge interiors: `multiplicity` (1 or 2) distinct points on `edge`.
struct PlacementItem {
  EdgeId edge = 0;
  int multiplicity = 1;
  bool operator==(const PlacementItem&) const = default;
};

struct Placement {
  std::vector<PlacementItem> items;

  int total() const;
  bool operator==(const Placement&) const = default;
};

/// Throws InputError for unknown or repeated edges, multiplicities outside
/// {1, 2}, or an empty placement.
void validate_placement(const Multigraph& g, const Placement& p);

/// g with each placed edge subdivided in placement order (subdivide_edge).
struct SubdividedGraph {
  Multigraph graph;
  /// inserted[i]: the fresh vertices for items[i], from the edge's u end.
  std::vector<std::vector<VertexId>> inserted;
  /// Original edge of every edge of `graph`.
  std::vector<EdgeId> edge_origin;
};
SubdividedGraph subdivide_placement(const Multigraph& g, const Placement& p);

struct ArcWitness {
  SubdividedGraph subdivided;
  /// A simple path in subdivided.graph through every inserted vertex.
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

struct ArcVerdict {
  bool holds = false;
  std::optional<ArcWitness> witness;
};

/// Is there an arc through all placed points? With anchors, one end of the
/// arc must be an anchor vertex. The arc returned runs from its start to the
/// last placed point it meets.
ArcVerdict arc_through(const Multigraph& g, const Placement& p, std::span<const VertexId> anchors = {});

/// Independent re-validation of an arc witness; empty string when valid.
std::string arc_witness_problem(const Multigraph& g, const Placement& p, std::span<const VertexId> anchors,
                                const ArcWitness& w);

struct CycleVerdict {
  bool holds = false;
  /// A closed trail with no repeated vertex through every edge of F.
  std::optional<Trail> witness;
};

/// Is there a simple cycle containing every edge of F? A loop is a cycle on
/// its own, so F containing a loop succeeds only when F is that loop.
CycleVerdict cycle_through(const Multigraph& g, std::span<const EdgeId> required);

/// Independent re-validation of a cycle witness; empty string when valid.
std::string cycle_witness_problem(const Multigraph& g, std::span<const EdgeId> required, const Trail& cycle);

struct CertifierOptions {
  int threads = 1;
  bool exhaustive_sizes = false;
  /// Anchor set for is_n_ac (empty: unanchored).
  std::vector<VertexId> anchors;
};

struct AcVerdict {
  bool holds = false;
  std::optional<Placement> counterexample;
  std::uint64_t cases = 0;
};

/// Every placement of min(n, 2|E|) points (at most two per edge) lies on an arc.
AcVerdict is_n_ac(const Multigraph& g, int n, const CertifierOptions& opt = {});

/// Every min(n, |E|) edges lie on a common simple cycle.
QuantifiedVerdict is_n_cc(const Multigraph& g, int n, const CertifierOptions& opt = {});

struct NecessaryCheck {
  int level = 0;
  /// "tough(1,n-1)", "n-E" or "n-oE" with n substituted.
  std::string property;
  /// "cc" or "ac": the property of the limit this check bears on.
  std::string target;
  /// "pass", "fail" or "skipped".
  std::string status;
  std::vector<EdgeId> witness_edges;
  std::vector<VertexId> witness_vertices;
  int components = 0;
};

struct NecessaryReport {
  int n = 0;
  std::vector<NecessaryCheck> checks;
  bool limit_not_cc = false;
  bool limit_not_ac = false;
  std::vector<std::string> conclusions;
};

struct NecessaryOptions {
  bool check_cc = true;
  bool check_ac = true;
  int threads = 1;
};

/// Level by level: (1, n-1)-toughness and n-E bear on n-cc, n-oE on n-ac.
/// A failure at any level certifies the limit lacks the property; the
/// remaining checks for that target are then skipped.
NecessaryReport necessary_report(const Tower& t, int n, const NecessaryOptions& opt = {});

struct TwoCcReport {
  bool two_cc = false;
  std::vector<EdgeId> counterexample;
  /// Graph-theoretic cut vertices (deletion of the vertex).
  std::vector<VertexId> cut_vertices;
  TopologicalCutPoints cut_points;
  bool agree = false;
};

/// 2-cc versus absence of cut points of the 1-complex. Throws
/// ConsistencyError when the two disagree.
TwoCcReport is_2cc_equiv_report(const Multigraph& g);

}  // namespace glc
