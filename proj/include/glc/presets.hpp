#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "glc/multigraph.hpp"
#include "glc/tower.hpp"

namespace glc {

/// The 16-vertex test graph of the arc-through-four-points computation,
/// with edges ordered "for a, for b in adjacency[a], if a < b".
Multigraph appendix_F();
/// The 21 edges not incident with the vertex at infinity (15).
std::vector<EdgeId> appendix_eligible_edges(const Multigraph& f);
/// Arc start vertices: infinity and vertex 1.
std::vector<VertexId> appendix_anchors();

/// Vertex id of ladder vertex (m, j), m in {0, 1}, j in [-n, n].
inline VertexId ladder_id(int n, int m, int j) { return (j + n) * 2 + m; }

/// {0,1} x [-n, n] window of the double ladder.
Multigraph ladder_window(int n);

/// Window of the ladder with the rung-free modification: edge (0,0)-(0,1)
/// removed, (0,-2)-(0,-3) and (0,3)-(0,4) subdivided by a and b, plus the
/// edges a-(0,0) and (0,1)-b. Needs n >= 4. a and b get the two ids after
/// the ladder vertices.
Multigraph graph_C_window(int n);

struct AlphaAuxiliary {
  Multigraph graph;
  /// Offset of the modified copy's vertex ids.
  int second_offset = 0;
  EdgeId e = 0;
  EdgeId f_plus = 0;
  EdgeId f_minus = 0;
  EdgeId g_plus = 0;
  EdgeId g_minus = 0;
  /// Vertices of the upper half of the modified copy, including b.
  std::vector<VertexId> upper_half;
};

/// Ladder window G1 next to the modified window G2, joined by f+, f-, g+, g-
/// between the copies of (0,n), (0,-n), (1,n), (1,-n). Needs n >= 5.
AlphaAuxiliary alpha_auxiliary_detail(int n);
Multigraph alpha_auxiliary(int n);

/// n odd: v1-w1, n-1 parallel edges w1-w2, w2-v2.
Multigraph base_n_ac_odd(int n);
/// n even: n-1 parallel edges w1-w2, v1-w1 and v2-w1.
Multigraph base_n_ac_even(int n);
/// n even: theta(n + 1).
Multigraph base_n_cc_even(int n);
/// Two vertices joined by k parallel edges.
Multigraph theta(int k);
/// One vertex with two loops.
Multigraph figure_eight();
/// One vertex with one loop.
Multigraph loop_graph();

/// Template size that makes the matching-trail construction work for n.
inline int large_complete_size(int n) { return 4 * n + 4; }

/// Towers of the n-ac and n-cc families; every vertex of degree in the rule
/// is replaced by K_N.
Tower n_ac_tower(int n, int depth);
Tower n_cc_tower(int n, int depth);
/// Figure eight, every vertex replaced by K4.
Tower omega_cc_tower(int depth);
/// K_N with every vertex replaced by K_N, N = 4n + 4.
Tower max1_tower(int n, int depth);

struct GluedZ {
  Multigraph graph;
  /// The glued vertices, one per special ray.
  std::vector<VertexId> glue_vertices;
  int copies = 0;
};

/// n + 1 copies of max1_tower(n, depth).level(depth) identified along the
/// deepest vertices of n special rays. Needs n >= 2.
GluedZ glued_Z_detail(int n, int depth);
Multigraph glued_Z(int n, int depth);

struct ManifestItem {
  std::string claim;
  /// "construction" when the claim restates a stated property of the
  /// object, "computation" when it is an independent count.
  std::string origin;
  /// Empty string when the claim holds.
  std::function<std::string(const Multigraph&)> check;
};

struct PresetEntry {
  std::string name;
  std::string summary;
  /// Parameter names, in order.
  std::vector<std::string> params;
  std::vector<int> defaults;
  /// A finite window of an infinite graph: verdicts on it say nothing
  /// about the infinite object.
  bool window_scale = false;
  std::function<Multigraph(std::span<const int>)> build;
  std::vector<ManifestItem> manifest;
};

const std::vector<PresetEntry>& preset_catalog();
/// Throws InputError for unknown names.
const PresetEntry& find_preset(const std::string& name);
/// Builds with `args`, falling back to defaults for missing parameters.
Multigraph build_preset(const PresetEntry& entry, std::span<const int> args);

struct ManifestResult {
  std::string claim;
  std::string origin;
  bool passed = false;
  std::string detail;
};

/// Builds the preset at its defaults and runs every manifest item.
std::vector<ManifestResult> run_manifest(const PresetEntry& entry);

}  // namespace glc
