#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glc/connectivity.hpp"
#include "glc/morphism.hpp"
#include "glc/trails.hpp"

namespace glc {

/// Replacement graph for an uncontracted vertex.
struct Template {
  enum class Kind { Complete, KTilde };
  Kind kind = Kind::Complete;
  /// Number of template vertices.
  int size = 0;

  static Template complete(int n) { return {Kind::Complete, n}; }
  /// K_m plus one extra parallel edge per consecutive pair of unattached vertices.
  static Template ktilde(int m) { return {Kind::KTilde, m}; }
  bool operator==(const Template&) const = default;
};

std::string to_string(const Template& t);

/// Which vertices get replaced, and by what. A vertex whose degree has no
/// entry is left alone.
///
/// Attachment: the edge ends at a vertex, ordered by edge id (a loop gives two
/// consecutive ends), go to template vertices 0, 1, 2, ... Unattached K~
/// vertices are paired consecutively. The last template vertex is the
/// fibre's corner; with a complete template it stays unattached whenever the
/// degree is below the template size.
struct ExpansionRule {
  std::map<int, Template> by_degree;
  /// Applies to every vertex regardless of degree when set.
  std::optional<Template> every_vertex;

  const Template* for_degree(int degree) const;
};

struct ExpansionRecord {
  /// fibres[v]: new vertices replacing old vertex v, in template order.
  std::vector<std::vector<VertexId>> fibres;
  /// corners[v]: last vertex of the fibre.
  std::vector<VertexId> corners;
  /// templates[v]: template applied to v, if any.
  std::vector<std::optional<Template>> templates;
};

struct ExpansionOutcome {
  GraphPtr graph;
  GraphMorphism bonding;
  ExpansionRecord record;
};

/// One uncontraction step. Old edges keep their ids; template edges follow,
/// grouped by old vertex, K_m edges (i < j) before pairing edges. Throws
/// RuleError when a vertex has more edge ends than template vertices or
/// violates K~ parity.
ExpansionOutcome expand_once(const GraphPtr& g, const ExpansionRule& rule);

/// Finite prefix f(1) < f(2) < ... of a growth function.
struct GrowthFunction {
  std::vector<int> values;
  /// Every value must be divisible by this (2 for K~ towers, 4 otherwise).
  int divisibility = 2;
  std::optional<int> floor;

  /// Throws InputError when not strictly increasing, not divisible, or
  /// below the floor.
  void validate() const;
  /// The Claim-3 envelope {f(i) - 1, f(i)}.
  std::vector<int> envelope() const;
};

/// One vertex per level, compatible with the bonding maps.
struct VertexRay {
  std::vector<VertexId> vertices;
};

struct Tower {
  /// levels[0] is G_1.
  std::vector<GraphPtr> levels;
  /// bondings[k]: levels[k + 1] -> levels[k].
  std::vector<GraphMorphism> bondings;
  std::vector<ExpansionRecord> expansions;
  std::vector<VertexRay> rays;
  std::optional<GrowthFunction> growth;
  /// Complete-template size for towers whose special rays make sense.
  std::optional<int> complete_size;

  int depth() const { return static_cast<int>(levels.size()); }
  const Multigraph& level(int k) const { return *levels.at(static_cast<std::size_t>(k - 1)); }
};

/// A one-level tower holding g, for level-wise reports on a plain graph.
Tower single_level_tower(const Multigraph& g);

/// Applies `rule` depth - 1 times. RuleError carries the failing level.
Tower build_tower(const Multigraph& g1, const ExpansionRule& rule, int depth);

/// Level k + 1 replaces every vertex of level k by K~_{f(k)} (or K_{f(k)}
/// with Template::Kind::Complete).
Tower build_tower(const Multigraph& g1, const GrowthFunction& f, int depth,
                  Template::Kind kind = Template::Kind::KTilde);

/// Checks that every bonding is nice and that edge provenance composes.
/// Returns an empty string on success.
std::string tower_problem(const Tower& t);

/// Lifts a closed trail of level k to a simple cycle of level k + 1 that
/// crosses the same edges, joining the entry and exit of every fibre visit
/// by a template edge (or a path inside the fibre). Throws LiftingError when
/// no such joining exists.
Trail lift_cycle(const Tower& t, int level, const Trail& cycle);

struct RayConnectivity {
  bool distinguished = false;
  /// First level at which the rays differ.
  int first_level = 0;
  /// Values at levels first_level .. depth.
  std::vector<int> values;
  int last_value = 0;
  /// The last `window` values agree.
  bool stable = false;
};

/// Edge connectivity between two rays level by level. Throws
/// ConsistencyError if the sequence ever increases.
RayConnectivity ray_edge_connectivity(const Tower& t, const VertexRay& a, const VertexRay& b, int window = 2);

struct ClaimViolation {
  int level = 0;
  VertexId v = 0;
  VertexId w = 0;
  int value = 0;
  std::string claim;
};

struct TowerSpectrum {
  /// Pair table of every level (empty for one-vertex levels).
  std::vector<SpectrumTable> levels;
  /// Spectrum of the deepest level, with stability windows across levels.
  Spectrum deepest;
  std::uint64_t same_fibre_pairs = 0;
  std::uint64_t separated_pairs = 0;
  std::vector<ClaimViolation> violations;
};

struct TowerSpectrumOptions {
  int threads = 1;
  /// Throw ConsistencyError on any claim violation.
  bool strict = true;
};

/// Pairwise connectivities at every level of a growth tower, auditing that
/// same-fibre pairs at level k + 1 lie in {f(k) - 1, f(k)} and that pairs
/// with distinct projections keep their level-k value.
TowerSpectrum tower_spectrum(const Tower& t, const TowerSpectrumOptions& opt = {});

struct SeparationReport {
  bool separated = false;
  /// A value in one spectrum that the other function's envelope excludes.
  std::optional<int> witness_value;
  /// "f" or "g": whose spectrum holds the witness value.
  std::string witness_owner;
  Spectrum spectrum_f;
  Spectrum spectrum_g;
  std::vector<int> envelope_f;
  std::vector<int> envelope_g;
};

/// Builds the K~ towers of f and g from the one-loop graph, computes the
/// deepest spectra and looks for a value of one outside the other's
/// envelope. A value v is only treated as excluded when v <= max(g), since
/// larger values may belong to unlisted terms.
SeparationReport spectra_separate(const GrowthFunction& f, const GrowthFunction& g, int depth, int threads = 1);

/// `count` rays whose vertices have degree N - 1 at every level, following
/// fibre corners from the lowest-id eligible vertices of level 1. Throws
/// ConstructionError for towers not built from one complete template size
/// or when fewer rays exist.
std::vector<VertexRay> special_rays(const Tower& t, int count);

/// Empty string when the ray is compatible with every bonding.
std::string ray_problem(const Tower& t, const VertexRay& r);

}  // namespace glc
