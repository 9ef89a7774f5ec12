#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "glc/certifier.hpp"
#include "glc/errors.hpp"
#include "glc/presets.hpp"
#include "glc/tower.hpp"
#include "support/oracles.hpp"

namespace glc {
namespace {

ExpansionRule every(Template t) {
  ExpansionRule r;
  r.every_vertex = t;
  return r;
}

TEST(Expansion, CompleteTemplateKeepsCornerFree) {
  const ExpansionOutcome out = expand_once(share(theta(3)), every(Template::complete(4)));
  const Multigraph& h = *out.graph;
  EXPECT_EQ(h.vertex_count(), 8);
  EXPECT_EQ(h.edge_count(), 3 + 2 * 6);
  for (EdgeId e = 0; e < 3; ++e) {
    EXPECT_EQ(out.bonding.map_edge(e), EdgeImage::to_edge(e));
    EXPECT_NE(h.edge(e).u, h.edge(e).v);
  }
  EXPECT_TRUE(check_nice(out.bonding).nice());
  for (VertexId v : {0, 1}) {
    const auto& fibre = out.record.fibres[v];
    ASSERT_EQ(fibre.size(), 4u);
    EXPECT_EQ(out.record.corners[v], fibre.back());
    // Template vertex 3 is the corner and carries no old edge: degree 3.
    EXPECT_EQ(degree(h, fibre.back()), 3);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(degree(h, fibre[i]), 4);
    EXPECT_EQ(out.bonding.fibre(v), std::vector<VertexId>(fibre.begin(), fibre.end()));
  }
}

TEST(Expansion, LoopTakesTwoConsecutiveEnds) {
  const ExpansionOutcome out = expand_once(share(loop_graph()), every(Template::ktilde(4)));
  const Multigraph& h = *out.graph;
  EXPECT_EQ(h.vertex_count(), 4);
  // K4 (6 edges), the old loop, and one pairing edge between vertices 2, 3.
  EXPECT_EQ(h.edge_count(), 8);
  const auto& fibre = out.record.fibres[0];
  EXPECT_EQ(std::minmax(h.edge(0).u, h.edge(0).v), std::minmax(fibre[0], fibre[1]));
  for (VertexId v : fibre) EXPECT_EQ(degree(h, v), 4);
  EXPECT_TRUE(check_nice(out.bonding).nice());
}

TEST(Expansion, RuleErrors) {
  EXPECT_THROW(expand_once(share(theta(3)), every(Template::complete(2))), RuleError);
  EXPECT_THROW(expand_once(share(theta(2)), every(Template::ktilde(5))), RuleError);
  ExpansionRule partial;
  partial.by_degree[5] = Template::complete(6);
  const ExpansionOutcome untouched = expand_once(share(theta(3)), partial);
  EXPECT_EQ(*untouched.graph, theta(3));
  // Level 2 has degree-4 vertices, which a K3 cannot absorb.
  ExpansionRule two_step;
  two_step.by_degree[3] = Template::complete(4);
  two_step.by_degree[4] = Template::complete(3);
  EXPECT_NO_THROW(build_tower(theta(3), two_step, 2));
  try {
    build_tower(theta(3), two_step, 3);
    FAIL() << "expected RuleError";
  } catch (const RuleError& e) {
    EXPECT_EQ(e.level(), 2);
  }
}

TEST(Growth, Validation) {
  GrowthFunction f;
  f.values = {6, 8, 10};
  EXPECT_NO_THROW(f.validate());
  EXPECT_EQ(f.envelope(), (std::vector<int>{5, 6, 7, 8, 9, 10}));
  f.values = {6, 6};
  EXPECT_THROW(f.validate(), InputError);
  f.values = {6, 7};
  EXPECT_THROW(f.validate(), InputError);
  f.values = {};
  EXPECT_THROW(f.validate(), InputError);
  f.values = {4, 8};
  f.floor = 6;
  EXPECT_THROW(f.validate(), InputError);
  f.floor.reset();
  f.divisibility = 4;
  EXPECT_NO_THROW(f.validate());
  f.values = {4, 6};
  EXPECT_THROW(f.validate(), InputError);
}

TEST(Tower, OmegaLevelsAreFourRegularAndAudited) {
  const Tower t = omega_cc_tower(3);
  ASSERT_EQ(t.depth(), 3);
  const int sizes[][2] = {{1, 2}, {4, 8}, {16, 32}};
  for (int k = 1; k <= 3; ++k) {
    const Multigraph& g = t.level(k);
    EXPECT_EQ(g.vertex_count(), sizes[k - 1][0]);
    EXPECT_EQ(g.edge_count(), sizes[k - 1][1]);
    for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(degree(g, v), 4);
  }
  EXPECT_EQ(tower_problem(t), "");
}

TEST(Tower, ProblemDetectsBrokenBonding) {
  Tower t = omega_cc_tower(2);
  // Replace the bonding by one that sends every vertex and edge to the
  // first loop's vertex: incidence holds but edges are not bijective.
  const Multigraph& top = t.level(2);
  std::vector<EdgeImage> em(static_cast<std::size_t>(top.edge_count()), EdgeImage::to_vertex(0));
  t.bondings[0] = GraphMorphism(t.levels[1], t.levels[0], std::vector<VertexId>(4, 0), em);
  EXPECT_NE(tower_problem(t), "");
}

TEST(TowerProperty, LiftedCyclesAreSimpleAndKeepEdges) {
  const Tower t = omega_cc_tower(3);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + trial % 2;
    const Multigraph& g = t.level(k);
    std::vector<EdgeId> f;
    const int size = 1 + static_cast<int>(rng() % std::min(5, g.edge_count()));
    while (static_cast<int>(f.size()) < size) {
      const EdgeId e = static_cast<EdgeId>(rng() % g.edge_count());
      if (std::find(f.begin(), f.end(), e) == f.end()) f.push_back(e);
    }
    const EulerVerdict closed = check_edges_E(g, f);
    ASSERT_TRUE(closed.holds);
    const Trail lifted = lift_cycle(t, k, *closed.trail);
    EXPECT_EQ(cycle_witness_problem(t.level(k + 1), f, lifted), "") << "trial " << trial;
    for (EdgeId e : closed.trail->edges) {
      EXPECT_NE(std::find(lifted.edges.begin(), lifted.edges.end(), e), lifted.edges.end());
    }
  }
}

TEST(Tower, LiftRejectsBadInput) {
  const Tower t = omega_cc_tower(2);
  const Trail loop{{0, 0}, {0}};
  EXPECT_THROW(lift_cycle(t, 2, loop), InputError);
  EXPECT_THROW(lift_cycle(t, 1, Trail{{0, 0}, {5}}), InputError);
  // Each parallel edge of theta(4) gets its own attachment vertex, so a
  // trail passing a vertex twice still lifts.
  const Trail all{{0, 1, 0, 1, 0}, {0, 1, 2, 3}};
  const Tower th = build_tower(theta(4), every(Template::complete(5)), 2);
  EXPECT_EQ(cycle_witness_problem(th.level(2), all.edges, lift_cycle(th, 1, all)), "");
  // Without expansion both passes meet at the same vertex.
  ExpansionRule none;
  none.by_degree[3] = Template::complete(4);
  const Tower flat = build_tower(theta(4), none, 2);
  EXPECT_THROW(lift_cycle(flat, 1, all), LiftingError);
}

TEST(Tower, SpecialRaysHaveFullDegree) {
  const Tower t = max1_tower(2, 3);
  const int n = large_complete_size(2);
  const auto rays = special_rays(t, 2);
  ASSERT_EQ(rays.size(), 2u);
  for (const VertexRay& r : rays) {
    EXPECT_EQ(ray_problem(t, r), "");
    ASSERT_EQ(static_cast<int>(r.vertices.size()), t.depth());
    for (int k = 1; k <= t.depth(); ++k) EXPECT_EQ(degree(t.level(k), r.vertices[k - 1]), n - 1);
  }
  EXPECT_THROW(special_rays(omega_cc_tower(2), 1), ConstructionError);
  const RayConnectivity rc = ray_edge_connectivity(t, rays[0], rays[1]);
  EXPECT_TRUE(rc.distinguished);
  EXPECT_EQ(rc.first_level, 1);
  EXPECT_EQ(static_cast<int>(rc.values.size()), t.depth());
  EXPECT_TRUE(std::is_sorted(rc.values.rbegin(), rc.values.rend()));
  EXPECT_EQ(rc.last_value, rc.values.back());
}

TEST(Tower, RayProblemFlagsIncompatibleRay) {
  const Tower t = max1_tower(2, 2);
  VertexRay r;
  r.vertices = {0, 0};
  const VertexId v = t.bondings[0].map_vertex(0);
  r.vertices[0] = (v + 1) % t.level(1).vertex_count();
  EXPECT_NE(ray_problem(t, r), "");
}

TEST(Tower, ClaimAuditOnSmallGrowthTower) {
  GrowthFunction f;
  f.values = {6, 8};
  const Tower t = build_tower(loop_graph(), f, 3);
  const TowerSpectrum s = tower_spectrum(t);
  EXPECT_TRUE(s.violations.empty());
  EXPECT_GT(s.same_fibre_pairs, 0u);
  EXPECT_GT(s.separated_pairs, 0u);
  EXPECT_EQ(s.deepest.depth, 3);
  for (int v : s.deepest.values) {
    const auto env = f.envelope();
    EXPECT_NE(std::find(env.begin(), env.end(), v), env.end()) << v;
  }
  const Multigraph& g2 = t.level(2);
  for (const PairConnectivity& p : s.levels[1].pairs) {
    EXPECT_EQ(p.value, oracle::edge_connectivity(g2, p.v, p.w));
  }
}

TEST(Tower, SeparationVerdicts) {
  GrowthFunction f;
  f.values = {6, 8, 10};
  GrowthFunction g;
  g.values = {6, 10, 14};
  const SeparationReport r = spectra_separate(f, g, 3);
  EXPECT_TRUE(r.separated);
  ASSERT_TRUE(r.witness_value);
  const auto& other = r.witness_owner == "f" ? r.envelope_g : r.envelope_f;
  EXPECT_EQ(std::find(other.begin(), other.end(), *r.witness_value), other.end());
  const SeparationReport same = spectra_separate(f, f, 3);
  EXPECT_FALSE(same.separated);
  EXPECT_FALSE(same.witness_value);
}

}  // namespace
}  // namespace glc
