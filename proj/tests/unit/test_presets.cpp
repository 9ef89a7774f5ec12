#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "glc/connectivity.hpp"
#include "glc/errors.hpp"
#include "glc/presets.hpp"

namespace glc {
namespace {

TEST(Presets, EveryManifestPasses) {
  for (const PresetEntry& entry : preset_catalog()) {
    SCOPED_TRACE(entry.name);
    EXPECT_FALSE(entry.manifest.empty());
    EXPECT_EQ(entry.params.size(), entry.defaults.size());
    for (const ManifestResult& r : run_manifest(entry)) {
      EXPECT_TRUE(r.passed) << r.claim << ": " << r.detail;
      EXPECT_TRUE(r.origin == "construction" || r.origin == "computation");
    }
  }
}

TEST(Presets, LookupAndDefaults) {
  EXPECT_THROW(find_preset("no_such_graph"), InputError);
  const PresetEntry& t = find_preset("theta");
  EXPECT_EQ(build_preset(t, std::vector<int>{}), theta(t.defaults[0]));
  EXPECT_EQ(build_preset(t, std::vector<int>{5}).edge_count(), 5);
}

TEST(Presets, LadderWindowShape) {
  const Multigraph g = ladder_window(3);
  EXPECT_EQ(g.vertex_count(), 14);
  // 7 rungs and 2 * 6 rail edges.
  EXPECT_EQ(g.edge_count(), 19);
  std::set<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.insert(std::minmax(e.u, e.v));
  for (int j = -3; j <= 3; ++j) {
    EXPECT_TRUE(edges.count(std::minmax(ladder_id(3, 0, j), ladder_id(3, 1, j))));
    if (j < 3) {
      for (int m : {0, 1}) EXPECT_TRUE(edges.count(std::minmax(ladder_id(3, m, j), ladder_id(3, m, j + 1))));
    }
  }
}

TEST(Presets, GraphCWindowModification) {
  const int n = 5;
  const Multigraph g = graph_C_window(n);
  const VertexId a = 2 * (2 * n + 1);
  const VertexId b = a + 1;
  ASSERT_EQ(g.vertex_count(), b + 1);
  std::multiset<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.insert(std::minmax(e.u, e.v));
  auto has = [&](VertexId x, VertexId y) { return edges.count(std::minmax(x, y)) > 0; };
  auto v = [&](int m, int j) { return ladder_id(n, m, j); };
  EXPECT_FALSE(has(v(0, 0), v(0, 1)));
  EXPECT_FALSE(has(v(0, -3), v(0, -2)));
  EXPECT_FALSE(has(v(0, 3), v(0, 4)));
  EXPECT_TRUE(has(v(0, -3), a) && has(a, v(0, -2)));
  EXPECT_TRUE(has(v(0, 3), b) && has(b, v(0, 4)));
  EXPECT_TRUE(has(a, v(0, 0)));
  EXPECT_TRUE(has(v(0, 1), b));
  EXPECT_EQ(degree(g, a), 3);
  EXPECT_EQ(degree(g, b), 3);
  EXPECT_THROW(graph_C_window(3), InputError);
}

TEST(Presets, AlphaAuxiliaryCut) {
  const AlphaAuxiliary aux = alpha_auxiliary_detail(5);
  const EdgeCut cut = boundary_cut(aux.graph, aux.upper_half);
  std::vector<EdgeId> expected{aux.e, aux.f_plus, aux.g_plus};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(cut.cut_edges, expected);
  EXPECT_TRUE(aux.graph.is_connected());
  EXPECT_THROW(alpha_auxiliary_detail(4), InputError);
}

TEST(Presets, BaseFamilies) {
  const Multigraph odd = base_n_ac_odd(3);
  EXPECT_EQ(odd.vertex_count(), 4);
  EXPECT_EQ(odd.edge_count(), 4);
  EXPECT_EQ(degree(odd, 0), 1);
  EXPECT_EQ(degree(odd, 3), 1);
  const Multigraph even = base_n_ac_even(4);
  EXPECT_EQ(even.edge_count(), 5);
  EXPECT_EQ(base_n_cc_even(2), theta(3));
  EXPECT_EQ(figure_eight().edge_count(), 2);
  EXPECT_EQ(loop_graph().loop_count(0), 1);
}

TEST(Presets, GluedZSeparatesIntoCopies) {
  const GluedZ z = glued_Z_detail(2, 1);
  EXPECT_EQ(z.copies, 3);
  ASSERT_EQ(z.glue_vertices.size(), 2u);
  std::vector<char> removed(static_cast<std::size_t>(z.graph.vertex_count()), 0);
  for (VertexId v : z.glue_vertices) removed[v] = 1;
  EXPECT_EQ(component_count_without(z.graph, removed), 3);
  EXPECT_TRUE(cut_points(z.graph).empty());
  EXPECT_THROW(glued_Z_detail(1, 1), InputError);
}

}  // namespace
}  // namespace glc
