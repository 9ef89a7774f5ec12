#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "glc/errors.hpp"
#include "glc/graph_io.hpp"
#include "glc/morphism.hpp"
#include "glc/multigraph.hpp"
#include "glc/presets.hpp"
#include "support/oracles.hpp"

namespace glc {
namespace {

TEST(Multigraph, LoopsCountTwiceTowardDegree) {
  const Multigraph g(2, {{0, 0}, {0, 1}, {0, 1}});
  EXPECT_EQ(degree(g, 0), 4);
  EXPECT_EQ(degree(g, 1), 2);
  EXPECT_EQ(g.loop_count(0), 1);
  EXPECT_EQ(g.incident(0).size(), 3u);
  EXPECT_THROW(degree(g, 2), InputError);
}

TEST(Multigraph, RejectsUndeclaredEndpoint) {
  EXPECT_THROW(Multigraph(2, {{0, 2}}), InputError);
  EXPECT_THROW(Multigraph(-1, {}), InputError);
}

TEST(Multigraph, Connectivity) {
  EXPECT_FALSE(Multigraph(0, {}).is_connected());
  EXPECT_TRUE(Multigraph(1, {}).is_connected());
  EXPECT_FALSE(Multigraph(2, {{0, 0}}).is_connected());
  EXPECT_TRUE(Multigraph(3, {{0, 1}, {2, 1}}).is_connected());
  EXPECT_THROW(require_connected(Multigraph(2, {}), "test"), InputError);
}

TEST(Multigraph, CompleteGraphEdgeIds) {
  const Multigraph k5 = complete_graph(5);
  ASSERT_EQ(k5.edge_count(), 10);
  for (VertexId i = 0; i < 5; ++i) {
    for (VertexId j = i + 1; j < 5; ++j) {
      const Edge& e = k5.edge(complete_edge_id(5, i, j));
      EXPECT_EQ(e.u, i);
      EXPECT_EQ(e.v, j);
      EXPECT_EQ(complete_edge_id(5, j, i), e.id);
    }
  }
  EXPECT_THROW(complete_edge_id(5, 2, 2), InputError);
}

TEST(Multigraph, BoundaryCutIgnoresLoops) {
  const Multigraph g(3, {{0, 1}, {1, 2}, {0, 0}, {0, 2}, {1, 2}});
  const std::vector<VertexId> side{0};
  const EdgeCut cut = boundary_cut(g, side);
  EXPECT_EQ(cut.cut_edges, (std::vector<EdgeId>{0, 3}));
  EXPECT_EQ(cut_size(g, side), 2);
  EXPECT_EQ(cut_size(g, std::vector<VertexId>{}), 0);
  EXPECT_THROW(boundary_cut(g, std::vector<VertexId>{0, 1, 2}), InputError);
}

TEST(Multigraph, SubdivisionKeepsIdsAndProvenance) {
  const Multigraph g(2, {{0, 1}, {1, 1}});
  const Subdivision s = subdivide_edge(g, 1, 2);
  EXPECT_EQ(s.graph.vertex_count(), 4);
  EXPECT_EQ(s.graph.edge_count(), 4);
  EXPECT_EQ(s.inserted, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(s.graph.edge(1).u, 1);
  EXPECT_EQ(s.graph.edge(1).v, 2);
  EXPECT_EQ(s.edge_origin, (std::vector<EdgeId>{0, 1, 1, 1}));
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(s.graph.loop_count(v), 0);
  EXPECT_THROW(subdivide_edge(g, 0, 3), InputError);
}

TEST(Multigraph, GlueIdentifiesClasses) {
  const Multigraph path(2, {{0, 1}});
  const std::vector<Multigraph> copies{path, path, path};
  const GlueOutcome out = glue(copies, {{{0, 0}, {1, 0}, {2, 0}}});
  EXPECT_EQ(out.graph.vertex_count(), 4);
  EXPECT_EQ(out.graph.edge_count(), 3);
  ASSERT_EQ(out.class_vertices.size(), 1u);
  const VertexId hub = out.class_vertices[0];
  EXPECT_EQ(degree(out.graph, hub), 3);
  for (int c = 0; c < 3; ++c) EXPECT_EQ(out.vertex_maps[c][0], hub);
  EXPECT_THROW(glue(copies, {{{0, 0}}, {{0, 0}}}), InputError);
}

TEST(Multigraph, ComponentCounts) {
  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  std::vector<char> removed(4, 0);
  EXPECT_EQ(component_count_without(g, removed), 1);
  removed[1] = 1;
  EXPECT_EQ(component_count_without(g, removed), 2);
  EXPECT_EQ(component_labels(g, removed), (std::vector<int>{0, -1, 1, 1}));
}

// |dA| + |dB| >= |d(A&B)| + |d(A|B)| and >= |d(A\B)| + |d(B\A)|, checked
// against cut sizes recomputed from scratch.
TEST(MultigraphProperty, SubmodularityOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Multigraph g = oracle::random_multigraph(rng, n, static_cast<int>(rng() % 14), false);
    std::vector<VertexId> a, b;
    for (VertexId v = 0; v < n; ++v) {
      if (rng() % 2) a.push_back(v);
      if (rng() % 2) b.push_back(v);
    }
    if (a.empty() || b.empty() || static_cast<int>(a.size()) == n || static_cast<int>(b.size()) == n) continue;
    const SubmodularityReport r = check_submodularity(g, a, b);
    auto cut = [&](auto pred) {
      int c = 0;
      for (const Edge& e : g.edges()) c += pred(e.u) != pred(e.v);
      return c;
    };
    auto in = [](const std::vector<VertexId>& s, VertexId v) { return std::count(s.begin(), s.end(), v) > 0; };
    EXPECT_EQ(r.cut_a, cut([&](VertexId v) { return in(a, v); }));
    EXPECT_EQ(r.cut_intersection, cut([&](VertexId v) { return in(a, v) && in(b, v); }));
    EXPECT_EQ(r.cut_union, cut([&](VertexId v) { return in(a, v) || in(b, v); }));
    EXPECT_EQ(r.cut_a_minus_b, cut([&](VertexId v) { return in(a, v) && !in(b, v); }));
    EXPECT_TRUE(r.pass);
    EXPECT_GE(r.cut_a + r.cut_b, r.cut_intersection + r.cut_union);
    EXPECT_GE(r.cut_a + r.cut_b, r.cut_a_minus_b + r.cut_b_minus_a);
  }
}

TEST(Morphism, ConstructionChecksIncidence) {
  const GraphPtr path = share(Multigraph(3, {{0, 1}, {1, 2}}));
  const GraphPtr edge = share(Multigraph(2, {{0, 1}}));
  EXPECT_NO_THROW(GraphMorphism(path, edge, {0, 0, 1}, {EdgeImage::to_vertex(0), EdgeImage::to_edge(0)}));
  EXPECT_THROW(GraphMorphism(path, edge, {0, 1, 1}, {EdgeImage::to_vertex(0), EdgeImage::to_edge(0)}), InputError);
  EXPECT_THROW(GraphMorphism(path, edge, {0, 0}, {EdgeImage::to_vertex(0), EdgeImage::to_edge(0)}), InputError);
  EXPECT_THROW(GraphMorphism(path, edge, {0, 0, 5}, {EdgeImage::to_vertex(0), EdgeImage::to_edge(0)}), InputError);
}

TEST(Morphism, NicenessReportsEachFailure) {
  const GraphPtr path = share(Multigraph(3, {{0, 1}, {1, 2}}));
  const GraphPtr edge = share(Multigraph(2, {{0, 1}}));
  const GraphMorphism good(path, edge, {0, 0, 1}, {EdgeImage::to_vertex(0), EdgeImage::to_edge(0)});
  EXPECT_TRUE(check_nice(good).nice());
  EXPECT_EQ(good.fibre(0), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(good.preimage_edge(0), 1);

  // Vertices 0 and 2 map to 0 but 1 does not: disconnected fibre.
  const GraphPtr three = share(Multigraph(3, {{0, 1}, {1, 2}}));
  const GraphPtr two = share(Multigraph(2, {{0, 1}, {1, 0}}));
  const GraphMorphism split(three, two, {0, 1, 0}, {EdgeImage::to_edge(0), EdgeImage::to_edge(1)});
  const NicenessReport r = check_nice(split);
  EXPECT_FALSE(r.monotone);
  EXPECT_EQ(r.disconnected_fibre, 0);

  const GraphPtr point = share(Multigraph(1, {}));
  const GraphMorphism into(point, edge, {0}, {});
  const NicenessReport miss = check_nice(into);
  EXPECT_FALSE(miss.vertex_surjective);
  EXPECT_FALSE(miss.edge_bijective);
  EXPECT_EQ(miss.missed_vertex, 1);
  EXPECT_EQ(miss.bad_edge, 0);
}

TEST(Morphism, QuotientCollapsesBlocks) {
  const GraphPtr g = share(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 1}}));
  const QuotientOutcome q = quotient(g, VertexPartition{{{0, 1}, {2, 3}}});
  EXPECT_EQ(q.quotient->vertex_count(), 2);
  EXPECT_EQ(q.quotient->edge_count(), 2);
  EXPECT_EQ(q.provenance, (std::vector<EdgeId>{1, 3}));
  EXPECT_TRUE(check_nice(q.morphism).nice());
  EXPECT_THROW(quotient(g, VertexPartition{{{0, 2}, {1, 3}}}), MultiCutError);
  EXPECT_THROW(quotient(g, VertexPartition{{{0, 1}, {1, 2, 3}}}), InputError);
}

TEST(GraphIo, CanonicalFormIsByteStable) {
  const Multigraph g(3, {{0, 1}, {1, 1}});
  const std::string expected =
      "{\n"
      "  \"format\": \"multigraph\",\n"
      "  \"version\": 1,\n"
      "  \"vertices\": [0, 1, 2],\n"
      "  \"edges\": [\n"
      "    [0, 0, 1],\n"
      "    [1, 1, 1]\n"
      "  ]\n"
      "}\n";
  EXPECT_EQ(format_graph(g), expected);
  EXPECT_EQ(parse_graph(expected), g);
}

TEST(GraphIo, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Multigraph g = oracle::random_multigraph(rng, 1 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 12), false);
    EXPECT_EQ(parse_graph(format_graph(g)), g);
  }
}

TEST(GraphIo, DiagnosesMalformedInput) {
  EXPECT_THROW(parse_graph("{"), InputError);
  EXPECT_THROW(parse_graph(R"({"format":"other","version":1,"vertices":[],"edges":[]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"format":"multigraph","version":2,"vertices":[],"edges":[]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"format":"multigraph","version":1,"vertices":[1],"edges":[]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"format":"multigraph","version":1,"vertices":[0],"edges":[[0,0,1]]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"format":"multigraph","version":1,"vertices":[0,1],"edges":[[1,0,1]]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"format":"multigraph","version":1,"vertices":[0,1],"edges":[[0,0]]})"), InputError);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.json"), InputError);
}

TEST(GraphIo, DotListsParallelEdgesAndLoops) {
  const std::string dot = to_dot(Multigraph(2, {{0, 1}, {0, 1}, {1, 1}}), "T");
  EXPECT_NE(dot.find("graph T"), std::string::npos);
  std::size_t count = 0;
  for (std::size_t p = dot.find("0 -- 1"); p != std::string::npos; p = dot.find("0 -- 1", p + 1)) ++count;
  EXPECT_EQ(count, 2u);
  EXPECT_NE(dot.find("1 -- 1"), std::string::npos);
}

// The adjacency lists of the appendix program, transcribed independently.
TEST(GraphIo, AppendixGraphMatchesPublishedAdjacency) {
  const std::vector<std::vector<int>> adj{
      {6, 8, 2},   {3, 2},       {1, 4, 0},     {1, 4, 5},     {2, 3, 6},     {3, 6, 7},
      {4, 5, 0},   {5, 8, 9},    {0, 7, 10},    {7, 10, 11},   {8, 9, 12},    {9, 12, 13},
      {10, 11, 14}, {11, 14, 15}, {12, 13, 15}, {13, 14}};
  const Multigraph f = appendix_F();
  ASSERT_EQ(f.vertex_count(), 16);
  ASSERT_EQ(f.edge_count(), 23);
  std::multiset<std::pair<int, int>> expected, actual;
  for (int a = 0; a < 16; ++a) {
    for (int b : adj[a]) {
      if (a < b) expected.insert({a, b});
    }
  }
  for (const Edge& e : f.edges()) actual.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  EXPECT_EQ(actual, expected);
  EXPECT_EQ(parse_graph(format_graph(f)), f);
  EXPECT_EQ(appendix_eligible_edges(f).size(), 21u);
}

}  // namespace
}  // namespace glc
