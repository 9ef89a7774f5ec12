#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "glc/errors.hpp"
#include "glc/presets.hpp"
#include "glc/trails.hpp"
#include "support/oracles.hpp"

namespace glc {
namespace {

int odd_count(const Multigraph& g, const std::vector<EdgeId>& h) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : h) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d % 2 == 1; }));
}

void expect_valid_cover(const Multigraph& g, std::span<const EdgeId> f, const EulerVerdict& v, bool closed) {
  ASSERT_TRUE(v.cover);
  ASSERT_TRUE(v.trail);
  EXPECT_EQ(trail_problem(g, *v.trail), "");
  std::vector<EdgeId> walked = v.trail->edges;
  std::sort(walked.begin(), walked.end());
  EXPECT_EQ(walked, v.cover->subgraph);
  for (EdgeId e : f) EXPECT_TRUE(std::binary_search(walked.begin(), walked.end(), e));
  EXPECT_LE(odd_count(g, v.cover->subgraph), closed ? 0 : 2);
  if (closed && !f.empty()) EXPECT_EQ(v.trail->vertices.front(), v.trail->vertices.back());
}

TEST(Trails, TrailProblemCatchesDefects) {
  const Multigraph g(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(trail_problem(g, Trail{{0, 1, 2, 0}, {0, 1, 2}}), "");
  EXPECT_NE(trail_problem(g, Trail{{0, 1, 0}, {0, 0}}), "");
  EXPECT_NE(trail_problem(g, Trail{{0, 2}, {0}}), "");
  EXPECT_NE(trail_problem(g, Trail{{0, 1}, {0, 1}}), "");
  EXPECT_NE(trail_problem(g, Trail{{0, 1}, {7}}), "");
}

TEST(Trails, EulerianWholeGraph) {
  const EulerVerdict fig = is_eulerian(figure_eight());
  ASSERT_TRUE(fig.holds);
  ASSERT_TRUE(fig.trail);
  EXPECT_TRUE(fig.trail->closed());
  EXPECT_EQ(fig.trail->edges.size(), 2u);
  EXPECT_FALSE(is_eulerian(theta(3)).holds);
  EXPECT_TRUE(is_eulerian(theta(4)).holds);
  EXPECT_THROW(is_eulerian(Multigraph(2, {})), InputError);
}

TEST(Trails, EulerTrailStartsAtLowestOddVertex) {
  const Multigraph path(4, {{2, 3}, {1, 2}, {0, 3}});
  const Trail t = euler_trail(path, std::vector<EdgeId>{0, 1});
  EXPECT_EQ(t.vertices.front(), 1);
  EXPECT_EQ(t.vertices.back(), 3);
  EXPECT_THROW(euler_trail(path, std::vector<EdgeId>{1, 2}), InputError);
}

TEST(Trails, CoverSearchRejectsBadRequests) {
  const Multigraph g = theta(3);
  EXPECT_THROW(check_edges_E(g, std::vector<EdgeId>{0, 0}), InputError);
  EXPECT_THROW(check_edges_E(g, std::vector<EdgeId>{5}), InputError);
  EXPECT_TRUE(check_edges_E(g, std::vector<EdgeId>{}).holds);
}

// Cover search agrees with exhaustive walk enumeration, and every positive
// answer comes with a valid trail through F.
TEST(TrailsProperty, CoverSearchMatchesWalkEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int m = std::max(n - 1, 1) + static_cast<int>(rng() % 4);
    const Multigraph g = oracle::random_multigraph(rng, n, m, true);
    std::vector<EdgeId> f;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (rng() % 2) f.push_back(e);
    }
    const EulerVerdict closed = check_edges_E(g, f);
    const EulerVerdict open = check_edges_oE(g, f);
    ASSERT_EQ(closed.holds, oracle::trail_covers(g, f, true)) << "trial " << trial;
    ASSERT_EQ(open.holds, oracle::trail_covers(g, f, false)) << "trial " << trial;
    if (closed.holds) expect_valid_cover(g, f, closed, true);
    if (open.holds) expect_valid_cover(g, f, open, false);
  }
}

// Large graphs skip the exhaustive stage: stitching or the odd-cut argument
// must still settle the answer, and its witnesses must validate.
TEST(TrailsProperty, LargeGraphStagesProduceValidWitnesses) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 14, 60, true, false);
    std::vector<EdgeId> f;
    for (int i = 0; i < 3; ++i) f.push_back(static_cast<EdgeId>(rng() % 60));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    try {
      const EulerVerdict v = check_edges_oE(g, f);
      if (v.holds) expect_valid_cover(g, f, v, false);
    } catch (const SearchLimitError&) {
    }
  }
}

TEST(Trails, QuantifiersOnThetaGraphs) {
  // theta(3): every two edges form a cycle; all three leave two odd vertices.
  EXPECT_TRUE(is_n_E(theta(3), 2).holds);
  const QuantifiedVerdict three = is_n_E(theta(3), 3);
  EXPECT_FALSE(three.holds);
  EXPECT_EQ(three.counterexample, (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_TRUE(is_n_oE(theta(3), 3).holds);
  EXPECT_THROW(is_n_E(theta(3), 0), InputError);
}

TEST(TrailsProperty, QuantifiersMatchOracle) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Multigraph g = oracle::random_multigraph(rng, n, n + static_cast<int>(rng() % 3), true);
    const int k = 1 + static_cast<int>(rng() % 3);
    EXPECT_EQ(is_n_E(g, k).holds, oracle::is_n_E(g, k)) << "trial " << trial;
    EXPECT_EQ(is_n_oE(g, k).holds, oracle::is_n_oE(g, k)) << "trial " << trial;
  }
}

TEST(Trails, ExhaustiveSizesAndThreadsAgree) {
  const Multigraph g = base_n_ac_odd(3);
  QuantifierOptions opt;
  const QuantifiedVerdict a = is_n_oE(g, 4, opt);
  opt.threads = 3;
  opt.exhaustive_sizes = true;
  const QuantifiedVerdict b = is_n_oE(g, 4, opt);
  EXPECT_FALSE(a.holds);
  EXPECT_EQ(a.holds, b.holds);
  EXPECT_EQ(a.counterexample, b.counterexample);
  EXPECT_GT(b.cases, a.cases);
}

TEST(MatchingTrail, ValidatesRequest) {
  MatchingTrailRequest r;
  r.N = 11;
  r.n = 2;
  r.from = 0;
  r.to = 1;
  EXPECT_THROW(complete_matching_trail(r), PreconditionError);
  r.N = 12;
  r.matching = {{0, 1}, {1, 2}};
  EXPECT_THROW(complete_matching_trail(r), InputError);
  r.matching = {{0, 1}};
  r.required = {{0, 1}};
  EXPECT_THROW(complete_matching_trail(r), InputError);
  r.required = {{2, 3}, {3, 4}, {4, 5}};
  EXPECT_THROW(complete_matching_trail(r), InputError);
  r.required = {{2, 3}};
  r.to = 0;
  EXPECT_THROW(complete_matching_trail(r), InputError);
  r.closed = true;
  EXPECT_NO_THROW(complete_matching_trail(r));
}

TEST(MatchingTrail, WitnessesValidate) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    MatchingTrailRequest r;
    r.n = static_cast<int>(rng() % 5);
    r.N = large_complete_size(r.n);
    std::vector<VertexId> perm(static_cast<std::size_t>(r.N));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const int pairs = static_cast<int>(rng() % (r.N / 2 + 1));
    for (int i = 0; i < pairs; ++i) r.matching.emplace_back(perm[2 * i], perm[2 * i + 1]);
    std::set<std::pair<int, int>> blocked;
    for (auto [a, b] : r.matching) blocked.insert({std::min(a, b), std::max(a, b)});
    while (static_cast<int>(r.required.size()) < r.n) {
      const int a = static_cast<int>(rng() % r.N);
      const int b = static_cast<int>(rng() % r.N);
      if (a == b || !blocked.insert({std::min(a, b), std::max(a, b)}).second) continue;
      r.required.emplace_back(a, b);
    }
    r.from = static_cast<VertexId>(rng() % r.N);
    r.closed = trial % 2 == 0;
    r.to = r.closed ? r.from : (r.from + 1 + static_cast<VertexId>(rng() % (r.N - 1))) % r.N;
    const auto t = complete_matching_trail(r);
    if (r.n >= 1) {
      ASSERT_TRUE(t) << "trial " << trial;
    }
    if (t) EXPECT_EQ(matching_trail_problem(r, *t), "") << "trial " << trial;
  }
}

TEST(MatchingTrail, ProblemReportsViolations) {
  MatchingTrailRequest r;
  r.N = 8;
  r.n = 1;
  r.matching = {{0, 1}};
  r.required = {{2, 3}};
  r.from = 0;
  r.to = 4;
  const Multigraph k8 = complete_graph(8);
  auto trail = [&](std::vector<VertexId> vs) {
    Trail t;
    t.vertices = vs;
    for (std::size_t i = 1; i < vs.size(); ++i) t.edges.push_back(complete_edge_id(8, vs[i - 1], vs[i]));
    return t;
  };
  EXPECT_EQ(matching_trail_problem(r, trail({0, 2, 3, 4})), "");
  EXPECT_NE(matching_trail_problem(r, trail({0, 1, 2, 3, 4})), "");
  EXPECT_NE(matching_trail_problem(r, trail({0, 2, 4})), "");
  EXPECT_NE(matching_trail_problem(r, trail({5, 2, 3, 4})), "");
  EXPECT_NE(matching_trail_problem(r, trail({0, 2, 3})), "");
}

}  // namespace
}  // namespace glc
