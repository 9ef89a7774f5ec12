#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "glc/combinatorics.hpp"
#include "glc/errors.hpp"
#include "glc/kernels.hpp"
#include "glc/path_search.hpp"
#include "support/oracles.hpp"

namespace glc {
namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng();
  return w;
}

void reference_reduce(const std::vector<std::uint64_t>& rows, std::size_t words, const std::vector<std::uint64_t>& select,
                      bool use_xor, std::vector<std::uint64_t>& out) {
  out.assign(words, 0);
  for (std::size_t i = 0; i < select.size() * 64; ++i) {
    if (!((select[i / 64] >> (i % 64)) & 1)) continue;
    for (std::size_t k = 0; k < words; ++k) out[k] = use_xor ? out[k] ^ rows[i * words + k] : out[k] | rows[i * words + k];
  }
}

TEST(Kernels, ScalarMatchesBitByBitReference) {
  std::mt19937_64 rng(5);
  const kernels::RowOps& ops = kernels::scalar();
  for (std::size_t words : {1u, 2u, 3u, 5u, 8u, 9u}) {
    for (std::size_t sel_words : {1u, 2u}) {
      const auto rows = random_words(rng, words * sel_words * 64);
      const auto select = random_words(rng, sel_words);
      std::vector<std::uint64_t> expected, got(words);
      reference_reduce(rows, words, select, false, expected);
      ops.union_rows(rows.data(), words, select.data(), sel_words, got.data());
      EXPECT_EQ(got, expected);
      reference_reduce(rows, words, select, true, expected);
      ops.xor_rows(rows.data(), words, select.data(), sel_words, got.data());
      EXPECT_EQ(got, expected);
      std::size_t pop = 0;
      for (auto w : rows) pop += static_cast<std::size_t>(std::popcount(w));
      EXPECT_EQ(ops.popcount(rows.data(), rows.size()), pop);
    }
  }
}

TEST(Kernels, WideVariantEquivalentToScalar) {
  const kernels::RowOps* wide = kernels::avx2();
  if (wide == nullptr) GTEST_SKIP() << "no AVX2 on this machine";
  const kernels::RowOps& ref = kernels::scalar();
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t words = 1 + rng() % 12;
    const std::size_t sel_words = 1 + rng() % 3;
    const auto rows = random_words(rng, words * sel_words * 64);
    auto select = random_words(rng, sel_words);
    if (trial % 4 == 0) select.assign(sel_words, 0);
    std::vector<std::uint64_t> a(words), b(words);
    ref.union_rows(rows.data(), words, select.data(), sel_words, a.data());
    wide->union_rows(rows.data(), words, select.data(), sel_words, b.data());
    ASSERT_EQ(a, b) << "union, words=" << words;
    ref.xor_rows(rows.data(), words, select.data(), sel_words, a.data());
    wide->xor_rows(rows.data(), words, select.data(), sel_words, b.data());
    ASSERT_EQ(a, b) << "xor, words=" << words;
    ASSERT_EQ(ref.popcount(rows.data(), words), wide->popcount(rows.data(), words));
  }
}

TEST(Kernels, ForceScalarPinsActive) {
  kernels::force_scalar(true);
  EXPECT_EQ(&kernels::active(), &kernels::scalar());
  kernels::force_scalar(false);
  if (kernels::avx2() != nullptr) EXPECT_EQ(&kernels::active(), kernels::avx2());
}

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(21, 4), 5985u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(Combinatorics, UnrankAgreesWithSuccessor) {
  for (int n : {1, 4, 7}) {
    for (int k = 0; k <= n; ++k) {
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) c[i] = i;
      std::uint64_t rank = 0;
      do {
        EXPECT_EQ(unrank_combination(n, k, rank), c);
        ++rank;
      } while (next_combination(c, n));
      EXPECT_EQ(rank, binomial(n, k));
    }
  }
}

// Every multiset with multiplicities in {1, 2} and the given total appears
// exactly once, and random access agrees with sequential advance.
TEST(Combinatorics, PlacementSpaceEnumeratesEachMultisetOnce) {
  for (int m : {1, 3, 5}) {
    for (int total = 1; total <= 2 * m; ++total) {
      const PlacementSpace space(m, total);
      std::set<std::vector<std::pair<int, int>>> seen;
      std::vector<std::pair<int, int>> items;
      PlacementSpace::Cursor c = space.at(0);
      for (std::uint64_t i = 0; i < space.size(); ++i) {
        space.materialize(c, items);
        std::vector<std::pair<int, int>> direct;
        space.materialize(space.at(i), direct);
        EXPECT_EQ(items, direct);
        int sum = 0;
        for (auto [e, mult] : items) {
          EXPECT_TRUE(mult == 1 || mult == 2);
          sum += mult;
        }
        EXPECT_EQ(sum, total);
        EXPECT_TRUE(seen.insert(items).second);
        const bool more = space.advance(c);
        EXPECT_EQ(more, i + 1 < space.size());
      }
      // Count independently: choose d doubled edges, then total - 2d singles.
      std::uint64_t expected = 0;
      for (int d = 0; 2 * d <= total; ++d) expected += binomial(m, d) * binomial(m - d, total - 2 * d);
      EXPECT_EQ(space.size(), expected);
    }
  }
}

bool is_simple_path(const Multigraph& g, const std::vector<VertexId>& p) {
  std::set<VertexId> s(p.begin(), p.end());
  if (s.size() != p.size()) return false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!edge_between(g, p[i - 1], p[i])) return false;
  }
  return true;
}

TEST(PathSearch, AgreesWithEnumerationOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Multigraph g = oracle::random_multigraph(rng, n, static_cast<int>(rng() % 14), trial % 2 == 0);
    const AdjacencyRows adj(g, 0);
    std::vector<VertexId> required;
    for (VertexId v = 0; v < n; ++v) {
      if (rng() % 3 == 0) required.push_back(v);
    }
    std::vector<VertexId> starts;
    if (trial % 3 != 0) starts.push_back(static_cast<VertexId>(rng() % n));
    std::vector<VertexId> all(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    PathQuery q;
    q.starts = starts.empty() ? std::span<const VertexId>(all) : std::span<const VertexId>(starts);
    q.required = required;
    const auto path = find_simple_path(adj, q);
    EXPECT_EQ(path.has_value(), oracle::path_covers(g, required, starts)) << "trial " << trial;
    if (path) {
      EXPECT_TRUE(is_simple_path(g, *path));
      EXPECT_TRUE(std::find(q.starts.begin(), q.starts.end(), path->front()) != q.starts.end());
      for (VertexId r : required) EXPECT_NE(std::find(path->begin(), path->end(), r), path->end());
    }
  }
}

TEST(PathSearch, FixedEndAndForbiddenVertices) {
  // A 6-cycle: 0-1-2-3-4-5-0.
  const Multigraph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const AdjacencyRows adj(g, 0);
  const std::vector<VertexId> start{0};
  const std::vector<VertexId> required{4};
  PathQuery q;
  q.starts = start;
  q.required = required;
  q.end = 2;
  const auto p = find_simple_path(adj, q);
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (std::vector<VertexId>{0, 5, 4, 3, 2}));
  const std::vector<VertexId> forbid{3};
  q.forbidden = forbid;
  EXPECT_FALSE(find_simple_path(adj, q));
}

TEST(PathSearch, AdjacencyRowsEditing) {
  AdjacencyRows adj(Multigraph(2, {{0, 1}, {0, 1}, {1, 1}}), 1);
  EXPECT_TRUE(adj.adjacent(0, 1));
  EXPECT_FALSE(adj.adjacent(1, 1));
  const VertexId x = adj.add_vertex();
  EXPECT_EQ(x, 2);
  adj.link(0, 2);
  EXPECT_TRUE(adj.adjacent(2, 0));
  adj.unlink(0, 1);
  EXPECT_FALSE(adj.adjacent(1, 0));
  EXPECT_THROW(adj.add_vertex(), SearchLimitError);
}

TEST(PathSearch, EdgeBetweenSkipsAndIgnoresLoops) {
  const Multigraph g(2, {{0, 0}, {0, 1}, {1, 0}});
  EXPECT_EQ(edge_between(g, 0, 1), 1);
  EXPECT_EQ(edge_between(g, 1, 0, 1), 2);
  EXPECT_FALSE(edge_between(g, 0, 0));
}

}  // namespace
}  // namespace glc
