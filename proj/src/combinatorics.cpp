#include "glc/combinatorics.hpp"

#include <algorithm>
#include <limits>

#include "glc/errors.hpp"

namespace glc {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  if (rank >= binomial(n, k)) throw InputError("combination rank out of range");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  int x = 0;
  for (int slot = 0; slot < k; ++slot) {
    // Skip every subset whose next element is x, while rank lies beyond them.
    for (;; ++x) {
      const std::uint64_t with_x = binomial(n - x - 1, k - slot - 1);
      if (rank < with_x) break;
      rank -= with_x;
    }
    out.push_back(x++);
  }
  return out;
}

bool next_combination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

PlacementSpace::PlacementSpace(int edge_count, int total) : edges_(edge_count), total_(total) {
  if (edge_count < 0 || total < 0) throw InputError("placement space: negative size");
  for (int d = 0; 2 * d <= total; ++d) {
    block_start_.push_back(size_);
    const std::uint64_t block = binomial(edge_count, d) * binomial(edge_count - d, total - 2 * d);
    size_ += block;
  }
}

PlacementSpace::Cursor PlacementSpace::at(std::uint64_t index) const {
  if (index >= size_) throw InputError("placement index out of range");
  Cursor c;
  int d = 0;
  while (d + 1 < static_cast<int>(block_start_.size()) && block_start_[static_cast<std::size_t>(d + 1)] <= index) ++d;
  const std::uint64_t local = index - block_start_[static_cast<std::size_t>(d)];
  const std::uint64_t singles = binomial(edges_ - d, total_ - 2 * d);
  c.doubled = d;
  c.twice = unrank_combination(edges_, d, local / singles);
  c.once = unrank_combination(edges_ - d, total_ - 2 * d, local % singles);
  return c;
}

bool PlacementSpace::advance(Cursor& c) const {
  if (next_combination(c.once, edges_ - c.doubled)) return true;
  if (next_combination(c.twice, edges_)) {
    c.once = unrank_combination(edges_ - c.doubled, total_ - 2 * c.doubled, 0);
    return true;
  }
  for (int d = c.doubled + 1; 2 * d <= total_; ++d) {
    if (binomial(edges_, d) * binomial(edges_ - d, total_ - 2 * d) == 0) continue;
    c.doubled = d;
    c.twice = unrank_combination(edges_, d, 0);
    c.once = unrank_combination(edges_ - d, total_ - 2 * d, 0);
    return true;
  }
  return false;
}

void PlacementSpace::materialize(const Cursor& c, std::vector<std::pair<int, int>>& out) const {
  out.clear();
  // `once` indexes the edges left after removing `twice`; walk both in step.
  std::size_t t = 0;
  std::size_t o = 0;
  int free_rank = 0;
  for (int e = 0; e < edges_ && (t < c.twice.size() || o < c.once.size()); ++e) {
    if (t < c.twice.size() && c.twice[t] == e) {
      out.emplace_back(e, 2);
      ++t;
      continue;
    }
    if (o < c.once.size() && c.once[o] == free_rank) {
      out.emplace_back(e, 1);
      ++o;
    }
    ++free_rank;
  }
}

}  // namespace glc
