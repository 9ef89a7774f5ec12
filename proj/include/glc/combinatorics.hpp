#pragma once

#include <cstdint>
#include <vector>

namespace glc {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

/// The rank-th k-subset of {0..n-1} in lexicographic order.
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank);

/// Advances to the lexicographic successor; false after the last subset.
bool next_combination(std::vector<int>& combo, int n);

/// A multiset of edges with multiplicity at most two and a fixed total,
/// laid out as an index space so ranges can be handed to workers.
/// Order: by number of doubled edges, then doubled set, then single set.
class PlacementSpace {
 public:
  PlacementSpace(int edge_count, int total);

  std::uint64_t size() const { return size_; }
  int total() const { return total_; }

  struct Cursor {
    int doubled = 0;
    std::vector<int> twice;
    std::vector<int> once;  // indices into the edges not in `twice`
  };

  Cursor at(std::uint64_t index) const;
  /// Moves to the next placement; false past the end.
  bool advance(Cursor& c) const;

  /// Expands a cursor into (edge, multiplicity) pairs sorted by edge.
  void materialize(const Cursor& c, std::vector<std::pair<int, int>>& out) const;

 private:
  int edges_;
  int total_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> block_start_;  // per doubled count
};

}  // namespace glc
