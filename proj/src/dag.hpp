#pragma once

// Internal DAG helpers shared by the poset and block code.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fspace::detail {

using Edge = std::pair<std::size_t, std::size_t>;

/// Dense bitset rows, one per vertex.
class BitMatrix {
public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void or_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w)
      bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }

private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Kahn order; nullopt if the edges contain a cycle.
std::optional<std::vector<std::size_t>> topological_order(std::size_t n, const std::vector<Edge> &edges);

/// Sorted, deduplicated transitive reduction; nullopt on a cycle or self-loop.
std::optional<std::vector<Edge>> transitive_reduction(std::size_t n, const std::vector<Edge> &edges);

} // namespace fspace::detail
