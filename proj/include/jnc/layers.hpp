#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jnc/graph.hpp"

namespace jnc {

/// Fixed-length 0/1 vector over the vertex set with a cached popcount.
class IndicatorVector {
 public:
  IndicatorVector() = default;
  explicit IndicatorVector(std::size_t n) : words_((n + 63) / 64, 0), size_(n) {}

  std::size_t size() const { return size_; }
  std::size_t popcount() const { return popcount_; }
  bool empty() const { return popcount_ == 0; }

  bool test(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }
  void set(std::size_t k) {
    std::uint64_t& w = words_[k >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (k & 63);
    if (!(w & bit)) {
      w |= bit;
      ++popcount_;
    }
  }

  // Ascending indices of the set bits.
  std::vector<Vertex> members() const;

  IndicatorVector& operator|=(const IndicatorVector& other);
  IndicatorVector& operator^=(const IndicatorVector& other);
  // this &= ~other
  IndicatorVector& subtract(const IndicatorVector& other);

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const IndicatorVector& a, const IndicatorVector& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  void recount();

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
  std::size_t popcount_ = 0;
};

/// Distance layers N^0(root), N^1(root), ... of one BFS.
///
/// `layers` holds only non-empty layers, so `eccentricity()` is the depth of
/// the last one. When the BFS was truncated at `j_max`, the eccentricity is
/// that of the explored ball.
struct LayerSet {
  Vertex root = 0;
  std::size_t num_vertices = 0;
  std::vector<std::vector<Vertex>> layers;

  std::size_t eccentricity() const { return layers.size() - 1; }
};

// Throws std::out_of_range if root >= n.
LayerSet bfs_layers(const Graph& g, Vertex root, std::optional<std::size_t> j_max = std::nullopt);

// Zero vector for j past the last layer.
IndicatorVector indicator(const LayerSet& layers, std::size_t j);

// Row i is the indicator of a layer rooted at i.
using IndicatorMatrix = std::vector<IndicatorVector>;

// bool(A x): vertices with at least one neighbor in x.
IndicatorVector adjacent_to(const Graph& g, const IndicatorVector& x);

// The characteristic-matrix recursion taken literally:
//   chi^0 = I, chi^1 = A, chi^j_i = bool(A chi^{j-1}_i) xor chi^{j-2}_i.
// Returns chi^0..chi^{j_max}. This is NOT a correct layer computation: it
// re-emits vertices of layer j-2 that have no neighbor in layer j-1 and
// vertices of layer j-1 that have a neighbor inside their own layer.
std::vector<IndicatorMatrix> paper_recursion_layers(const Graph& g, std::size_t j_max);

// chi^j_i = bool(A chi^{j-1}_i) and not (chi^0_i | ... | chi^{j-1}_i).
// Equal to the BFS layers on every graph.
std::vector<IndicatorMatrix> corrected_recursion_layers(const Graph& g, std::size_t j_max);

inline constexpr std::size_t kDefaultJMax = 4;

}  // namespace jnc
