#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "jnc/graph.hpp"
#include "jnc/layers.hpp"

namespace jnc {

/// Non-negative rational num/den. A zero denominator stands for the value 0
/// (the empty-layer convention), so it compares equal to 0/1.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  }

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(a.den == 0 ? 0 : a.num) * (b.den == 0 ? 1 : b.den);
    const unsigned __int128 rhs = static_cast<unsigned __int128>(b.den == 0 ? 0 : b.num) * (a.den == 0 ? 1 : a.den);
    return lhs <=> rhs;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) { return (a <=> b) == 0; }
};

/// One value of the j-neighborhood centrality, kept as the exact ratio
/// out_edges / layer_size (|out(N^j(i))| / |N^j(i)|).
struct CentralityRecord {
  Vertex vertex = 0;
  std::uint32_t j = 0;
  std::uint64_t out_edges = 0;
  std::uint64_t layer_size = 0;
  double value = 0.0;  // 0 when layer_size == 0

  Ratio ratio() const { return {out_edges, layer_size}; }
};

class CentralityMatrix {
 public:
  CentralityMatrix() = default;
  CentralityMatrix(std::size_t n, std::size_t j_max) : n_(n), j_max_(j_max), records_(n * (j_max + 1)) {}

  std::size_t num_vertices() const { return n_; }
  std::size_t j_max() const { return j_max_; }

  const CentralityRecord& at(Vertex v, std::size_t j) const { return records_[v * (j_max_ + 1) + j]; }
  CentralityRecord& at(Vertex v, std::size_t j) { return records_[v * (j_max_ + 1) + j]; }

  // Column j in vertex order.
  std::vector<double> values(std::size_t j) const;

  // Vertex-major, j ascending.
  const std::vector<CentralityRecord>& records() const { return records_; }

  friend bool operator==(const CentralityMatrix&, const CentralityMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t j_max_ = 0;
  std::vector<CentralityRecord> records_;
};

inline bool operator==(const CentralityRecord& a, const CentralityRecord& b) {
  return a.vertex == b.vertex && a.j == b.j && a.out_edges == b.out_edges && a.layer_size == b.layer_size &&
         a.value == b.value;
}

CentralityRecord make_record(Vertex vertex, std::size_t j, std::uint64_t out_edges, std::uint64_t layer_size);

// Edges with exactly one endpoint in `subset`. Throws std::invalid_argument
// on a length mismatch.
std::uint64_t boundary_edge_count(const Graph& g, const IndicatorVector& subset);

// Throws std::out_of_range if i >= n.
CentralityRecord xi(const Graph& g, Vertex i, std::size_t j);

// One truncated BFS per vertex; boundary edges of each layer are counted from
// BFS distance labels while the layer is expanded. `workers` = 0 means
// hardware concurrency. Output does not depend on the worker count.
CentralityMatrix xi_all(const Graph& g, std::size_t j_max, unsigned workers = 0);

// Per-row characteristic-vector recursion (corrected form), computing
// (L chi, chi) as sum(deg) - sum(A chi) over the layer and reusing A chi for
// the next layer. Same results as xi_all; slower, kept as a second route.
CentralityMatrix xi_all_recursion(const Graph& g, std::size_t j_max);

// (L chi, chi) / (chi, chi) with chi = indicator of N^j(i), the quadratic
// form evaluated as a sum of squared differences over edges. Testing path.
Ratio xi_quadratic_oracle_exact(const Graph& g, Vertex i, std::size_t j);
double xi_quadratic_oracle(const Graph& g, Vertex i, std::size_t j);

// |E(N^1(i), V \ N^1(i))| / deg(i) straight from adjacency lists; 0 for an
// isolated vertex.
double ksi_centrality(const Graph& g, Vertex i);

// "vertex,j,out_edges,layer_size,xi"; labels substituted when present.
void write_centrality_csv(std::ostream& out, const Graph& g, const CentralityMatrix& cm);

}  // namespace jnc
