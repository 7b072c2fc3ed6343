#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jnc/centrality.hpp"
#include "jnc/graph.hpp"

namespace jnc {

// sum over edges (x_k - x_l)^2. Throws std::invalid_argument if |x| != n.
double laplacian_quadratic_form(const Graph& g, std::span<const double> x);

// y = L x with (Lx)_k = deg(k) x_k - sum_{l ~ k} x_l.
void laplacian_apply(const Graph& g, std::span<const double> x, std::span<double> y);

struct SpectralEstimate {
  double lambda_max = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;  // ||L v - lambda v||_inf at termination
  bool converged = false;
};

inline constexpr double kDefaultSpectralTol = 1e-10;

// Power iteration on L from a seeded random start. max_iter = 0 selects the
// default 10 n + 1000. Throws std::invalid_argument for n = 0.
SpectralEstimate lambda_max(const Graph& g, double tol = kDefaultSpectralTol, std::size_t max_iter = 0,
                            std::uint64_t seed = 0);

inline constexpr std::size_t kMaxCheegerVertices = 20;

// Exact h(G) = min |out(S)| / |S| over non-empty S with |S| <= n/2, by Gray
// code enumeration of all subsets. Disconnected graphs give 0. Throws
// std::invalid_argument for n > 20 or n < 2.
Ratio cheeger_brute_force(const Graph& g);

struct BoundEntry {
  Vertex vertex = 0;
  std::uint32_t j = 0;
  CentralityRecord xi;
  bool cheeger_applicable = false;  // 0 < |N^j(i)| <= n/2
  bool upper_ok = true;
  std::optional<bool> lower_ok;
};

struct BoundReport {
  std::size_t num_vertices = 0;
  std::size_t j_max = 0;
  double tol = 0.0;
  SpectralEstimate spectral;
  std::optional<Ratio> cheeger;
  std::string note;
  std::vector<BoundEntry> entries;

  std::vector<const BoundEntry*> violations() const;
};

// Checks xi^j_i <= lambda_max + tol for every (i, j <= j_max), and the
// exact Cheeger lower bound when 2 <= n <= 20.
BoundReport verify_bounds(const Graph& g, std::size_t j_max, double tol = 1e-6, std::uint64_t seed = 0,
                          unsigned workers = 0);

}  // namespace jnc
