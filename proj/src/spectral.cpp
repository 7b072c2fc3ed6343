#include "jnc/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "jnc/random.hpp"

namespace jnc {

double laplacian_quadratic_form(const Graph& g, std::span<const double> x) {
  if (x.size() != g.num_vertices()) throw std::invalid_argument("vector length does not match vertex count");
  double sum = 0.0;
  for (Vertex k = 0; k < g.num_vertices(); ++k)
    for (Vertex l : g.neighbors(k))
      if (k < l) {
        const double d = x[k] - x[l];
        sum += d * d;
      }
  return sum;
}

void laplacian_apply(const Graph& g, std::span<const double> x, std::span<double> y) {
  for (Vertex k = 0; k < g.num_vertices(); ++k) {
    double acc = static_cast<double>(g.degree(k)) * x[k];
    for (Vertex l : g.neighbors(k)) acc -= x[l];
    y[k] = acc;
  }
}

SpectralEstimate lambda_max(const Graph& g, double tol, std::size_t max_iter, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("lambda_max of an empty graph");
  if (max_iter == 0) max_iter = 10 * n + 1000;

  Rng rng(seed, "lambda_max");
  std::vector<double> x(n), y(n);
  for (auto& v : x) v = 2.0 * rng.uniform() - 1.0;
  auto normalize = [](std::vector<double>& v) {
    double s = 0.0;
    for (double a : v) s += a * a;
    s = std::sqrt(s);
    if (s > 0.0)
      for (double& a : v) a /= s;
    return s;
  };
  normalize(x);

  SpectralEstimate est;
  double previous = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    laplacian_apply(g, x, y);
    double rq = 0.0;
    for (std::size_t k = 0; k < n; ++k) rq += x[k] * y[k];
    double residual = 0.0;
    for (std::size_t k = 0; k < n; ++k) residual = std::max(residual, std::abs(y[k] - rq * x[k]));
    est.lambda_max = rq;
    est.iterations = it;
    est.residual = residual;
    if (residual < tol) {
      est.converged = true;
      break;
    }
    if (normalize(y) == 0.0) {
      est.converged = true;
      break;
    }
    x.swap(y);
    if (it > 1 && std::abs(rq - previous) < tol) {
      est.converged = true;
      break;
    }
    previous = rq;
  }
  return est;
}

Ratio cheeger_brute_force(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxCheegerVertices)
    throw std::invalid_argument("exhaustive Cheeger number refused for n=" + std::to_string(n) + " > 20");
  if (n < 2) throw std::invalid_argument("Cheeger number needs at least two vertices");
  if (!connected_components(g).is_connected) return {0, 1};

  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= 1u << u;

  Ratio best{g.num_edges() + 1, 1};
  std::uint32_t set = 0;
  std::uint64_t boundary = 0;
  std::uint64_t size = 0;
  const std::uint32_t total = 1u << n;
  for (std::uint32_t step = 1; step < total; ++step) {
    const auto v = static_cast<unsigned>(std::countr_zero(step));
    const std::uint32_t bit = 1u << v;
    const auto deg = static_cast<std::uint64_t>(g.degree(v));
    if (set & bit) {
      set &= ~bit;
      boundary -= deg - 2 * static_cast<std::uint64_t>(std::popcount(adj[v] & set));
      --size;
    } else {
      boundary += deg - 2 * static_cast<std::uint64_t>(std::popcount(adj[v] & set));
      set |= bit;
      ++size;
    }
    if (2 * size <= n) {
      const Ratio candidate{boundary, size};
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

std::vector<const BoundEntry*> BoundReport::violations() const {
  std::vector<const BoundEntry*> out;
  for (const auto& e : entries)
    if (!e.upper_ok || (e.lower_ok && !*e.lower_ok)) out.push_back(&e);
  return out;
}

BoundReport verify_bounds(const Graph& g, std::size_t j_max, double tol, std::uint64_t seed, unsigned workers) {
  const std::size_t n = g.num_vertices();
  BoundReport report;
  report.num_vertices = n;
  report.j_max = j_max;
  report.tol = tol;
  if (n == 0) {
    report.note = "empty graph";
    return report;
  }
  report.spectral = lambda_max(g, kDefaultSpectralTol, 0, seed);
  if (n > kMaxCheegerVertices) {
    report.note = "n > 20: Cheeger lower bound skipped, upper bound only";
  } else if (n >= 2) {
    report.cheeger = cheeger_brute_force(g);
  } else {
    report.note = "n < 2: Cheeger number undefined";
  }

  const CentralityMatrix cm = xi_all(g, j_max, workers);
  report.entries.reserve(n * (j_max + 1));
  for (Vertex i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= j_max; ++j) {
      BoundEntry e;
      e.vertex = i;
      e.j = static_cast<std::uint32_t>(j);
      e.xi = cm.at(i, j);
      e.upper_ok = e.xi.value <= report.spectral.lambda_max + tol;
      e.cheeger_applicable = e.xi.layer_size > 0 && 2 * e.xi.layer_size <= n;
      if (e.cheeger_applicable && report.cheeger) e.lower_ok = e.xi.ratio() >= *report.cheeger;
      report.entries.push_back(e);
    }
  }
  return report;
}

}  // namespace jnc
