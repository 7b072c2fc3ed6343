#include "jnc/centrality.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "jnc/format.hpp"

namespace jnc {

std::vector<double> CentralityMatrix::values(std::size_t j) const {
  std::vector<double> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = at(v, j).value;
  return out;
}

CentralityRecord make_record(Vertex vertex, std::size_t j, std::uint64_t out_edges, std::uint64_t layer_size) {
  CentralityRecord r;
  r.vertex = vertex;
  r.j = static_cast<std::uint32_t>(j);
  r.out_edges = out_edges;
  r.layer_size = layer_size;
  r.value = layer_size == 0 ? 0.0 : static_cast<double>(out_edges) / static_cast<double>(layer_size);
  return r;
}

std::uint64_t boundary_edge_count(const Graph& g, const IndicatorVector& subset) {
  if (subset.size() != g.num_vertices()) throw std::invalid_argument("subset length does not match vertex count");
  std::uint64_t count = 0;
  for (Vertex u : subset.members())
    for (Vertex v : g.neighbors(u))
      if (!subset.test(v)) ++count;
  return count;
}

namespace {

constexpr std::int32_t kUnvisited = -1;

// Reusable per-worker BFS state. `dist` is reset only where it was written.
class LayerScanner {
 public:
  explicit LayerScanner(std::size_t n) : dist_(n, kUnvisited) { frontier_.reserve(n); }

  // Fills out_edges[0..j_max] and layer_size[0..j_max] for `root`.
  void scan(const Graph& g, Vertex root, std::size_t j_max, std::uint64_t* out_edges, std::uint64_t* layer_size) {
    std::fill(out_edges, out_edges + j_max + 1, 0);
    std::fill(layer_size, layer_size + j_max + 1, 0);
    frontier_.clear();
    frontier_.push_back(root);
    dist_[root] = 0;
    std::size_t begin = 0;
    for (std::size_t j = 0; j <= j_max && begin < frontier_.size(); ++j) {
      const std::size_t end = frontier_.size();
      const auto depth = static_cast<std::int32_t>(j);
      const bool expand = j < j_max;
      std::uint64_t crossing = 0;
      for (std::size_t q = begin; q < end; ++q) {
        for (Vertex v : g.neighbors(frontier_[q])) {
          const std::int32_t d = dist_[v];
          if (d == kUnvisited) {
            ++crossing;
            if (expand) {
              dist_[v] = depth + 1;
              frontier_.push_back(v);
            }
          } else if (d != depth) {
            ++crossing;
          }
        }
      }
      out_edges[j] = crossing;
      layer_size[j] = end - begin;
      begin = end;
    }
    for (Vertex v : frontier_) dist_[v] = kUnvisited;
  }

 private:
  std::vector<std::int32_t> dist_;
  std::vector<Vertex> frontier_;
};

}  // namespace

CentralityRecord xi(const Graph& g, Vertex i, std::size_t j) {
  if (i >= g.num_vertices()) throw std::out_of_range("vertex " + std::to_string(i) + " out of range");
  std::vector<std::uint64_t> out(j + 1), size(j + 1);
  LayerScanner(g.num_vertices()).scan(g, i, j, out.data(), size.data());
  return make_record(i, j, out[j], size[j]);
}

CentralityMatrix xi_all(const Graph& g, std::size_t j_max, unsigned workers) {
  const std::size_t n = g.num_vertices();
  CentralityMatrix cm(n, j_max);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

  constexpr std::size_t kChunk = 16;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    LayerScanner scanner(n);
    std::vector<std::uint64_t> out(j_max + 1), size(j_max + 1);
    for (;;) {
      const std::size_t start = next.fetch_add(kChunk);
      if (start >= n) break;
      const std::size_t stop = std::min(n, start + kChunk);
      for (std::size_t v = start; v < stop; ++v) {
        const auto root = static_cast<Vertex>(v);
        scanner.scan(g, root, j_max, out.data(), size.data());
        for (std::size_t j = 0; j <= j_max; ++j) cm.at(root, j) = make_record(root, j, out[j], size[j]);
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return cm;
}

CentralityMatrix xi_all_recursion(const Graph& g, std::size_t j_max) {
  const std::size_t n = g.num_vertices();
  CentralityMatrix cm(n, j_max);
  std::vector<std::uint32_t> a_chi(n);  // (A chi^j_i)_k, integer counts
  for (Vertex i = 0; i < n; ++i) {
    IndicatorVector layer(n);
    layer.set(i);
    IndicatorVector visited = layer;
    for (std::size_t j = 0; j <= j_max; ++j) {
      std::fill(a_chi.begin(), a_chi.end(), 0);
      std::uint64_t deg_sum = 0;
      const auto members = layer.members();
      for (Vertex l : members) {
        deg_sum += g.degree(l);
        for (Vertex k : g.neighbors(l)) ++a_chi[k];
      }
      std::uint64_t internal = 0;
      for (Vertex k : members) internal += a_chi[k];
      cm.at(i, j) = make_record(i, j, deg_sum - internal, layer.popcount());

      IndicatorVector next(n);
      for (Vertex k = 0; k < n; ++k)
        if (a_chi[k] != 0 && !visited.test(k)) next.set(k);
      visited |= next;
      layer = std::move(next);
    }
  }
  return cm;
}

Ratio xi_quadratic_oracle_exact(const Graph& g, Vertex i, std::size_t j) {
  const IndicatorVector x = indicator(bfs_layers(g, i, j), j);
  std::uint64_t form = 0;
  for (auto [k, l] : g.edges()) {
    const int diff = static_cast<int>(x.test(k)) - static_cast<int>(x.test(l));
    form += static_cast<std::uint64_t>(diff * diff);
  }
  if (x.popcount() == 0) return {0, 0};
  return {form, x.popcount()};
}

double xi_quadratic_oracle(const Graph& g, Vertex i, std::size_t j) {
  return xi_quadratic_oracle_exact(g, i, j).value();
}

double ksi_centrality(const Graph& g, Vertex i) {
  if (i >= g.num_vertices()) throw std::out_of_range("vertex " + std::to_string(i) + " out of range");
  const auto nb = g.neighbors(i);
  if (nb.empty()) return 0.0;
  std::vector<char> in_first(g.num_vertices(), 0);
  for (Vertex k : nb) in_first[k] = 1;
  std::uint64_t crossing = 0;
  for (Vertex k : nb)
    for (Vertex l : g.neighbors(k))
      if (!in_first[l]) ++crossing;
  return static_cast<double>(crossing) / static_cast<double>(nb.size());
}

void write_centrality_csv(std::ostream& out, const Graph& g, const CentralityMatrix& cm) {
  out << "vertex,j,out_edges,layer_size,xi\n";
  for (const auto& r : cm.records())
    out << g.label(r.vertex) << ',' << r.j << ',' << r.out_edges << ',' << r.layer_size << ','
        << format_double(r.value) << '\n';
}

}  // namespace jnc
