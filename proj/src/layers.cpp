#include "jnc/layers.hpp"

#include <stdexcept>
#include <string>

namespace jnc {

std::vector<Vertex> IndicatorVector::members() const {
  std::vector<Vertex> out;
  out.reserve(popcount_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

void IndicatorVector::recount() {
  popcount_ = 0;
  for (auto w : words_) popcount_ += static_cast<std::size_t>(std::popcount(w));
}

IndicatorVector& IndicatorVector::operator|=(const IndicatorVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  recount();
  return *this;
}

IndicatorVector& IndicatorVector::operator^=(const IndicatorVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  recount();
  return *this;
}

IndicatorVector& IndicatorVector::subtract(const IndicatorVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  recount();
  return *this;
}

LayerSet bfs_layers(const Graph& g, Vertex root, std::optional<std::size_t> j_max) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw std::out_of_range("root " + std::to_string(root) + " out of range");
  const std::size_t depth_limit = j_max.value_or(n);

  LayerSet ls;
  ls.root = root;
  ls.num_vertices = n;
  std::vector<bool> seen(n, false);
  seen[root] = true;
  ls.layers.push_back({root});
  while (ls.layers.size() <= depth_limit) {
    std::vector<Vertex> next;
    for (Vertex u : ls.layers.back())
      for (Vertex v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          next.push_back(v);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    ls.layers.push_back(std::move(next));
  }
  return ls;
}

IndicatorVector indicator(const LayerSet& layers, std::size_t j) {
  IndicatorVector x(layers.num_vertices);
  if (j < layers.layers.size())
    for (Vertex v : layers.layers[j]) x.set(v);
  return x;
}

IndicatorVector adjacent_to(const Graph& g, const IndicatorVector& x) {
  IndicatorVector out(g.num_vertices());
  for (Vertex l : x.members())
    for (Vertex k : g.neighbors(l)) out.set(k);
  return out;
}

namespace {

// Shared initialization chi^0 = I, chi^1 = A.
std::vector<IndicatorMatrix> identity_and_adjacency(const Graph& g, std::size_t j_max) {
  const std::size_t n = g.num_vertices();
  std::vector<IndicatorMatrix> chi;
  chi.reserve(j_max + 1);
  IndicatorMatrix eye(n, IndicatorVector(n));
  for (Vertex i = 0; i < n; ++i) eye[i].set(i);
  chi.push_back(std::move(eye));
  if (j_max >= 1) {
    IndicatorMatrix adj(n, IndicatorVector(n));
    for (Vertex i = 0; i < n; ++i)
      for (Vertex k : g.neighbors(i)) adj[i].set(k);
    chi.push_back(std::move(adj));
  }
  return chi;
}

}  // namespace

std::vector<IndicatorMatrix> paper_recursion_layers(const Graph& g, std::size_t j_max) {
  const std::size_t n = g.num_vertices();
  auto chi = identity_and_adjacency(g, j_max);
  for (std::size_t j = 2; j <= j_max; ++j) {
    IndicatorMatrix next(n);
    for (Vertex i = 0; i < n; ++i) {
      next[i] = adjacent_to(g, chi[j - 1][i]);
      next[i] ^= chi[j - 2][i];
    }
    chi.push_back(std::move(next));
  }
  return chi;
}

std::vector<IndicatorMatrix> corrected_recursion_layers(const Graph& g, std::size_t j_max) {
  const std::size_t n = g.num_vertices();
  auto chi = identity_and_adjacency(g, j_max);
  if (j_max < 2) return chi;
  IndicatorMatrix visited = chi[0];
  for (Vertex i = 0; i < n; ++i) visited[i] |= chi[1][i];
  for (std::size_t j = 2; j <= j_max; ++j) {
    IndicatorMatrix next(n);
    for (Vertex i = 0; i < n; ++i) {
      next[i] = adjacent_to(g, chi[j - 1][i]);
      next[i].subtract(visited[i]);
      visited[i] |= next[i];
    }
    chi.push_back(std::move(next));
  }
  return chi;
}

}  // namespace jnc
