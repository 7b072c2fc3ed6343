#include "jnc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "jnc/error.hpp"

namespace jnc {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

bool parse_size(std::string_view token, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Matches "# n=<int> m=<int>" (extra trailing fields allowed).
bool parse_canonical_header(const std::string& line, std::size_t& n) {
  std::istringstream ss(line);
  std::string hash, nfield, mfield;
  if (!(ss >> hash >> nfield >> mfield)) return false;
  if (hash != "#" || nfield.rfind("n=", 0) != 0 || mfield.rfind("m=", 0) != 0) return false;
  std::size_t m = 0;
  return parse_size(std::string_view(nfield).substr(2), n) &&
         parse_size(std::string_view(mfield).substr(2), m);
}

}  // namespace

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != num_vertices())
    throw std::invalid_argument("label count does not match vertex count");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

ParsedEdgeList parse_edge_list(std::istream& in) {
  ParsedEdgeList out;
  std::unordered_map<std::string, Vertex> index;
  std::unordered_set<std::uint64_t> seen;
  bool any_edge = false;
  std::string line;
  std::size_t lineno = 0;

  auto resolve = [&](const std::string& tok) -> Vertex {
    if (out.canonical) {
      std::size_t v = 0;
      if (!parse_size(tok, v) || v >= out.declared_vertices)
        throw ParseError(lineno, "vertex '" + tok + "' is not an index below n=" +
                                     std::to_string(out.declared_vertices));
      return static_cast<Vertex>(v);
    }
    auto [it, inserted] = index.try_emplace(tok, static_cast<Vertex>(out.labels.size()));
    if (inserted) out.labels.push_back(tok);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') {
      std::size_t n = 0;
      if (!any_edge && !out.canonical && line[first] == '#' && parse_canonical_header(line.substr(first), n)) {
        out.canonical = true;
        out.declared_vertices = n;
      }
      continue;
    }
    std::istringstream ss(line);
    std::string a, b;
    if (!(ss >> a >> b)) throw ParseError(lineno, "expected two vertex tokens");
    Vertex u = resolve(a);
    Vertex v = resolve(b);
    any_edge = true;
    if (u == v) {
      ++out.self_loops;
    } else if (!seen.insert(pair_key(u, v)).second) {
      ++out.duplicates;
    }
    out.edges.emplace_back(u, v);
  }
  if (!any_edge && !(out.canonical && out.declared_vertices > 0))
    throw ParseError(lineno, "empty edge list");
  return out;
}

ParsedEdgeList parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> counts(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::out_of_range("edge endpoint " + std::to_string(std::max(u, v)) +
                              " out of range for n=" + std::to_string(n));
    if (u == v) continue;
    ++counts[u + 1];
    ++counts[v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) counts[i] += counts[i - 1];

  std::vector<Vertex> raw(counts[n]);
  std::vector<std::size_t> fill(counts.begin(), counts.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(raw.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto begin = raw.begin() + static_cast<std::ptrdiff_t>(counts[v]);
    auto end = raw.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
    std::sort(begin, end);
    end = std::unique(begin, end);
    g.adjacency_.insert(g.adjacency_.end(), begin, end);
    g.offsets_[v + 1] = g.adjacency_.size();
  }
  g.num_edges_ = g.adjacency_.size() / 2;
  return g;
}

Graph graph_from_parsed(const ParsedEdgeList& parsed) {
  Graph g = build_graph(parsed.num_vertices(), parsed.edges);
  if (!parsed.canonical) g = g.with_labels(parsed.labels);
  return g;
}

Graph read_edge_list_file(const std::string& path, ParsedEdgeList* report) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  ParsedEdgeList parsed = parse_edge_list(in);
  Graph g = graph_from_parsed(parsed);
  if (report) *report = std::move(parsed);
  return g;
}

void write_canonical(std::ostream& out, const Graph& g) {
  out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_canonical_string(const Graph& g) {
  std::ostringstream out;
  write_canonical(out, g);
  return out.str();
}

ComponentInfo connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const std::size_t n = g.num_vertices();
  ComponentInfo info;
  info.component_id.assign(n, kUnset);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (info.component_id[s] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(info.component_sizes.size());
    std::size_t size = 0;
    info.component_id[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex v : g.neighbors(u)) {
        if (info.component_id[v] == kUnset) {
          info.component_id[v] = id;
          stack.push_back(v);
        }
      }
    }
    info.component_sizes.push_back(size);
  }
  info.is_connected = info.component_sizes.size() <= 1;
  return info;
}

InducedSubgraph largest_connected_component(const Graph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("largest component of an empty graph");
  ComponentInfo info = connected_components(g);
  // Component ids are assigned in order of their smallest vertex, so the
  // first maximum wins the tie-break.
  auto best = static_cast<std::uint32_t>(
      std::max_element(info.component_sizes.begin(), info.component_sizes.end()) -
      info.component_sizes.begin());

  InducedSubgraph sub;
  std::vector<Vertex> new_index(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (info.component_id[v] == best) {
      new_index[v] = static_cast<Vertex>(sub.original_index.size());
      sub.original_index.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex old : sub.original_index)
    for (Vertex nb : g.neighbors(old))
      if (old < nb) edges.emplace_back(new_index[old], new_index[nb]);
  sub.graph = build_graph(sub.original_index.size(), edges);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(sub.original_index.size());
    for (Vertex old : sub.original_index) labels.push_back(g.labels()[old]);
    sub.graph = sub.graph.with_labels(std::move(labels));
  }
  return sub;
}

std::size_t degree(const Graph& g, Vertex i) {
  if (i >= g.num_vertices()) throw std::out_of_range("vertex " + std::to_string(i) + " out of range");
  return g.degree(i);
}

double local_clustering(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  const std::size_t d = nb.size();
  if (d < 2) return 0.0;
  std::size_t links = 0;
  for (Vertex a : nb) {
    auto other = g.neighbors(a);
    // Both lists are sorted; count common members greater than a.
    auto it = std::upper_bound(nb.begin(), nb.end(), a);
    auto jt = std::upper_bound(other.begin(), other.end(), a);
    while (it != nb.end() && jt != other.end()) {
      if (*it < *jt) ++it;
      else if (*jt < *it) ++jt;
      else { ++links; ++it; ++jt; }
    }
  }
  return 2.0 * static_cast<double>(links) / static_cast<double>(d * (d - 1));
}

double average_clustering(const Graph& g) {
  if (g.num_vertices() == 0) return 0.0;
  double sum = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) sum += local_clustering(g, v);
  return sum / static_cast<double>(g.num_vertices());
}

}  // namespace jnc
