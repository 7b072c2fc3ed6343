#include "jnc/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "jnc/format.hpp"
#include "jnc/random.hpp"

namespace jnc {

std::string model_tag(Model model) {
  switch (model) {
    case Model::ErdosRenyi: return "er";
    case Model::BarabasiAlbert: return "ba";
    case Model::WattsStrogatz: return "ws";
    case Model::BoccalettiHwangLatora: return "bhl";
  }
  return "?";
}

void GeneratorSpec::validate() const {
  auto fail = [&](const std::string& why) { throw std::invalid_argument(model_tag(model) + ": " + why); };
  switch (model) {
    case Model::ErdosRenyi:
      if (!(p >= 0.0 && p <= 1.0)) fail("p must lie in [0, 1]");
      break;
    case Model::BarabasiAlbert:
      if (m < 1 || m >= n) fail("need 1 <= m < n");
      break;
    case Model::WattsStrogatz:
      if (k == 0 || k >= n) fail("need 0 < k < n");
      if (k % 2 != 0) fail("k must be even");
      if (!(p >= 0.0 && p <= 1.0)) fail("p must lie in [0, 1]");
      break;
    case Model::BoccalettiHwangLatora:
      if (m < 1 || m > n0 || n0 >= n) fail("need 1 <= m <= n0 < n");
      break;
  }
}

std::string GeneratorSpec::to_string() const {
  std::ostringstream s;
  s << model_tag(model) << ":n=" << n;
  switch (model) {
    case Model::ErdosRenyi: s << ",p=" << format_double(p); break;
    case Model::BarabasiAlbert: s << ",m=" << m; break;
    case Model::WattsStrogatz: s << ",k=" << k << ",p=" << format_double(p); break;
    case Model::BoccalettiHwangLatora: s << ",m=" << m << ",n0=" << n0; break;
  }
  s << ",seed=" << seed;
  return s.str();
}

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw std::invalid_argument("bad value '" + value + "' for " + key);
  return out;
}

}  // namespace

ParsedSpec parse_generator_spec(const std::string& text, std::uint64_t default_seed) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("generator spec '" + text + "' lacks 'model:'");
  const std::string tag = text.substr(0, colon);

  ParsedSpec parsed;
  GeneratorSpec& spec = parsed.spec;
  std::vector<std::string> required;
  if (tag == "er") {
    spec.model = Model::ErdosRenyi;
    required = {"n", "p"};
  } else if (tag == "ba") {
    spec.model = Model::BarabasiAlbert;
    required = {"n", "m"};
  } else if (tag == "ws") {
    spec.model = Model::WattsStrogatz;
    required = {"n", "k", "p"};
  } else if (tag == "bhl") {
    spec.model = Model::BoccalettiHwangLatora;
    required = {"n", "m", "n0"};
  } else {
    throw std::invalid_argument("unknown model '" + tag + "'");
  }

  std::map<std::string, std::string> fields;
  std::istringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const bool known = key == "seed" || std::find(required.begin(), required.end(), key) != required.end();
    if (!known) throw std::invalid_argument("unknown parameter '" + key + "' for " + tag);
    if (!fields.emplace(key, item.substr(eq + 1)).second)
      throw std::invalid_argument("parameter '" + key + "' given twice");
  }
  for (const auto& key : required)
    if (!fields.count(key)) throw std::invalid_argument(tag + " requires parameter '" + key + "'");

  spec.n = parse_number<std::size_t>("n", fields["n"]);
  if (fields.count("p")) spec.p = parse_number<double>("p", fields["p"]);
  if (fields.count("m")) spec.m = parse_number<std::size_t>("m", fields["m"]);
  if (fields.count("k")) spec.k = parse_number<std::size_t>("k", fields["k"]);
  if (fields.count("n0")) spec.n0 = parse_number<std::size_t>("n0", fields["n0"]);
  spec.seed = fields.count("seed") ? parse_number<std::uint64_t>("seed", fields["seed"]) : default_seed;

  if (spec.model == Model::WattsStrogatz && spec.k % 2 == 1 && spec.k < spec.n) {
    parsed.warnings.push_back("ws: odd k=" + std::to_string(spec.k) + " rounded down to " +
                              std::to_string(spec.k - 1));
    --spec.k;
  }
  spec.validate();
  return parsed;
}

Graph generate(const GeneratorSpec& spec) {
  spec.validate();
  switch (spec.model) {
    case Model::ErdosRenyi: return erdos_renyi(spec.n, spec.p, spec.seed);
    case Model::BarabasiAlbert: return barabasi_albert(spec.n, spec.m, spec.seed);
    case Model::WattsStrogatz: return watts_strogatz(spec.n, spec.k, spec.p, spec.seed);
    case Model::BoccalettiHwangLatora: return boccaletti_hwang_latora(spec.n, spec.m, spec.n0, spec.seed);
  }
  throw std::logic_error("unreachable");
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  GeneratorSpec{.model = Model::ErdosRenyi, .n = n, .p = p}.validate();
  Rng rng(seed, "er");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

namespace {

/// Degree-proportional sampling over vertices [0, count) by inversion of a
/// cumulative degree array, rebuilt once per arrival.
class DegreeSampler {
 public:
  void rebuild(const std::vector<std::size_t>& degree, std::size_t count) {
    cumulative_.resize(count);
    std::uint64_t acc = 0;
    for (std::size_t v = 0; v < count; ++v) {
      acc += degree[v];
      cumulative_[v] = acc;
    }
  }

  std::uint64_t total() const { return cumulative_.empty() ? 0 : cumulative_.back(); }

  // Rejects vertices already in `taken`; uniform over [0, count) while the
  // total degree is zero.
  Vertex draw(Rng& rng, const std::vector<Vertex>& taken) const {
    for (;;) {
      Vertex v;
      if (total() == 0) {
        v = static_cast<Vertex>(rng.below(cumulative_.size()));
      } else {
        const std::uint64_t r = rng.below(total());
        v = static_cast<Vertex>(std::upper_bound(cumulative_.begin(), cumulative_.end(), r) - cumulative_.begin());
      }
      if (std::find(taken.begin(), taken.end(), v) == taken.end()) return v;
    }
  }

 private:
  std::vector<std::uint64_t> cumulative_;
};

}  // namespace

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  GeneratorSpec{.model = Model::BarabasiAlbert, .n = n, .m = m}.validate();
  Rng rng(seed, "ba");
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  edges.reserve(m * (n - m));
  DegreeSampler sampler;
  std::vector<Vertex> targets;
  for (std::size_t t = m; t < n; ++t) {
    sampler.rebuild(degree, t);
    targets.clear();
    while (targets.size() < m) targets.push_back(sampler.draw(rng, targets));
    for (Vertex v : targets) {
      edges.emplace_back(static_cast<Vertex>(t), v);
      ++degree[v];
    }
    degree[t] = m;
  }
  return build_graph(n, edges);
}

Graph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  GeneratorSpec{.model = Model::WattsStrogatz, .n = n, .p = p, .k = k}.validate();
  Rng rng(seed, "ws");
  std::vector<std::vector<Vertex>> adj(n);
  auto connected = [&](Vertex a, Vertex b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };
  auto unlink = [&](Vertex a, Vertex b) {
    adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
    adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
  };
  for (std::size_t s = 1; s <= k / 2; ++s)
    for (std::size_t u = 0; u < n; ++u) {
      const auto v = static_cast<Vertex>((u + s) % n);
      adj[u].push_back(v);
      adj[v].push_back(static_cast<Vertex>(u));
    }

  for (std::size_t s = 1; s <= k / 2; ++s) {
    for (std::size_t uu = 0; uu < n; ++uu) {
      const auto u = static_cast<Vertex>(uu);
      const auto v = static_cast<Vertex>((uu + s) % n);
      if (!rng.bernoulli(p)) continue;
      if (adj[u].size() >= n - 1) continue;
      Vertex w;
      do {
        w = static_cast<Vertex>(rng.below(n));
      } while (w == u || connected(u, w));
      unlink(u, v);
      adj[u].push_back(w);
      adj[w].push_back(u);
    }
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph boccaletti_hwang_latora(std::size_t n, std::size_t m, std::size_t n0, std::uint64_t seed) {
  GeneratorSpec{.model = Model::BoccalettiHwangLatora, .n = n, .m = m, .n0 = n0}.validate();
  Rng rng(seed, "bhl");
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::size_t> degree(n, 0);
  for (Vertex u = 0; u < n0; ++u)
    for (Vertex v = u + 1; v < n0; ++v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  for (std::size_t v = 0; v < n0; ++v) degree[v] = n0 - 1;

  DegreeSampler sampler;
  std::vector<Vertex> targets;
  std::vector<Vertex> pool;
  for (std::size_t t = n0; t < n; ++t) {
    sampler.rebuild(degree, t);
    targets.clear();
    const Vertex anchor = sampler.draw(rng, targets);
    targets.push_back(anchor);
    pool = adj[anchor];
    while (targets.size() < m) {
      if (!pool.empty()) {
        const std::size_t pick = rng.below(pool.size());
        targets.push_back(pool[pick]);
        pool[pick] = pool.back();
        pool.pop_back();
      } else {
        targets.push_back(sampler.draw(rng, targets));
      }
    }
    const auto tv = static_cast<Vertex>(t);
    for (Vertex v : targets) {
      adj[tv].push_back(v);
      adj[v].push_back(tv);
      ++degree[v];
    }
    degree[t] = m;
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

std::string generator_metadata(const GeneratorSpec& spec, const Graph& g) {
  std::ostringstream s;
  s << "# model=" << model_tag(spec.model) << " n=" << spec.n;
  switch (spec.model) {
    case Model::ErdosRenyi: s << " p=" << format_double(spec.p); break;
    case Model::BarabasiAlbert: s << " m=" << spec.m; break;
    case Model::WattsStrogatz: s << " k=" << spec.k << " p=" << format_double(spec.p); break;
    case Model::BoccalettiHwangLatora: s << " m=" << spec.m << " n0=" << spec.n0; break;
  }
  s << " seed=" << spec.seed << " vertices=" << g.num_vertices() << " edges=" << g.num_edges() << '\n';
  s << "# spec=" << spec.to_string() << " rng=" << kRngName << " stream_seed=" << kSeedDerivation
    << " stream=" << model_tag(spec.model) << '\n';
  return s.str();
}

}  // namespace jnc
