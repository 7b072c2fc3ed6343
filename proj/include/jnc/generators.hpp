#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jnc/graph.hpp"

namespace jnc {

enum class Model { ErdosRenyi, BarabasiAlbert, WattsStrogatz, BoccalettiHwangLatora };

// "er", "ba", "ws", "bhl"
std::string model_tag(Model model);

/// Model tag plus its parameters. Unused fields are ignored by the model.
struct GeneratorSpec {
  Model model = Model::ErdosRenyi;
  std::size_t n = 0;
  double p = 0.0;       // ER, WS
  std::size_t m = 0;    // BA, BHL
  std::size_t k = 0;    // WS
  std::size_t n0 = 0;   // BHL
  std::uint64_t seed = 0;

  // Throws std::invalid_argument when the model's parameter constraints fail.
  void validate() const;

  // Canonical "er:n=4000,p=0.02,seed=1" form.
  std::string to_string() const;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct ParsedSpec {
  GeneratorSpec spec;
  std::vector<std::string> warnings;
};

// Parses "er:n=..,p=..", "ba:n=..,m=..", "ws:n=..,k=..,p=..",
// "bhl:n=..,m=..,n0=..", each with an optional seed (default
// `default_seed`). An odd WS k is rounded down with a warning. Throws
// std::invalid_argument on malformed or invalid specs.
ParsedSpec parse_generator_spec(const std::string& text, std::uint64_t default_seed = 1);

Graph generate(const GeneratorSpec& spec);

// Each unordered pair independently with probability p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// m isolated seed vertices; every later vertex links to m distinct existing
// vertices drawn proportionally to degree (uniformly while all degrees are
// zero). Exactly m (n - m) edges.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

// Ring lattice with k/2 neighbors per side, each lattice edge rewired with
// probability p to a uniform target that is neither a self-loop nor a
// duplicate. k must be even.
Graph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed);

// Clique on n0 vertices, then each arrival links to an anchor drawn
// proportionally to degree plus m - 1 distinct uniformly drawn neighbors of
// the anchor (triad formation), falling back to degree-proportional draws
// when the anchor has no unused neighbor. Exactly C(n0, 2) + m (n - n0) edges.
Graph boccaletti_hwang_latora(std::size_t n, std::size_t m, std::size_t n0, std::uint64_t seed);

// Header comment lines describing the spec and the RNG used.
std::string generator_metadata(const GeneratorSpec& spec, const Graph& g);

}  // namespace jnc
