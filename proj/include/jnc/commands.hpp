#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jnc/analysis.hpp"
#include "jnc/generators.hpp"
#include "jnc/layers.hpp"

namespace jnc {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitIo = 3 };

struct RunConfig {
  std::optional<std::string> input;     // edge list (or centrality CSV for analyze)
  std::optional<std::string> gen;       // generator spec string
  std::size_t j_max = kDefaultJMax;
  std::size_t bins = kDefaultBins;
  Thresholds thresholds;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  std::optional<std::string> out;       // file for generate/compute/verify, directory otherwise
  unsigned workers = 0;                 // 0: hardware concurrency
  double scale = 1.0;
  std::vector<std::string> real_inputs;  // extra edge lists for reproduce
};

// Each command reports warnings and errors on `err` and returns an ExitCode.
// Output goes to cfg.out, or to `out` when no path is configured.
int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Paper-scale parameter sets with vertex counts multiplied by `scale` and
// mean degrees preserved. Throws std::invalid_argument if n < 50.
std::vector<GeneratorSpec> reproduction_specs(double scale, std::uint64_t seed,
                                                     std::vector<std::string>* warnings = nullptr);

}  // namespace jnc
