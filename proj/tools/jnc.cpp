// Command-line front end: generate, compute, analyze, verify, reproduce.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jnc/commands.hpp"

namespace {

void add_source_flags(CLI::App* cmd, jnc::RunConfig& cfg) {
  cmd->add_option("--input", cfg.input, "Edge list file");
  cmd->add_option("--gen", cfg.gen, "Generator spec, e.g. er:n=4000,p=0.02,seed=1");
}

void add_common_flags(CLI::App* cmd, jnc::RunConfig& cfg) {
  cmd->add_option("--jmax", cfg.j_max, "Largest neighborhood depth")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Seed for generators and power iteration")->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "Worker threads (0: all cores)")->capture_default_str();
}

void add_analysis_flags(CLI::App* cmd, jnc::RunConfig& cfg) {
  cmd->add_option("--bins", cfg.bins, "Histogram bins")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--r2", cfg.thresholds.min_r_squared, "R^2 threshold for exponential-like")->capture_default_str();
  cmd->add_option("--skew", cfg.thresholds.min_skewness, "Skewness threshold for exponential-like")
      ->capture_default_str();
  cmd->add_flag_callback(
      "--ols", [&cfg] { cfg.thresholds.weighting = jnc::FitWeighting::Unweighted; },
      "Unweighted least-squares log fit instead of count-weighted");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"j-neighborhood centralities of undirected graphs"};
  app.require_subcommand(1);
  jnc::RunConfig cfg;

  auto* generate = app.add_subcommand("generate", "Write a generated graph as a canonical edge list");
  generate->add_option("--gen", cfg.gen, "Generator spec")->required();
  generate->add_option("--seed", cfg.seed, "Seed when the spec has none")->capture_default_str();
  generate->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* compute = app.add_subcommand("compute", "Centrality CSV for every vertex and j <= jmax");
  add_source_flags(compute, cfg);
  add_common_flags(compute, cfg);
  compute->add_option("--out", cfg.out, "Output CSV (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Distribution reports per j");
  add_source_flags(analyze, cfg);
  add_common_flags(analyze, cfg);
  add_analysis_flags(analyze, cfg);
  analyze->add_option("--out", cfg.out, "Output directory (default: JSON on stdout)");

  auto* verify = app.add_subcommand("verify", "Check the lambda_max and Cheeger bounds");
  add_source_flags(verify, cfg);
  add_common_flags(verify, cfg);
  verify->add_option("--tol", cfg.tol, "Tolerance for the eigenvalue bound")->capture_default_str();
  verify->add_option("--out", cfg.out, "Output JSON (default stdout)");

  auto* reproduce = app.add_subcommand("reproduce", "Generate, compute and compare the four artificial models");
  add_common_flags(reproduce, cfg);
  add_analysis_flags(reproduce, cfg);
  reproduce->add_option("--scale", cfg.scale, "Vertex-count multiplier")->capture_default_str();
  reproduce->add_option("--real", cfg.real_inputs, "Real network edge lists to include");
  reproduce->add_option("--out", cfg.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : jnc::kExitUsage;
  }

  if (*generate) return jnc::cmd_generate(cfg, std::cout, std::cerr);
  if (*compute) return jnc::cmd_compute(cfg, std::cout, std::cerr);
  if (*analyze) return jnc::cmd_analyze(cfg, std::cout, std::cerr);
  if (*verify) return jnc::cmd_verify(cfg, std::cout, std::cerr);
  return jnc::cmd_reproduce(cfg, std::cout, std::cerr);
}
