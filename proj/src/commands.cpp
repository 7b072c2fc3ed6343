#include "jnc/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "jnc/centrality.hpp"
#include "jnc/error.hpp"
#include "jnc/export.hpp"
#include "jnc/generators.hpp"
#include "jnc/random.hpp"
#include "jnc/spectral.hpp"

namespace fs = std::filesystem;

namespace jnc {

namespace {

struct LoadedGraph {
  Graph graph;
  std::string name;
  std::optional<std::string> generator_spec;
};

int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

void require_one_source(const RunConfig& cfg) {
  if (cfg.input.has_value() == cfg.gen.has_value())
    throw std::invalid_argument("exactly one of --input and --gen is required");
}

LoadedGraph load_graph(const RunConfig& cfg, std::ostream& err) {
  require_one_source(cfg);
  LoadedGraph loaded;
  if (cfg.gen) {
    ParsedSpec parsed = parse_generator_spec(*cfg.gen, cfg.seed);
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
    loaded.graph = generate(parsed.spec);
    loaded.name = model_tag(parsed.spec.model);
    loaded.generator_spec = parsed.spec.to_string();
  } else {
    ParsedEdgeList report;
    loaded.graph = read_edge_list_file(*cfg.input, &report);
    if (report.self_loops || report.duplicates)
      err << "warning: dropped " << report.self_loops << " self-loop(s) and merged " << report.duplicates
          << " duplicate edge(s)\n";
    loaded.name = fs::path(*cfg.input).stem().string();
  }
  return loaded;
}

// Restricts to the largest component with a warning; unlabeled graphs get
// their original indices as labels so output rows stay traceable.
Graph largest_component_with_warning(const Graph& g, std::ostream& err) {
  if (g.num_vertices() == 0 || connected_components(g).is_connected) return g;
  InducedSubgraph sub = largest_connected_component(g);
  err << "warning: input is disconnected; using the largest component (" << sub.graph.num_vertices() << " of "
      << g.num_vertices() << " vertices)\n";
  if (!g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(sub.original_index.size());
    for (Vertex v : sub.original_index) labels.push_back(std::to_string(v));
    return sub.graph.with_labels(std::move(labels));
  }
  return sub.graph;
}

void with_output(const std::optional<std::string>& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& write) {
  if (!path) {
    write(fallback);
    return;
  }
  const fs::path p(*path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream file(p, std::ios::binary);
  if (!file) throw IoError("cannot write '" + *path + "'");
  write(file);
  if (!file) throw IoError("write failed for '" + *path + "'");
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path.string() + "'");
  file << content;
}

std::vector<DistributionReport> analyze_matrix(const CentralityMatrix& cm, const RunConfig& cfg) {
  std::vector<DistributionReport> per_j;
  for (std::size_t j = 0; j <= cm.j_max(); ++j) {
    const auto values = cm.values(j);
    per_j.push_back(shape_verdict(values, cfg.bins, cfg.thresholds, j));
  }
  return per_j;
}

// Values are rebuilt from the exact integer columns.
std::map<std::size_t, std::vector<double>> read_centrality_csv(std::istream& in) {
  std::map<std::size_t, std::vector<double>> by_j;
  std::string line;
  std::getline(in, line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string vertex, j, out_edges, layer_size;
    if (!std::getline(row, vertex, ',') || !std::getline(row, j, ',') || !std::getline(row, out_edges, ',') ||
        !std::getline(row, layer_size, ','))
      throw ParseError(lineno, "expected vertex,j,out_edges,layer_size,xi");
    try {
      const auto size = std::stoull(layer_size);
      const auto out = std::stoull(out_edges);
      by_j[std::stoull(j)].push_back(make_record(0, 0, out, size).value);
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "non-numeric centrality field");
    }
  }
  return by_j;
}

void write_analysis(const fs::path& dir, const std::string& name, const std::optional<std::string>& spec,
                    const std::vector<DistributionReport>& per_j) {
  fs::create_directories(dir);
  write_file(dir / (name + ".json"), distribution_report_json(name, spec, per_j).dump(2) + "\n");
  for (const auto& r : per_j) {
    std::ostringstream csv;
    write_plot_csv(csv, r.histogram);
    write_file(dir / (name + "_j" + std::to_string(r.j) + ".csv"), csv.str());
  }
}

}  // namespace

std::vector<GeneratorSpec> reproduction_specs(double scale, std::uint64_t seed, std::vector<std::string>* warnings) {
  if (!(scale > 0)) throw std::invalid_argument("scale must be positive");
  const auto n = static_cast<std::size_t>(std::llround(4000.0 * scale));
  if (n < 50) throw std::invalid_argument("scale " + std::to_string(scale) + " gives n=" + std::to_string(n) + " < 50");
  auto warn = [&](const std::string& w) {
    if (warnings) warnings->push_back(w);
  };

  double p_er = 0.02 * 4000.0 / static_cast<double>(n);
  if (p_er > 1.0) {
    warn("er: p clamped to 1, mean degree cannot be preserved at n=" + std::to_string(n));
    p_er = 1.0;
  }
  const std::size_t m_bhl = 20;
  const auto n0 = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(100.0 * scale)), m_bhl, n - 1);

  std::vector<GeneratorSpec> specs;
  specs.push_back({.model = Model::ErdosRenyi, .n = n, .p = p_er, .seed = seed});
  specs.push_back({.model = Model::BarabasiAlbert, .n = n, .m = 43, .seed = seed});
  // 21 is odd; the ring lattice needs an even k.
  warn("ws: odd k=21 rounded down to 20");
  specs.push_back({.model = Model::WattsStrogatz, .n = n, .p = 0.3, .k = 20, .seed = seed});
  specs.push_back({.model = Model::BoccalettiHwangLatora, .n = n, .m = m_bhl, .n0 = n0, .seed = seed});
  for (const auto& s : specs) s.validate();
  return specs;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    if (!cfg.gen) throw std::invalid_argument("generate requires --gen SPEC");
    ParsedSpec parsed = parse_generator_spec(*cfg.gen, cfg.seed);
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
    const Graph g = generate(parsed.spec);
    with_output(cfg.out, out, [&](std::ostream& os) {
      os << generator_metadata(parsed.spec, g);
      write_canonical(os, g);
    });
    return static_cast<int>(kExitOk);
  });
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    LoadedGraph loaded = load_graph(cfg, err);
    const Graph g = largest_component_with_warning(loaded.graph, err);
    const CentralityMatrix cm = xi_all(g, cfg.j_max, cfg.workers);
    with_output(cfg.out, out, [&](std::ostream& os) { write_centrality_csv(os, g, cm); });
    return static_cast<int>(kExitOk);
  });
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    require_one_source(cfg);
    std::string name;
    std::optional<std::string> spec;
    std::vector<DistributionReport> per_j;

    bool is_csv = false;
    if (cfg.input) {
      std::ifstream in(*cfg.input);
      if (!in) throw IoError("cannot open '" + *cfg.input + "'");
      std::string first;
      std::getline(in, first);
      is_csv = first.rfind("vertex,j,", 0) == 0;
    }
    if (is_csv) {
      std::ifstream in(*cfg.input);
      name = fs::path(*cfg.input).stem().string();
      for (auto& [j, values] : read_centrality_csv(in)) per_j.push_back(shape_verdict(values, cfg.bins, cfg.thresholds, j));
    } else {
      LoadedGraph loaded = load_graph(cfg, err);
      name = loaded.name;
      spec = loaded.generator_spec;
      const Graph g = largest_component_with_warning(loaded.graph, err);
      per_j = analyze_matrix(xi_all(g, cfg.j_max, cfg.workers), cfg);
    }

    if (cfg.out) {
      write_analysis(*cfg.out, name, spec, per_j);
    } else {
      out << distribution_report_json(name, spec, per_j).dump(2) << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    LoadedGraph loaded = load_graph(cfg, err);
    const Graph& g = loaded.graph;
    const BoundReport report = verify_bounds(g, cfg.j_max, cfg.tol, cfg.seed, cfg.workers);
    if (!report.note.empty()) err << "note: " << report.note << '\n';
    with_output(cfg.out, out, [&](std::ostream& os) { os << bound_report_json(report, g).dump(2) << '\n'; });
    const auto bad = report.violations();
    for (const BoundEntry* e : bad)
      err << "violation: vertex " << g.label(e->vertex) << " j=" << e->j << " xi=" << e->xi.value
          << (e->upper_ok ? "" : " exceeds lambda_max") << (e->lower_ok && !*e->lower_ok ? " below Cheeger number" : "")
          << '\n';
    return static_cast<int>(bad.empty() ? kExitOk : kExitVerifyFailed);
  });
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    if (!cfg.out) throw std::invalid_argument("reproduce requires --out DIR");
    std::vector<std::string> warnings;
    const auto specs = reproduction_specs(cfg.scale, cfg.seed, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';

    const fs::path root(*cfg.out);
    for (const char* sub : {"graphs", "centrality", "reports"}) fs::create_directories(root / sub);

    std::map<std::string, std::vector<DistributionReport>> reports;
    nlohmann::json manifest;
    manifest["scale"] = cfg.scale;
    manifest["seed"] = cfg.seed;
    manifest["j_max"] = cfg.j_max;
    manifest["bins"] = cfg.bins;
    manifest["r2_threshold"] = cfg.thresholds.min_r_squared;
    manifest["skew_threshold"] = cfg.thresholds.min_skewness;
    manifest["rng"] = std::string(kRngName);
    manifest["stream_seed"] = std::string(kSeedDerivation);
    manifest["warnings"] = warnings;
    manifest["networks"] = nlohmann::json::array();

    auto process = [&](const std::string& name, const Graph& g, const std::optional<std::string>& spec) {
      const CentralityMatrix cm = xi_all(g, cfg.j_max, cfg.workers);
      std::ostringstream csv;
      write_centrality_csv(csv, g, cm);
      write_file(root / "centrality" / (name + ".csv"), csv.str());
      auto per_j = analyze_matrix(cm, cfg);
      write_analysis(root / "reports", name, spec, per_j);
      reports[name] = std::move(per_j);
      nlohmann::json entry = {{"name", name}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
      if (spec) entry["generator_spec"] = *spec;
      manifest["networks"].push_back(entry);
    };

    for (const auto& spec : specs) {
      const Graph g = generate(spec);
      const std::string name = model_tag(spec.model);
      std::ostringstream graph_text;
      graph_text << generator_metadata(spec, g);
      write_canonical(graph_text, g);
      write_file(root / "graphs" / (name + ".txt"), graph_text.str());
      process(name, g, spec.to_string());
    }
    for (const auto& path : cfg.real_inputs) {
      ParsedEdgeList report;
      const Graph raw = read_edge_list_file(path, &report);
      process("real_" + fs::path(path).stem().string(), largest_component_with_warning(raw, err), std::nullopt);
    }

    ComparisonTable table = compare_networks(reports);
    if (cfg.real_inputs.empty()) {
      table.notes.push_back("no real networks supplied; artificial networks only");
      err << "notice: no real networks supplied; table covers artificial networks only\n";
    }
    const std::string text = format_comparison(table);
    write_file(root / "comparison.txt", text);
    write_file(root / "comparison.json", comparison_json(table).dump(2) + "\n");
    write_file(root / "manifest.json", manifest.dump(2) + "\n");
    out << text;
    return static_cast<int>(kExitOk);
  });
}

}  // namespace jnc
