#include "jnc/export.hpp"

#include <cmath>
#include <ostream>

#include "jnc/format.hpp"

namespace jnc {

using nlohmann::json;

namespace {

json ratio_json(const Ratio& r) { return {{"num", r.num}, {"den", r.den}, {"value", r.value()}}; }

json vertex_json(const Graph& g, Vertex v) {
  if (g.has_labels()) return g.label(v);
  return v;
}

}  // namespace

json bound_report_json(const BoundReport& report, const Graph& g) {
  json out;
  out["num_vertices"] = report.num_vertices;
  out["j_max"] = report.j_max;
  out["tol"] = report.tol;
  out["lambda_max"] = report.spectral.lambda_max;
  out["power_iterations"] = report.spectral.iterations;
  out["residual"] = report.spectral.residual;
  out["converged"] = report.spectral.converged;
  out["cheeger"] = report.cheeger ? ratio_json(*report.cheeger) : json(nullptr);
  out["note"] = report.note;
  out["violations"] = report.violations().size();
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({
        {"vertex", vertex_json(g, e.vertex)},
        {"j", e.j},
        {"xi", e.xi.value},
        {"out_edges", e.xi.out_edges},
        {"layer_size", e.xi.layer_size},
        {"lambda_max", report.spectral.lambda_max},
        {"cheeger_applicable", e.cheeger_applicable},
        {"cheeger", report.cheeger ? json(report.cheeger->value()) : json(nullptr)},
        {"upper_ok", e.upper_ok},
        {"lower_ok", e.lower_ok ? json(*e.lower_ok) : json(nullptr)},
    });
  }
  out["entries"] = std::move(entries);
  return out;
}

json distribution_report_json(const std::string& name, const std::optional<std::string>& generator_spec,
                              const std::vector<DistributionReport>& per_j) {
  json out;
  out["name"] = name;
  if (generator_spec) out["generator_spec"] = *generator_spec;
  json rows = json::array();
  for (const auto& r : per_j) {
    json row;
    row["j"] = r.j;
    row["bin_edges"] = r.histogram.bin_edges;
    row["counts"] = r.histogram.counts;
    row["slope"] = r.fit ? json(r.fit->slope) : json(nullptr);
    row["intercept"] = r.fit ? json(r.fit->intercept) : json(nullptr);
    row["r2"] = r.fit ? json(r.fit->r_squared) : json(nullptr);
    row["points_used"] = r.fit ? r.fit->points_used : 0;
    row["skewness"] = r.skewness ? json(*r.skewness) : json(nullptr);
    row["verdict"] = verdict_name(r.verdict);
    rows.push_back(std::move(row));
  }
  out["per_j"] = std::move(rows);
  return out;
}

json comparison_json(const ComparisonTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json verdicts = json::object();
    for (std::size_t k = 0; k < row.js.size(); ++k) verdicts[std::to_string(row.js[k])] = verdict_name(row.verdicts[k]);
    rows.push_back({{"name", row.name}, {"verdicts", verdicts}, {"real_like", row.real_like}, {"notes", row.notes}});
  }
  return {{"networks", rows}, {"notes", table.notes}};
}

void write_plot_csv(std::ostream& out, const Histogram& h) {
  out << "bin_mid,count,ln_count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out << format_double(h.midpoint(b)) << ',' << h.counts[b] << ',';
    if (h.counts[b] > 0) out << format_double(std::log(static_cast<double>(h.counts[b])));
    out << '\n';
  }
}

}  // namespace jnc
