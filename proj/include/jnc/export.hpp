#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jnc/analysis.hpp"
#include "jnc/graph.hpp"
#include "jnc/spectral.hpp"

namespace jnc {

// {vertex, j, xi, lambda_max, cheeger_applicable, cheeger, upper_ok,
// lower_ok} per entry, plus a summary header.
nlohmann::json bound_report_json(const BoundReport& report, const Graph& g);

// {name, generator_spec?, per_j: [{j, bin_edges, counts, slope, intercept,
// r2, skewness, verdict}]}
nlohmann::json distribution_report_json(const std::string& name, const std::optional<std::string>& generator_spec,
                                        const std::vector<DistributionReport>& per_j);

nlohmann::json comparison_json(const ComparisonTable& table);

// "bin_mid,count,ln_count"; ln_count is left empty for empty bins.
void write_plot_csv(std::ostream& out, const Histogram& h);

}  // namespace jnc
