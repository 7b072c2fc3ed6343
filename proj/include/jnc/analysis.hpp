#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jnc {

struct Histogram {
  std::vector<double> bin_edges;  // B + 1 uniform edges
  std::vector<std::size_t> counts;
  std::size_t underflow = 0;
  std::size_t overflow = 0;

  double midpoint(std::size_t b) const { return 0.5 * (bin_edges[b] + bin_edges[b + 1]); }
  std::size_t total() const;
};

inline constexpr std::size_t kDefaultBins = 50;

// Uniform bins over [min, max] of the finite values; max lands in the last
// bin. Equal values use unit-width bins starting at that value. Throws
// std::invalid_argument with no finite value or bins == 0.
Histogram histogram(std::span<const double> values, std::size_t bins = kDefaultBins);

enum class FitWeighting {
  Counts,      // weight ln(count) by count, its inverse variance for Poisson counts
  Unweighted,  // ordinary least squares
};

struct FitReport {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

// Least-squares line of ln(count) against bin midpoint over non-zero bins.
// Throws std::invalid_argument with fewer than two non-zero bins.
FitReport log_frequency_fit(const Histogram& h, FitWeighting weighting = FitWeighting::Counts);

// Fisher-Pearson m3 / m2^{3/2}. Throws std::invalid_argument with fewer than
// three values or zero variance.
double skewness(std::span<const double> values);

enum class Verdict { ExponentialLike, Centered, Degenerate };

std::string verdict_name(Verdict v);

struct Thresholds {
  double min_r_squared = 0.8;
  double min_skewness = 0.5;
  FitWeighting weighting = FitWeighting::Counts;
};

struct DistributionReport {
  std::size_t j = 0;
  Histogram histogram;
  std::optional<FitReport> fit;
  std::optional<double> skewness;
  Verdict verdict = Verdict::Degenerate;
};

// exponential-like: slope < 0, R^2 >= min_r_squared, skewness > min_skewness.
// degenerate: fewer than three non-zero bins or all values equal.
// centered: everything else.
DistributionReport shape_verdict(std::span<const double> values, std::size_t bins = kDefaultBins,
                                 const Thresholds& thresholds = {}, std::size_t j = 0);

struct ComparisonRow {
  std::string name;
  std::vector<std::size_t> js;
  std::vector<Verdict> verdicts;
  bool real_like = false;
  std::vector<std::string> notes;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> notes;
};

// Verdicts for j = 1..j_max per network (j = 0 excluded); a network is
// real-like when all of those are exponential-like. Rows follow map order.
ComparisonTable compare_networks(const std::map<std::string, std::vector<DistributionReport>>& reports);

std::string format_comparison(const ComparisonTable& table);

}  // namespace jnc
