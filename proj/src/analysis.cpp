#include "jnc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jnc {

std::size_t Histogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

Histogram histogram(std::span<const double> values, std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  double lo = INFINITY, hi = -INFINITY;
  std::size_t finite = 0;
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    ++finite;
  }
  if (finite == 0) throw std::invalid_argument("histogram of no finite values");

  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
  Histogram h;
  h.bin_edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) h.bin_edges[b] = lo + width * static_cast<double>(b);
  if (hi > lo) h.bin_edges[bins] = hi;
  h.counts.assign(bins, 0);
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    auto b = static_cast<std::size_t>((v - lo) / width);
    ++h.counts[std::min(b, bins - 1)];
  }
  return h;
}

FitReport log_frequency_fit(const Histogram& h, FitWeighting weighting) {
  std::vector<double> x, y, w;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    if (h.counts[b] == 0) continue;
    x.push_back(h.midpoint(b));
    y.push_back(std::log(static_cast<double>(h.counts[b])));
    w.push_back(weighting == FitWeighting::Counts ? static_cast<double>(h.counts[b]) : 1.0);
  }
  if (x.size() < 2) throw std::invalid_argument("log-frequency fit needs two non-zero bins");

  double sw = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    sx += w[i] * x[i];
    sy += w[i] * y[i];
  }
  const double xm = sx / sw, ym = sy / sw;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - xm, dy = y[i] - ym;
    sxx += w[i] * dx * dx;
    sxy += w[i] * dx * dy;
    syy += w[i] * dy * dy;
  }

  FitReport fit;
  fit.points_used = x.size();
  fit.slope = sxy / sxx;
  fit.intercept = ym - fit.slope * xm;
  double sse = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    sse += w[i] * r * r;
  }
  // A flat line through equal counts is a perfect fit.
  fit.r_squared = syy > 0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  return fit;
}

double skewness(std::span<const double> values) {
  if (values.size() < 3) throw std::invalid_argument("skewness needs at least three values");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double m2 = 0, m3 = 0;
  for (double v : values) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  if (!(m2 > 0)) throw std::invalid_argument("skewness of zero-variance data");
  return m3 / std::pow(m2, 1.5);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ExponentialLike: return "exponential-like";
    case Verdict::Centered: return "centered";
    case Verdict::Degenerate: return "degenerate";
  }
  return "?";
}

DistributionReport shape_verdict(std::span<const double> values, std::size_t bins, const Thresholds& thresholds,
                                 std::size_t j) {
  DistributionReport report;
  report.j = j;
  std::vector<double> finite;
  finite.reserve(values.size());
  for (double v : values)
    if (std::isfinite(v)) finite.push_back(v);
  if (finite.empty()) return report;

  report.histogram = histogram(finite, bins);
  const auto nonzero = static_cast<std::size_t>(
      std::count_if(report.histogram.counts.begin(), report.histogram.counts.end(), [](auto c) { return c > 0; }));
  if (nonzero >= 2) report.fit = log_frequency_fit(report.histogram, thresholds.weighting);
  if (finite.size() >= 3 && std::adjacent_find(finite.begin(), finite.end(), std::not_equal_to<>()) != finite.end())
    report.skewness = skewness(finite);

  if (nonzero < 3 || !report.skewness) {
    report.verdict = Verdict::Degenerate;
  } else if (report.fit->slope < 0 && report.fit->r_squared >= thresholds.min_r_squared &&
             *report.skewness > thresholds.min_skewness) {
    report.verdict = Verdict::ExponentialLike;
  } else {
    report.verdict = Verdict::Centered;
  }
  return report;
}

ComparisonTable compare_networks(const std::map<std::string, std::vector<DistributionReport>>& reports) {
  ComparisonTable table;
  for (const auto& [name, per_j] : reports) {
    ComparisonRow row;
    row.name = name;
    for (const auto& r : per_j) {
      if (r.j == 0) continue;
      row.js.push_back(r.j);
      row.verdicts.push_back(r.verdict);
    }
    row.real_like = !row.verdicts.empty() &&
                    std::all_of(row.verdicts.begin(), row.verdicts.end(),
                                [](Verdict v) { return v == Verdict::ExponentialLike; });
    for (std::size_t k = 0; k < row.js.size(); ++k) {
      if (row.verdicts[k] != Verdict::ExponentialLike) continue;
      const bool ws_exception = name.rfind("ws", 0) == 0 && row.js[k] == 4;
      const bool bhl_exception = name.rfind("bhl", 0) == 0 && row.js[k] == 3;
      if (ws_exception || bhl_exception)
        row.notes.push_back("exponential-like at j=" + std::to_string(row.js[k]) +
                            " is a known exception for this model");
    }
    table.rows.push_back(std::move(row));
  }
  table.notes.push_back(
      "j=0 is the degree; it is fitted with the same log-linear machinery although a power law is expected");
  return table;
}

std::string format_comparison(const ComparisonTable& table) {
  std::ostringstream out;
  std::size_t width = 7;
  for (const auto& row : table.rows) width = std::max(width, row.name.size());
  std::vector<std::size_t> js;
  for (const auto& row : table.rows)
    for (auto j : row.js)
      if (std::find(js.begin(), js.end(), j) == js.end()) js.push_back(j);
  std::sort(js.begin(), js.end());

  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  out << pad("network", width);
  for (auto j : js) out << "  " << pad("j=" + std::to_string(j), 16);
  out << "  real-like\n";
  for (const auto& row : table.rows) {
    out << pad(row.name, width);
    for (auto j : js) {
      auto it = std::find(row.js.begin(), row.js.end(), j);
      const std::string cell = it == row.js.end() ? "-" : verdict_name(row.verdicts[it - row.js.begin()]);
      out << "  " << pad(cell, 16);
    }
    out << "  " << (row.real_like ? "yes" : "no") << '\n';
  }
  for (const auto& row : table.rows)
    for (const auto& note : row.notes) out << "note: " << row.name << ": " << note << '\n';
  for (const auto& note : table.notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace jnc
