#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "jnc/analysis.hpp"
#include "jnc/random.hpp"

namespace jnc {
namespace {

// Inverse-CDF exponential draws; independent of std distributions so the
// samples are identical on every standard library.
std::vector<double> exponential_sample(std::size_t count, double rate, std::uint64_t seed) {
  Rng rng(seed, "exp-test");
  std::vector<double> v(count);
  for (auto& x : v) x = -std::log(1.0 - rng.uniform()) / rate;
  return v;
}

std::vector<double> normal_sample(std::size_t count, std::uint64_t seed) {
  Rng rng(seed, "normal-test");
  std::vector<double> v(count);
  for (auto& x : v) {
    const double u1 = 1.0 - rng.uniform(), u2 = rng.uniform();
    x = 10.0 + std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
  return v;
}

TEST(Histogram, TwoBins) {
  std::vector<double> v{0, 1, 2, 3};
  auto h = histogram(v, 2);
  EXPECT_EQ(h.bin_edges, (std::vector<double>{0, 1.5, 3}));
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(h.total(), 4u);
  EXPECT_EQ(h.midpoint(0), 0.75);
}

TEST(Histogram, ConstantInputUsesUnitBins) {
  std::vector<double> v(5, 2.5);
  auto h = histogram(v, 4);
  EXPECT_EQ(h.bin_edges.front(), 2.5);
  EXPECT_EQ(h.bin_edges.back(), 6.5);
  EXPECT_EQ(h.counts[0], 5u);
}

TEST(Histogram, SkipsNonFiniteAndRejectsEmpty) {
  std::vector<double> v{1, std::numeric_limits<double>::quiet_NaN(), 2};
  EXPECT_EQ(histogram(v, 3).total(), 2u);
  EXPECT_THROW(histogram(std::vector<double>{}, 3), std::invalid_argument);
  EXPECT_THROW(histogram(v, 0), std::invalid_argument);
}

TEST(Histogram, ExponentialDrawsDecreaseOverTheFirstBins) {
  auto h = histogram(exponential_sample(100000, 1.0, 5), 50);
  EXPECT_EQ(h.total(), 100000u);
  for (std::size_t b = 0; b + 1 < 8; ++b) EXPECT_GT(h.counts[b], h.counts[b + 1]);
}

Histogram synthetic(double c, double rate, std::size_t bins) {
  Histogram h;
  for (std::size_t b = 0; b <= bins; ++b) h.bin_edges.push_back(static_cast<double>(b));
  for (std::size_t b = 0; b < bins; ++b) h.counts.push_back(static_cast<std::size_t>(std::llround(c * std::exp(-rate * h.midpoint(b)))));
  return h;
}

TEST(LogFit, ExactExponentialRecoversRate) {
  // Counts fall by a factor of four per unit bin.
  Histogram h;
  for (std::size_t b = 0; b <= 6; ++b) h.bin_edges.push_back(static_cast<double>(b));
  for (std::size_t b = 0; b < 6; ++b) h.counts.push_back(static_cast<std::size_t>(1) << (2 * (6 - b)));
  for (auto w : {FitWeighting::Counts, FitWeighting::Unweighted}) {
    auto fit = log_frequency_fit(h, w);
    EXPECT_NEAR(fit.slope, -2.0 * std::log(2.0), 1e-9);
    EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
    EXPECT_EQ(fit.points_used, 6u);
  }
}

TEST(LogFit, SyntheticCurveSlopeNearMinusOne) {
  auto fit = log_frequency_fit(synthetic(1e12, 1.0, 8));
  EXPECT_NEAR(fit.slope, -1.0, 1e-9);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}

TEST(LogFit, TwoPointsFitPerfectly) {
  Histogram h{{0, 1, 2}, {10, 3}};
  auto fit = log_frequency_fit(h);
  EXPECT_EQ(fit.r_squared, 1.0);
  EXPECT_NEAR(fit.slope, std::log(3.0) - std::log(10.0), 1e-12);
  Histogram one{{0, 1, 2}, {10, 0}};
  EXPECT_THROW(log_frequency_fit(one), std::invalid_argument);
}

TEST(LogFit, GaussianBellFitsPoorly) {
  auto fit = log_frequency_fit(histogram(normal_sample(100000, 6), 50));
  EXPECT_LT(fit.r_squared, 0.8);
}

TEST(LogFit, SlopeScalesInverselyWithValues) {
  auto v = exponential_sample(20000, 2.0, 7);
  auto w = v;
  for (auto& x : w) x *= 3.0;
  auto a = log_frequency_fit(histogram(v)), b = log_frequency_fit(histogram(w));
  EXPECT_NEAR(a.slope, 3.0 * b.slope, 1e-12 * std::abs(a.slope) + 1e-12);
  EXPECT_NEAR(a.r_squared, b.r_squared, 1e-12);
}

TEST(Skewness, Examples) {
  EXPECT_EQ(skewness(std::vector<double>{1, 2, 3}), 0.0);
  EXPECT_NEAR(skewness(std::vector<double>{0, 0, 0, 10}), 2.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(skewness(std::vector<double>{0, 0, 0, -10}), -2.0 / std::sqrt(3.0), 1e-12);
  EXPECT_THROW(skewness(std::vector<double>{1, 2}), std::invalid_argument);
  EXPECT_THROW(skewness(std::vector<double>{4, 4, 4}), std::invalid_argument);
}

TEST(Skewness, AffineInvariance) {
  auto v = exponential_sample(5000, 1.0, 8);
  const double s = skewness(v);
  auto w = v;
  for (auto& x : w) x = 3.0 * x + 7.0;
  EXPECT_NEAR(skewness(w), s, 1e-9);
  for (auto& x : w) x = -x;
  EXPECT_NEAR(skewness(w), -s, 1e-9);
}

TEST(ShapeVerdict, ExponentialDraws) {
  auto r = shape_verdict(exponential_sample(20000, 1.5, 9), 50, {}, 2);
  EXPECT_EQ(r.verdict, Verdict::ExponentialLike);
  EXPECT_EQ(r.j, 2u);
  ASSERT_TRUE(r.fit);
  EXPECT_NEAR(-r.fit->slope, 1.5, 0.05 * 1.5);
}

TEST(ShapeVerdict, NormalDrawsAreCentered) {
  auto r = shape_verdict(normal_sample(20000, 10));
  EXPECT_EQ(r.verdict, Verdict::Centered);
  EXPECT_LT(std::abs(*r.skewness), 0.5);
}

TEST(ShapeVerdict, DegenerateInputs) {
  EXPECT_EQ(shape_verdict(std::vector<double>(10, 1.0)).verdict, Verdict::Degenerate);
  EXPECT_EQ(shape_verdict(std::vector<double>{1.0, 2.0}).verdict, Verdict::Degenerate);
  EXPECT_EQ(shape_verdict(std::vector<double>{1, 1, 1, 9}).verdict, Verdict::Degenerate);
  EXPECT_EQ(verdict_name(Verdict::Degenerate), "degenerate");
}

TEST(ShapeVerdict, ThresholdsAreRespected) {
  auto v = exponential_sample(20000, 1.0, 11);
  Thresholds strict;
  strict.min_skewness = 100.0;
  EXPECT_EQ(shape_verdict(v, 50, strict).verdict, Verdict::Centered);
}

DistributionReport report_with(std::size_t j, Verdict v) {
  DistributionReport r;
  r.j = j;
  r.verdict = v;
  return r;
}

TEST(CompareNetworks, RealLikeRequiresAllPositiveDepths) {
  std::map<std::string, std::vector<DistributionReport>> reports;
  reports["ba"] = {report_with(0, Verdict::Centered), report_with(1, Verdict::ExponentialLike),
                   report_with(2, Verdict::ExponentialLike)};
  reports["er"] = {report_with(1, Verdict::Centered), report_with(2, Verdict::ExponentialLike)};
  auto table = compare_networks(reports);
  ASSERT_EQ(table.rows.size(), 2u);
  EXPECT_EQ(table.rows[0].name, "ba");
  EXPECT_TRUE(table.rows[0].real_like);
  EXPECT_EQ(table.rows[0].js, (std::vector<std::size_t>{1, 2}));
  EXPECT_FALSE(table.rows[1].real_like);
  const auto text = format_comparison(table);
  EXPECT_NE(text.find("exponential-like"), std::string::npos);
  EXPECT_NE(text.find("real-like"), std::string::npos);
}

TEST(CompareNetworks, KnownExceptionsAreNoted) {
  std::map<std::string, std::vector<DistributionReport>> reports;
  reports["ws"] = {report_with(3, Verdict::Centered), report_with(4, Verdict::ExponentialLike)};
  reports["bhl"] = {report_with(3, Verdict::ExponentialLike)};
  auto table = compare_networks(reports);
  for (const auto& row : table.rows) EXPECT_EQ(row.notes.size(), 1u) << row.name;
  EXPECT_FALSE(table.rows[1].real_like);
}

}  // namespace
}  // namespace jnc
