#include "coopnet/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace coopnet {

DegreeHistogram degree_histogram(const Network& net) {
  DegreeHistogram h;
  for (const auto& n : net.nodes()) {
    ++h.counts[n.neighbors.size()];
  }
  h.n_total = net.node_count();
  return h;
}

double last_k_mean(const std::vector<double>& series, std::size_t k) {
  if (k == 0 || series.size() < k) {
    throw SeriesTooShortError("series of length " +
                              std::to_string(series.size()) +
                              " cannot average last " + std::to_string(k));
  }
  return std::accumulate(series.end() - static_cast<std::ptrdiff_t>(k),
                         series.end(), 0.0) /
         static_cast<double>(k);
}

std::pair<std::size_t, std::size_t> pair_by_parameter(
    const std::vector<std::pair<double, double>>& runs_a,
    const std::vector<std::pair<double, double>>& runs_b) {
  if (runs_a.size() != runs_b.size()) {
    throw MismatchedGridsError("arm sizes differ: " +
                               std::to_string(runs_a.size()) + " vs " +
                               std::to_string(runs_b.size()));
  }
  std::size_t n = 0, k = 0;
  for (std::size_t i = 0; i < runs_a.size(); ++i) {
    if (runs_a[i].first != runs_b[i].first) {
      throw MismatchedGridsError("parameter grids differ at entry " +
                                 std::to_string(i));
    }
    if (runs_a[i].second == runs_b[i].second) continue;  // tie
    ++n;
    if (runs_a[i].second > runs_b[i].second) ++k;
  }
  return {n, k};
}

namespace {

// log C(n, i) via lgamma.
double log_choose(std::size_t n, std::size_t i) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(i) + 1.0) -
         std::lgamma(static_cast<double>(n - i) + 1.0);
}

// P(B <= k) for B ~ Binomial(n, 1/2), summed smallest-term-first.
double lower_tail_half(std::size_t n, std::size_t k) {
  const double log_half_n = -static_cast<double>(n) * std::log(2.0);
  double sum = 0.0;
  for (std::size_t i = 0; i <= k; ++i) {
    sum += std::exp(log_choose(n, i) + log_half_n);
  }
  return std::min(sum, 1.0);
}

}  // namespace

SignTestResult sign_test(std::size_t n, std::size_t k) {
  if (n == 0 || k > n) {
    throw InvalidCountsError("invalid sign test counts n=" +
                             std::to_string(n) + " k=" + std::to_string(k));
  }
  const double lower = lower_tail_half(n, k);
  // P(B >= k) = P(B <= n - k) by symmetry of Binomial(n, 1/2).
  const double upper = lower_tail_half(n, n - k);
  SignTestResult r;
  r.n = n;
  r.k = k;
  r.p_value = std::min(1.0, 2.0 * std::min(lower, upper));
  return r;
}

std::pair<double, double> ci95(const std::vector<double>& samples) {
  if (samples.size() < 2) {
    throw TooFewSamplesError("ci95 needs at least 2 samples");
  }
  const auto n = static_cast<double>(samples.size());
  const double mean =
      std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  const double hw = 1.96 * sd / std::sqrt(n);
  return {mean - hw, mean + hw};
}

}  // namespace coopnet
