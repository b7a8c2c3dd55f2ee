#ifndef COOPNET_ANALYTICS_HPP
#define COOPNET_ANALYTICS_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "coopnet/network.hpp"

namespace coopnet {

struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;  // degree -> node count
  std::size_t n_total = 0;
};

struct SignTestResult {
  std::size_t n = 0;  // non-tied pairs
  std::size_t k = 0;  // pairs where the first arm was larger
  double p_value = 1.0;
};

DegreeHistogram degree_histogram(const Network& net);

// Mean of the final k entries.
double last_k_mean(const std::vector<double>& series, std::size_t k);

// Pairs two runs keyed by the same parameter grid; equal-valued pairs are
// dropped as ties. Returns (non-tied pairs, count where a > b). Entries
// sharing a key are matched positionally, so replicate r of one arm pairs
// with replicate r of the other.
std::pair<std::size_t, std::size_t> pair_by_parameter(
    const std::vector<std::pair<double, double>>& runs_a,
    const std::vector<std::pair<double, double>>& runs_b);

// Exact two-tailed sign test at p0 = 1/2:
// p = min(1, 2 * min(P(B <= k), P(B >= k))) for B ~ Binomial(n, 1/2).
// Tail sums run in log space for numerical stability.
SignTestResult sign_test(std::size_t n, std::size_t k);

// Normal-approximation 95% interval: mean +/- 1.96 * sd / sqrt(n).
std::pair<double, double> ci95(const std::vector<double>& samples);

}  // namespace coopnet

#endif
