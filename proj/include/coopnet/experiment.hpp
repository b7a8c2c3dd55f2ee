#ifndef COOPNET_EXPERIMENT_HPP
#define COOPNET_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coopnet/analytics.hpp"
#include "coopnet/engine.hpp"

namespace coopnet {

struct ExperimentConfig {
  SimParams params;  // base parameters; b and X come from the grids below
  std::vector<double> b_grid;  // empty -> {params.b}
  std::vector<double> x_grid;  // empty -> {params.truncation_percent}
  std::size_t replicates = 25;
  std::size_t last_k = 20;  // generations averaged per replicate
  std::string output_dir;   // empty -> in-memory only, no files
  std::uint64_t master_seed = 0;
  std::size_t jobs = 1;
};

struct GridPointSummary {
  double b = 0.0;
  double x = 0.0;
  std::vector<double> replicate_means;  // last-k cooperation per replicate
  double grand_mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct FounderComparison {
  SignTestResult test;
  bool no_information = false;  // every pair tied, p undefined
};

// Runs count tasks across at most jobs worker threads. Task identity is the
// index, so results keyed by index are deterministic regardless of
// completion order.
void parallel_for_index(std::size_t jobs, std::size_t count,
                        const std::function<void(std::size_t)>& task);

// Replicate r of grid point g (g = b_index * x_grid.size() + x_index) uses
// seed derive_seed(master_seed, g, r).
std::uint64_t experiment_seed(const ExperimentConfig& config,
                              std::size_t grid_index, std::size_t replicate);

// Runs every (b, X, replicate), writes one time-series CSV and one final
// degree histogram CSV per replicate, plus a summary JSON and an aggregate
// degree CSV per grid point. Reruns with the same config are byte-identical.
std::vector<GridPointSummary> run_experiment(const ExperimentConfig& config);

// Runs a C-founded and a D-founded arm over the same b grid (identical
// seeds, founder strategy the only difference), pairs replicates by b, and
// applies the sign test. Writes signtest.json when output_dir is set.
FounderComparison compare_founders(const ExperimentConfig& config);

// Recomputes grid-point summaries from stored series CSVs in a directory.
std::vector<GridPointSummary> analyze_series_dir(const std::string& dir,
                                                 std::size_t last_k);

}  // namespace coopnet

#endif
