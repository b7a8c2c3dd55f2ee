#ifndef COOPNET_ENGINE_HPP
#define COOPNET_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "coopnet/game.hpp"
#include "coopnet/network.hpp"
#include "coopnet/rng.hpp"

namespace coopnet {

enum class Model : std::uint8_t { EPA, Fluctuation, Static };
enum class DeletionMode : std::uint8_t { LeastFit, Random };

struct FounderSpec {
  enum class Kind : std::uint8_t { CompleteK3, RandomGraph };
  Kind kind = Kind::CompleteK3;
  Strategy k3_strategy = Strategy::Cooperate;  // CompleteK3
  std::size_t n = 1000;                        // RandomGraph
  double mean_degree = 4.0;                    // RandomGraph
  double coop_probability = 0.5;               // RandomGraph
};

struct SimParams {
  double b = 2.0;                  // temptation to defect, > 1
  double epsilon = 0.99;           // attachment selection pressure, [0,1)
  std::size_t m = 2;               // edges per new node
  std::size_t nodes_per_generation = 10;
  std::size_t n_max = 1000;
  double truncation_percent = 2.5;  // X, percent of current size
  Model model = Model::Fluctuation;
  DeletionMode deletion_mode = DeletionMode::LeastFit;
  // When set, truncation cleanup prunes every component except the one
  // containing the fittest node, instead of only iterated degree-0 removal.
  bool prune_components = false;
  std::size_t generations = 2000;
  FounderSpec founder;
  std::uint64_t seed = 0;
};

struct GenerationRecord {
  std::size_t generation = 0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double cooperator_fraction = 0.0;
  bool truncated_this_generation = false;
  std::size_t nodes_deleted = 0;
};

struct RunResult {
  std::vector<GenerationRecord> records;
  Network final_network;
};

// Attachment weight per node, ascending birth order: 1 - eps + eps * f_i,
// normalized to sum 1. Every node has positive weight since eps < 1.
std::vector<double> attachment_weights(const Network& net, double epsilon);

// Adds min(nodes_per_generation, n_max - size) nodes; each gets a uniform
// random strategy and m edges to distinct targets sampled without
// replacement from the fitness-preferential weights. Targets are drawn
// only from nodes that existed before the step began; nodes added earlier
// in the same step are not eligible. Returns new ids.
std::vector<NodeId> grow_step(Network& net, const SimParams& params,
                              RandomSource& rng);

// Deletes round(X/100 * size) nodes (least-fit oldest-first, or uniformly
// at random), then repeatedly removes degree-0 nodes. Returns total
// removed including the cascade.
std::size_t truncate_step(Network& net, const SimParams& params,
                          RandomSource& rng);

// One generation: play, update strategies, grow (not Static), truncate
// (Fluctuation only, when size >= n_max). Metrics are recorded after the
// last step.
GenerationRecord run_generation(Network& net, const SimParams& params,
                                RandomSource& rng, std::size_t gen);

// Builds the founder network from params.founder, seeds the random source
// from params.seed, and runs params.generations generations. Identical
// params give bit-identical results.
RunResult run_simulation(const SimParams& params);

}  // namespace coopnet

#endif
