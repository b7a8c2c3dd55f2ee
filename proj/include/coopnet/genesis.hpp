#ifndef COOPNET_GENESIS_HPP
#define COOPNET_GENESIS_HPP

#include "coopnet/network.hpp"
#include "coopnet/rng.hpp"

namespace coopnet {

// Complete 3-node founder network, uniform strategy, fitness 0, birth
// indices 0,1,2.
Network founder_k3(Strategy strategy);

// G(n, M)-style random graph: exactly round(n * mean_degree / 2) edges
// drawn uniformly among distinct unordered pairs. Strategies are drawn
// first (one Bernoulli(coop_probability) per node in birth order), then
// edges. Connectivity is not guaranteed; isolated nodes are kept.
Network random_network(std::size_t n, double mean_degree,
                       double coop_probability, RandomSource& rng);

}  // namespace coopnet

#endif
