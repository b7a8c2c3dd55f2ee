#include "coopnet/game.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace coopnet {

void accumulate_fitness(Network& net, const PayoffParams& p) {
  // Two passes: fitness values are functions of strategies only, so reading
  // strategies while writing fitnesses is safe in a single pass too, but we
  // compute into a scratch vector to keep the node array const-iterable.
  std::vector<double> scratch;
  scratch.reserve(net.node_count());
  for (const auto& n : net.nodes()) {
    double f = 0.0;
    for (NodeId j : n.neighbors) {
      f += payoff(n.strategy, net.strategy(j), p);
    }
    scratch.push_back(f);
  }
  std::size_t i = 0;
  for (const auto& n : net.nodes()) {
    net.set_fitness(n.id, scratch[i++]);
  }
}

double update_probability(double f_i, double f_j, std::size_t k_i,
                          std::size_t k_j, const PayoffParams& p) {
  if (k_i == 0 || k_j == 0) {
    throw DegenerateDegreeError("update_probability requires degree >= 1");
  }
  if (f_i >= f_j) return 0.0;
  // summed payoffs can exceed b * k by an ulp; clamp to keep the bound exact
  return std::min(
      1.0, (f_j - f_i) / (p.b * static_cast<double>(std::max(k_i, k_j))));
}

std::size_t strategy_update_step(Network& net, const PayoffParams& p,
                                 RandomSource& rng) {
  std::vector<std::pair<NodeId, Strategy>> pending;
  for (const auto& n : net.nodes()) {
    if (n.neighbors.empty()) continue;
    NodeId j = n.neighbors[rng.uniform_index(n.neighbors.size())];
    double fj = net.fitness(j);
    if (n.fitness >= fj) continue;  // no acceptance draw consumed
    double prob =
        update_probability(n.fitness, fj, n.neighbors.size(),
                           net.degree(j), p);
    if (rng.bernoulli(prob)) {
      Strategy copied = net.strategy(j);
      if (copied != n.strategy) pending.emplace_back(n.id, copied);
    }
  }
  for (const auto& [id, s] : pending) net.set_strategy(id, s);
  return pending.size();
}

}  // namespace coopnet
