#ifndef COOPNET_GAME_HPP
#define COOPNET_GAME_HPP

#include "coopnet/network.hpp"
#include "coopnet/rng.hpp"

namespace coopnet {

// Weak prisoner's dilemma: T = b, R = 1, P = S = 0. b > 1 for the dilemma
// to exist.
struct PayoffParams {
  double b = 2.0;
};

// Row player's payoff for one interaction.
inline double payoff(Strategy mine, Strategy theirs, const PayoffParams& p) {
  if (mine == Strategy::Cooperate) {
    return theirs == Strategy::Cooperate ? 1.0 : 0.0;
  }
  return theirs == Strategy::Cooperate ? p.b : 0.0;
}

// One round-robin pass: every node's fitness becomes the sum of its
// payoffs against all neighbors. Fitness is per-generation; prior values
// are overwritten, not accumulated across generations.
void accumulate_fitness(Network& net, const PayoffParams& p);

// Probability that node i adopts neighbor j's strategy, given frozen
// per-generation fitnesses and degrees. Zero when f_i >= f_j, otherwise
// (f_j - f_i) / (b * max(k_i, k_j)); the denominator is the largest
// fitness difference the two degrees allow, so the result is in [0, 1].
double update_probability(double f_i, double f_j, std::size_t k_i,
                          std::size_t k_j, const PayoffParams& p);

// Synchronous strategy update sweep. Each node (ascending birth index)
// compares against one uniformly drawn neighbor; adoptions are decided
// against start-of-sweep strategies and fitnesses and applied together at
// the end. Degree-0 nodes are skipped and consume no draws. Returns the
// number of strategies that changed.
std::size_t strategy_update_step(Network& net, const PayoffParams& p,
                                 RandomSource& rng);

}  // namespace coopnet

#endif
