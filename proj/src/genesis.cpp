#include "coopnet/genesis.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

namespace coopnet {

Network founder_k3(Strategy strategy) {
  Network net;
  NodeId a = net.add_node(strategy);
  NodeId b = net.add_node(strategy);
  NodeId c = net.add_node(strategy);
  net.add_edge(a, b);
  net.add_edge(b, c);
  net.add_edge(a, c);
  return net;
}

Network random_network(std::size_t n, double mean_degree,
                       double coop_probability, RandomSource& rng) {
  const auto edges =
      static_cast<std::size_t>(std::llround(n * mean_degree / 2.0));
  const std::size_t max_edges = n * (n - 1) / 2;
  if (n < 2 || edges > max_edges) {
    throw TooManyEdgesError("requested " + std::to_string(edges) +
                            " edges, bound is " + std::to_string(max_edges));
  }
  Network net;
  for (std::size_t i = 0; i < n; ++i) {
    net.add_node(rng.bernoulli(coop_probability) ? Strategy::Cooperate
                                                 : Strategy::Defect);
  }
  std::unordered_set<std::uint64_t> used;
  used.reserve(edges * 2);
  std::size_t placed = 0;
  while (placed < edges) {
    NodeId u = rng.uniform_index(n);
    NodeId v = rng.uniform_index(n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!used.insert(u * n + v).second) continue;
    net.add_edge(u, v);
    ++placed;
  }
  return net;
}

}  // namespace coopnet
