#include "coopnet/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "coopnet/genesis.hpp"

namespace coopnet {

std::vector<double> attachment_weights(const Network& net, double epsilon) {
  if (net.node_count() == 0) {
    throw EmptyNetworkError("attachment_weights on empty network");
  }
  std::vector<double> w;
  w.reserve(net.node_count());
  double total = 0.0;
  for (const auto& n : net.nodes()) {
    double v = 1.0 - epsilon + epsilon * n.fitness;
    w.push_back(v);
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

namespace {

// One preferential draw among candidates[i] with chosen[i] == false.
// `total` is the weight sum over unchosen candidates, maintained by the
// caller to keep each draw a single pass.
std::size_t draw_target(const std::vector<double>& weights,
                        const std::vector<bool>& chosen, double total,
                        RandomSource& rng) {
  double r = rng.uniform_double() * total;
  std::size_t last = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (chosen[i]) continue;
    last = i;
    r -= weights[i];
    if (r < 0.0) return i;
  }
  return last;  // numeric slack lands on the final candidate
}

}  // namespace

std::vector<NodeId> grow_step(Network& net, const SimParams& params,
                              RandomSource& rng) {
  std::vector<NodeId> added;
  std::size_t size = net.node_count();
  if (size >= params.n_max) return added;
  const std::size_t to_add =
      std::min(params.nodes_per_generation, params.n_max - size);

  // Candidate pool in birth order, frozen at the start of the step: nodes
  // added within this step do not receive edges from later arrivals.
  std::vector<NodeId> ids;
  std::vector<double> weights;
  ids.reserve(size + to_add);
  weights.reserve(size + to_add);
  double total = 0.0;
  for (const auto& n : net.nodes()) {
    ids.push_back(n.id);
    weights.push_back(1.0 - params.epsilon + params.epsilon * n.fitness);
    total += weights.back();
  }
  std::vector<bool> chosen;

  for (std::size_t a = 0; a < to_add; ++a) {
    if (ids.size() < params.m) {
      throw TooFewTargetsError("need " + std::to_string(params.m) +
                               " attachment targets, have " +
                               std::to_string(ids.size()));
    }
    Strategy s =
        rng.bernoulli(0.5) ? Strategy::Cooperate : Strategy::Defect;
    chosen.assign(ids.size(), false);
    std::vector<std::size_t> picks;
    picks.reserve(params.m);
    double remaining = total;
    for (std::size_t e = 0; e < params.m; ++e) {
      std::size_t idx = draw_target(weights, chosen, remaining, rng);
      chosen[idx] = true;
      remaining -= weights[idx];
      picks.push_back(idx);
    }
    NodeId fresh = net.add_node(s);
    for (std::size_t idx : picks) net.add_edge(fresh, ids[idx]);
    added.push_back(fresh);
  }
  return added;
}

namespace {

// Keep only the component containing the fittest node (ties oldest-first).
std::size_t prune_to_fittest_component(Network& net) {
  if (net.node_count() == 0) return 0;
  NodeId best = net.nodes().front().id;
  double best_f = net.nodes().front().fitness;
  for (const auto& n : net.nodes()) {
    if (n.fitness > best_f) {
      best = n.id;
      best_f = n.fitness;
    }
  }
  std::unordered_set<NodeId> keep{best};
  std::vector<NodeId> stack{best};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : net.neighbors(u)) {
      if (keep.insert(v).second) stack.push_back(v);
    }
  }
  std::vector<NodeId> drop;
  for (const auto& n : net.nodes()) {
    if (!keep.count(n.id)) drop.push_back(n.id);
  }
  return net.remove_nodes(drop);
}

}  // namespace

std::size_t truncate_step(Network& net, const SimParams& params,
                          RandomSource& rng) {
  const std::size_t size = net.node_count();
  const auto d = static_cast<std::size_t>(
      std::llround(params.truncation_percent / 100.0 * size));
  std::size_t removed = 0;
  if (d > 0) {
    std::vector<NodeId> victims;
    if (params.deletion_mode == DeletionMode::LeastFit) {
      // Ascending (fitness, birth index): equal-fitness nodes go
      // oldest-first since ids encode creation order.
      std::vector<std::pair<double, NodeId>> order;
      order.reserve(size);
      for (const auto& n : net.nodes()) order.emplace_back(n.fitness, n.id);
      std::sort(order.begin(), order.end());
      const std::size_t take = std::min<std::size_t>(d, size);
      victims.reserve(take);
      for (std::size_t i = 0; i < take; ++i) victims.push_back(order[i].second);
    } else {
      // Partial Fisher-Yates over the birth-ordered id list.
      std::vector<NodeId> pool;
      pool.reserve(size);
      for (const auto& n : net.nodes()) pool.push_back(n.id);
      const std::size_t take = std::min<std::size_t>(d, size);
      for (std::size_t i = 0; i < take; ++i) {
        std::size_t j = i + rng.uniform_index(pool.size() - i);
        std::swap(pool[i], pool[j]);
        victims.push_back(pool[i]);
      }
    }
    removed += net.remove_nodes(victims);
  }
  // Disconnected cleanup: iterated degree-0 removal.
  for (;;) {
    auto isolated = net.isolated_nodes();
    if (isolated.empty()) break;
    removed += net.remove_nodes(isolated);
  }
  if (params.prune_components) removed += prune_to_fittest_component(net);
  return removed;
}

GenerationRecord run_generation(Network& net, const SimParams& params,
                                RandomSource& rng, std::size_t gen) {
  PayoffParams payoffs{params.b};
  accumulate_fitness(net, payoffs);
  strategy_update_step(net, payoffs, rng);
  if (params.model != Model::Static) grow_step(net, params, rng);

  GenerationRecord rec;
  rec.generation = gen;
  if (params.model == Model::Fluctuation && net.node_count() >= params.n_max) {
    rec.truncated_this_generation = true;
    rec.nodes_deleted = truncate_step(net, params, rng);
  }
  rec.node_count = net.node_count();
  rec.edge_count = net.edge_count();
  rec.cooperator_fraction =
      rec.node_count == 0
          ? 0.0
          : static_cast<double>(net.cooperator_count()) /
                static_cast<double>(rec.node_count);
  return rec;
}

RunResult run_simulation(const SimParams& params) {
  RandomSource rng(params.seed);
  Network net;
  if (params.founder.kind == FounderSpec::Kind::CompleteK3) {
    net = founder_k3(params.founder.k3_strategy);
  } else {
    net = random_network(params.founder.n, params.founder.mean_degree,
                         params.founder.coop_probability, rng);
  }
  RunResult result;
  result.records.reserve(params.generations);
  for (std::size_t g = 1; g <= params.generations; ++g) {
    result.records.push_back(run_generation(net, params, rng, g));
  }
  result.final_network = std::move(net);
  return result;
}

}  // namespace coopnet
