#include <doctest.h>

#include <cmath>

#include "coopnet/game.hpp"
#include "coopnet/genesis.hpp"

using namespace coopnet;

TEST_CASE("weak PD payoff matrix") {
  PayoffParams p{1.5};
  CHECK(payoff(Strategy::Cooperate, Strategy::Cooperate, p) == 1.0);
  CHECK(payoff(Strategy::Cooperate, Strategy::Defect, p) == 0.0);
  CHECK(payoff(Strategy::Defect, Strategy::Cooperate, p) == 1.5);
  CHECK(payoff(Strategy::Defect, Strategy::Defect, p) == 0.0);
  CHECK(payoff(Strategy::Defect, Strategy::Defect, PayoffParams{7.0}) == 0.0);
}

TEST_CASE("accumulate_fitness sums payoffs over neighbors") {
  // hub C with three C leaves
  Network net;
  NodeId hub = net.add_node(Strategy::Cooperate);
  for (int i = 0; i < 3; ++i) {
    net.add_edge(hub, net.add_node(Strategy::Cooperate));
  }
  accumulate_fitness(net, PayoffParams{2.0});
  CHECK(net.fitness(hub) == 3.0);

  // D node with neighbors {C, C, D}, b = 1.5
  Network net2;
  NodeId d = net2.add_node(Strategy::Defect);
  net2.add_edge(d, net2.add_node(Strategy::Cooperate));
  net2.add_edge(d, net2.add_node(Strategy::Cooperate));
  net2.add_edge(d, net2.add_node(Strategy::Defect));
  accumulate_fitness(net2, PayoffParams{1.5});
  CHECK(net2.fitness(d) == 3.0);
}

TEST_CASE("accumulate_fitness: isolated node gets 0 and values reset") {
  Network net;
  NodeId a = net.add_node(Strategy::Cooperate);
  net.set_fitness(a, 42.0);
  accumulate_fitness(net, PayoffParams{2.0});
  CHECK(net.fitness(a) == 0.0);  // overwritten, not accumulated
}

TEST_CASE("accumulate_fitness is insertion-order independent") {
  PayoffParams p{2.2};
  // same labeled graph, edges added in different orders
  Network n1, n2;
  for (int i = 0; i < 4; ++i) {
    n1.add_node(i % 2 ? Strategy::Defect : Strategy::Cooperate);
    n2.add_node(i % 2 ? Strategy::Defect : Strategy::Cooperate);
  }
  n1.add_edge(0, 1);
  n1.add_edge(1, 2);
  n1.add_edge(2, 3);
  n1.add_edge(0, 3);
  n2.add_edge(0, 3);
  n2.add_edge(2, 3);
  n2.add_edge(1, 2);
  n2.add_edge(0, 1);
  accumulate_fitness(n1, p);
  accumulate_fitness(n2, p);
  for (NodeId i = 0; i < 4; ++i) CHECK(n1.fitness(i) == n2.fitness(i));
}

TEST_CASE("all-C network: total fitness equals 2 * edge_count") {
  RandomSource rng(7);
  Network net = random_network(200, 4.0, 1.0, rng);
  accumulate_fitness(net, PayoffParams{2.0});
  double total = 0.0;
  for (const auto& n : net.nodes()) total += n.fitness;
  CHECK(total == doctest::Approx(2.0 * net.edge_count()).epsilon(1e-12));
}

TEST_CASE("update_probability") {
  PayoffParams p{2.5};
  CHECK(update_probability(4.0, 4.0, 3, 3, p) == 0.0);
  CHECK(update_probability(5.0, 4.0, 3, 3, p) == 0.0);
  CHECK(update_probability(2.0, 5.0, 2, 4, p) == doctest::Approx(0.3));
  // maximal difference saturates at 1
  CHECK(update_probability(0.0, 4 * 2.5, 2, 4, p) == doctest::Approx(1.0));
  CHECK_THROWS_AS(update_probability(1.0, 2.0, 0, 1, p),
                  DegenerateDegreeError);
}

TEST_CASE("update_probability bounded in [0,1] on random networks") {
  RandomSource rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    double b = 1.0 + 2.5 * rng.uniform_double();
    PayoffParams p{b};
    Network net = random_network(80, 4.0, rng.uniform_double(), rng);
    accumulate_fitness(net, p);
    for (const auto& n : net.nodes()) {
      for (NodeId j : n.neighbors) {
        double prob = update_probability(n.fitness, net.fitness(j),
                                         n.neighbors.size(), net.degree(j), p);
        REQUIRE(prob >= 0.0);
        REQUIRE(prob <= 1.0);
      }
    }
  }
}

TEST_CASE("strategy_update_step fixed points") {
  PayoffParams p{2.0};
  // all same strategy: copying can never change anything
  Network net = founder_k3(Strategy::Cooperate);
  accumulate_fitness(net, p);
  RandomSource rng(1);
  CHECK(strategy_update_step(net, p, rng) == 0);

  // two nodes with equal fitness: f_i >= f_j in both directions
  Network pair;
  NodeId a = pair.add_node(Strategy::Cooperate);
  NodeId b = pair.add_node(Strategy::Defect);
  pair.add_edge(a, b);
  pair.set_fitness(a, 1.0);
  pair.set_fitness(b, 1.0);
  CHECK(strategy_update_step(pair, p, rng) == 0);
  CHECK(pair.strategy(a) == Strategy::Cooperate);
  CHECK(pair.strategy(b) == Strategy::Defect);
}

TEST_CASE("empirical flip frequency matches the update probability") {
  // Star, hub C, three D leaves, b = 2.5. Fitnesses: hub 0, leaves 2.5.
  // Only the hub can flip; it draws one of three identical leaves, so the
  // flip probability is (2.5 - 0) / (2.5 * 3) = 1/3 per step.
  PayoffParams p{2.5};
  const int trials = 100000;
  int flips = 0;
  for (int t = 0; t < trials; ++t) {
    Network net;
    NodeId hub = net.add_node(Strategy::Cooperate);
    for (int i = 0; i < 3; ++i) {
      net.add_edge(hub, net.add_node(Strategy::Defect));
    }
    accumulate_fitness(net, p);
    RandomSource rng(1000003ULL * static_cast<std::uint64_t>(t) + 17);
    strategy_update_step(net, p, rng);
    if (net.strategy(hub) == Strategy::Defect) ++flips;
  }
  double freq = static_cast<double>(flips) / trials;
  CHECK(freq == doctest::Approx(1.0 / 3.0).epsilon(0.03));
  CHECK(std::abs(freq - 1.0 / 3.0) < 0.01);
}

TEST_CASE("updates are synchronous: copies use start-of-sweep strategies") {
  // node1(D) - node2(C) - {node3(C), node4(C)}. With b = 5:
  // f1 = 5, f2 = 2, f3 = f4 = 1. node2 can flip to D (drawing node1);
  // node3/node4 can only copy node2's start-of-sweep strategy, which is C,
  // so they must never end the generation as defectors.
  bool node2_flipped_at_least_once = false;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    PayoffParams p{5.0};
    Network net;
    NodeId n1 = net.add_node(Strategy::Defect);
    NodeId n2 = net.add_node(Strategy::Cooperate);
    NodeId n3 = net.add_node(Strategy::Cooperate);
    NodeId n4 = net.add_node(Strategy::Cooperate);
    net.add_edge(n1, n2);
    net.add_edge(n2, n3);
    net.add_edge(n2, n4);
    accumulate_fitness(net, p);
    REQUIRE(net.fitness(n1) == 5.0);
    REQUIRE(net.fitness(n2) == 2.0);
    REQUIRE(net.fitness(n3) == 1.0);

    RandomSource rng(seed);
    strategy_update_step(net, p, rng);
    REQUIRE(net.strategy(n3) == Strategy::Cooperate);
    REQUIRE(net.strategy(n4) == Strategy::Cooperate);
    if (net.strategy(n2) == Strategy::Defect) node2_flipped_at_least_once = true;
  }
  CHECK(node2_flipped_at_least_once);
}

TEST_CASE("degree-0 nodes neither update nor source updates") {
  PayoffParams p{2.0};
  Network net;
  NodeId a = net.add_node(Strategy::Cooperate);
  NodeId b = net.add_node(Strategy::Cooperate);
  NodeId loner = net.add_node(Strategy::Defect);
  net.add_edge(a, b);
  accumulate_fitness(net, p);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomSource rng(seed);
    Network copy = net;
    strategy_update_step(copy, p, rng);
    REQUIRE(copy.strategy(loner) == Strategy::Defect);
    REQUIRE(copy.strategy(a) == Strategy::Cooperate);
    REQUIRE(copy.strategy(b) == Strategy::Cooperate);
  }
}
