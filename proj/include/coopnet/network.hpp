#ifndef COOPNET_NETWORK_HPP
#define COOPNET_NETWORK_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "coopnet/errors.hpp"

namespace coopnet {

enum class Strategy : std::uint8_t { Cooperate, Defect };

// Stable node identity. Ids come from a monotone per-network counter and
// are never reused after deletion, so the id doubles as the birth index:
// ascending id == creation order == oldest first.
using NodeId = std::uint64_t;

struct AgentState {
  Strategy strategy = Strategy::Cooperate;
  double fitness = 0.0;  // per-generation accumulated payoff, always >= 0
  NodeId birth_index = 0;
};

// Undirected simple graph with agent payloads. Nodes are kept sorted by
// birth index, so all iteration is in creation order and runs are
// reproducible independent of hash/map internals.
class Network {
 public:
  struct Node {
    NodeId id = 0;
    Strategy strategy = Strategy::Cooperate;
    double fitness = 0.0;
    std::vector<NodeId> neighbors;  // sorted ascending
  };

  NodeId add_node(Strategy strategy);
  // Re-create a node under a known id (snapshot loading). The id must be
  // at least the current counter so uniqueness is preserved.
  void restore_node(NodeId id, Strategy strategy, double fitness);
  void add_edge(NodeId a, NodeId b);
  std::size_t remove_nodes(const std::vector<NodeId>& ids);
  std::vector<NodeId> isolated_nodes() const;

  bool has_node(NodeId id) const;
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(NodeId id) const { return node(id).neighbors.size(); }
  bool has_edge(NodeId a, NodeId b) const;

  Strategy strategy(NodeId id) const { return node(id).strategy; }
  void set_strategy(NodeId id, Strategy s) { node(id).strategy = s; }
  double fitness(NodeId id) const { return node(id).fitness; }
  void set_fitness(NodeId id, double f) { node(id).fitness = f; }
  NodeId birth_index(NodeId id) const { return node(id).id; }
  const std::vector<NodeId>& neighbors(NodeId id) const {
    return node(id).neighbors;
  }

  // Nodes in ascending birth order.
  const std::vector<Node>& nodes() const { return nodes_; }

  std::size_t cooperator_count() const;

 private:
  const Node& node(NodeId id) const;
  Node& node(NodeId id);
  std::size_t index_of(NodeId id) const;  // throws UnknownNodeError

  std::vector<Node> nodes_;  // sorted ascending by id
  std::unordered_map<NodeId, std::size_t> index_;  // id -> position in nodes_
  NodeId next_id_ = 0;
  std::size_t edge_count_ = 0;
};

}  // namespace coopnet

#endif
