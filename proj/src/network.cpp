#include "coopnet/network.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace coopnet {

std::size_t Network::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw UnknownNodeError("unknown node id " + std::to_string(id));
  }
  return it->second;
}

const Network::Node& Network::node(NodeId id) const {
  return nodes_[index_of(id)];
}

Network::Node& Network::node(NodeId id) { return nodes_[index_of(id)]; }

bool Network::has_node(NodeId id) const { return index_.count(id) > 0; }

NodeId Network::add_node(Strategy strategy) {
  Node n;
  n.id = next_id_++;
  n.strategy = strategy;
  nodes_.push_back(std::move(n));
  index_.emplace(nodes_.back().id, nodes_.size() - 1);
  return nodes_.back().id;
}

void Network::restore_node(NodeId id, Strategy strategy, double fitness) {
  if (id < next_id_) {
    throw UnknownNodeError("restore_node id " + std::to_string(id) +
                           " below id counter");
  }
  Node n;
  n.id = id;
  n.strategy = strategy;
  n.fitness = fitness;
  nodes_.push_back(std::move(n));
  index_.emplace(id, nodes_.size() - 1);
  next_id_ = id + 1;
}

bool Network::has_edge(NodeId a, NodeId b) const {
  const auto& nbrs = node(a).neighbors;
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

void Network::add_edge(NodeId a, NodeId b) {
  if (a == b) {
    throw SelfEdgeError("self-edge at node " + std::to_string(a));
  }
  Node& na = node(a);
  Node& nb = node(b);
  auto ita = std::lower_bound(na.neighbors.begin(), na.neighbors.end(), b);
  if (ita != na.neighbors.end() && *ita == b) {
    throw DuplicateEdgeError("edge (" + std::to_string(a) + "," +
                             std::to_string(b) + ") already present");
  }
  na.neighbors.insert(ita, b);
  nb.neighbors.insert(
      std::lower_bound(nb.neighbors.begin(), nb.neighbors.end(), a), a);
  ++edge_count_;
}

std::size_t Network::remove_nodes(const std::vector<NodeId>& ids) {
  if (ids.empty()) return 0;
  std::unordered_set<NodeId> gone;
  gone.reserve(ids.size() * 2);
  for (NodeId id : ids) {
    index_of(id);  // validate before mutating anything
    gone.insert(id);
  }
  std::erase_if(nodes_, [&](const Node& n) { return gone.count(n.id) > 0; });
  std::size_t degree_sum = 0;
  index_.clear();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    Node& n = nodes_[i];
    std::erase_if(n.neighbors, [&](NodeId v) { return gone.count(v) > 0; });
    degree_sum += n.neighbors.size();
    index_.emplace(n.id, i);
  }
  edge_count_ = degree_sum / 2;
  return gone.size();
}

std::vector<NodeId> Network::isolated_nodes() const {
  std::vector<NodeId> out;
  for (const Node& n : nodes_) {
    if (n.neighbors.empty()) out.push_back(n.id);
  }
  return out;
}

std::size_t Network::cooperator_count() const {
  std::size_t c = 0;
  for (const Node& n : nodes_) {
    if (n.strategy == Strategy::Cooperate) ++c;
  }
  return c;
}

}  // namespace coopnet
