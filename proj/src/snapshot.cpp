#include "coopnet/snapshot.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace coopnet {

void write_snapshot(std::ostream& os, const Network& net) {
  os << "# nodes\n";
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& n : net.nodes()) {
    os << n.id << ',' << n.id << ','
       << (n.strategy == Strategy::Cooperate ? 'C' : 'D') << ',' << n.fitness
       << '\n';
  }
  os << "# edges\n";
  for (const auto& n : net.nodes()) {
    for (NodeId j : n.neighbors) {
      if (n.id < j) os << n.id << ' ' << j << '\n';
    }
  }
}

Network read_snapshot(std::istream& is) {
  Network net;
  std::string line;
  bool in_edges = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "# nodes") {
      in_edges = false;
      continue;
    }
    if (line == "# edges") {
      in_edges = true;
      continue;
    }
    std::istringstream ss(line);
    if (in_edges) {
      NodeId u, v;
      if (!(ss >> u >> v)) throw IoError("bad edge line: " + line);
      net.add_edge(u, v);
    } else {
      std::string field;
      NodeId id, birth;
      char strat;
      double fitness;
      std::getline(ss, field, ',');
      id = std::stoull(field);
      std::getline(ss, field, ',');
      birth = std::stoull(field);
      std::getline(ss, field, ',');
      if (field.size() != 1 || (field[0] != 'C' && field[0] != 'D')) {
        throw IoError("bad strategy in node line: " + line);
      }
      strat = field[0];
      std::getline(ss, field, ',');
      fitness = std::stod(field);
      (void)birth;  // birth index equals id in this representation
      net.restore_node(id,
                       strat == 'C' ? Strategy::Cooperate : Strategy::Defect,
                       fitness);
    }
  }
  return net;
}

void save_snapshot(const std::string& path, const Network& net) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  write_snapshot(f, net);
  if (!f) throw IoError("write failed: " + path);
}

Network load_snapshot(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open for reading: " + path);
  return read_snapshot(f);
}

}  // namespace coopnet
