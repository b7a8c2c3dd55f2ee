#ifndef COOPNET_SNAPSHOT_HPP
#define COOPNET_SNAPSHOT_HPP

#include <iosfwd>
#include <string>

#include "coopnet/network.hpp"

namespace coopnet {

// Text snapshot: a node table ("id,birth_index,strategy,fitness", one node
// per line, ascending birth index) followed by an edge list ("u v" with
// u < v by birth index). Strategies are written as C/D; fitness with
// enough digits to round-trip.
void write_snapshot(std::ostream& os, const Network& net);
Network read_snapshot(std::istream& is);

void save_snapshot(const std::string& path, const Network& net);
Network load_snapshot(const std::string& path);

}  // namespace coopnet

#endif
