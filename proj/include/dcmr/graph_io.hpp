#pragma once

#include <iosfwd>
#include <string>

#include "dcmr/graph.hpp"

namespace dcmr {

// Line-oriented text format:
//   nodes <n>
//   node <id> <x_km> <y_km>        (n lines, ids 0..n-1)
//   edge <u> <v> <cost> <delay_s>
// Values round-trip exactly; the reader rejects duplicate edges,
// out-of-range ids and disconnected graphs.
void write_network(std::ostream& out, const Network& net);
void write_network_file(const std::string& path, const Network& net);

Network read_network(std::istream& in);
Network read_network_file(const std::string& path);

}  // namespace dcmr
