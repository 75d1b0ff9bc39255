#include "dcmr/graph_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dcmr {

namespace {

// Shortest decimal string that parses back to the same double.
std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == x) {
    for (int prec = 1; prec < 17; ++prec) {
      char shorter[64];
      std::snprintf(shorter, sizeof shorter, "%.*g", prec, x);
      std::sscanf(shorter, "%lf", &back);
      if (back == x) return shorter;
    }
  }
  return buf;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("graph parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

}  // namespace

void write_network(std::ostream& out, const Network& net) {
  out << "nodes " << net.node_count() << "\n";
  for (NodeId v = 0; v < net.node_count(); ++v) {
    const Coord& c = net.coord(v);
    out << "node " << v << " " << fmt_double(c.x_km) << " "
        << fmt_double(c.y_km) << "\n";
  }
  for (auto [u, v] : net.edges()) {
    EdgeAttr attr = net.edge(u, v);
    out << "edge " << u << " " << v << " " << fmt_double(attr.cost) << " "
        << fmt_double(attr.delay_s) << "\n";
  }
}

void write_network_file(const std::string& path, const Network& net) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_network(out, net);
  if (!out) throw std::runtime_error("write failed for " + path);
}

Network read_network(std::istream& in) {
  Network net;
  std::string line;
  std::size_t line_no = 0;
  long declared = -1;
  NodeId next_node = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "nodes") {
      if (declared >= 0) parse_fail(line_no, "repeated nodes header");
      if (!(ls >> declared) || declared < 0)
        parse_fail(line_no, "bad node count");
    } else if (kind == "node") {
      if (declared < 0) parse_fail(line_no, "node before the nodes header");
      long id;
      double x, y;
      if (!(ls >> id >> x >> y)) parse_fail(line_no, "bad node line");
      if (id != next_node)
        parse_fail(line_no, "node ids must be dense and ascending");
      if (id >= declared) parse_fail(line_no, "node id beyond declared count");
      net.add_node(x, y);
      ++next_node;
    } else if (kind == "edge") {
      long u, v;
      double cost, delay;
      if (!(ls >> u >> v >> cost >> delay)) parse_fail(line_no, "bad edge line");
      if (u < 0 || v < 0 || u >= declared || v >= declared)
        parse_fail(line_no, "edge endpoint out of range");
      try {
        net.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), cost, delay);
      } catch (const std::invalid_argument& e) {
        parse_fail(line_no, e.what());
      }
    } else {
      parse_fail(line_no, "unknown record '" + kind + "'");
    }
  }
  if (declared < 0) throw std::runtime_error("graph parse error: missing nodes header");
  if (next_node != declared)
    throw std::runtime_error("graph parse error: expected " +
                             std::to_string(declared) + " node lines");
  if (net.node_count() > 0 && !is_connected(net))
    throw std::runtime_error("graph parse error: graph is not connected");
  return net;
}

Network read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_network(in);
}

}  // namespace dcmr
