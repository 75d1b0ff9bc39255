#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcmr {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;
inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

// Absolute tolerance for comparing accumulated costs/delays in checks.
inline constexpr double kTolerance = 1e-9;

struct Coord {
  double x_km = 0.0;
  double y_km = 0.0;
  bool operator==(const Coord&) const = default;
};

struct EdgeAttr {
  double cost = 0.0;
  double delay_s = 0.0;
  bool operator==(const EdgeAttr&) const = default;
};

struct HalfEdge {
  NodeId to = kNoNode;
  double cost = 0.0;
  double delay_s = 0.0;
  bool operator==(const HalfEdge&) const = default;
};

// Undirected weighted network. Nodes are dense ids 0..n-1 with planar
// coordinates; every edge carries a nonnegative (cost, delay) pair and is
// stored once per endpoint. Immutable once built (see Network invariants in
// the module tests); algorithms share const references freely.
class Network {
 public:
  NodeId add_node(double x_km, double y_km);

  // Rejects self-loops, duplicate edges, unknown ids and negative weights.
  void add_edge(NodeId u, NodeId v, double cost, double delay_s);

  int node_count() const { return static_cast<int>(coords_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  bool has_node(NodeId v) const { return v >= 0 && v < node_count(); }
  const Coord& coord(NodeId v) const;

  // Neighbors sorted by id; the basis for every deterministic traversal.
  const std::vector<HalfEdge>& neighbors(NodeId v) const;

  bool has_edge(NodeId u, NodeId v) const;
  EdgeAttr edge(NodeId u, NodeId v) const;  // throws when absent

  // All edges as (u, v) with u < v, ordered by (u, v).
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  bool operator==(const Network&) const = default;

 private:
  const HalfEdge* find_half_edge(NodeId u, NodeId v) const;

  std::vector<Coord> coords_;
  std::vector<std::vector<HalfEdge>> adj_;
  std::size_t edge_count_ = 0;
};

bool is_connected(const Network& net);

// A multicast request: source s, destination set D (|D| = m) and the
// per-destination delay upper bound.
struct MulticastRequest {
  NodeId source = kNoNode;
  std::vector<NodeId> destinations;  // sorted, unique
  double delay_bound_s = 0.0;
};

MulticastRequest make_request(const Network& net, NodeId source,
                              std::vector<NodeId> destinations,
                              double delay_bound_s);

// Ordered node sequence whose consecutive pairs are network edges.
using Path = std::vector<NodeId>;

// Throws std::invalid_argument unless `path` is a simple path of `net`.
void check_path(const Network& net, const Path& path);

double path_cost(const Network& net, const Path& path);
double path_delay(const Network& net, const Path& path);

// Rooted multicast tree kept as a parent map over a subset of nodes, with
// the accumulated root delay cached per node. During construction the map
// may be transiently inconsistent; validate_tree() and eliminate_loops()
// are the repair/inspection points.
class RoutedTree {
 public:
  RoutedTree(int node_count, NodeId root);

  NodeId root() const { return root_; }
  int network_size() const { return static_cast<int>(parent_.size()); }
  int size() const { return member_count_; }
  bool contains(NodeId v) const;
  NodeId parent(NodeId v) const;  // kNoNode for the root and non-members

  // Accumulated delay from the root; +inf for non-members or nodes whose
  // chain does not reach the root.
  double delay_to(NodeId v) const;

  std::vector<NodeId> nodes() const;  // ascending
  // Distinct (parent, child) pairs, ordered by child id.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  // Makes `parent` the one father of `child`, adding either endpoint to the
  // tree as needed. Any previous father edge of `child` is discarded.
  void set_parent(NodeId child, NodeId parent);

  void remove(NodeId v);  // v must not be the root

  // Recomputes every cached delay by walking children from the root.
  // Members unreachable from the root end up at +inf.
  void recompute_delays(const Network& net);

  std::vector<std::vector<NodeId>> children() const;

  bool operator==(const RoutedTree&) const = default;

 private:
  NodeId root_ = kNoNode;
  int member_count_ = 0;
  std::vector<NodeId> parent_;
  std::vector<double> delay_;
  std::vector<std::uint8_t> member_;
};

// Sum of edge costs over the distinct parent edges of the tree.
// Throws std::invalid_argument if a parent edge is absent from `net`.
double tree_cost(const RoutedTree& tree, const Network& net);

struct ValidationReport {
  bool acyclic = false;                 // (a) every chain reaches the root
  bool root_is_source = false;          // (b)
  bool destinations_connected = false;  // (c)
  bool delays_consistent = false;       // (d) cached delays match the edges
  bool delays_within_bound = false;     // (e) per destination
  bool leaves_are_destinations = false; // (f) no dangling Steiner leaves
  std::vector<std::string> failures;

  bool all_ok() const {
    return acyclic && root_is_source && destinations_connected &&
           delays_consistent && delays_within_bound && leaves_are_destinations;
  }
};

ValidationReport validate_tree(const RoutedTree& tree, const Network& net,
                               const MulticastRequest& req);

// Orients an undirected tree edge set away from `root` and fills in the
// accumulated delays. Every edge must exist in `net`.
RoutedTree tree_from_edges(const Network& net, NodeId root,
                           std::span<const std::pair<NodeId, NodeId>> edges);

// Iteratively removes leaves that are neither the root nor listed in `keep`.
void prune_leaves(RoutedTree& tree, std::span<const NodeId> keep);

}  // namespace dcmr
