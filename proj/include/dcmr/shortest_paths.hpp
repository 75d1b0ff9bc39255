#pragma once

#include "dcmr/graph.hpp"

namespace dcmr {

enum class Metric { Cost, Delay };

inline double edge_metric(const HalfEdge& he, Metric m) {
  return m == Metric::Cost ? he.cost : he.delay_s;
}

// Single-source shortest-path tree. dist is +inf and parent kNoNode for
// nodes the root cannot reach.
struct SpTree {
  NodeId root = kNoNode;
  std::vector<double> dist;
  std::vector<NodeId> parent;

  bool reached(NodeId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < dist.size() &&
           dist[v] < kInfDist;
  }
};

// Dense O(n^2) scan, which is what the complexity budget assumes. Ties on
// the next node to settle go to the smaller id and a relaxation only
// replaces a parent on strict improvement, so results are deterministic.
SpTree dijkstra(const Network& net, NodeId root, Metric metric);

struct LeastDelayTree {
  SpTree spt;
  bool feasible = false;          // max destination delay within the bound
  double max_destination_delay_s = 0.0;
};

// The delay-metric SPT from the request source, plus the Step-1 gate: the
// request is feasible iff every destination's least delay meets the bound.
LeastDelayTree least_delay_tree(const Network& net, const MulticastRequest& req);

// Root-first path to `target`; throws std::invalid_argument when the
// target was not reached.
Path extract_path(const SpTree& spt, NodeId target);

}  // namespace dcmr
