#include "dcmr/shortest_paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcmr {

SpTree dijkstra(const Network& net, NodeId root, Metric metric) {
  if (!net.has_node(root))
    throw std::invalid_argument("dijkstra: root is not a network node");
  const int n = net.node_count();
  SpTree out;
  out.root = root;
  out.dist.assign(n, kInfDist);
  out.parent.assign(n, kNoNode);
  out.dist[root] = 0.0;

  std::vector<std::uint8_t> settled(n, 0);
  for (int round = 0; round < n; ++round) {
    NodeId u = kNoNode;
    double best = kInfDist;
    for (NodeId v = 0; v < n; ++v)
      if (!settled[v] && out.dist[v] < best) {
        best = out.dist[v];
        u = v;
      }
    if (u == kNoNode) break;  // the rest is unreachable
    settled[u] = 1;
    for (const HalfEdge& he : net.neighbors(u)) {
      double cand = out.dist[u] + edge_metric(he, metric);
      if (cand < out.dist[he.to]) {
        out.dist[he.to] = cand;
        out.parent[he.to] = u;
      }
    }
  }
  return out;
}

LeastDelayTree least_delay_tree(const Network& net, const MulticastRequest& req) {
  LeastDelayTree out;
  out.spt = dijkstra(net, req.source, Metric::Delay);
  out.max_destination_delay_s = 0.0;
  for (NodeId d : req.destinations)
    out.max_destination_delay_s =
        std::max(out.max_destination_delay_s, out.spt.dist[d]);
  out.feasible = out.max_destination_delay_s <= req.delay_bound_s;
  return out;
}

Path extract_path(const SpTree& spt, NodeId target) {
  if (!spt.reached(target))
    throw std::invalid_argument("extract_path: target " +
                                std::to_string(target) +
                                " was not reached from the root");
  Path path;
  for (NodeId cur = target; cur != kNoNode; cur = spt.parent[cur])
    path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace dcmr
