#pragma once

#include <span>

#include "dcmr/graph.hpp"

namespace dcmr {

// Tree without an orientation; adh_tree() output. `nodes` is ascending and
// `edges` holds (u, v) with u < v, ordered by (u, v).
struct UnrootedTree {
  std::vector<NodeId> nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;

  bool operator==(const UnrootedTree&) const = default;
};

double edge_set_cost(const Network& net,
                     std::span<const std::pair<NodeId, NodeId>> edges);

// Disjoint partial trees over the network, one singleton per terminal at
// the start. Each live component caches the least-cost distance d(v, V_i)
// from every node v (a multi-source cost-metric Dijkstra), so scoring a
// merge candidate is a table lookup. Merging splices the two least-cost
// paths through the chosen node and rebuilds only the merged component's
// cache.
class Forest {
 public:
  struct Candidate {
    double score = kInfDist;
    NodeId via = kNoNode;
    int comp_a = -1;  // nearest component
    int comp_b = -1;  // second nearest
  };

  Forest(const Network& net, std::span<const NodeId> terminals);

  int component_count() const { return live_count_; }
  std::vector<int> component_ids() const;  // live ids, ascending
  const std::vector<NodeId>& component_nodes(int id) const;
  const std::vector<std::pair<NodeId, NodeId>>& component_edges(int id) const;
  int component_of(NodeId v) const;  // -1 for free nodes

  // Least-cost distance d(v, V_id); zero when v is in the component.
  double distance_to(int id, NodeId v) const;

  // f(v): the two live components nearest to v and their summed distance.
  // Requires at least two live components. Distance ties pick the smaller
  // component id.
  Candidate score(NodeId v) const;

  // argmin of score() over all nodes; ties pick the smaller node id.
  Candidate best_candidate() const;

  // Joins comp_a and comp_b through `via`, splicing the two least-cost
  // paths. Edges already present or closing a cycle inside the forming
  // component are skipped.
  void merge(const Candidate& cand);

  // The surviving component as an unrooted tree; requires k == 1.
  UnrootedTree tree() const;

  const Network& net() const { return *net_; }

 private:
  struct Component {
    bool alive = false;
    std::vector<NodeId> nodes;                      // ascending
    std::vector<std::pair<NodeId, NodeId>> edges;   // (min, max) pairs
    std::vector<double> dist;     // d(v, nodes) for every network node
    std::vector<NodeId> toward;   // next hop from v toward the component
  };

  void rebuild_cache(int id);
  void extract_path_to(int id, NodeId via, std::vector<NodeId>& out) const;

  const Network* net_;
  std::vector<Component> comps_;
  std::vector<int> comp_of_;
  int live_count_ = 0;
};

// Step-3 score of routing a merge through node v in the current forest.
Forest::Candidate merge_score(const Network& net, NodeId v, const Forest& forest);

// Average distance heuristic: merge the two nearest subtrees through the
// best intermediate node until a single tree spans every terminal, then
// prune non-terminal leaves.
UnrootedTree adh_tree(const Network& net, std::vector<NodeId> terminals);

}  // namespace dcmr
