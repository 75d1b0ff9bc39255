#include "dcmr/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace dcmr {

namespace {

std::string node_str(NodeId v) { return std::to_string(v); }

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

NodeId Network::add_node(double x_km, double y_km) {
  coords_.push_back({x_km, y_km});
  adj_.emplace_back();
  return static_cast<NodeId>(coords_.size()) - 1;
}

void Network::add_edge(NodeId u, NodeId v, double cost, double delay_s) {
  if (!has_node(u) || !has_node(v))
    fail("edge (" + node_str(u) + "," + node_str(v) + "): unknown node id");
  if (u == v) fail("self-loop at node " + node_str(u));
  if (cost < 0.0 || delay_s < 0.0)
    fail("edge (" + node_str(u) + "," + node_str(v) +
         "): cost and delay must be nonnegative");
  if (has_edge(u, v))
    fail("duplicate edge (" + node_str(u) + "," + node_str(v) + ")");

  auto insert = [&](NodeId from, NodeId to) {
    auto& list = adj_[from];
    HalfEdge he{to, cost, delay_s};
    list.insert(std::upper_bound(list.begin(), list.end(), he,
                                 [](const HalfEdge& a, const HalfEdge& b) {
                                   return a.to < b.to;
                                 }),
                he);
  };
  insert(u, v);
  insert(v, u);
  ++edge_count_;
}

const Coord& Network::coord(NodeId v) const {
  if (!has_node(v)) fail("unknown node id " + node_str(v));
  return coords_[v];
}

const std::vector<HalfEdge>& Network::neighbors(NodeId v) const {
  if (!has_node(v)) fail("unknown node id " + node_str(v));
  return adj_[v];
}

const HalfEdge* Network::find_half_edge(NodeId u, NodeId v) const {
  const auto& list = adj_[u];
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const HalfEdge& he, NodeId id) { return he.to < id; });
  if (it == list.end() || it->to != v) return nullptr;
  return &*it;
}

bool Network::has_edge(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v) || u == v) return false;
  return find_half_edge(u, v) != nullptr;
}

EdgeAttr Network::edge(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v))
    fail("unknown node id in edge query (" + node_str(u) + "," + node_str(v) + ")");
  const HalfEdge* he = find_half_edge(u, v);
  if (he == nullptr)
    fail("no edge (" + node_str(u) + "," + node_str(v) + ")");
  return {he->cost, he->delay_s};
}

std::vector<std::pair<NodeId, NodeId>> Network::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u)
    for (const HalfEdge& he : adj_[u])
      if (u < he.to) out.emplace_back(u, he.to);
  return out;
}

bool is_connected(const Network& net) {
  const int n = net.node_count();
  if (n == 0) return false;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (const HalfEdge& he : net.neighbors(u)) {
      if (!seen[he.to]) {
        seen[he.to] = 1;
        ++reached;
        stack.push_back(he.to);
      }
    }
  }
  return reached == n;
}

MulticastRequest make_request(const Network& net, NodeId source,
                              std::vector<NodeId> destinations,
                              double delay_bound_s) {
  if (!net.has_node(source)) fail("request source is not a network node");
  if (destinations.empty()) fail("request needs at least one destination");
  std::sort(destinations.begin(), destinations.end());
  destinations.erase(std::unique(destinations.begin(), destinations.end()),
                     destinations.end());
  for (NodeId d : destinations) {
    if (!net.has_node(d)) fail("destination " + node_str(d) + " is not a network node");
    if (d == source) fail("source must not be a destination");
  }
  if (!(delay_bound_s > 0.0)) fail("delay bound must be positive");
  return {source, std::move(destinations), delay_bound_s};
}

void check_path(const Network& net, const Path& path) {
  if (path.empty()) fail("empty path");
  std::unordered_set<NodeId> seen;
  for (NodeId v : path) {
    if (!net.has_node(v)) fail("path visits unknown node " + node_str(v));
    if (!seen.insert(v).second) fail("path repeats node " + node_str(v));
  }
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!net.has_edge(path[i - 1], path[i]))
      fail("path pair (" + node_str(path[i - 1]) + "," + node_str(path[i]) +
           ") is not an edge");
}

double path_cost(const Network& net, const Path& path) {
  check_path(net, path);
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i)
    total += net.edge(path[i - 1], path[i]).cost;
  return total;
}

double path_delay(const Network& net, const Path& path) {
  check_path(net, path);
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i)
    total += net.edge(path[i - 1], path[i]).delay_s;
  return total;
}

RoutedTree::RoutedTree(int node_count, NodeId root)
    : root_(root),
      member_count_(1),
      parent_(node_count, kNoNode),
      delay_(node_count, kInfDist),
      member_(node_count, 0) {
  if (root < 0 || root >= node_count)
    fail("tree root " + node_str(root) + " out of range");
  member_[root] = 1;
  delay_[root] = 0.0;
}

bool RoutedTree::contains(NodeId v) const {
  return v >= 0 && v < network_size() && member_[v];
}

NodeId RoutedTree::parent(NodeId v) const {
  return contains(v) ? parent_[v] : kNoNode;
}

double RoutedTree::delay_to(NodeId v) const {
  return contains(v) ? delay_[v] : kInfDist;
}

std::vector<NodeId> RoutedTree::nodes() const {
  std::vector<NodeId> out;
  out.reserve(member_count_);
  for (NodeId v = 0; v < network_size(); ++v)
    if (member_[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<NodeId, NodeId>> RoutedTree::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(member_count_ > 0 ? member_count_ - 1 : 0);
  for (NodeId v = 0; v < network_size(); ++v)
    if (member_[v] && parent_[v] != kNoNode) out.emplace_back(parent_[v], v);
  return out;
}

void RoutedTree::set_parent(NodeId child, NodeId parent) {
  if (child < 0 || child >= network_size() || parent < 0 ||
      parent >= network_size())
    fail("set_parent: node id out of range");
  if (child == parent) fail("set_parent: node cannot father itself");
  if (child == root_) fail("set_parent: the root has no father");
  for (NodeId v : {child, parent}) {
    if (!member_[v]) {
      member_[v] = 1;
      ++member_count_;
    }
  }
  parent_[child] = parent;
}

void RoutedTree::remove(NodeId v) {
  if (!contains(v)) return;
  if (v == root_) fail("cannot remove the tree root");
  member_[v] = 0;
  parent_[v] = kNoNode;
  delay_[v] = kInfDist;
  --member_count_;
}

std::vector<std::vector<NodeId>> RoutedTree::children() const {
  std::vector<std::vector<NodeId>> out(network_size());
  for (NodeId v = 0; v < network_size(); ++v)
    if (member_[v] && parent_[v] != kNoNode && member_[parent_[v]])
      out[parent_[v]].push_back(v);
  return out;
}

void RoutedTree::recompute_delays(const Network& net) {
  std::fill(delay_.begin(), delay_.end(), kInfDist);
  delay_[root_] = 0.0;
  auto kids = children();
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId c : kids[u]) {
      if (!net.has_edge(u, c))
        fail("tree edge (" + node_str(u) + "," + node_str(c) +
             ") is absent from the network");
      if (delay_[c] != kInfDist) continue;  // cycle guard
      delay_[c] = delay_[u] + net.edge(u, c).delay_s;
      stack.push_back(c);
    }
  }
}

double tree_cost(const RoutedTree& tree, const Network& net) {
  double total = 0.0;
  for (auto [p, c] : tree.edges()) {
    if (!net.has_edge(p, c))
      fail("tree edge (" + node_str(p) + "," + node_str(c) +
           ") is absent from the network");
    total += net.edge(p, c).cost;
  }
  return total;
}

ValidationReport validate_tree(const RoutedTree& tree, const Network& net,
                               const MulticastRequest& req) {
  ValidationReport rep;
  const auto members = tree.nodes();
  const int size = tree.size();

  // (a) every parent chain terminates at the root within |tree| steps
  rep.acyclic = true;
  for (NodeId v : members) {
    NodeId cur = v;
    int steps = 0;
    while (cur != tree.root() && steps <= size) {
      NodeId p = tree.parent(cur);
      if (p == kNoNode || !tree.contains(p)) break;
      cur = p;
      ++steps;
    }
    if (cur != tree.root()) {
      rep.acyclic = false;
      rep.failures.push_back("chain from node " + node_str(v) +
                             " does not reach the root");
      break;
    }
  }

  // (b)
  rep.root_is_source = tree.root() == req.source;
  if (!rep.root_is_source)
    rep.failures.push_back("tree root differs from the request source");

  // (c) destinations present and grounded
  rep.destinations_connected = true;
  for (NodeId d : req.destinations) {
    bool ok = tree.contains(d);
    if (ok) {
      NodeId cur = d;
      int steps = 0;
      while (cur != tree.root() && steps <= size) {
        NodeId p = tree.parent(cur);
        if (p == kNoNode || !tree.contains(p)) break;
        cur = p;
        ++steps;
      }
      ok = cur == tree.root();
    }
    if (!ok) {
      rep.destinations_connected = false;
      rep.failures.push_back("destination " + node_str(d) +
                             " is not connected to the root");
    }
  }

  // (d) cached delay of each member matches its father edge
  rep.delays_consistent = std::abs(tree.delay_to(tree.root())) <= kTolerance;
  for (NodeId v : members) {
    if (v == tree.root()) continue;
    NodeId p = tree.parent(v);
    if (p == kNoNode || !net.has_edge(p, v)) {
      rep.delays_consistent = false;
      rep.failures.push_back("node " + node_str(v) +
                             " has no valid father edge");
      continue;
    }
    double expect = tree.delay_to(p) + net.edge(p, v).delay_s;
    if (!(std::abs(tree.delay_to(v) - expect) <= kTolerance)) {
      rep.delays_consistent = false;
      rep.failures.push_back("cached delay of node " + node_str(v) +
                             " is inconsistent");
    }
  }

  // (e) per-destination delay bound
  rep.delays_within_bound = true;
  for (NodeId d : req.destinations) {
    if (!(tree.delay_to(d) <= req.delay_bound_s + kTolerance)) {
      rep.delays_within_bound = false;
      rep.failures.push_back("destination " + node_str(d) +
                             " violates the delay bound");
    }
  }

  // (f) no dangling Steiner leaves
  rep.leaves_are_destinations = true;
  auto kids = tree.children();
  for (NodeId v : members) {
    if (v == tree.root() || !kids[v].empty()) continue;
    if (!std::binary_search(req.destinations.begin(), req.destinations.end(), v)) {
      rep.leaves_are_destinations = false;
      rep.failures.push_back("leaf " + node_str(v) + " is not a destination");
    }
  }
  return rep;
}

RoutedTree tree_from_edges(const Network& net, NodeId root,
                           std::span<const std::pair<NodeId, NodeId>> edges) {
  RoutedTree tree(net.node_count(), root);
  std::vector<std::vector<NodeId>> adj(net.node_count());
  for (auto [u, v] : edges) {
    if (!net.has_edge(u, v))
      fail("edge (" + node_str(u) + "," + node_str(v) +
           ") is absent from the network");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<std::uint8_t> seen(net.node_count(), 0);
  seen[root] = 1;
  std::queue<NodeId> bfs;
  bfs.push(root);
  std::size_t used = 0;
  while (!bfs.empty()) {
    NodeId u = bfs.front();
    bfs.pop();
    for (NodeId v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      tree.set_parent(v, u);
      ++used;
      bfs.push(v);
    }
  }
  if (used != edges.size())
    fail("edge set is not a tree reachable from the root");
  tree.recompute_delays(net);
  return tree;
}

void prune_leaves(RoutedTree& tree, std::span<const NodeId> keep) {
  std::vector<std::uint8_t> protected_node(tree.network_size(), 0);
  for (NodeId v : keep)
    if (v >= 0 && v < tree.network_size()) protected_node[v] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    auto kids = tree.children();
    for (NodeId v : tree.nodes()) {
      if (v == tree.root() || protected_node[v] || !kids[v].empty()) continue;
      tree.remove(v);
      changed = true;
    }
  }
}

}  // namespace dcmr
