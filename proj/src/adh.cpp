#include "dcmr/adh.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dcmr/shortest_paths.hpp"

namespace dcmr {

namespace {

std::pair<NodeId, NodeId> norm_edge(NodeId u, NodeId v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace

double edge_set_cost(const Network& net,
                     std::span<const std::pair<NodeId, NodeId>> edges) {
  double total = 0.0;
  for (auto [u, v] : edges) total += net.edge(u, v).cost;
  return total;
}

Forest::Forest(const Network& net, std::span<const NodeId> terminals)
    : net_(&net), comp_of_(net.node_count(), -1) {
  std::vector<NodeId> terms(terminals.begin(), terminals.end());
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.empty())
    throw std::invalid_argument("forest needs at least one terminal");
  for (NodeId t : terms)
    if (!net.has_node(t))
      throw std::invalid_argument("terminal " + std::to_string(t) +
                                  " is not a network node");

  comps_.resize(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    comps_[i].alive = true;
    comps_[i].nodes = {terms[i]};
    comp_of_[terms[i]] = static_cast<int>(i);
    rebuild_cache(static_cast<int>(i));
  }
  live_count_ = static_cast<int>(terms.size());
}

std::vector<int> Forest::component_ids() const {
  std::vector<int> ids;
  ids.reserve(live_count_);
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i].alive) ids.push_back(static_cast<int>(i));
  return ids;
}

const std::vector<NodeId>& Forest::component_nodes(int id) const {
  if (id < 0 || id >= static_cast<int>(comps_.size()) || !comps_[id].alive)
    throw std::invalid_argument("unknown component id " + std::to_string(id));
  return comps_[id].nodes;
}

const std::vector<std::pair<NodeId, NodeId>>& Forest::component_edges(int id) const {
  component_nodes(id);  // validates id
  return comps_[id].edges;
}

int Forest::component_of(NodeId v) const {
  return net_->has_node(v) ? comp_of_[v] : -1;
}

double Forest::distance_to(int id, NodeId v) const {
  component_nodes(id);  // validates id
  if (!net_->has_node(v))
    throw std::invalid_argument("unknown node id " + std::to_string(v));
  return comps_[id].dist[v];
}

// Multi-source Dijkstra with every component node at distance zero;
// `toward` points one hop closer to the component. Same dense scan and
// tie-break discipline as the single-source version.
void Forest::rebuild_cache(int id) {
  const int n = net_->node_count();
  Component& comp = comps_[id];
  comp.dist.assign(n, kInfDist);
  comp.toward.assign(n, kNoNode);
  for (NodeId s : comp.nodes) comp.dist[s] = 0.0;

  std::vector<std::uint8_t> settled(n, 0);
  for (int round = 0; round < n; ++round) {
    NodeId u = kNoNode;
    double best = kInfDist;
    for (NodeId v = 0; v < n; ++v)
      if (!settled[v] && comp.dist[v] < best) {
        best = comp.dist[v];
        u = v;
      }
    if (u == kNoNode) break;
    settled[u] = 1;
    for (const HalfEdge& he : net_->neighbors(u)) {
      double cand = comp.dist[u] + he.cost;
      if (cand < comp.dist[he.to]) {
        comp.dist[he.to] = cand;
        comp.toward[he.to] = u;
      }
    }
  }
}

Forest::Candidate Forest::score(NodeId v) const {
  if (!net_->has_node(v))
    throw std::invalid_argument("unknown node id " + std::to_string(v));
  if (live_count_ < 2)
    throw std::logic_error("merge score needs at least two components");

  Candidate c;
  c.via = v;
  double d1 = kInfDist, d2 = kInfDist;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (!comps_[i].alive) continue;
    double d = comps_[i].dist[v];
    if (d < d1) {
      d2 = d1;
      c.comp_b = c.comp_a;
      d1 = d;
      c.comp_a = static_cast<int>(i);
    } else if (d < d2) {
      d2 = d;
      c.comp_b = static_cast<int>(i);
    }
  }
  c.score = d1 + d2;
  return c;
}

Forest::Candidate Forest::best_candidate() const {
  Candidate best;
  for (NodeId v = 0; v < net_->node_count(); ++v) {
    Candidate c = score(v);
    if (c.score < best.score) best = c;
  }
  if (!(best.score < kInfDist))
    throw std::runtime_error("terminals are not connected in the network");
  return best;
}

void Forest::extract_path_to(int id, NodeId via, std::vector<NodeId>& out) const {
  const Component& comp = comps_[id];
  out.clear();
  NodeId cur = via;
  out.push_back(cur);
  while (comp.dist[cur] != 0.0) {
    cur = comp.toward[cur];
    if (cur == kNoNode)
      throw std::runtime_error("no path from merge node to component");
    out.push_back(cur);
  }
}

void Forest::merge(const Candidate& cand) {
  if (cand.comp_a < 0 || cand.comp_b < 0 || cand.comp_a == cand.comp_b)
    throw std::invalid_argument("merge needs two distinct components");
  component_nodes(cand.comp_a);
  component_nodes(cand.comp_b);

  std::vector<NodeId> path_a, path_b;
  extract_path_to(cand.comp_a, cand.via, path_a);
  extract_path_to(cand.comp_b, cand.via, path_b);

  // Union-find over nodes; every existing component starts pre-joined so a
  // splice edge inside one is recognized as cycle-closing.
  const int n = net_->node_count();
  std::vector<NodeId> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&uf](NodeId x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  };
  for (const Component& comp : comps_)
    if (comp.alive)
      for (NodeId v : comp.nodes) uf[find(v)] = find(comp.nodes.front());

  std::vector<std::pair<NodeId, NodeId>> new_edges;
  std::vector<int> absorbed{std::min(cand.comp_a, cand.comp_b),
                            std::max(cand.comp_a, cand.comp_b)};
  auto absorb = [&](NodeId v) {
    int c = comp_of_[v];
    if (c >= 0 && std::find(absorbed.begin(), absorbed.end(), c) == absorbed.end())
      absorbed.push_back(c);
  };
  for (const auto* path : {&path_a, &path_b}) {
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
      NodeId a = (*path)[i], b = (*path)[i + 1];
      absorb(a);
      absorb(b);
      if (find(a) == find(b)) continue;  // already present or cycle-closing
      uf[find(a)] = find(b);
      new_edges.push_back(norm_edge(a, b));
    }
  }

  const int target = *std::min_element(absorbed.begin(), absorbed.end());
  Component merged;
  merged.alive = true;
  for (int id : absorbed) {
    auto& src = comps_[id];
    merged.nodes.insert(merged.nodes.end(), src.nodes.begin(), src.nodes.end());
    merged.edges.insert(merged.edges.end(), src.edges.begin(), src.edges.end());
    src = Component{};
    --live_count_;
  }
  for (const auto* path : {&path_a, &path_b})
    for (NodeId v : *path)
      if (comp_of_[v] == -1) merged.nodes.push_back(v);
  merged.edges.insert(merged.edges.end(), new_edges.begin(), new_edges.end());

  std::sort(merged.nodes.begin(), merged.nodes.end());
  merged.nodes.erase(std::unique(merged.nodes.begin(), merged.nodes.end()),
                     merged.nodes.end());
  std::sort(merged.edges.begin(), merged.edges.end());

  comps_[target] = std::move(merged);
  for (NodeId v : comps_[target].nodes) comp_of_[v] = target;
  ++live_count_;
  rebuild_cache(target);
}

UnrootedTree Forest::tree() const {
  if (live_count_ != 1)
    throw std::logic_error("forest still has " + std::to_string(live_count_) +
                           " components");
  for (const Component& comp : comps_)
    if (comp.alive) return {comp.nodes, comp.edges};
  throw std::logic_error("no live component");
}

Forest::Candidate merge_score(const Network& net, NodeId v, const Forest& forest) {
  if (&net != &forest.net())
    throw std::invalid_argument("forest belongs to a different network");
  return forest.score(v);
}

namespace {

void prune_unrooted(const Network& net, UnrootedTree& tree,
                    std::span<const NodeId> terminals) {
  std::vector<int> degree(net.node_count(), 0);
  std::vector<std::uint8_t> is_terminal(net.node_count(), 0);
  std::vector<std::uint8_t> dropped(net.node_count(), 0);
  for (NodeId t : terminals) is_terminal[t] = 1;
  for (auto [u, v] : tree.edges) {
    ++degree[u];
    ++degree[v];
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v : tree.nodes) {
      if (dropped[v] || is_terminal[v] || degree[v] > 1) continue;
      dropped[v] = 1;
      changed = true;
      for (auto it = tree.edges.begin(); it != tree.edges.end(); ++it) {
        if (it->first == v || it->second == v) {
          --degree[it->first];
          --degree[it->second];
          tree.edges.erase(it);
          break;
        }
      }
    }
  }
  std::erase_if(tree.nodes, [&](NodeId v) { return dropped[v]; });
}

}  // namespace

UnrootedTree adh_tree(const Network& net, std::vector<NodeId> terminals) {
  Forest forest(net, terminals);
  while (forest.component_count() > 1) forest.merge(forest.best_candidate());
  UnrootedTree tree = forest.tree();
  prune_unrooted(net, tree, terminals);
  return tree;
}

}  // namespace dcmr
