#include "drgcert/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace drg::graph {

namespace {
constexpr uint32_t kUnreached = std::numeric_limits<uint32_t>::max();
}

Graph::Graph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
             std::vector<std::string> labels)
    : adj_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw VertexOutOfRange("edge endpoint " + std::to_string(std::max(u, v)) +
                             " out of range for n=" + std::to_string(n));
    if (u == v) throw LoopEdge("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
  set_labels(std::move(labels));
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != adj_.size())
    throw Error("label count " + std::to_string(labels.size()) +
                " does not match n=" + std::to_string(adj_.size()));
  labels_ = std::move(labels);
  if (labels_.empty()) labels_.resize(adj_.size());
}

void Graph::set_sides(std::vector<uint8_t> sides) {
  if (sides.size() != adj_.size())
    throw Error("side count does not match vertex count");
  for (uint32_t u = 0; u < n(); ++u) {
    if (sides[u] > 1) throw Error("side values must be 0 or 1");
    for (uint32_t v : adj_[u])
      if (sides[u] == sides[v])
        throw NotBipartite("edge inside one side of the claimed bipartition");
  }
  sides_ = std::move(sides);
}

bool Graph::adjacent(uint32_t u, uint32_t v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(edge_count_);
  for (uint32_t u = 0; u < n(); ++u)
    for (uint32_t v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_regular(uint32_t* k) const {
  if (n() == 0) return true;
  const uint32_t d = degree(0);
  for (uint32_t v = 1; v < n(); ++v)
    if (degree(v) != d) return false;
  if (k) *k = d;
  return true;
}

std::vector<uint32_t> bfs_distances(const Graph& g, uint32_t src) {
  if (src >= g.n()) throw VertexOutOfRange("bfs source out of range");
  std::vector<uint32_t> dist(g.n(), kUnreached);
  std::deque<uint32_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const uint32_t u = queue.front();
    queue.pop_front();
    for (uint32_t v : g.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistancePartition bfs_partition(const Graph& g, uint32_t src) {
  DistancePartition out;
  out.dist = bfs_distances(g, src);
  uint64_t reached = 0;
  for (uint32_t d : out.dist) {
    if (d == kUnreached) continue;
    ++reached;
    if (d >= out.class_size.size()) out.class_size.resize(d + 1, 0);
    ++out.class_size[d];
  }
  out.eccentricity = uint32_t(out.class_size.size()) - (out.class_size.empty() ? 0 : 1);
  out.connected = reached == g.n();
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  return bfs_partition(g, 0).connected;
}

std::optional<std::vector<uint8_t>> bipartition(const Graph& g) {
  std::vector<uint8_t> side(g.n(), 2);
  for (uint32_t s = 0; s < g.n(); ++s) {
    if (side[s] != 2) continue;
    side[s] = 0;
    std::deque<uint32_t> queue{s};
    while (!queue.empty()) {
      const uint32_t u = queue.front();
      queue.pop_front();
      for (uint32_t v : g.neighbors(u)) {
        if (side[v] == 2) {
          side[v] = uint8_t(1 - side[u]);
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

uint32_t diameter(const Graph& g) {
  uint32_t diam = 0;
  for (uint32_t v = 0; v < g.n(); ++v) {
    DistancePartition p = bfs_partition(g, v);
    if (!p.connected) throw NotConnected("diameter of a disconnected graph");
    diam = std::max(diam, p.eccentricity);
  }
  return diam;
}

Graph bipartite_double(const Graph& g) {
  const uint32_t n = g.n();
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(2 * g.edge_count());
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v + n);
    edges.emplace_back(v, u + n);
  }
  std::vector<std::string> labels(2 * size_t(n));
  for (uint32_t v = 0; v < n; ++v) {
    labels[v] = g.label(v) + "+";
    labels[v + n] = g.label(v) + "-";
  }
  Graph out(2 * n, edges, std::move(labels));
  std::vector<uint8_t> sides(2 * size_t(n), 0);
  std::fill(sides.begin() + n, sides.end(), 1);
  out.set_sides(std::move(sides));
  return out;
}

Graph extended_bipartite_double(const Graph& g) {
  const uint32_t n = g.n();
  Graph bd = bipartite_double(g);
  std::vector<std::pair<uint32_t, uint32_t>> edges = bd.edges();
  for (uint32_t v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  Graph out(2 * n, edges, bd.labels());
  out.set_sides(bd.sides());
  return out;
}

Graph halved_graph(const Graph& g, uint8_t side) {
  std::optional<std::vector<uint8_t>> sides;
  if (g.has_sides()) sides = g.sides();
  else sides = bipartition(g);
  if (!sides) throw NotBipartite("halved graph of a non-bipartite graph");
  if (!is_connected(g)) throw NotConnected("halved graph of a disconnected graph");
  std::vector<uint32_t> keep;
  std::vector<uint32_t> newindex(g.n(), kUnreached);
  for (uint32_t v = 0; v < g.n(); ++v) {
    if ((*sides)[v] == side) {
      newindex[v] = uint32_t(keep.size());
      keep.push_back(v);
    }
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::vector<uint8_t> seen(g.n(), 0);
  for (uint32_t u : keep) {
    // Distance-2 neighbors of u inside the kept class.
    for (uint32_t w : g.neighbors(u))
      for (uint32_t v : g.neighbors(w))
        if (v != u && !seen[v] && newindex[v] != kUnreached) {
          seen[v] = 1;
          if (newindex[u] < newindex[v]) edges.emplace_back(newindex[u], newindex[v]);
        }
    for (uint32_t w : g.neighbors(u))
      for (uint32_t v : g.neighbors(w)) seen[v] = 0;
  }
  std::vector<std::string> labels(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) labels[i] = g.label(keep[i]);
  return Graph(uint32_t(keep.size()), edges, std::move(labels));
}

Graph distance_1_or_2(const Graph& g) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::vector<uint8_t> mark(g.n(), 0);
  for (uint32_t u = 0; u < g.n(); ++u) {
    for (uint32_t v : g.neighbors(u)) {
      if (u < v && !mark[v]) {
        mark[v] = 1;
        edges.emplace_back(u, v);
      }
      for (uint32_t w : g.neighbors(v))
        if (u < w && !mark[w]) {
          mark[w] = 1;
          edges.emplace_back(u, w);
        }
    }
    for (uint32_t v : g.neighbors(u)) {
      mark[v] = 0;
      for (uint32_t w : g.neighbors(v)) mark[w] = 0;
    }
  }
  return Graph(g.n(), edges, g.labels());
}

Graph complement(const Graph& g) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < g.n(); ++u)
    for (uint32_t v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.n(), edges, g.labels());
}

Graph induce(const Graph& g, const std::vector<uint32_t>& keep) {
  std::vector<uint32_t> newindex(g.n(), kUnreached);
  for (uint32_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.n()) throw VertexOutOfRange("induce: vertex out of range");
    if (newindex[keep[i]] != kUnreached) throw Error("induce: duplicate vertex");
    newindex[keep[i]] = i;
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u : keep)
    for (uint32_t v : g.neighbors(u))
      if (newindex[v] != kUnreached && newindex[u] < newindex[v])
        edges.emplace_back(newindex[u], newindex[v]);
  std::vector<std::string> labels(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) labels[i] = g.label(keep[i]);
  Graph out(uint32_t(keep.size()), edges, std::move(labels));
  if (g.has_sides()) {
    std::vector<uint8_t> sides(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) sides[i] = g.side(keep[i]);
    out.set_sides(std::move(sides));
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<uint32_t>& perm) {
  if (perm.size() != g.n()) throw Error("relabel: permutation size mismatch");
  std::vector<uint8_t> hit(g.n(), 0);
  for (uint32_t p : perm) {
    if (p >= g.n() || hit[p]) throw Error("relabel: not a permutation");
    hit[p] = 1;
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  std::vector<std::string> labels(g.n());
  for (uint32_t v = 0; v < g.n(); ++v) labels[perm[v]] = g.label(v);
  return Graph(g.n(), edges, std::move(labels));
}

std::vector<int64_t> adjacency_matrix(const Graph& g) {
  const size_t n = g.n();
  std::vector<int64_t> a(n * n, 0);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v : g.neighbors(u)) a[size_t(u) * n + v] = 1;
  return a;
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<uint32_t>& perm) {
  if (g.n() != h.n() || perm.size() != g.n()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  std::vector<uint8_t> hit(g.n(), 0);
  for (uint32_t p : perm) {
    if (p >= g.n() || hit[p]) return false;
    hit[p] = 1;
  }
  for (uint32_t u = 0; u < g.n(); ++u)
    for (uint32_t v : g.neighbors(u))
      if (!h.adjacent(perm[u], perm[v])) return false;
  return true;
}

}  // namespace drg::graph
