#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drgcert/errors.hpp"

namespace drg::graph {

struct LoopEdge : Error {
  using Error::Error;
};
struct VertexOutOfRange : Error {
  using Error::Error;
};
struct NotBipartite : Error {
  using Error::Error;
};
struct NotConnected : Error {
  using Error::Error;
};

/// Simple undirected graph. Adjacency lists are sorted and deduplicated;
/// optional per-vertex labels survive the transforms below.
class Graph {
 public:
  Graph() = default;
  /// Validates: endpoints in [0,n), no loops. Parallel edges collapse.
  Graph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
        std::vector<std::string> labels = {});

  uint32_t n() const { return uint32_t(adj_.size()); }
  uint64_t edge_count() const { return edge_count_; }
  const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj_[v]; }
  uint32_t degree(uint32_t v) const { return uint32_t(adj_[v].size()); }
  bool adjacent(uint32_t u, uint32_t v) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  const std::string& label(uint32_t v) const { return labels_[v]; }

  /// Optional bipartition known by construction; every edge must cross it.
  bool has_sides() const { return !sides_.empty(); }
  void set_sides(std::vector<uint8_t> sides);
  const std::vector<uint8_t>& sides() const { return sides_; }
  uint8_t side(uint32_t v) const { return sides_[v]; }

  std::vector<std::pair<uint32_t, uint32_t>> edges() const;

  /// Degree of every vertex equals k.
  bool is_regular(uint32_t* k = nullptr) const;

 private:
  std::vector<std::vector<uint32_t>> adj_;
  std::vector<std::string> labels_;
  std::vector<uint8_t> sides_;
  uint64_t edge_count_ = 0;
};

/// BFS distances from src; unreachable vertices get UINT32_MAX.
std::vector<uint32_t> bfs_distances(const Graph& g, uint32_t src);

struct DistancePartition {
  std::vector<uint32_t> dist;        // per vertex
  std::vector<uint64_t> class_size;  // k_i = |{v : d(src,v) = i}|
  uint32_t eccentricity = 0;
  bool connected = false;
};

DistancePartition bfs_partition(const Graph& g, uint32_t src);

bool is_connected(const Graph& g);

/// 2-coloring if bipartite. side[v] in {0,1}; empty optional otherwise.
std::optional<std::vector<uint8_t>> bipartition(const Graph& g);

uint32_t diameter(const Graph& g);  // throws NotConnected

/// Bipartite double: vertices v+ and v-, edges u+ ~ v- iff u ~ v.
/// Vertex i maps to i (plus side) and i + n (minus side).
Graph bipartite_double(const Graph& g);

/// Extended bipartite double: bipartite double plus the perfect matching
/// v+ ~ v-. Equals the double of (g plus loops at every vertex).
Graph extended_bipartite_double(const Graph& g);

/// Halved graph: the connected bipartite input restricted to the color
/// class of `side`, two vertices adjacent when at distance 2.
/// Throws NotBipartite / NotConnected.
Graph halved_graph(const Graph& g, uint8_t side);

/// Vertices of g, adjacent when at distance 1 or 2 in g.
Graph distance_1_or_2(const Graph& g);

/// Complement graph.
Graph complement(const Graph& g);

/// Induced subgraph on `keep` (order preserved; labels carried over).
Graph induce(const Graph& g, const std::vector<uint32_t>& keep);

/// Image of g under the vertex permutation perm (new index of v is perm[v]).
Graph relabel(const Graph& g, const std::vector<uint32_t>& perm);

/// Dense adjacency matrix as 0/1 int64 entries, row-major.
std::vector<int64_t> adjacency_matrix(const Graph& g);

/// perm is a graph isomorphism g -> h (checks both directions).
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<uint32_t>& perm);

}  // namespace drg::graph
