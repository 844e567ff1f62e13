#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace clustnet {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with first < second.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Dense slot index of the pair {i,j}, i != j, in [0, C(n,2)).
/// Slot layout is column-wise over the strict upper triangle: j*(j-1)/2 + i for i < j.
inline std::size_t pair_index(Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

VertexPair pair_from_index(std::size_t slot);

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Simple undirected graph on vertices 0..n-1 that is edited one edge at a time.
///
/// Neighbour lists are kept sorted so that every traversal is deterministic. A packed
/// adjacency bit matrix sits alongside them for O(1) membership tests, which makes a
/// common-neighbour query O(min(d_i, d_j)).
class GraphState {
 public:
  /// Empty graph on n vertices. Throws std::invalid_argument for n == 0.
  explicit GraphState(std::size_t n);

  /// Builds a graph from an edge list. Duplicate pairs are ignored.
  static GraphState from_edges(std::size_t n, std::span<const VertexPair> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }

  bool has_edge(Vertex i, Vertex j) const {
    return (bits_[row_offset(i) + (j >> 6)] >> (j & 63)) & 1U;
  }

  /// Flips the adjacency status of {i,j} and returns whether the edge is now present.
  bool toggle_edge(Vertex i, Vertex j);

  /// Common neighbours of i and j in ascending order.
  std::vector<Vertex> common_neighbors(Vertex i, Vertex j) const;
  std::size_t common_neighbor_count(Vertex i, Vertex j) const;

  /// Calls fn(v) for each common neighbour v of i and j, in ascending order of v.
  template <typename Fn>
  void for_each_common_neighbor(Vertex i, Vertex j, Fn&& fn) const {
    if (adjacency_[i].size() > adjacency_[j].size()) std::swap(i, j);
    for (Vertex v : adjacency_[i]) {
      if (has_edge(j, v)) fn(v);
    }
  }

  /// Number of edges among the neighbours of v (triangles through v).
  std::size_t triangles_at(Vertex v) const;

  std::vector<VertexPair> edges() const;

  friend bool operator==(const GraphState& a, const GraphState& b) {
    return a.n_ == b.n_ && a.edge_count_ == b.edge_count_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::size_t row_offset(Vertex v) const { return static_cast<std::size_t>(v) * words_per_row_; }
  void check_pair(Vertex i, Vertex j) const;

  std::size_t n_;
  std::size_t words_per_row_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> bits_;
};

/// N_Delta: total number of triangles.
std::uint64_t triangle_count(const GraphState& g);
/// N_Lambda: sum over vertices of C(d_v, 2).
std::uint64_t two_path_count(const GraphState& g);
std::size_t largest_component_size(const GraphState& g);

/// Writes "i j" per line, i < j, ascending.
void write_edge_list(std::ostream& os, const GraphState& g);

}  // namespace clustnet
