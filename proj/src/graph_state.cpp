#include "clustnet/graph_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace clustnet {

VertexPair pair_from_index(std::size_t slot) {
  auto j = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(slot))) / 2.0);
  while (j * (j - 1) / 2 > slot) --j;
  while ((j + 1) * j / 2 <= slot) ++j;
  const std::size_t i = slot - j * (j - 1) / 2;
  return {static_cast<Vertex>(i), static_cast<Vertex>(j)};
}

GraphState::GraphState(std::size_t n)
    : n_(n), words_per_row_((n + 63) / 64), adjacency_(n), bits_(n * ((n + 63) / 64), 0) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
}

GraphState GraphState::from_edges(std::size_t n, std::span<const VertexPair> edges) {
  GraphState g(n);
  for (const auto& e : edges) {
    g.check_pair(e.first, e.second);
    if (g.has_edge(e.first, e.second)) continue;
    g.bits_[g.row_offset(e.first) + (e.second >> 6)] |= std::uint64_t{1} << (e.second & 63);
    g.bits_[g.row_offset(e.second) + (e.first >> 6)] |= std::uint64_t{1} << (e.first & 63);
    g.adjacency_[e.first].push_back(e.second);
    g.adjacency_[e.second].push_back(e.first);
    ++g.edge_count_;
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

void GraphState::check_pair(Vertex i, Vertex j) const {
  if (i == j) throw std::invalid_argument("self-loop {" + std::to_string(i) + "," + std::to_string(j) + "}");
  if (i >= n_ || j >= n_) throw std::out_of_range("vertex out of range");
}

bool GraphState::toggle_edge(Vertex i, Vertex j) {
  check_pair(i, j);
  const bool present = has_edge(i, j);
  bits_[row_offset(i) + (j >> 6)] ^= std::uint64_t{1} << (j & 63);
  bits_[row_offset(j) + (i >> 6)] ^= std::uint64_t{1} << (i & 63);
  auto& ai = adjacency_[i];
  auto& aj = adjacency_[j];
  if (present) {
    ai.erase(std::lower_bound(ai.begin(), ai.end(), j));
    aj.erase(std::lower_bound(aj.begin(), aj.end(), i));
    --edge_count_;
  } else {
    ai.insert(std::lower_bound(ai.begin(), ai.end(), j), j);
    aj.insert(std::lower_bound(aj.begin(), aj.end(), i), i);
    ++edge_count_;
  }
  return !present;
}

std::vector<Vertex> GraphState::common_neighbors(Vertex i, Vertex j) const {
  check_pair(i, j);
  std::vector<Vertex> out;
  for_each_common_neighbor(i, j, [&](Vertex v) { out.push_back(v); });
  return out;
}

std::size_t GraphState::common_neighbor_count(Vertex i, Vertex j) const {
  const std::size_t shorter = std::min(adjacency_[i].size(), adjacency_[j].size());
  if (shorter <= words_per_row_) {
    std::size_t count = 0;
    for_each_common_neighbor(i, j, [&](Vertex) { ++count; });
    return count;
  }
  const std::uint64_t* ri = bits_.data() + row_offset(i);
  const std::uint64_t* rj = bits_.data() + row_offset(j);
  std::size_t count = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w) count += std::popcount(ri[w] & rj[w]);
  return count;
}

std::size_t GraphState::triangles_at(Vertex v) const {
  std::size_t twice = 0;
  for (Vertex u : adjacency_[v]) twice += common_neighbor_count(v, u);
  return twice / 2;
}

std::vector<VertexPair> GraphState::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count_);
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::uint64_t triangle_count(const GraphState& g) {
  std::uint64_t sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) sum += g.triangles_at(v);
  return sum / 3;
}

std::uint64_t two_path_count(const GraphState& g) {
  std::uint64_t sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    sum += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return sum;
}

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

std::size_t largest_component_size(const GraphState& g) {
  DisjointSet sets(g.vertex_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j : g.neighbors(i)) {
      if (i < j) sets.unite(i, j);
    }
  }
  std::size_t best = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, sets.size_of(v));
  return best;
}

void write_edge_list(std::ostream& os, const GraphState& g) {
  for (const auto& e : g.edges()) os << e.first << ' ' << e.second << '\n';
}

}  // namespace clustnet
