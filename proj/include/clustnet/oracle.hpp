#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "clustnet/graph_state.hpp"
#include "clustnet/triadic_chain.hpp"

namespace clustnet {

/// All graphs on n <= 5 vertices, state s <-> edge set {pair p : bit p of s set} with p the
/// pair_index slot.
class StateSpace {
 public:
  static constexpr std::size_t kMaxVertices = 5;

  /// Throws std::invalid_argument unless 2 <= n <= kMaxVertices.
  explicit StateSpace(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t size() const { return std::size_t{1} << pairs_; }

  GraphState decode(std::uint32_t state) const;
  std::uint32_t encode(const GraphState& g) const;

 private:
  std::size_t n_;
  std::size_t pairs_;
};

/// Dense generator matrix, row-major.
class RateMatrix {
 public:
  explicit RateMatrix(std::size_t size) : size_(size), entries_(size * size, 0.0) {}
  std::size_t size() const { return size_; }
  double& operator()(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }

 private:
  std::size_t size_;
  std::vector<double> entries_;
};

/// Generator of the triadic chain over the full state space: each off-diagonal entry is the
/// intensity of the single pair that differs, rows sum to zero.
RateMatrix generator(const TriadicParams& params, std::size_t n);

class ReducibleChain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StationaryDistribution {
  std::vector<double> pi;
  double residual = 0.0;  // max |(pi Q)_s|
};

/// Solves pi Q = 0, sum pi = 1 by dense LU with one balance equation replaced by the
/// normalisation. Throws ReducibleChain when the generator is not irreducible.
StationaryDistribution solve_stationary(const RateMatrix& q);

/// sum_s pi(s) f(G_s).
double exact_expectation(const StationaryDistribution& pi, const StateSpace& space,
                         const std::function<double(const GraphState&)>& observable);

/// sum_s pi(s) [sum over non-edges of a_ij - sum over edges of a_ij].
double exact_balance(const StationaryDistribution& pi, const StateSpace& space, const TriadicParams& params);

/// Fraction of simulated time spent in each state over `jumps` events from the empty graph.
std::vector<double> empirical_occupancy(const TriadicParams& params, std::size_t n, std::uint64_t jumps,
                                        std::uint64_t seed);

double total_variation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace clustnet
