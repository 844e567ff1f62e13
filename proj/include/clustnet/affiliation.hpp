#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clustnet/graph_state.hpp"
#include "clustnet/rate_cache.hpp"
#include "clustnet/rng.hpp"
#include "clustnet/stats.hpp"

namespace clustnet {

using Attribute = std::uint32_t;

/// Actor weights y_i, attribute weights x_u and the deletion intensity mu.
struct AffiliationWeights {
  std::vector<double> y;
  std::vector<double> x;
  double mu = 1.0;

  std::size_t actor_count() const { return y.size(); }
  std::size_t attribute_count() const { return x.size(); }
  /// Throws std::invalid_argument on empty sides or non-positive values.
  void validate() const;
};

/// Actor-attribute incidence graph with both adjacency directions kept sorted.
class BipartiteState {
 public:
  explicit BipartiteState(AffiliationWeights weights);

  const AffiliationWeights& weights() const { return weights_; }
  std::size_t actor_count() const { return actor_attrs_.size(); }
  std::size_t attribute_count() const { return attr_actors_.size(); }
  std::size_t incidence_count() const { return incidences_; }

  std::span<const Attribute> attributes_of(Vertex i) const { return actor_attrs_[i]; }
  std::span<const Vertex> actors_of(Attribute u) const { return attr_actors_[u]; }

  bool has(Vertex i, Attribute u) const;
  /// Flips incidence (i,u); returns whether it is now present.
  bool toggle(Vertex i, Attribute u);

 private:
  friend BipartiteState sample_stationary(const AffiliationWeights&, Rng&);

  AffiliationWeights weights_;
  std::vector<std::vector<Attribute>> actor_attrs_;
  std::vector<std::vector<Vertex>> attr_actors_;
  std::size_t incidences_ = 0;
};

/// p_iu = y x / (y x + mu). Throws std::invalid_argument for non-positive inputs.
double stationary_edge_prob(double y, double x, double mu);

/// Stationary snapshot: every incidence present independently with probability p_iu.
/// Per attribute, candidates are drawn by geometric skipping at the column's largest
/// probability and thinned to p_iu, so cost scales with the number of incidences.
BipartiteState sample_stationary(const AffiliationWeights& weights, Rng& rng);

/// One-mode projection: actors adjacent iff they share an attribute.
GraphState project(const BipartiteState& h);

/// Degree of actor i in the projection, |union over u in N_i of N_u minus {i}|,
/// without building the projection.
std::size_t projected_degree(const BipartiteState& h, Vertex i);

struct BipartiteStep {
  double dt = 0.0;
  Vertex actor = 0;
  Attribute attribute = 0;
  bool inserted = false;
};

/// Event-driven chain over the n*m incidence slots: absent incidences switch on at rate
/// y_i x_u, present ones switch off at rate mu.
class BipartiteChain {
 public:
  BipartiteChain(BipartiteState initial, std::uint64_t seed);

  BipartiteStep step();

  const BipartiteState& state() const { return state_; }
  double sim_time() const { return time_; }
  std::uint64_t jumps() const { return jumps_; }
  double total_rate() const { return rates_.total(); }
  std::size_t slot_of(Vertex i, Attribute u) const { return static_cast<std::size_t>(i) * state_.attribute_count() + u; }

 private:
  double intensity(Vertex i, Attribute u) const;

  BipartiteState state_;
  RateCache rates_;
  Rng rng_;
  double time_ = 0.0;
  std::uint64_t jumps_ = 0;
};

/// Weight generator spec: "const:c", "uniform:a:b", "pareto:shape:lo:hi" (bounded Pareto)
/// or "file:path" (one positive decimal per line, exactly count lines).
std::vector<double> generate_weights(const std::string& spec, std::size_t count, Rng& rng);

/// One positive decimal per line; blank lines and '#' comments are skipped.
std::vector<double> read_weight_file(const std::string& path);

/// Projected degrees of the tracked actors over independent stationary snapshots.
/// Row s holds snapshot s, drawn from stream derive_seed(base_seed, s); snapshots run as an
/// OpenMP loop and the result does not depend on the thread count.
std::vector<std::vector<std::size_t>> sample_projected_degrees(const AffiliationWeights& weights,
                                                               std::span<const Vertex> tracked,
                                                               std::size_t snapshots, std::uint64_t base_seed);

/// Projection statistics over independent stationary snapshots, seeded as above.
std::vector<SnapshotStats> sample_projection_stats(const AffiliationWeights& weights, std::size_t snapshots,
                                                   std::uint64_t base_seed);

namespace serial {
std::vector<std::vector<std::size_t>> sample_projected_degrees(const AffiliationWeights& weights,
                                                               std::span<const Vertex> tracked,
                                                               std::size_t snapshots, std::uint64_t base_seed);
std::vector<SnapshotStats> sample_projection_stats(const AffiliationWeights& weights, std::size_t snapshots,
                                                   std::uint64_t base_seed);
}  // namespace serial

}  // namespace clustnet
