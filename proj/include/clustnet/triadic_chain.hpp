#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clustnet/graph_state.hpp"
#include "clustnet/rate_cache.hpp"
#include "clustnet/rng.hpp"
#include "clustnet/stats.hpp"

namespace clustnet {

/// Which intensity formula drives the chain.
///  - general:     lambda_i lambda_j + lambda nu(alpha) / (mu_i mu_j - mu nu(beta))_+,
///                 per-vertex weights optional (scalars lambda0, mu0 otherwise)
///  - simplified:  lambda0 + lambda nu(alpha) / (mu0 - mu nu(beta))_+
///  - corrected:   lambda0 + lambda nu* + lambda kappa / mu0  (alpha = 2 special case)
///  - independent: lambda0 / mu0, every pair its own two-state chain
enum class Variant { general, simplified, corrected, independent };

std::string_view to_string(Variant v);
/// Throws std::invalid_argument for unknown names.
Variant parse_variant(std::string_view name);

struct TriadicParams {
  Variant variant = Variant::simplified;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;   // triadic birth boost
  double mu = 0.0;       // triadic protection
  double lambda0 = 1.0;  // scalar birth base rate
  double mu0 = 1.0;      // scalar death base rate
  std::vector<double> lambda_v;  // per-vertex birth weights (general only)
  std::vector<double> mu_v;      // per-vertex death weights (general only)

  /// Throws std::invalid_argument when the parameters violate the variant's contract.
  void validate(std::size_t n) const;

  double birth_base(Vertex i, Vertex j) const {
    return lambda_v.empty() ? lambda0 : lambda_v[i] * lambda_v[j];
  }
  double death_base(Vertex i, Vertex j) const { return mu_v.empty() ? mu0 : mu_v[i] * mu_v[j]; }
};

/// nu_ij(G, s) = sum over common neighbours v of d_v^-s.
double clustering_weight(const GraphState& g, Vertex i, Vertex j, double s);

/// kappa_ij(G): 1/(n-1) per isolated endpoint plus 1/(n-2) per degree-one endpoint.
/// Throws std::invalid_argument for n < 3.
double correction_term(const GraphState& g, Vertex i, Vertex j);

/// nu*_ij(G) = sum over common neighbours w of 1 / C(d_w, 2).
double star_weight(const GraphState& g, Vertex i, Vertex j);

/// Toggle intensity a_ij(G) of the pair {i,j}.
double pair_intensity(const GraphState& g, const TriadicParams& p, Vertex i, Vertex j);

/// Pair intensities with the degree powers tabulated once per chain. Gives bit-identical
/// results to pair_intensity().
class IntensityModel {
 public:
  IntensityModel(TriadicParams params, std::size_t n);
  double operator()(const GraphState& g, Vertex i, Vertex j) const;
  const TriadicParams& params() const { return params_; }

 private:
  TriadicParams params_;
  std::size_t n_;
  std::vector<double> alpha_weight_;  // d^-alpha
  std::vector<double> beta_weight_;   // d^-beta
  std::vector<double> star_weight_;   // 1 / C(d,2)
};

/// Which graph features the intensities of the current parameters actually read.
struct PairDependence {
  bool common_neighbors = true;  // rule (a): membership in N_kl
  bool neighbor_degrees = true;  // rule (b): degrees of common neighbours
  bool endpoint_degrees = false; // rule (c): kappa thresholds at degrees 0/1/2
};

PairDependence dependence_of(const TriadicParams& p);

/// Every pair other than {i,j} whose intensity can change when {i,j} toggles. The graph may
/// be either the pre- or the post-toggle state; the result is the union over both.
std::vector<VertexPair> affected_pairs(const GraphState& g, Vertex i, Vertex j,
                                       PairDependence deps = PairDependence{});

/// Thrown when every intensity is zero and the chain cannot leave its state.
class ChainAbsorbed : public std::runtime_error {
 public:
  explicit ChainAbsorbed(std::uint64_t jumps)
      : std::runtime_error("chain absorbed after " + std::to_string(jumps) + " jumps"), jumps_(jumps) {}
  std::uint64_t jumps() const { return jumps_; }

 private:
  std::uint64_t jumps_;
};

struct StepResult {
  double dt = 0.0;
  VertexPair pair;
  bool inserted = false;
};

/// Graph-valued continuous-time Markov chain advanced by Gillespie steps over a sum tree
/// of pair intensities.
class TriadicChain {
 public:
  static constexpr std::uint64_t kRebuildInterval = 1'000'000;

  TriadicChain(GraphState initial, TriadicParams params, std::uint64_t seed);

  /// One event. Throws ChainAbsorbed when the total rate is zero.
  StepResult step();

  const GraphState& graph() const { return graph_; }
  const TriadicParams& params() const { return model_.params(); }
  const RateCache& rates() const { return rates_; }
  double cached_rate(Vertex i, Vertex j) const { return rates_.rate(pair_index(i, j)); }
  double total_rate() const { return rates_.total(); }
  /// Sum of cached intensities over present edges.
  double edge_rate_sum() const;
  double sim_time() const { return time_; }
  std::uint64_t jumps() const { return jumps_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t redraws() const { return redraws_; }

 private:
  void refresh_after_toggle(Vertex i, Vertex j);

  GraphState graph_;
  IntensityModel model_;
  PairDependence deps_;
  RateCache rates_;
  Rng rng_;
  std::uint64_t seed_;
  double time_ = 0.0;
  std::uint64_t jumps_ = 0;
  std::uint64_t redraws_ = 0;
  std::vector<std::size_t> scratch_;
};

struct RunConfig {
  std::uint64_t burnin_jumps = 0;
  std::size_t samples = 1;
  std::uint64_t interval_jumps = 1;
};

/// Burn-in of 3 n^2 jumps from the empty graph, sampling every n jumps.
RunConfig default_run_config(std::size_t n, std::size_t samples);

/// State recorded at a sampling epoch. weight is the expected holding time 1/total_rate of
/// the sampled state, which makes jump-epoch averages estimate time averages.
struct Sample {
  double sim_time = 0.0;
  std::uint64_t jumps = 0;
  double weight = 0.0;
  double nonedge_rate = 0.0;
  double edge_rate = 0.0;
  SnapshotStats stats;
};

using SampleObserver = std::function<void(const TriadicChain&, const Sample&)>;

/// Burn-in, then config.samples snapshots, each taken after interval_jumps further jumps.
/// Propagates ChainAbsorbed.
std::vector<Sample> run(TriadicChain& chain, const RunConfig& config, const SampleObserver& observer = {});

}  // namespace clustnet
