#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "clustnet/affiliation.hpp"
#include "clustnet/rng.hpp"
#include "clustnet/triadic_chain.hpp"

namespace clustnet {

// ---------------------------------------------------------------------------
// Triadic chain at stationarity (scalar base rates).
// ---------------------------------------------------------------------------

struct DensityBounds {
  double lower = 0.0;
  /// Empty when neither upper-bound regime applies to the parameters.
  std::optional<double> upper;
};

/// Bounds on the stationary mean edge density.
///
/// lower = lambda0 / (lambda0 + mu0) always. Upper bounds:
///  - alpha, beta >= 2:  (lambda0 + max(lambda, mu) / (n - 1)) / (lambda0 + mu0)
///  - alpha, beta >= 1 and lambda0 + mu0 > max(lambda, mu):
///                       lambda0 / (lambda0 + mu0 - max(lambda, mu))
/// The smaller one is returned when both apply. With lambda = mu = 0 the pairs are
/// independent and upper = lower.
///
/// Only the simplified and independent variants are accepted (std::invalid_argument otherwise).
DensityBounds density_bounds(const TriadicParams& params, std::size_t n);

/// Stationary edge density of the corrected (alpha = 2) chain as a function of the mean
/// local clustering: (lambda0 + 2 lambda (1 - CL) / (n - 1)) / (lambda0 + mu0).
double density_closed_form_alpha2(double lambda0, double mu0, double lambda, std::size_t n, double cl_bar);

/// Lower bound on the mean number of triangles at a vertex, valid for 0 < alpha <= 2:
/// lambda / (4 (lambda0 + mu0 + lambda)) * P{d >= 2}.
double triangle_lower_bound(double lambda0, double mu0, double lambda, double p_degree_at_least_two);

// ---------------------------------------------------------------------------
// Affiliation network.
// ---------------------------------------------------------------------------

/// Empirical weight moments and the derived scale constants gamma = sqrt(m/n),
/// kappa = n m / mu^2.
struct MomentSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  std::array<double, 6> x_moments{};  // index s holds <x^s>, s = 1..5
  std::array<double, 5> y_moments{};  // index s holds <y^s>, s = 1..4
  double gamma = 0.0;
  double kappa = 0.0;
  double mu = 0.0;

  double x(int s) const { return x_moments[static_cast<std::size_t>(s)]; }
  double y(int s) const { return y_moments[static_cast<std::size_t>(s)]; }
};

MomentSummary summarize(const AffiliationWeights& weights);

struct DegreeBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bracket on E d_i in the projection for an actor of weight y_i. The lower end is
/// clamped at zero.
DegreeBounds expected_degree_bounds(double y_i, const MomentSummary& summary);

/// Limit law of a projected degree: CP(y_i a_x gamma_o, Q) where Q mixes Poisson(lambda_s)
/// laws, lambda_s = s a_y / gamma_o, over the size-biased attribute weight distribution.
struct CompoundPoissonSpec {
  double y_i = 1.0;
  double a_x = 1.0;
  double a_y = 1.0;
  double gamma_o = 1.0;
  /// Finite support of P_X as (value, probability) pairs.
  std::vector<std::pair<double, double>> p_x;

  double jump_rate() const { return y_i * a_x * gamma_o; }
  double lambda_of(double s) const { return s * a_y / gamma_o; }
  /// Throws std::invalid_argument unless probabilities sum to 1, a_x matches the mean of
  /// P_X, gamma_o > 0 and y_i >= 0.
  void validate() const;
};

/// Spec with a_x computed as the mean of p_x.
CompoundPoissonSpec make_cp_spec(double y_i, double a_y, double gamma_o, std::vector<std::pair<double, double>> p_x);

/// Poisson(rate) pmf at t, evaluated in log space.
double poisson_pmf(std::uint64_t t, double rate);

/// Q({t}) = sum_s (s / a_x) P_X(s) Poisson(lambda_s)(t).
double cp_pmf_Q(std::uint64_t t, const CompoundPoissonSpec& spec);

/// Mean of Q.
double cp_mean_Q(const CompoundPoissonSpec& spec);

/// pmf of CP(jump_rate, Q) on 0..k_max by Panjer recursion.
std::vector<double> cp_degree_pmf(const CompoundPoissonSpec& spec, std::size_t k_max);

/// Two-step sampler: Poisson(jump_rate) jumps, each jump a size-biased weight followed by a
/// Poisson(lambda_weight) count; returns the total.
class CompoundPoissonSampler {
 public:
  explicit CompoundPoissonSampler(CompoundPoissonSpec spec);
  std::uint64_t operator()(Rng& rng) const;
  const CompoundPoissonSpec& spec() const { return spec_; }

 private:
  CompoundPoissonSpec spec_;
  std::vector<double> cumulative_;  // size-biased cumulative probabilities
};

std::uint64_t cp_degree_sample(const CompoundPoissonSpec& spec, Rng& rng);

struct ProjectionPrediction {
  double triangles = 0.0;
  double two_paths = 0.0;
  double global_clustering = 0.0;
};

/// Large-n predictions for N_tri, N_2path (using the finite gamma of the summary) and the
/// global clustering coefficient (using gamma_o), under the mu = sqrt(n m) scaling.
ProjectionPrediction projection_asymptotics(const MomentSummary& summary, double gamma_o);

}  // namespace clustnet
