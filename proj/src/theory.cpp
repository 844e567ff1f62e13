#include "clustnet/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clustnet {

DensityBounds density_bounds(const TriadicParams& p, std::size_t n) {
  if (p.variant != Variant::simplified && p.variant != Variant::independent) {
    throw std::invalid_argument("density bounds apply to the simplified and independent variants");
  }
  if (n < 2) throw std::invalid_argument("density bounds need n >= 2");
  DensityBounds b;
  const double base = p.lambda0 + p.mu0;
  b.lower = p.lambda0 / base;
  const double boost = std::max(p.lambda, p.mu);
  if (p.variant == Variant::independent || boost == 0.0) {
    b.upper = b.lower;
    return b;
  }
  if (p.alpha >= 2.0 && p.beta >= 2.0) {
    b.upper = (p.lambda0 + boost / static_cast<double>(n - 1)) / base;
  }
  if (p.alpha >= 1.0 && p.beta >= 1.0 && base > boost) {
    const double alt = p.lambda0 / (base - boost);
    b.upper = b.upper ? std::min(*b.upper, alt) : alt;
  }
  return b;
}

double density_closed_form_alpha2(double lambda0, double mu0, double lambda, std::size_t n, double cl_bar) {
  if (!(cl_bar >= 0.0 && cl_bar <= 1.0)) throw std::invalid_argument("mean local clustering must lie in [0, 1]");
  if (n < 2) throw std::invalid_argument("closed form needs n >= 2");
  return (lambda0 + 2.0 * lambda * (1.0 - cl_bar) / static_cast<double>(n - 1)) / (lambda0 + mu0);
}

double triangle_lower_bound(double lambda0, double mu0, double lambda, double p_degree_at_least_two) {
  return lambda / (4.0 * (lambda0 + mu0 + lambda)) * p_degree_at_least_two;
}

MomentSummary summarize(const AffiliationWeights& w) {
  w.validate();
  MomentSummary s;
  s.n = w.actor_count();
  s.m = w.attribute_count();
  for (double x : w.x) {
    double power = 1.0;
    for (std::size_t k = 1; k < s.x_moments.size(); ++k) s.x_moments[k] += (power *= x);
  }
  for (double y : w.y) {
    double power = 1.0;
    for (std::size_t k = 1; k < s.y_moments.size(); ++k) s.y_moments[k] += (power *= y);
  }
  for (std::size_t k = 1; k < s.x_moments.size(); ++k) s.x_moments[k] /= static_cast<double>(s.m);
  for (std::size_t k = 1; k < s.y_moments.size(); ++k) s.y_moments[k] /= static_cast<double>(s.n);
  s.gamma = std::sqrt(static_cast<double>(s.m) / static_cast<double>(s.n));
  s.kappa = static_cast<double>(s.n) * static_cast<double>(s.m) / (w.mu * w.mu);
  s.mu = w.mu;
  return s;
}

DegreeBounds expected_degree_bounds(double y_i, const MomentSummary& s) {
  const double n = static_cast<double>(s.n);
  DegreeBounds b;
  b.upper = y_i * s.kappa * s.x(2) * s.y(1);
  const double gap = (s.kappa / s.mu) * y_i * (s.x(3) * s.y(2) + y_i * s.x(3) * s.y(1)) +
                     (s.kappa * s.kappa / n) * y_i * y_i * s.x(2) * s.x(2) * s.y(2) + y_i * s.x(2) / n;
  b.lower = std::max(0.0, b.upper - gap);
  return b;
}

void CompoundPoissonSpec::validate() const {
  if (!(gamma_o > 0.0)) throw std::invalid_argument("gamma_o must be positive");
  if (!(y_i >= 0.0) || !(a_y > 0.0)) throw std::invalid_argument("y_i must be non-negative and a_y positive");
  if (p_x.empty()) throw std::invalid_argument("P_X needs at least one support point");
  double total = 0.0;
  double mean = 0.0;
  for (const auto& [s, prob] : p_x) {
    if (!(s >= 0.0) || !(prob >= 0.0)) throw std::invalid_argument("P_X support and masses must be non-negative");
    total += prob;
    mean += s * prob;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("P_X masses must sum to 1");
  if (!(mean > 0.0) || std::abs(a_x - mean) > 1e-9 * mean) throw std::invalid_argument("a_x must equal the mean of P_X");
}

CompoundPoissonSpec make_cp_spec(double y_i, double a_y, double gamma_o, std::vector<std::pair<double, double>> p_x) {
  CompoundPoissonSpec spec;
  spec.y_i = y_i;
  spec.a_y = a_y;
  spec.gamma_o = gamma_o;
  spec.a_x = 0.0;
  for (const auto& [s, prob] : p_x) spec.a_x += s * prob;
  spec.p_x = std::move(p_x);
  spec.validate();
  return spec;
}

double poisson_pmf(std::uint64_t t, double rate) {
  if (rate <= 0.0) return t == 0 ? 1.0 : 0.0;
  const double td = static_cast<double>(t);
  return std::exp(-rate + td * std::log(rate) - std::lgamma(td + 1.0));
}

double cp_pmf_Q(std::uint64_t t, const CompoundPoissonSpec& spec) {
  double q = 0.0;
  for (const auto& [s, prob] : spec.p_x) q += (s / spec.a_x) * prob * poisson_pmf(t, spec.lambda_of(s));
  return q;
}

double cp_mean_Q(const CompoundPoissonSpec& spec) {
  double mean = 0.0;
  for (const auto& [s, prob] : spec.p_x) mean += (s / spec.a_x) * prob * spec.lambda_of(s);
  return mean;
}

std::vector<double> cp_degree_pmf(const CompoundPoissonSpec& spec, std::size_t k_max) {
  spec.validate();
  std::vector<double> q(k_max + 1);
  for (std::size_t t = 0; t <= k_max; ++t) q[t] = cp_pmf_Q(t, spec);
  const double rate = spec.jump_rate();
  std::vector<double> f(k_max + 1, 0.0);
  f[0] = std::exp(-rate * (1.0 - q[0]));
  for (std::size_t k = 1; k <= k_max; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * q[j] * f[k - j];
    f[k] = rate / static_cast<double>(k) * acc;
  }
  return f;
}

CompoundPoissonSampler::CompoundPoissonSampler(CompoundPoissonSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  double acc = 0.0;
  for (const auto& [s, prob] : spec_.p_x) {
    acc += s * prob / spec_.a_x;
    cumulative_.push_back(acc);
  }
}

std::uint64_t CompoundPoissonSampler::operator()(Rng& rng) const {
  const std::uint64_t jumps = rng.poisson(spec_.jump_rate());
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k < jumps; ++k) {
    const double u = rng.uniform() * cumulative_.back();
    const auto pick = static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
    const double s = spec_.p_x[std::min(pick, spec_.p_x.size() - 1)].first;
    total += rng.poisson(spec_.lambda_of(s));
  }
  return total;
}

std::uint64_t cp_degree_sample(const CompoundPoissonSpec& spec, Rng& rng) { return CompoundPoissonSampler(spec)(rng); }

ProjectionPrediction projection_asymptotics(const MomentSummary& s, double gamma_o) {
  if (!(gamma_o > 0.0)) throw std::invalid_argument("gamma_o must be positive");
  const double n = static_cast<double>(s.n);
  const double closed = s.x(3) * std::pow(s.y(1), 3);
  const double open = s.x(2) * s.x(2) * s.y(2) * s.y(1) * s.y(1);
  ProjectionPrediction p;
  p.triangles = n / (6.0 * s.gamma) * closed;
  p.two_paths = n / (2.0 * s.gamma) * closed + n / 2.0 * open;
  p.global_clustering = closed / (closed + gamma_o * open);
  return p;
}

}  // namespace clustnet
