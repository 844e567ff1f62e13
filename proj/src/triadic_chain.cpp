#include "clustnet/triadic_chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace clustnet {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::general: return "general";
    case Variant::simplified: return "simplified";
    case Variant::corrected: return "corrected";
    case Variant::independent: return "independent";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  if (name == "general") return Variant::general;
  if (name == "simplified") return Variant::simplified;
  if (name == "corrected") return Variant::corrected;
  if (name == "independent") return Variant::independent;
  throw std::invalid_argument("unknown model variant '" + std::string(name) + "'");
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool non_negative(double x) { return std::isfinite(x) && x >= 0.0; }
bool positive(double x) { return std::isfinite(x) && x > 0.0; }

double degree_power(std::size_t d, double s) { return std::pow(static_cast<double>(d), -s); }

double inverse_pairs(std::size_t d) {
  return 1.0 / (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
}

}  // namespace

void TriadicParams::validate(std::size_t n) const {
  require(n >= 2, "the chain needs at least two vertices");
  require(non_negative(alpha) && non_negative(beta), "alpha and beta must be non-negative");
  require(non_negative(lambda) && non_negative(mu), "lambda and mu must be non-negative");
  require(positive(lambda0) && positive(mu0), "lambda0 and mu0 must be positive");
  if (variant != Variant::general) {
    require(lambda_v.empty() && mu_v.empty(), "per-vertex weights are only used by the general variant");
  }
  for (const auto* weights : {&lambda_v, &mu_v}) {
    if (weights->empty()) continue;
    require(weights->size() == n, "per-vertex weight vector must have one entry per vertex");
    require(std::all_of(weights->begin(), weights->end(), positive), "per-vertex weights must be positive");
  }
  if (variant == Variant::independent) require(lambda == 0.0 && mu == 0.0, "independent variant requires lambda = mu = 0");
  if (variant == Variant::corrected) {
    require(mu == 0.0, "corrected variant has constant deletion rate mu0 and requires mu = 0");
    require(n >= 3, "corrected variant needs at least three vertices");
  }
}

double clustering_weight(const GraphState& g, Vertex i, Vertex j, double s) {
  double nu = 0.0;
  g.for_each_common_neighbor(i, j, [&](Vertex v) { nu += degree_power(g.degree(v), s); });
  return nu;
}

double correction_term(const GraphState& g, Vertex i, Vertex j) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("correction term needs n >= 3");
  const double isolated = (g.degree(i) == 0 ? 1.0 : 0.0) + (g.degree(j) == 0 ? 1.0 : 0.0);
  const double pendant = (g.degree(i) == 1 ? 1.0 : 0.0) + (g.degree(j) == 1 ? 1.0 : 0.0);
  return isolated / static_cast<double>(n - 1) + pendant / static_cast<double>(n - 2);
}

double star_weight(const GraphState& g, Vertex i, Vertex j) {
  double nu = 0.0;
  g.for_each_common_neighbor(i, j, [&](Vertex w) { nu += inverse_pairs(g.degree(w)); });
  return nu;
}

double pair_intensity(const GraphState& g, const TriadicParams& p, Vertex i, Vertex j) {
  const bool edge = g.has_edge(i, j);
  switch (p.variant) {
    case Variant::independent:
      return edge ? p.death_base(i, j) : p.birth_base(i, j);
    case Variant::corrected:
      if (edge) return p.mu0;
      return p.lambda0 + p.lambda * star_weight(g, i, j) + p.lambda * correction_term(g, i, j);
    case Variant::general:
    case Variant::simplified:
      break;
  }
  if (!edge) {
    if (p.lambda == 0.0) return p.birth_base(i, j);
    const double nu = p.alpha == 0.0 ? static_cast<double>(g.common_neighbor_count(i, j))
                                     : clustering_weight(g, i, j, p.alpha);
    return p.birth_base(i, j) + p.lambda * nu;
  }
  if (p.mu == 0.0) return p.death_base(i, j);
  const double nu = p.beta == 0.0 ? static_cast<double>(g.common_neighbor_count(i, j))
                                  : clustering_weight(g, i, j, p.beta);
  return std::max(p.death_base(i, j) - p.mu * nu, 0.0);
}

IntensityModel::IntensityModel(TriadicParams params, std::size_t n)
    : params_(std::move(params)), n_(n), alpha_weight_(n, 0.0), beta_weight_(n, 0.0), star_weight_(n, 0.0) {
  for (std::size_t d = 1; d < n; ++d) {
    alpha_weight_[d] = degree_power(d, params_.alpha);
    beta_weight_[d] = degree_power(d, params_.beta);
    if (d >= 2) star_weight_[d] = inverse_pairs(d);
  }
}

double IntensityModel::operator()(const GraphState& g, Vertex i, Vertex j) const {
  const auto& p = params_;
  const bool edge = g.has_edge(i, j);
  auto tabulated = [&](const std::vector<double>& table) {
    double nu = 0.0;
    g.for_each_common_neighbor(i, j, [&](Vertex v) { nu += table[g.degree(v)]; });
    return nu;
  };
  switch (p.variant) {
    case Variant::independent:
      return edge ? p.death_base(i, j) : p.birth_base(i, j);
    case Variant::corrected:
      if (edge) return p.mu0;
      return p.lambda0 + p.lambda * tabulated(star_weight_) + p.lambda * correction_term(g, i, j);
    case Variant::general:
    case Variant::simplified:
      break;
  }
  if (!edge) {
    if (p.lambda == 0.0) return p.birth_base(i, j);
    const double nu =
        p.alpha == 0.0 ? static_cast<double>(g.common_neighbor_count(i, j)) : tabulated(alpha_weight_);
    return p.birth_base(i, j) + p.lambda * nu;
  }
  if (p.mu == 0.0) return p.death_base(i, j);
  const double nu = p.beta == 0.0 ? static_cast<double>(g.common_neighbor_count(i, j)) : tabulated(beta_weight_);
  return std::max(p.death_base(i, j) - p.mu * nu, 0.0);
}

PairDependence dependence_of(const TriadicParams& p) {
  switch (p.variant) {
    case Variant::independent:
      return {false, false, false};
    case Variant::corrected: {
      const bool on = p.lambda > 0.0;
      return {on, on, on};
    }
    case Variant::general:
    case Variant::simplified:
      break;
  }
  const bool birth = p.lambda > 0.0;
  const bool death = p.mu > 0.0;
  return {birth || death, (birth && p.alpha != 0.0) || (death && p.beta != 0.0), false};
}

namespace {

template <typename Emit>
void collect_affected(const GraphState& g, Vertex i, Vertex j, PairDependence deps, Emit&& emit) {
  if (deps.common_neighbors) {
    for (Vertex w : g.neighbors(j)) {
      if (w != i) emit(i, w);
    }
    for (Vertex w : g.neighbors(i)) {
      if (w != j) emit(j, w);
    }
  }
  if (deps.neighbor_degrees) {
    for (const auto& [x, other] : {std::pair{i, j}, std::pair{j, i}}) {
      const auto nb = g.neighbors(x);
      for (std::size_t a = 0; a < nb.size(); ++a) {
        if (nb[a] == other) continue;
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
          if (nb[b] != other) emit(nb[a], nb[b]);
        }
      }
    }
  }
  if (deps.endpoint_degrees) {
    const bool present = g.has_edge(i, j);
    for (const auto& [x, other] : {std::pair{i, j}, std::pair{j, i}}) {
      const std::size_t d = g.degree(x);
      const std::size_t d_other_state = present ? d - 1 : d + 1;
      if (std::min(d, d_other_state) > 1) continue;
      for (Vertex k = 0; k < g.vertex_count(); ++k) {
        if (k != x && k != other) emit(x, k);
      }
    }
  }
}

}  // namespace

std::vector<VertexPair> affected_pairs(const GraphState& g, Vertex i, Vertex j, PairDependence deps) {
  std::vector<VertexPair> out;
  collect_affected(g, i, j, deps, [&](Vertex a, Vertex b) { out.emplace_back(a, b); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TriadicChain::TriadicChain(GraphState initial, TriadicParams params, std::uint64_t seed)
    : graph_(std::move(initial)),
      model_((params.validate(graph_.vertex_count()), std::move(params)), graph_.vertex_count()),
      deps_(dependence_of(model_.params())),
      rates_(pair_count(graph_.vertex_count())),
      rng_(seed),
      seed_(seed) {
  const auto n = static_cast<Vertex>(graph_.vertex_count());
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) rates_.assign_unpropagated(pair_index(i, j), model_(graph_, i, j));
  }
  rates_.rebuild();
}

StepResult TriadicChain::step() {
  double total = rates_.total();
  if (!(total > 0.0)) throw ChainAbsorbed(jumps_);
  const double dt = rng_.exponential(total);
  std::size_t slot = 0;
  for (;;) {
    slot = rates_.select(rng_.uniform() * total);
    if (rates_.rate(slot) > 0.0) break;
    ++redraws_;
    rates_.rebuild();
    total = rates_.total();
  }
  const VertexPair pair = pair_from_index(slot);
  const bool inserted = graph_.toggle_edge(pair.first, pair.second);
  refresh_after_toggle(pair.first, pair.second);
  time_ += dt;
  ++jumps_;
  if (jumps_ % kRebuildInterval == 0) rates_.rebuild();
  return {dt, pair, inserted};
}

void TriadicChain::refresh_after_toggle(Vertex i, Vertex j) {
  scratch_.clear();
  scratch_.push_back(pair_index(i, j));
  collect_affected(graph_, i, j, deps_, [&](Vertex a, Vertex b) { scratch_.push_back(pair_index(a, b)); });
  for (std::size_t slot : scratch_) {
    const VertexPair p = pair_from_index(slot);
    rates_.set(slot, model_(graph_, p.first, p.second));
  }
}

double TriadicChain::edge_rate_sum() const {
  double sum = 0.0;
  for (Vertex i = 0; i < graph_.vertex_count(); ++i) {
    for (Vertex j : graph_.neighbors(i)) {
      if (i < j) sum += rates_.rate(pair_index(i, j));
    }
  }
  return sum;
}

RunConfig default_run_config(std::size_t n, std::size_t samples) {
  return {3 * static_cast<std::uint64_t>(n) * n, samples, static_cast<std::uint64_t>(n)};
}

std::vector<Sample> run(TriadicChain& chain, const RunConfig& config, const SampleObserver& observer) {
  if (config.samples == 0 || config.interval_jumps == 0) {
    throw std::invalid_argument("run needs at least one sample and a positive sampling interval");
  }
  for (std::uint64_t k = 0; k < config.burnin_jumps; ++k) chain.step();
  std::vector<Sample> out;
  out.reserve(config.samples);
  for (std::size_t s = 0; s < config.samples; ++s) {
    for (std::uint64_t k = 0; k < config.interval_jumps; ++k) chain.step();
    const double total = chain.total_rate();
    if (!(total > 0.0)) throw ChainAbsorbed(chain.jumps());
    Sample sample;
    sample.sim_time = chain.sim_time();
    sample.jumps = chain.jumps();
    sample.weight = 1.0 / total;
    sample.edge_rate = chain.edge_rate_sum();
    sample.nonedge_rate = total - sample.edge_rate;
    sample.stats = snapshot(chain.graph());
    if (observer) observer(chain, sample);
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace clustnet
