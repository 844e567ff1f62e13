#include "clustnet/affiliation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace clustnet {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void AffiliationWeights::validate() const {
  if (y.empty() || x.empty()) throw std::invalid_argument("affiliation model needs at least one actor and one attribute");
  if (!std::all_of(y.begin(), y.end(), positive)) throw std::invalid_argument("actor weights must be positive");
  if (!std::all_of(x.begin(), x.end(), positive)) throw std::invalid_argument("attribute weights must be positive");
  if (!positive(mu)) throw std::invalid_argument("deletion intensity mu must be positive");
}

BipartiteState::BipartiteState(AffiliationWeights weights)
    : weights_(std::move(weights)), actor_attrs_(weights_.actor_count()), attr_actors_(weights_.attribute_count()) {
  weights_.validate();
}

bool BipartiteState::has(Vertex i, Attribute u) const {
  const auto& a = actor_attrs_[i];
  const auto& b = attr_actors_[u];
  if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), u);
  return std::binary_search(b.begin(), b.end(), i);
}

bool BipartiteState::toggle(Vertex i, Attribute u) {
  if (i >= actor_count() || u >= attribute_count()) throw std::out_of_range("incidence out of range");
  auto& a = actor_attrs_[i];
  auto& b = attr_actors_[u];
  auto ia = std::lower_bound(a.begin(), a.end(), u);
  auto ib = std::lower_bound(b.begin(), b.end(), i);
  if (ia != a.end() && *ia == u) {
    a.erase(ia);
    b.erase(ib);
    --incidences_;
    return false;
  }
  a.insert(ia, u);
  b.insert(ib, i);
  ++incidences_;
  return true;
}

double stationary_edge_prob(double y, double x, double mu) {
  if (!positive(y) || !positive(x) || !positive(mu)) throw std::invalid_argument("edge probability needs positive y, x and mu");
  const double w = y * x;
  return w / (w + mu);
}

BipartiteState sample_stationary(const AffiliationWeights& weights, Rng& rng) {
  BipartiteState h(weights);
  const std::size_t n = weights.actor_count();
  const double y_max = *std::max_element(weights.y.begin(), weights.y.end());
  for (Attribute u = 0; u < weights.attribute_count(); ++u) {
    const double xu = weights.x[u];
    const double ceiling = stationary_edge_prob(y_max, xu, weights.mu);
    // Candidate i was proposed with probability `proposal`; keep it with p_iu / proposal.
    auto accept = [&](Vertex i, double proposal) {
      if (rng.uniform() * proposal < stationary_edge_prob(weights.y[i], xu, weights.mu)) {
        h.attr_actors_[u].push_back(i);
        h.actor_attrs_[i].push_back(u);
        ++h.incidences_;
      }
    };
    if (ceiling >= 0.25) {
      for (Vertex i = 0; i < n; ++i) accept(i, 1.0);
      continue;
    }
    const double log_miss = std::log1p(-ceiling);
    double pos = -1.0;
    for (;;) {
      pos += 1.0 + std::floor(std::log(rng.uniform_open_low()) / log_miss);
      if (pos >= static_cast<double>(n)) break;
      accept(static_cast<Vertex>(pos), ceiling);
    }
  }
  return h;
}

GraphState project(const BipartiteState& h) {
  std::vector<std::size_t> slots;
  for (Attribute u = 0; u < h.attribute_count(); ++u) {
    const auto members = h.actors_of(u);
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) slots.push_back(pair_index(members[a], members[b]));
    }
  }
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  std::vector<VertexPair> edges;
  edges.reserve(slots.size());
  for (std::size_t s : slots) edges.push_back(pair_from_index(s));
  return GraphState::from_edges(h.actor_count(), edges);
}

std::size_t projected_degree(const BipartiteState& h, Vertex i) {
  std::vector<Vertex> reach;
  for (Attribute u : h.attributes_of(i)) {
    for (Vertex j : h.actors_of(u)) {
      if (j != i) reach.push_back(j);
    }
  }
  std::sort(reach.begin(), reach.end());
  return static_cast<std::size_t>(std::unique(reach.begin(), reach.end()) - reach.begin());
}

BipartiteChain::BipartiteChain(BipartiteState initial, std::uint64_t seed)
    : state_(std::move(initial)), rates_(state_.actor_count() * state_.attribute_count()), rng_(seed) {
  for (Vertex i = 0; i < state_.actor_count(); ++i) {
    for (Attribute u = 0; u < state_.attribute_count(); ++u) rates_.assign_unpropagated(slot_of(i, u), intensity(i, u));
  }
  rates_.rebuild();
}

double BipartiteChain::intensity(Vertex i, Attribute u) const {
  const auto& w = state_.weights();
  return state_.has(i, u) ? w.mu : w.y[i] * w.x[u];
}

BipartiteStep BipartiteChain::step() {
  const double total = rates_.total();
  const double dt = rng_.exponential(total);
  std::size_t slot = 0;
  do {
    slot = rates_.select(rng_.uniform() * total);
  } while (!(rates_.rate(slot) > 0.0));
  const auto m = state_.attribute_count();
  const auto i = static_cast<Vertex>(slot / m);
  const auto u = static_cast<Attribute>(slot % m);
  const bool inserted = state_.toggle(i, u);
  rates_.set(slot, intensity(i, u));
  time_ += dt;
  ++jumps_;
  return {dt, i, u, inserted};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double to_number(const std::string& s, const std::string& spec) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number '" + s + "' in weight spec '" + spec + "'");
  }
  if (used != s.size()) throw std::invalid_argument("bad number '" + s + "' in weight spec '" + spec + "'");
  return v;
}

}  // namespace

std::vector<double> read_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open weight file '" + path + "'");
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const double v = to_number(line.substr(first, last - first + 1), path);
    if (!positive(v)) throw std::invalid_argument("weight file '" + path + "' holds a non-positive value");
    out.push_back(v);
  }
  return out;
}

std::vector<double> generate_weights(const std::string& spec, std::size_t count, Rng& rng) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw std::invalid_argument("empty weight spec");
  const std::string& kind = parts[0];
  std::vector<double> out;
  out.reserve(count);
  if (kind == "const" && parts.size() == 2) {
    out.assign(count, to_number(parts[1], spec));
  } else if (kind == "uniform" && parts.size() == 3) {
    const double a = to_number(parts[1], spec);
    const double b = to_number(parts[2], spec);
    if (!(a > 0.0 && b >= a)) throw std::invalid_argument("uniform weights need 0 < a <= b");
    for (std::size_t k = 0; k < count; ++k) out.push_back(a + (b - a) * rng.uniform());
  } else if (kind == "pareto" && parts.size() == 4) {
    const double shape = to_number(parts[1], spec);
    const double lo = to_number(parts[2], spec);
    const double hi = to_number(parts[3], spec);
    if (!(shape > 0.0 && lo > 0.0 && hi > lo)) throw std::invalid_argument("pareto weights need shape > 0 and 0 < lo < hi");
    const double tail = std::pow(lo / hi, shape);
    for (std::size_t k = 0; k < count; ++k) {
      const double u = rng.uniform();
      out.push_back(lo / std::pow(1.0 - u * (1.0 - tail), 1.0 / shape));
    }
  } else if (kind == "file" && parts.size() >= 2) {
    out = read_weight_file(spec.substr(5));
    if (out.size() != count) {
      throw std::invalid_argument("weight file '" + spec.substr(5) + "' has " + std::to_string(out.size()) +
                                  " entries, expected " + std::to_string(count));
    }
  } else {
    throw std::invalid_argument("unrecognised weight spec '" + spec + "'");
  }
  if (!std::all_of(out.begin(), out.end(), positive)) throw std::invalid_argument("weight spec '" + spec + "' gives non-positive weights");
  return out;
}

namespace {

std::vector<std::size_t> tracked_degrees(const AffiliationWeights& weights, std::span<const Vertex> tracked,
                                         std::uint64_t seed) {
  Rng rng(seed);
  const BipartiteState h = sample_stationary(weights, rng);
  std::vector<std::size_t> row;
  row.reserve(tracked.size());
  for (Vertex i : tracked) row.push_back(projected_degree(h, i));
  return row;
}

void check_tracked(const AffiliationWeights& weights, std::span<const Vertex> tracked) {
  weights.validate();
  for (Vertex i : tracked) {
    if (i >= weights.actor_count()) throw std::out_of_range("tracked actor out of range");
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> sample_projected_degrees(const AffiliationWeights& weights,
                                                               std::span<const Vertex> tracked,
                                                               std::size_t snapshots, std::uint64_t base_seed) {
  check_tracked(weights, tracked);
  std::vector<std::vector<std::size_t>> out(snapshots);
  const auto count = static_cast<std::int64_t>(snapshots);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t s = 0; s < count; ++s) {
    out[s] = tracked_degrees(weights, tracked, derive_seed(base_seed, static_cast<std::uint64_t>(s)));
  }
  return out;
}

std::vector<SnapshotStats> sample_projection_stats(const AffiliationWeights& weights, std::size_t snapshots,
                                                   std::uint64_t base_seed) {
  weights.validate();
  std::vector<SnapshotStats> out(snapshots);
  const auto count = static_cast<std::int64_t>(snapshots);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t s = 0; s < count; ++s) {
    Rng rng(derive_seed(base_seed, static_cast<std::uint64_t>(s)));
    out[s] = serial::snapshot(project(sample_stationary(weights, rng)));
  }
  return out;
}

namespace serial {

std::vector<std::vector<std::size_t>> sample_projected_degrees(const AffiliationWeights& weights,
                                                               std::span<const Vertex> tracked,
                                                               std::size_t snapshots, std::uint64_t base_seed) {
  check_tracked(weights, tracked);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(snapshots);
  for (std::size_t s = 0; s < snapshots; ++s) out.push_back(tracked_degrees(weights, tracked, derive_seed(base_seed, s)));
  return out;
}

std::vector<SnapshotStats> sample_projection_stats(const AffiliationWeights& weights, std::size_t snapshots,
                                                   std::uint64_t base_seed) {
  weights.validate();
  std::vector<SnapshotStats> out;
  out.reserve(snapshots);
  for (std::size_t s = 0; s < snapshots; ++s) {
    Rng rng(derive_seed(base_seed, s));
    out.push_back(serial::snapshot(project(sample_stationary(weights, rng))));
  }
  return out;
}

}  // namespace serial

}  // namespace clustnet
