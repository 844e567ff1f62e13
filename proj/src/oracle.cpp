#include "clustnet/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <deque>

namespace clustnet {

StateSpace::StateSpace(std::size_t n) : n_(n), pairs_(pair_count(n)) {
  if (n < 2 || n > kMaxVertices) {
    throw std::invalid_argument("exact state space supports 2 <= n <= " + std::to_string(kMaxVertices));
  }
}

GraphState StateSpace::decode(std::uint32_t state) const {
  std::vector<VertexPair> edges;
  for (std::size_t p = 0; p < pairs_; ++p) {
    if ((state >> p) & 1U) edges.push_back(pair_from_index(p));
  }
  return GraphState::from_edges(n_, edges);
}

std::uint32_t StateSpace::encode(const GraphState& g) const {
  std::uint32_t state = 0;
  for (const auto& e : g.edges()) state |= 1U << pair_index(e.first, e.second);
  return state;
}

RateMatrix generator(const TriadicParams& params, std::size_t n) {
  const StateSpace space(n);
  params.validate(n);
  const IntensityModel model(params, n);
  RateMatrix q(space.size());
  for (std::uint32_t s = 0; s < space.size(); ++s) {
    const GraphState g = space.decode(s);
    double out = 0.0;
    for (std::size_t p = 0; p < pair_count(n); ++p) {
      const VertexPair pair = pair_from_index(p);
      const double rate = model(g, pair.first, pair.second);
      q(s, s ^ (1U << p)) = rate;
      out += rate;
    }
    q(s, s) = -out;
  }
  return q;
}

namespace {

bool reaches_all(const RateMatrix& q, bool forward) {
  std::vector<char> seen(q.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t t = 0; t < q.size(); ++t) {
      const double rate = forward ? q(s, t) : q(t, s);
      if (t != s && rate > 0.0 && !seen[t]) {
        seen[t] = 1;
        ++count;
        queue.push_back(t);
      }
    }
  }
  return count == q.size();
}

}  // namespace

StationaryDistribution solve_stationary(const RateMatrix& q) {
  const auto size = static_cast<Eigen::Index>(q.size());
  if (!reaches_all(q, true) || !reaches_all(q, false)) {
    throw ReducibleChain("generator is reducible: some states cannot reach each other");
  }
  Eigen::MatrixXd a(size, size);
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = 0; c < size; ++c) a(r, c) = q(c, r);
  }
  a.row(size - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs(size - 1) = 1.0;
  const Eigen::VectorXd x = a.partialPivLu().solve(rhs);

  StationaryDistribution out;
  out.pi.resize(q.size());
  double total = 0.0;
  for (Eigen::Index s = 0; s < size; ++s) {
    double v = x(s);
    if (v < 0.0) {
      if (v < -1e-12) throw std::runtime_error("stationary solve produced a negative probability");
      v = 0.0;
    }
    out.pi[s] = v;
    total += v;
  }
  for (double& v : out.pi) v /= total;
  for (std::size_t c = 0; c < q.size(); ++c) {
    double flow = 0.0;
    for (std::size_t r = 0; r < q.size(); ++r) flow += out.pi[r] * q(r, c);
    out.residual = std::max(out.residual, std::abs(flow));
  }
  return out;
}

double exact_expectation(const StationaryDistribution& pi, const StateSpace& space,
                         const std::function<double(const GraphState&)>& observable) {
  double sum = 0.0;
  for (std::uint32_t s = 0; s < space.size(); ++s) {
    if (pi.pi[s] != 0.0) sum += pi.pi[s] * observable(space.decode(s));
  }
  return sum;
}

double exact_balance(const StationaryDistribution& pi, const StateSpace& space, const TriadicParams& params) {
  const IntensityModel model(params, space.vertex_count());
  return exact_expectation(pi, space, [&](const GraphState& g) {
    double net = 0.0;
    for (std::size_t p = 0; p < pair_count(g.vertex_count()); ++p) {
      const VertexPair pair = pair_from_index(p);
      const double rate = model(g, pair.first, pair.second);
      net += g.has_edge(pair.first, pair.second) ? -rate : rate;
    }
    return net;
  });
}

std::vector<double> empirical_occupancy(const TriadicParams& params, std::size_t n, std::uint64_t jumps,
                                        std::uint64_t seed) {
  const StateSpace space(n);
  TriadicChain chain(GraphState(n), params, seed);
  std::vector<double> time_in(space.size(), 0.0);
  std::uint32_t state = 0;
  double elapsed = 0.0;
  for (std::uint64_t k = 0; k < jumps; ++k) {
    const StepResult r = chain.step();
    time_in[state] += r.dt;
    elapsed += r.dt;
    state ^= 1U << pair_index(r.pair.first, r.pair.second);
  }
  for (double& t : time_in) t /= elapsed;
  return time_in;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distributions differ in support size");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::abs(a[k] - b[k]);
  return sum / 2.0;
}

}  // namespace clustnet
