#include "clustnet/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace clustnet {

double SnapshotStats::fraction_degree_at_least_two() const {
  std::size_t low = 0;
  for (std::size_t k = 0; k < std::min<std::size_t>(2, degree_histogram.size()); ++k) low += degree_histogram[k];
  return static_cast<double>(n - low) / static_cast<double>(n);
}

double local_clustering(const GraphState& g, Vertex v) {
  const std::size_t d = g.degree(v);
  if (d <= 1) return 0.0;
  const double pairs = static_cast<double>(d) * static_cast<double>(d - 1) / 2.0;
  return static_cast<double>(g.triangles_at(v)) / pairs;
}

namespace {

// Folds per-vertex triangle counts and clustering values into the snapshot fields.
// Sums run in vertex order so serial and parallel callers agree bit for bit.
SnapshotStats assemble(const GraphState& g, std::span<const std::size_t> tri, std::span<const double> cl) {
  const std::size_t n = g.vertex_count();
  SnapshotStats s;
  s.n = n;
  s.edges = g.edge_count();
  s.edge_density = n > 1 ? static_cast<double>(s.edges) / static_cast<double>(pair_count(n)) : 0.0;
  s.avg_degree = 2.0 * static_cast<double>(s.edges) / static_cast<double>(n);

  std::size_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
  s.degree_histogram.assign(max_degree + 1, 0);
  std::vector<double> curve_sum(max_degree + 1, 0.0);

  std::uint64_t tri_sum = 0;
  double cl_sum = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    tri_sum += tri[v];
    cl_sum += cl[v];
    ++s.degree_histogram[d];
    curve_sum[d] += cl[v];
    s.two_paths += static_cast<std::uint64_t>(d) * (d > 0 ? d - 1 : 0) / 2;
  }
  s.triangles = tri_sum / 3;
  s.avg_local_clustering = cl_sum / static_cast<double>(n);
  s.global_clustering =
      s.triangles == 0 ? 0.0 : 3.0 * static_cast<double>(s.triangles) / static_cast<double>(s.two_paths);
  s.clustering_curve.assign(max_degree + 1, 0.0);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    if (s.degree_histogram[k] > 0) s.clustering_curve[k] = curve_sum[k] / static_cast<double>(s.degree_histogram[k]);
  }
  s.largest_component = largest_component_size(g);
  return s;
}

double clustering_from_count(std::size_t d, std::size_t tri) {
  if (d <= 1) return 0.0;
  return static_cast<double>(tri) / (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
}

}  // namespace

SnapshotStats snapshot(const GraphState& g) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  std::vector<std::size_t> tri(g.vertex_count());
  std::vector<double> cl(g.vertex_count());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t v = 0; v < n; ++v) {
    const auto u = static_cast<Vertex>(v);
    tri[u] = g.triangles_at(u);
    cl[u] = clustering_from_count(g.degree(u), tri[u]);
  }
  return assemble(g, tri, cl);
}

namespace serial {

SnapshotStats snapshot(const GraphState& g) {
  std::vector<std::size_t> tri(g.vertex_count());
  std::vector<double> cl(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    tri[v] = g.triangles_at(v);
    cl[v] = clustering_from_count(g.degree(v), tri[v]);
  }
  return assemble(g, tri, cl);
}

}  // namespace serial

Estimate time_average(std::span<const double> values, std::span<const double> weights) {
  const std::size_t count = values.size();
  if (count < 2) throw std::invalid_argument("time average needs at least two samples");
  if (weights.size() != count) throw std::invalid_argument("values and weights differ in length");

  // Centre on the first value so that a constant observable averages exactly.
  const double origin = values[0];
  auto weighted_mean = [&](std::size_t lo, std::size_t hi) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = lo; k < hi; ++k) {
      num += weights[k] * (values[k] - origin);
      den += weights[k];
    }
    if (!(den > 0.0)) throw std::invalid_argument("time average needs positive total weight per batch");
    return num / den;
  };

  Estimate est;
  est.samples = count;
  est.mean = origin + weighted_mean(0, count);

  const auto batches = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
  std::vector<double> means(batches);
  for (std::size_t b = 0; b < batches; ++b) means[b] = weighted_mean(b * count / batches, (b + 1) * count / batches);
  double centre = 0.0;
  for (double m : means) centre += m;
  centre /= static_cast<double>(batches);
  double ss = 0.0;
  for (double m : means) ss += (m - centre) * (m - centre);
  est.std_error = std::sqrt(ss / (static_cast<double>(batches) * static_cast<double>(batches - 1)));
  return est;
}

Estimate time_average(std::span<const double> values) {
  std::vector<double> ones(values.size(), 1.0);
  return time_average(values, ones);
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string snapshot_csv_row(std::uint64_t seed, double sim_time, std::uint64_t jumps, const SnapshotStats& s) {
  std::string row;
  row += std::to_string(seed);
  row += ',' + format_double(sim_time);
  row += ',' + std::to_string(jumps);
  row += ',' + std::to_string(s.n);
  row += ',' + format_double(s.edge_density);
  row += ',' + format_double(s.avg_degree);
  row += ',' + format_double(s.avg_local_clustering);
  row += ',' + format_double(s.global_clustering);
  row += ',' + std::to_string(s.triangles);
  row += ',' + std::to_string(s.two_paths);
  row += ',' + std::to_string(s.largest_component);
  return row;
}

}  // namespace clustnet
