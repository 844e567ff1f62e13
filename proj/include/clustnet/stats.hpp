#pragma once

#include <cstddef>
#include <cstdint>
#include <concepts>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "clustnet/graph_state.hpp"

namespace clustnet {

/// Observables of one graph snapshot.
struct SnapshotStats {
  std::size_t n = 0;
  std::size_t edges = 0;
  double edge_density = 0.0;          // |E| / C(n,2)
  double avg_degree = 0.0;
  double avg_local_clustering = 0.0;  // mean of C^L_v over all vertices
  double global_clustering = 0.0;     // 3 N_tri / N_2path, 0 without triangles
  std::uint64_t triangles = 0;
  std::uint64_t two_paths = 0;
  std::size_t largest_component = 0;
  std::vector<std::size_t> degree_histogram;  // g(k), k = 0..max degree
  std::vector<double> clustering_curve;       // f(k), 0 where g(k) = 0

  /// Mean number of triangles through a vertex, 3 N_tri / n.
  double mean_vertex_triangles() const { return 3.0 * static_cast<double>(triangles) / static_cast<double>(n); }
  /// Fraction of vertices of degree at least two.
  double fraction_degree_at_least_two() const;
};

/// C^L_v = Delta_v / C(d_v, 2), or 0 when d_v <= 1.
double local_clustering(const GraphState& g, Vertex v);

/// Snapshot statistics. The per-vertex pass runs as an OpenMP loop; results do not depend
/// on the thread count.
SnapshotStats snapshot(const GraphState& g);

namespace serial {
/// Single-threaded reference for snapshot().
SnapshotStats snapshot(const GraphState& g);
}  // namespace serial

/// Weighted mean with a batch-means standard error.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Weighted mean of values using ceil(sqrt(N)) contiguous batches for the standard error.
/// Throws std::invalid_argument for fewer than two samples or mismatched spans.
Estimate time_average(std::span<const double> values, std::span<const double> weights);

/// Same as above with unit weights.
Estimate time_average(std::span<const double> values);

/// Evaluates observer on each record and averages with the record's weight.
template <typename Record, typename Observer>
  requires std::invocable<Observer&, const Record&>
Estimate time_average(const std::vector<Record>& trajectory, Observer&& observer) {
  std::vector<double> values;
  std::vector<double> weights;
  values.reserve(trajectory.size());
  weights.reserve(trajectory.size());
  for (const auto& r : trajectory) {
    values.push_back(observer(r));
    weights.push_back(r.weight);
  }
  return time_average(values, weights);
}

/// Column header of the snapshot CSV.
inline constexpr const char* kSnapshotCsvHeader =
    "seed,sim_time,jumps,n,e,d_bar,CL_bar,CGL,N_tri,N_2path,largest_comp";

/// One CSV row in the kSnapshotCsvHeader column order, without trailing newline.
std::string snapshot_csv_row(std::uint64_t seed, double sim_time, std::uint64_t jumps, const SnapshotStats& s);

/// Shortest round-trip decimal rendering, locale-independent.
std::string format_double(double x);

}  // namespace clustnet
