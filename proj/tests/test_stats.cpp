#include <doctest.h>

#include <cmath>
#include <numeric>

#include "clustnet/stats.hpp"
#include "support.hpp"

using namespace clustnet;
using testing::make_graph;

TEST_CASE("local clustering") {
  CHECK(local_clustering(GraphState(3), 0) == 0.0);
  CHECK(local_clustering(testing::complete_graph(3), 0) == 1.0);
  const GraphState paw = make_graph(4, {{1, 2}, {2, 3}, {1, 3}, {0, 1}});
  CHECK(local_clustering(paw, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(local_clustering(paw, 0) == 0.0);
}

TEST_CASE("snapshot of small graphs") {
  const SnapshotStats k3 = snapshot(testing::complete_graph(3));
  CHECK(k3.edge_density == 1.0);
  CHECK(k3.avg_local_clustering == 1.0);
  CHECK(k3.global_clustering == 1.0);
  CHECK(k3.triangles == 1);
  CHECK(k3.two_paths == 3);
  CHECK(k3.avg_degree == 2.0);

  const SnapshotStats path = snapshot(make_graph(3, {{0, 1}, {1, 2}}));
  CHECK(path.global_clustering == 0.0);
  CHECK(path.two_paths == 1);
  CHECK(path.avg_local_clustering == 0.0);

  const SnapshotStats paw = snapshot(make_graph(4, {{1, 2}, {2, 3}, {1, 3}, {0, 1}}));
  CHECK(paw.global_clustering == doctest::Approx(0.6));
  CHECK(paw.avg_local_clustering == doctest::Approx(7.0 / 12.0));
  CHECK(paw.degree_histogram == std::vector<std::size_t>{0, 1, 2, 1});
  CHECK(paw.clustering_curve[0] == 0.0);
  CHECK(paw.clustering_curve[1] == 0.0);
  CHECK(paw.clustering_curve[2] == doctest::Approx(1.0));
  CHECK(paw.clustering_curve[3] == doctest::Approx(1.0 / 3.0));
  CHECK(paw.mean_vertex_triangles() == doctest::Approx(0.75));
  CHECK(paw.fraction_degree_at_least_two() == doctest::Approx(0.75));

  const SnapshotStats empty = snapshot(GraphState(5));
  CHECK(empty.edge_density == 0.0);
  CHECK(empty.largest_component == 1);
  CHECK(empty.degree_histogram == std::vector<std::size_t>{5});
}

TEST_CASE("snapshot invariants on random graphs") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 60;
    const GraphState g = testing::random_graph(n, rng.uniform() * rng.uniform(), rng);
    const SnapshotStats s = snapshot(g);
    CHECK(s.edge_density >= 0.0);
    CHECK(s.edge_density <= 1.0);
    CHECK(s.avg_local_clustering >= 0.0);
    CHECK(s.avg_local_clustering <= 1.0);
    CHECK(s.global_clustering >= 0.0);
    CHECK(s.global_clustering <= 1.0);
    CHECK(3 * s.triangles <= s.two_paths);
    CHECK(s.triangles == testing::brute_triangles(g));
    CHECK(s.two_paths == testing::brute_two_paths(g));
    CHECK(s.largest_component == testing::brute_largest_component(g));
    std::size_t mass = 0, degree_sum = 0;
    double curve_mass = 0.0, cl_sum = 0.0;
    for (std::size_t k = 0; k < s.degree_histogram.size(); ++k) {
      mass += s.degree_histogram[k];
      degree_sum += k * s.degree_histogram[k];
      curve_mass += s.clustering_curve[k] * static_cast<double>(s.degree_histogram[k]);
      if (s.degree_histogram[k] == 0) CHECK(s.clustering_curve[k] == 0.0);
    }
    for (Vertex v = 0; v < n; ++v) cl_sum += local_clustering(g, v);
    CHECK(mass == n);
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(curve_mass == doctest::Approx(cl_sum).epsilon(1e-12));
    CHECK(s.avg_local_clustering * static_cast<double>(n) == doctest::Approx(cl_sum).epsilon(1e-12));
    CHECK(s.degree_histogram.size() == s.clustering_curve.size());
  }
}

TEST_CASE("serial and parallel snapshots agree exactly") {
  Rng rng(17);
  for (std::size_t n : {3, 50, 400}) {
    const GraphState g = testing::random_graph(n, 8.0 / n, rng);
    const SnapshotStats a = snapshot(g);
    const SnapshotStats b = serial::snapshot(g);
    CHECK(a.avg_local_clustering == b.avg_local_clustering);
    CHECK(a.global_clustering == b.global_clustering);
    CHECK(a.triangles == b.triangles);
    CHECK(a.two_paths == b.two_paths);
    CHECK(a.clustering_curve == b.clustering_curve);
    CHECK(a.degree_histogram == b.degree_histogram);
    CHECK(a.largest_component == b.largest_component);
  }
}

TEST_CASE("time averages") {
  const std::vector<double> constant(50, 0.37);
  const Estimate c = time_average(constant);
  CHECK(c.mean == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(c.std_error == 0.0);
  CHECK(c.samples == 50);

  std::vector<double> alternating;
  for (int k = 0; k < 100; ++k) alternating.push_back(k % 2);
  CHECK(time_average(alternating).mean == doctest::Approx(0.5));

  const std::vector<double> values{1.0, 3.0};
  const std::vector<double> weights{3.0, 1.0};
  CHECK(time_average(values, weights).mean == doctest::Approx(1.5));

  CHECK_THROWS_AS(time_average(std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(time_average(values, std::vector<double>{1.0}), std::invalid_argument);

  // Batch-means SE of i.i.d. draws is close to the naive SE.
  Rng rng(8);
  std::vector<double> draws(10000);
  for (double& d : draws) d = rng.uniform();
  const Estimate u = time_average(draws);
  CHECK(u.mean == doctest::Approx(0.5).epsilon(0.02));
  CHECK(u.std_error == doctest::Approx(std::sqrt(1.0 / 12.0 / 10000.0)).epsilon(0.35));
}

TEST_CASE("csv rows") {
  const SnapshotStats s = snapshot(make_graph(4, {{1, 2}, {2, 3}, {1, 3}, {0, 1}}));
  CHECK(std::string(kSnapshotCsvHeader) == "seed,sim_time,jumps,n,e,d_bar,CL_bar,CGL,N_tri,N_2path,largest_comp");
  CHECK(snapshot_csv_row(42, 0.5, 7, s) ==
        "42,0.5,7,4,0.6666666666666666,2," + format_double(s.avg_local_clustering) + ",0.6,1,5,4");
  CHECK(s.avg_local_clustering == doctest::Approx(7.0 / 12.0).epsilon(1e-15));
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(3.0) == "3");
}
