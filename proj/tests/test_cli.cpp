#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "clustnet/cli.hpp"
#include "clustnet/heatmap.hpp"

using namespace clustnet;
using namespace clustnet::cli;

namespace {

ExperimentConfig base(const std::string& command) {
  ExperimentConfig c;
  c.command = command;
  return c;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("geometric grid specs") {
  const auto v = parse_grid("geom:100:1.35:10").values();
  REQUIRE(v.size() == 10);
  for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] == doctest::Approx(100.0 * std::pow(1.35, double(k))));
  CHECK(parse_grid("geom:5:2:1").values() == std::vector<double>{5.0});
  CHECK_THROWS_AS(parse_grid("geom:0:1.35:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("geom:-1:1.35:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("geom:1:1:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("geom:1:0.5:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("geom:1:2:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("geom:1:2:2.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("lin:1:2:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("geom:1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("geom:1x:2:3"), std::invalid_argument);
}

TEST_CASE("config resolution and round trip") {
  ExperimentConfig c = base("simulate");
  c.n = 40;
  const ExperimentConfig r = resolve(c);
  CHECK(r.burnin == 3u * 40 * 40);
  CHECK(r.interval == 40u);
  CHECK(r.mu == 0.0);
  CHECK(r.seed == kDefaultSeed);

  ExperimentConfig a = base("affiliation");
  a.n = 100;
  a.m = 400;
  const ExperimentConfig ra = resolve(a);
  CHECK(*ra.mu == doctest::Approx(200.0));

  const nlohmann::json j = r;
  CHECK(j.get<ExperimentConfig>().burnin == r.burnin);
  CHECK(nlohmann::json(j.get<ExperimentConfig>()) == j);
  CHECK_FALSE(j.contains("threads"));

  nlohmann::json bad = j;
  bad["lamda"] = 3;
  CHECK_THROWS_AS(bad.get<ExperimentConfig>(), std::invalid_argument);

  ExperimentConfig invalid = base("simulate");
  invalid.model = "independent";
  invalid.lambda = 2.0;
  CHECK_THROWS_AS(resolve(invalid), std::invalid_argument);
  invalid = base("simulate");
  invalid.model = "banana";
  CHECK_THROWS_AS(resolve(invalid), std::invalid_argument);
  ExperimentConfig sweep_missing = base("sweep");
  CHECK_THROWS_AS(resolve(sweep_missing), std::invalid_argument);
  ExperimentConfig oracle_big = base("oracle-check");
  oracle_big.n = 5;
  CHECK_THROWS_AS(resolve(oracle_big), std::invalid_argument);
}

TEST_CASE("simulate output") {
  ExperimentConfig c = base("simulate");
  c.model = "independent";
  c.n = 100;
  c.lambda0 = 1;
  c.mu0 = 99;
  c.samples = 200;
  c = resolve(c);
  const auto samples = simulate(c);
  const std::string csv = simulate_csv(c, samples);
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 202);
  CHECK(rows[0].rfind("# config: {", 0) == 0);
  CHECK(rows[0].find("\"seed\":" + std::to_string(kDefaultSeed)) != std::string::npos);
  CHECK(rows[1] == kSnapshotCsvHeader);
  CHECK(csv.find('\r') == std::string::npos);

  std::vector<double> e;
  for (const auto& s : samples) e.push_back(s.stats.edge_density);
  const Estimate est = time_average(e);
  CHECK(std::abs(est.mean - 0.01) < 3.0 * est.std_error);

  CHECK(simulate_csv(c, simulate(c)) == csv);
}

TEST_CASE("sweep cells") {
  ExperimentConfig c = base("sweep");
  c.model = "simplified";
  c.n = 30;
  c.alpha = 1;
  c.beta = 1;
  c.mu0 = 30;
  c.samples = 30;
  c.lambda_grid = "geom:5:2:3";
  c.mu_grid = "geom:2:3:2";
  c = resolve(c);
  const SweepResult r = sweep(c);
  REQUIRE(r.cells.size() == 6);
  for (std::size_t k = 0; k < r.cells.size(); ++k) {
    const SweepCell& cell = r.cells[k];
    CHECK(cell.i_lambda == k / 2);
    CHECK(cell.i_mu == k % 2);
    CHECK(cell.lambda == doctest::Approx(5.0 * std::pow(2.0, double(cell.i_lambda))));
    CHECK(cell.mu == doctest::Approx(2.0 * std::pow(3.0, double(cell.i_mu))));
    CHECK(cell.seed == derive_seed(c.seed, k));
    CHECK(cell.status == "ok");
    CHECK(cell.samples == 30);
  }
  const std::string csv = sweep_csv(c, r);
  CHECK(lines(csv).size() == 8);
  CHECK(csv == sweep_csv(c, sweep(c)));

  const auto [e_svg, cl_svg] = sweep_svgs(c, r);
  CHECK(e_svg.rfind("<svg", 0) == 0);
  CHECK(e_svg.find("<!-- config: {") != std::string::npos);
  CHECK(cl_svg.find("mean local clustering") != std::string::npos);
  std::size_t rects = 0;
  for (std::size_t p = e_svg.find("<rect"); p != std::string::npos; p = e_svg.find("<rect", p + 1)) ++rects;
  CHECK(rects == 6 + 32);
}

TEST_CASE("a one-cell sweep reproduces simulate") {
  ExperimentConfig c = base("sweep");
  c.n = 25;
  c.alpha = 1;
  c.beta = 1;
  c.mu0 = 25;
  c.samples = 40;
  c.lambda_grid = "geom:8:2:1";
  c.mu_grid = "geom:3:2:1";
  c = resolve(c);
  const SweepResult r = sweep(c);
  REQUIRE(r.cells.size() == 1);

  ExperimentConfig s = c;
  s.command = "simulate";
  s.lambda = 8;
  s.mu = 3;
  const auto samples = simulate(resolve(s));
  const Estimate e = time_average(samples, [](const Sample& x) { return x.stats.edge_density; });
  const Estimate cl = time_average(samples, [](const Sample& x) { return x.stats.avg_local_clustering; });
  CHECK(r.cells[0].e.mean == e.mean);
  CHECK(r.cells[0].e.std_error == e.std_error);
  CHECK(r.cells[0].cl.mean == cl.mean);
}

TEST_CASE("sweep records failing cells and keeps going") {
  ExperimentConfig c = base("sweep");
  c.model = "corrected";
  c.n = 10;
  c.alpha = 2;
  c.samples = 5;
  c.lambda_grid = "geom:1:2:2";
  c.mu_grid = "geom:1:2:2";
  const SweepResult r = sweep(resolve(c));
  for (const auto& cell : r.cells) CHECK(cell.status.rfind("error: ", 0) == 0);
  const std::string csv = sweep_csv(resolve(c), r);
  for (const auto& row : lines(csv)) {
    if (row[0] == '#') continue;
    CHECK(std::count(row.begin(), row.end(), ',') == 13);
  }

  ExperimentConfig absorbing = base("sweep");
  absorbing.n = 6;
  absorbing.mu0 = 1;
  absorbing.samples = 5;
  absorbing.lambda_grid = "geom:50:2:1";
  absorbing.mu_grid = "geom:5:2:1";
  const SweepResult a = sweep(resolve(absorbing));
  CHECK(a.cells[0].status == "absorbed");
  CHECK(a.cells[0].e.mean == 1.0);
}

TEST_CASE("heatmap rendering") {
  HeatmapData map{"t", "x", "y", {1, 2}, {3}, {{0.5, 2.0}}};
  const auto range = shared_log_range({&map});
  REQUIRE(range);
  CHECK(range->first == 0.5);
  CHECK(range->second == 2.0);
  const std::string svg = render_heatmap_svg(map, *range, "a -- b");
  CHECK(svg.find("<!-- a - - b -->") != std::string::npos);
  CHECK(svg.find("#440154") != std::string::npos);
  CHECK(svg.find("#fde725") != std::string::npos);
  HeatmapData bad = map;
  bad.x_ticks.pop_back();
  CHECK_THROWS_AS(render_heatmap_svg(bad, *range, ""), std::invalid_argument);
  HeatmapData empty{"t", "x", "y", {1}, {1}, {{0.0}}};
  CHECK_FALSE(shared_log_range({&empty}));
}

TEST_CASE("affiliation comparison") {
  ExperimentConfig c = base("affiliation");
  c.n = 400;
  c.m = 400;
  c.snapshots = 200;
  c.tracked = 5;
  c = resolve(c);
  const AffiliationReport r = affiliation(c);
  REQUIRE(r.stats.size() == 200);
  const auto& j = r.comparison;
  CHECK(std::abs(j["global_clustering"]["measured"]["mean"].get<double>() - 0.5) < 0.05);
  CHECK(j["global_clustering"]["predicted"].get<double>() == doctest::Approx(0.5));
  for (const auto& v : j["tracked_vertices"]) {
    CHECK(v["upper"].get<double>() == doctest::Approx(1.0));
    CHECK(v["within_bounds"].get<bool>());
  }
  CHECK(affiliation_csv(c, r) == affiliation_csv(c, affiliation(c)));

  ExperimentConfig wide = base("affiliation");
  wide.n = 100;
  wide.m = 10000;
  wide.snapshots = 20;
  wide = resolve(wide);
  const double cgl = affiliation(wide).comparison["global_clustering"]["measured"]["mean"].get<double>();
  CHECK(cgl < 0.15);

  ExperimentConfig traj = base("affiliation");
  traj.n = 10;
  traj.m = 10;
  traj.snapshots = 20;
  traj.trajectory = true;
  traj = resolve(traj);
  const AffiliationReport tr = affiliation(traj);
  CHECK(tr.jumps[0] == *traj.burnin + *traj.interval);
  CHECK(tr.sim_times[19] > tr.sim_times[0]);

  const auto path = std::filesystem::temp_directory_path() / "clustnet_cli_weights.txt";
  {
    std::ofstream out(path);
    out << "1\n2\n";
  }
  ExperimentConfig mismatch = base("affiliation");
  mismatch.n = 3;
  mismatch.y_weights = "file:" + path.string();
  CHECK_THROWS_AS(affiliation(resolve(mismatch)), std::invalid_argument);
  std::filesystem::remove(path);
}

TEST_CASE("oracle check verdicts") {
  ExperimentConfig c = base("oracle-check");
  c.model = "independent";
  c.n = 3;
  c = resolve(c);
  const auto j = oracle_check(c);
  CHECK(j["status"] == "ok");
  CHECK(j["verdicts"]["total_variation"]["value"].get<double>() < 0.02);
  CHECK(j["verdicts"]["density_bounds"]["verdict"] == "pass");
  CHECK(j["pi"]["edge_density"].get<double>() == doctest::Approx(0.5));

  ExperimentConfig g = base("oracle-check");
  g.model = "general";
  g.n = 4;
  g.alpha = 1;
  g.beta = 1;
  g.lambda = 2;
  g.mu = 0.5;
  g.lambda_weights = "uniform:0.5:1.5";
  g.mu_weights = "uniform:1:2";
  const auto jg = oracle_check(resolve(g));
  CHECK(jg["status"] == "ok");
  CHECK(jg["verdicts"]["total_variation"]["value"].get<double>() < 0.02);

  ExperimentConfig reducible = base("oracle-check");
  reducible.n = 4;
  reducible.mu = 5;
  const auto jr = oracle_check(resolve(reducible));
  CHECK(jr["status"] == "error");
  CHECK(jr["message"].get<std::string>().find("reducible") != std::string::npos);

  ExperimentConfig big = base("oracle-check");
  big.n = 5;
  CHECK(oracle_check(big)["status"] == "error");
}
