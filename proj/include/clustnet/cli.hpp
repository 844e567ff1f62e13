#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clustnet/stats.hpp"
#include "clustnet/triadic_chain.hpp"

namespace clustnet::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Geometric grid start * ratio^k, k = 0..count-1.
struct GridSpec {
  double start = 1.0;
  double ratio = 2.0;
  std::size_t count = 1;

  std::vector<double> values() const;
};

/// Parses "geom:start:ratio:count". Throws std::invalid_argument unless start > 0,
/// ratio > 1 (or count == 1) and count >= 1.
GridSpec parse_grid(const std::string& spec);

/// Every experiment parameter. Unset optionals take defaults derived from the others in
/// resolve().
struct ExperimentConfig {
  std::string command;
  std::string model = "simplified";
  std::size_t n = 100;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  std::optional<double> mu;  // triadic protection; affiliation deletion intensity
  double lambda0 = 1.0;
  double mu0 = 1.0;
  std::string lambda_weights;  // weight spec for per-vertex lambda_i (general model)
  std::string mu_weights;      // weight spec for per-vertex mu_i (general model)
  std::optional<std::uint64_t> burnin;
  std::size_t samples = 100;
  std::optional<std::uint64_t> interval;
  std::uint64_t seed = kDefaultSeed;
  std::string out = "-";
  // sweep
  std::string lambda_grid;
  std::string mu_grid;
  std::string svg_prefix;
  // affiliation
  std::size_t m = 100;
  std::string y_weights = "const:1";
  std::string x_weights = "const:1";
  std::size_t snapshots = 100;
  std::size_t tracked = 10;
  bool trajectory = false;
  std::string json_out;
  // oracle-check
  std::uint64_t jumps = 1'000'000;
  // runtime
  int threads = 0;
};

void to_json(nlohmann::json& j, const ExperimentConfig& c);
/// Unknown keys are rejected so typos do not silently fall back to defaults.
void from_json(const nlohmann::json& j, ExperimentConfig& c);

/// Fills derived defaults and validates. Throws std::invalid_argument.
ExperimentConfig resolve(ExperimentConfig c);

/// Triadic parameters of a resolved config, per-vertex weights drawn from their specs.
TriadicParams triadic_params(const ExperimentConfig& c);

/// Single-line JSON of the resolved config, as embedded in output headers.
std::string config_line(const ExperimentConfig& c);

/// Samples of one simulate run.
std::vector<Sample> simulate(const ExperimentConfig& c);
/// "# config: ..." line, header row, one row per sample.
std::string simulate_csv(const ExperimentConfig& c, const std::vector<Sample>& samples);

struct SweepCell {
  std::size_t i_lambda = 0;
  std::size_t i_mu = 0;
  double lambda = 0.0;
  double mu = 0.0;
  std::uint64_t seed = 0;
  std::string status;  // "ok", "absorbed" or "error: <message>"
  std::size_t samples = 0;
  Estimate e;
  Estimate cl;
  Estimate cgl;
  double largest_component = 0.0;
};

struct SweepResult {
  std::vector<double> lambdas;
  std::vector<double> mus;
  std::vector<SweepCell> cells;  // sorted by (i_lambda, i_mu)
};

/// Cell (a, b) runs with lambda = lambdas[a], mu = mus[b] and seed derive_seed(seed, a * |mus| + b).
/// Cells run concurrently; a failing cell is recorded in its status.
SweepResult sweep(const ExperimentConfig& c);
std::string sweep_csv(const ExperimentConfig& c, const SweepResult& r);
/// SVG heatmaps of mean e and mean C^L sharing one log colour scale.
std::pair<std::string, std::string> sweep_svgs(const ExperimentConfig& c, const SweepResult& r);

struct AffiliationReport {
  std::vector<SnapshotStats> stats;
  std::vector<double> sim_times;
  std::vector<std::uint64_t> jumps;
  std::vector<std::vector<std::size_t>> tracked_degrees;  // [snapshot][tracked vertex]
  nlohmann::json comparison;
};

AffiliationReport affiliation(const ExperimentConfig& c);
std::string affiliation_csv(const ExperimentConfig& c, const AffiliationReport& r);

/// Verdict JSON of the exact-oracle check. Invalid or reducible configs give
/// {"status": "error", ...} instead of throwing.
nlohmann::json oracle_check(const ExperimentConfig& c);

/// Entry point of the command-line tool; returns the process exit code.
int main(int argc, char** argv);

}  // namespace clustnet::cli
