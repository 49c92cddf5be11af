#pragma once

// Experiment driver: seeded sweeps over families and sizes, CSV records,
// and growth-rate fits.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgelab/instances.hpp"
#include "edgelab/oracles.hpp"

namespace edgelab {

enum class LearnerKind { Greedy, GreedyAdversary, FullScan, BinarySearch, Quicksort };

std::string_view to_string(LearnerKind learner);
/// greedy, greedy-adversary, full-scan, binary-search, quicksort.
LearnerKind parse_learner(std::string_view text);

/// Family a learner reconstructs.
Family learner_family(LearnerKind learner);

struct ExperimentConfig {
  Family family = Family::Matching;
  std::vector<int> sizes;
  int trials = 1;
  std::uint64_t base_seed = 0;
  CostModel cost_model = CostModel::Unit;
  LearnerKind learner = LearnerKind::Greedy;
  std::string output_path;
  /// wall_micros is 0 unless set; timings would break byte-identical output.
  bool record_wall_time = false;
  unsigned threads = 1;
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const ExperimentConfig& cfg);

/// Flat `key = value` file; '#' starts a comment. Keys: family, sizes,
/// trials, seed, cost_model, learner, out, threads, timing.
ExperimentConfig parse_config(std::istream& in);

struct ExperimentRecord {
  Family family = Family::Matching;
  LearnerKind learner = LearnerKind::Greedy;
  CostModel cost_model = CostModel::Unit;
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t total_queries = 0;
  std::uint64_t total_charge = 0;
  std::uint64_t wall_micros = 0;
  bool correct = false;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Result of one learner run against one oracle.
struct RunOutcome {
  HiddenInstance hidden;
  HiddenInstance learned;
  QueryTranscript transcript;
  bool correct = false;
};

/// Runs `learner` on the instance generated from `seed` (or against the lazy
/// adversary for greedy-adversary). The learner's RNG stream is derived from
/// `seed` and independent of the instance stream.
RunOutcome run_learner(LearnerKind learner, CostModel cost_model, int n,
                       std::uint64_t seed,
                       TranscriptMode mode = TranscriptMode::TotalsOnly);

/// Same, on a given instance (fixture replay).
RunOutcome run_learner_on(LearnerKind learner, CostModel cost_model,
                          const HiddenInstance& hidden, std::uint64_t seed,
                          TranscriptMode mode = TranscriptMode::TotalsOnly);

/// One record per (n, trial), sorted by (n, trial).
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

inline constexpr int kCsvSchemaVersion = 1;

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);
std::vector<ExperimentRecord> read_csv(std::istream& in);

enum class GrowthModel { Poly, NLogN, NLog2N };
enum class CostMetric { Queries, Charge };

std::string_view to_string(GrowthModel model);
GrowthModel parse_growth_model(std::string_view text);
CostMetric parse_cost_metric(std::string_view text);

struct FitResult {
  GrowthModel model = GrowthModel::Poly;
  /// Mean over sizes of mean_cost / g(n), with g = n^2, n ln n, n ln^2 n.
  double constant = 0.0;
  /// Least-squares slope of ln(mean cost) against ln(n).
  double slope = 0.0;
  /// Euclidean norm of the log-log fit residuals.
  double residual = 0.0;
};

/// Per-size mean of the chosen metric, ascending in n.
std::vector<std::pair<int, double>> mean_cost_by_size(
    std::span<const ExperimentRecord> records, CostMetric metric);

FitResult fit_growth(std::span<const std::pair<int, double>> mean_costs,
                     GrowthModel model);
FitResult fit_growth(std::span<const ExperimentRecord> records, GrowthModel model,
                     CostMetric metric = CostMetric::Queries);

/// `{"model": ..., "constant": ..., "slope": ..., "residual": ...}`
std::string to_json(const FitResult& fit);

}  // namespace edgelab
