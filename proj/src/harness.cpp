#include "edgelab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "edgelab/learners.hpp"
#include "edgelab/rng.hpp"

namespace edgelab {
namespace {

constexpr std::string_view kCsvHeader =
    "schema_version,family,learner,cost_model,n,trial,seed,total_queries,"
    "total_charge,wall_micros,correct";

// Keeps the learner's random stream apart from the instance generator's.
constexpr std::uint64_t kLearnerStreamTag = 0x6c6561726e657273ULL;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_u64(const std::string& text, const char* field) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw std::invalid_argument(std::string("bad ") + field + " '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text, const char* field) {
  const std::uint64_t v = parse_u64(text, field);
  if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw std::invalid_argument(std::string(field) + " out of range");
  }
  return static_cast<int>(v);
}

bool learned_matches(const HiddenInstance& a, const HiddenInstance& b) { return a == b; }

double growth_scale(GrowthModel model, double n) {
  switch (model) {
    case GrowthModel::Poly: return n * n;
    case GrowthModel::NLogN: return n * std::log(n);
    case GrowthModel::NLog2N: return n * std::log(n) * std::log(n);
  }
  return 1.0;
}

}  // namespace

std::string_view to_string(LearnerKind learner) {
  switch (learner) {
    case LearnerKind::Greedy: return "greedy";
    case LearnerKind::GreedyAdversary: return "greedy-adversary";
    case LearnerKind::FullScan: return "full-scan";
    case LearnerKind::BinarySearch: return "binary-search";
    case LearnerKind::Quicksort: return "quicksort";
  }
  return "?";
}

LearnerKind parse_learner(std::string_view text) {
  for (const auto k : {LearnerKind::Greedy, LearnerKind::GreedyAdversary,
                       LearnerKind::FullScan, LearnerKind::BinarySearch,
                       LearnerKind::Quicksort}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown learner '" + std::string(text) + "'");
}

Family learner_family(LearnerKind learner) {
  switch (learner) {
    case LearnerKind::Greedy:
    case LearnerKind::GreedyAdversary:
    case LearnerKind::FullScan: return Family::Matching;
    case LearnerKind::BinarySearch: return Family::ColPermuted;
    case LearnerKind::Quicksort: return Family::HalfGraph;
  }
  return Family::Matching;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.sizes.empty()) throw std::invalid_argument("config: no sizes");
  for (std::size_t k = 0; k < cfg.sizes.size(); ++k) {
    if (cfg.sizes[k] < 1) throw std::invalid_argument("config: sizes must be >= 1");
    if (k > 0 && cfg.sizes[k] <= cfg.sizes[k - 1]) {
      throw std::invalid_argument("config: sizes must be strictly increasing");
    }
  }
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (learner_family(cfg.learner) != cfg.family) {
    throw std::invalid_argument("config: learner " + std::string(to_string(cfg.learner)) +
                                " does not learn family " +
                                std::string(to_string(cfg.family)));
  }
  const bool quicksort = cfg.learner == LearnerKind::Quicksort;
  if (quicksort && cfg.cost_model == CostModel::Unit) {
    throw std::invalid_argument("config: quicksort needs cost model SAMPLING or GROVER");
  }
  if (!quicksort && cfg.cost_model == CostModel::Grover) {
    throw std::invalid_argument("config: GROVER applies only to quicksort");
  }
  if (cfg.threads < 1) throw std::invalid_argument("config: threads must be >= 1");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key == "family") {
      cfg.family = parse_family(value);
    } else if (key == "sizes") {
      cfg.sizes.clear();
      for (const auto& part : split(value, ',')) cfg.sizes.push_back(parse_int(trim(part), "size"));
    } else if (key == "trials") {
      cfg.trials = parse_int(value, "trials");
    } else if (key == "seed") {
      cfg.base_seed = parse_u64(value, "seed");
    } else if (key == "cost_model") {
      cfg.cost_model = parse_cost_model(value);
    } else if (key == "learner") {
      cfg.learner = parse_learner(value);
    } else if (key == "out") {
      cfg.output_path = value;
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(parse_int(value, "threads"));
    } else if (key == "timing") {
      cfg.record_wall_time = value == "1" || value == "true";
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunOutcome run_learner_on(LearnerKind learner, CostModel cost_model,
                          const HiddenInstance& hidden, std::uint64_t seed,
                          TranscriptMode mode) {
  if (learner_family(learner) != family_of(hidden)) {
    throw std::invalid_argument("learner does not match the instance family");
  }
  if (learner == LearnerKind::GreedyAdversary) {
    throw std::invalid_argument("greedy-adversary has no fixed hidden instance");
  }
  InstanceOracle oracle(hidden, cost_model, mode);
  Rng rng(mix64(seed ^ kLearnerStreamTag));
  HiddenInstance learned = [&]() -> HiddenInstance {
    switch (learner) {
      case LearnerKind::Greedy: return learn_matching_greedy(oracle);
      case LearnerKind::FullScan: return learn_matching_full(oracle);
      case LearnerKind::BinarySearch: return learn_column_permuted(oracle);
      case LearnerKind::Quicksort: return learn_half_graph(oracle, rng, cost_model);
      case LearnerKind::GreedyAdversary: break;
    }
    throw std::logic_error("unreachable learner");
  }();
  const bool correct = learned_matches(learned, hidden);
  return {hidden, std::move(learned), oracle.transcript(), correct};
}

RunOutcome run_learner(LearnerKind learner, CostModel cost_model, int n,
                       std::uint64_t seed, TranscriptMode mode) {
  if (learner != LearnerKind::GreedyAdversary) {
    return run_learner_on(learner, cost_model, gen_instance(learner_family(learner), n, seed),
                          seed, mode);
  }
  LazyAdversaryOracle oracle(n, mode);
  const Matching learned = learn_matching_greedy(oracle);
  const Matching committed = oracle.final_instance();
  bool correct = learned == committed;
  for (int i = 1; i <= n && correct; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto said = oracle.answered(i, j);
      if (said && *said != learned.entry(i, j)) {
        correct = false;
        break;
      }
    }
  }
  return {committed, learned, oracle.transcript(), correct};
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  struct Job {
    int n;
    int trial;
  };
  std::vector<Job> jobs;
  for (const int n : cfg.sizes) {
    for (int t = 0; t < cfg.trials; ++t) jobs.push_back({n, t});
  }
  std::vector<ExperimentRecord> records(jobs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      try {
        const Job job = jobs[k];
        ExperimentRecord& rec = records[k];
        rec.family = cfg.family;
        rec.learner = cfg.learner;
        rec.cost_model = cfg.cost_model;
        rec.n = job.n;
        rec.trial = job.trial;
        rec.seed = derive_seed(cfg.base_seed, static_cast<std::uint64_t>(job.n),
                               static_cast<std::uint64_t>(job.trial));
        const auto start = std::chrono::steady_clock::now();
        const RunOutcome outcome = run_learner(cfg.learner, cfg.cost_model, job.n, rec.seed);
        const auto stop = std::chrono::steady_clock::now();
        rec.total_queries = outcome.transcript.total_queries();
        rec.total_charge = outcome.transcript.total_charge();
        rec.correct = outcome.correct;
        if (cfg.record_wall_time) {
          rec.wall_micros = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(jobs.size());
      }
    }
  };
  const unsigned threads =
      std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(jobs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << kCsvSchemaVersion << ',' << to_string(r.family) << ',' << to_string(r.learner)
        << ',' << to_string(r.cost_model) << ',' << r.n << ',' << r.trial << ','
        << r.seed << ',' << r.total_queries << ',' << r.total_charge << ','
        << r.wall_micros << ',' << (r.correct ? 1 : 0) << '\n';
  }
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) {
    throw std::invalid_argument("csv: missing or unexpected header");
  }
  std::vector<ExperimentRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = split(trim(line), ',');
    if (f.size() != 11) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                  ": expected 11 fields");
    }
    if (parse_int(f[0], "schema_version") != kCsvSchemaVersion) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                  ": unsupported schema version " + f[0]);
    }
    ExperimentRecord r;
    r.family = parse_family(f[1]);
    r.learner = parse_learner(f[2]);
    r.cost_model = parse_cost_model(f[3]);
    r.n = parse_int(f[4], "n");
    r.trial = parse_int(f[5], "trial");
    r.seed = parse_u64(f[6], "seed");
    r.total_queries = parse_u64(f[7], "total_queries");
    r.total_charge = parse_u64(f[8], "total_charge");
    r.wall_micros = parse_u64(f[9], "wall_micros");
    const int correct = parse_int(f[10], "correct");
    if (correct > 1) throw std::invalid_argument("csv: correct must be 0 or 1");
    r.correct = correct == 1;
    records.push_back(r);
  }
  return records;
}

std::string_view to_string(GrowthModel model) {
  switch (model) {
    case GrowthModel::Poly: return "POLY";
    case GrowthModel::NLogN: return "NLOGN";
    case GrowthModel::NLog2N: return "NLOG2N";
  }
  return "?";
}

GrowthModel parse_growth_model(std::string_view text) {
  for (const auto m : {GrowthModel::Poly, GrowthModel::NLogN, GrowthModel::NLog2N}) {
    std::string lower(to_string(m));
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (text == to_string(m) || text == lower) return m;
  }
  throw std::invalid_argument("unknown growth model '" + std::string(text) + "'");
}

CostMetric parse_cost_metric(std::string_view text) {
  if (text == "queries") return CostMetric::Queries;
  if (text == "charge") return CostMetric::Charge;
  throw std::invalid_argument("unknown metric '" + std::string(text) + "'");
}

std::vector<std::pair<int, double>> mean_cost_by_size(
    std::span<const ExperimentRecord> records, CostMetric metric) {
  std::map<int, std::pair<double, int>> sums;
  for (const auto& r : records) {
    auto& [sum, count] = sums[r.n];
    sum += static_cast<double>(metric == CostMetric::Queries ? r.total_queries
                                                             : r.total_charge);
    ++count;
  }
  std::vector<std::pair<int, double>> means;
  for (const auto& [n, acc] : sums) means.emplace_back(n, acc.first / acc.second);
  return means;
}

FitResult fit_growth(std::span<const std::pair<int, double>> mean_costs,
                     GrowthModel model) {
  std::map<int, double> by_n(mean_costs.begin(), mean_costs.end());
  if (by_n.size() < 3) {
    throw std::invalid_argument("fit_growth: need at least 3 distinct sizes");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  FitResult fit;
  fit.model = model;
  for (const auto& [n, cost] : by_n) {
    if (n < 2 || !(cost > 0.0)) {
      throw std::invalid_argument("fit_growth: sizes must be >= 2 and costs positive");
    }
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(cost));
    fit.constant += cost / growth_scale(model, n);
  }
  const auto count = static_cast<double>(xs.size());
  fit.constant /= count;
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mean_x += xs[k];
    mean_y += ys[k];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mean_x) * (xs[k] - mean_x);
    sxy += (xs[k] - mean_x) * (ys[k] - mean_y);
  }
  fit.slope = sxy / sxx;
  const double intercept = mean_y - fit.slope * mean_x;
  double sq = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double r = ys[k] - (intercept + fit.slope * xs[k]);
    sq += r * r;
  }
  fit.residual = std::sqrt(sq);
  return fit;
}

FitResult fit_growth(std::span<const ExperimentRecord> records, GrowthModel model,
                     CostMetric metric) {
  const auto means = mean_cost_by_size(records, metric);
  return fit_growth(means, model);
}

std::string to_json(const FitResult& fit) {
  nlohmann::ordered_json j;
  j["model"] = std::string(to_string(fit.model));
  j["constant"] = fit.constant;
  j["slope"] = fit.slope;
  j["residual"] = fit.residual;
  return j.dump();
}

}  // namespace edgelab
