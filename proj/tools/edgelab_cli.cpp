// edgelab: command-line front end for instance fixtures, single runs,
// sweeps, growth fits, and the lower-bound verification table.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "edgelab/bounds_lab.hpp"
#include "edgelab/harness.hpp"
#include "edgelab/instances.hpp"
#include "edgelab/oracles.hpp"

using namespace edgelab;

namespace {

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto dots = part.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(part.substr(0, dots));
      const int hi = std::stoi(part.substr(dots + 2));
      for (int n = lo; n <= hi; ++n) sizes.push_back(n);
    } else {
      sizes.push_back(std::stoi(part));
    }
  }
  return sizes;
}

/// Writes to `path`, or stdout when path is empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  fn(out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

struct TableRow {
  std::string quantity;
  int n;
  std::string computed;
  std::string predicted;
  bool match;
};

void print_table(const std::vector<TableRow>& rows) {
  std::cout << std::left << std::setw(26) << "quantity" << std::setw(4) << "n"
            << std::setw(14) << "computed" << std::setw(14) << "predicted" << "match\n";
  for (const auto& r : rows) {
    std::cout << std::left << std::setw(26) << r.quantity << std::setw(4) << r.n
              << std::setw(14) << r.computed << std::setw(14) << r.predicted
              << (r.match ? "true" : "false") << '\n';
  }
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int run_bounds(int max_n) {
  std::vector<TableRow> rows;
  for (int n = 2; n <= std::min(max_n, 5); ++n) {
    const int depth = exact_det_depth(Family::Matching, n);
    rows.push_back({"det_depth[MATCHING]", n, std::to_string(depth),
                    std::to_string(n * (n - 1) / 2), depth == n * (n - 1) / 2});
    const auto info = info_lower_bound(family_size(Family::Matching, n));
    rows.push_back({"info_bound[MATCHING]", n, std::to_string(info),
                    "<=" + std::to_string(depth), info <= static_cast<std::uint64_t>(depth)});
  }
  for (int n = 2; n <= std::min(max_n, 5); ++n) {
    const int depth = exact_det_depth(Family::ColPermuted, n);
    const auto info = info_lower_bound(family_size(Family::ColPermuted, n));
    rows.push_back({"det_depth[COL_PERMUTED]", n, std::to_string(depth),
                    ">=" + std::to_string(info), static_cast<std::uint64_t>(depth) >= info});
  }
  for (int n = 2; n <= std::min(max_n, 6); ++n) {
    const CraResult cra = cra_value_matching(n);
    const std::int64_t expected = static_cast<std::int64_t>(n) * (n - 1) / 2;
    rows.push_back({"cra[MATCHING]", n, rational_text(cra.value), std::to_string(expected),
                    cra.value == Rational(expected)});
  }
  for (int n = 2; n <= std::min(max_n, 7); ++n) {
    const auto p = quantum_adversary_params_colperm(n);
    const auto text = [](int a, int b, int c, int d) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
             "," + std::to_string(d) + ")";
    };
    rows.push_back({"qadv[COL_PERMUTED]", n, text(p.m, p.m_prime, p.l, p.l_prime),
                    text(n - 1, n - 1, 1, 1),
                    p == QuantumAdversaryParams{n - 1, n - 1, 1, 1}});
  }
  for (int n = 2; n <= std::min(max_n, 6); ++n) {
    const Certificate cert = zero_certificate(n);
    const auto count = count_consistent_half_graphs(cert);
    rows.push_back({"zero_cert_consistent", n, std::to_string(count), "1", count == 1});
  }
  print_table(rows);
  for (const auto& r : rows) {
    if (!r.match) return 1;
  }
  return 0;
}

int run_certify(int n, int polarity) {
  const Certificate cert = polarity == 0 ? zero_certificate(n) : one_certificate(n);
  std::cout << "n=" << n << " polarity=" << polarity << " size=" << cert.cells.size()
            << '\n'
            << render_certificate(cert);
  std::cout << "cells";
  for (const auto& [i, j] : cert.cells) std::cout << " (" << i << ',' << j << ')';
  std::cout << '\n';
  const auto count = count_consistent_half_graphs(cert);
  std::cout << "consistent=" << count << '\n'
            << "UNIQUE=" << (count == 1 ? "true" : "false") << '\n';
  return count == 1 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edgelab: learn hidden matchings and half graphs with edge queries"};
  app.require_subcommand(1);

  std::string family_text = "MATCHING";
  int n = 8;
  std::uint64_t seed = 1;
  std::string cost_text = "UNIT";
  std::string learner_text = "greedy";
  std::string out_path;

  auto* gen = app.add_subcommand("gen", "emit a serialized instance fixture");
  gen->add_option("--family", family_text, "MATCHING | COL_PERMUTED | HALF_GRAPH");
  gen->add_option("--n", n, "instance size")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  std::string instance_path;
  std::string transcript_path;
  std::string transcript_format = "csv";
  auto* learn = app.add_subcommand("learn", "run one learner and summarize its transcript");
  learn->add_option("--learner", learner_text,
                    "greedy | greedy-adversary | full-scan | binary-search | quicksort");
  learn->add_option("--n", n, "instance size")->check(CLI::PositiveNumber);
  learn->add_option("--seed", seed, "instance and learner seed");
  learn->add_option("--cost-model", cost_text, "UNIT | SAMPLING | GROVER");
  learn->add_option("--family", family_text, "checked against the learner's family");
  learn->add_option("--instance", instance_path, "replay a fixture written by gen");
  learn->add_option("--transcript", transcript_path, "write the full transcript here");
  learn->add_option("--transcript-format", transcript_format, "csv | text")
      ->check(CLI::IsMember({"csv", "text"}));

  std::string sizes_text;
  int trials = 1;
  unsigned threads = 1;
  bool timing = false;
  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "run an experiment grid and write CSV");
  sweep->add_option("--config", config_path, "key=value config file; flags override it");
  sweep->add_option("--family", family_text, "instance family");
  sweep->add_option("--learner", learner_text, "learner name");
  sweep->add_option("--sizes", sizes_text, "comma list, ranges as lo..hi");
  sweep->add_option("--trials", trials, "trials per size")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "base seed");
  sweep->add_option("--cost-model", cost_text, "UNIT | SAMPLING | GROVER");
  sweep->add_option("--out", out_path, "CSV output (default stdout)");
  sweep->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--timing", timing, "record wall_micros (output no longer reproducible)");

  std::string in_path;
  std::string model_text = "NLOG2N";
  std::string metric_text = "queries";
  auto* fit = app.add_subcommand("fit", "fit growth of mean cost from a sweep CSV");
  fit->add_option("--in", in_path, "sweep CSV")->required();
  fit->add_option("--model", model_text, "POLY | NLOGN | NLOG2N");
  fit->add_option("--metric", metric_text, "queries | charge");
  fit->add_option("--out", out_path, "JSON output (default stdout)");

  int max_n = 4;
  auto* bounds = app.add_subcommand("bounds", "exhaustive lower-bound verification table");
  bounds->add_option("--max-n", max_n, "largest n to enumerate")->check(CLI::Range(2, 7));

  int polarity = 0;
  auto* certify = app.add_subcommand("certify", "half-graph certificate and uniqueness check");
  certify->add_option("--n", n, "matrix size")->check(CLI::Range(2, 6));
  certify->add_option("--polarity", polarity, "0 or 1")->check(CLI::Range(0, 1));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto inst = gen_instance(parse_family(family_text), n, seed);
      with_output(out_path, [&](std::ostream& out) { out << serialize(inst) << '\n'; });
      return 0;
    }
    if (*learn) {
      const LearnerKind learner = parse_learner(learner_text);
      if (learn->count("--family") && parse_family(family_text) != learner_family(learner)) {
        throw std::invalid_argument("learner does not learn that family");
      }
      CostModel cost = parse_cost_model(cost_text);
      if (learner == LearnerKind::Quicksort && !learn->count("--cost-model")) {
        cost = CostModel::Sampling;
      }
      const TranscriptMode mode =
          transcript_path.empty() ? TranscriptMode::TotalsOnly : TranscriptMode::Full;
      RunOutcome outcome = [&] {
        if (instance_path.empty()) return run_learner(learner, cost, n, seed, mode);
        std::ifstream in(instance_path);
        std::string line;
        if (!in || !std::getline(in, line)) {
          throw std::runtime_error("cannot read fixture '" + instance_path + "'");
        }
        return run_learner_on(learner, cost, parse_instance(line), seed, mode);
      }();
      if (!transcript_path.empty()) {
        with_output(transcript_path, [&](std::ostream& out) {
          if (transcript_format == "csv") {
            outcome.transcript.write_csv(out);
          } else {
            outcome.transcript.write_text(out);
          }
        });
      }
      std::cout << "learner " << to_string(learner) << '\n'
                << "cost_model " << to_string(cost) << '\n'
                << "hidden " << serialize(outcome.hidden) << '\n'
                << "learned " << serialize(outcome.learned) << '\n'
                << "total_queries " << outcome.transcript.total_queries() << '\n'
                << "total_charge " << outcome.transcript.total_charge() << '\n'
                << "correct " << (outcome.correct ? 1 : 0) << '\n';
      return outcome.correct ? 0 : 1;
    }
    if (*sweep) {
      ExperimentConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot read config '" + config_path + "'");
        cfg = parse_config(in);
      }
      if (sweep->count("--family")) cfg.family = parse_family(family_text);
      if (sweep->count("--learner")) cfg.learner = parse_learner(learner_text);
      if (sweep->count("--sizes")) cfg.sizes = parse_sizes(sizes_text);
      if (sweep->count("--trials")) cfg.trials = trials;
      if (sweep->count("--seed")) cfg.base_seed = seed;
      if (sweep->count("--cost-model")) cfg.cost_model = parse_cost_model(cost_text);
      if (sweep->count("--out")) cfg.output_path = out_path;
      if (sweep->count("--threads")) cfg.threads = threads;
      if (timing) cfg.record_wall_time = true;
      const auto records = run_experiment(cfg);
      with_output(cfg.output_path, [&](std::ostream& out) { write_csv(out, records); });
      std::size_t wrong = 0;
      for (const auto& r : records) wrong += !r.correct;
      if (wrong) {
        std::cerr << "sweep: " << wrong << " incorrect run(s)\n";
        return 1;
      }
      return 0;
    }
    if (*fit) {
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("cannot read '" + in_path + "'");
      const auto records = read_csv(in);
      const FitResult result =
          fit_growth(records, parse_growth_model(model_text), parse_cost_metric(metric_text));
      with_output(out_path, [&](std::ostream& out) { out << to_json(result) << '\n'; });
      return 0;
    }
    if (*bounds) return run_bounds(max_n);
    if (*certify) return run_certify(n, polarity);
  } catch (const std::exception& e) {
    std::cerr << "edgelab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
