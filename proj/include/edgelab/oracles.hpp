#pragma once

// Query oracles. Every access a learner makes to a hidden instance goes
// through an Oracle, which answers, counts, and charges it.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "edgelab/bipartite.hpp"
#include "edgelab/instances.hpp"

namespace edgelab {

/// UNIT and SAMPLING charge 1 per edge-equivalent query. GROVER additionally
/// enables charged_row_compare, which charges ceil(sqrt(m / d)).
enum class CostModel { Unit, Sampling, Grover };

std::string_view to_string(CostModel model);
CostModel parse_cost_model(std::string_view text);

/// Smallest c >= 1 with c^2 * d >= m, i.e. ceil(sqrt(m / d)) in exact
/// integer arithmetic. Requires 1 <= d <= m.
std::uint64_t grover_charge(std::uint64_t width, std::uint64_t distance);

enum class QueryKind { Edge, Threshold, Comparison, ChargedCompare };

std::string_view to_string(QueryKind kind);

enum class Ordering { Less, Greater };

/// Arguments by kind: EDGE (row, col); THRESHOLD (col, t); COMPARISON
/// (R-index, B-index); CHARGED_COMPARE (row1, row2) with `width` = |colSet|
/// and answer 0 = LESS, 1 = GREATER.
struct QueryRecord {
  QueryKind kind;
  int a;
  int b;
  int answer;
  std::uint64_t charge;
  int width = 0;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

enum class TranscriptMode { Full, TotalsOnly };

/// Append-only. In TotalsOnly mode the per-query records are dropped but the
/// totals are still maintained.
class QueryTranscript {
 public:
  explicit QueryTranscript(TranscriptMode mode = TranscriptMode::Full)
      : mode_(mode) {}

  void append(const QueryRecord& record);

  /// Edge-equivalent probes: EDGE, THRESHOLD and COMPARISON records.
  std::uint64_t total_queries() const { return total_queries_; }
  std::uint64_t total_charge() const { return total_charge_; }
  std::uint64_t record_count() const { return record_count_; }
  TranscriptMode mode() const { return mode_; }
  std::span<const QueryRecord> records() const { return records_; }

  /// `kind,a,b,answer,charge,width` with a header row.
  void write_csv(std::ostream& out) const;
  void write_text(std::ostream& out) const;

 private:
  TranscriptMode mode_;
  std::vector<QueryRecord> records_;
  std::uint64_t total_queries_ = 0;
  std::uint64_t total_charge_ = 0;
  std::uint64_t record_count_ = 0;
};

/// Base oracle. Not thread-safe; one oracle per running learner.
class Oracle {
 public:
  virtual ~Oracle() = default;
  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  int n() const { return n_; }
  CostModel cost_model() const { return cost_model_; }
  const QueryTranscript& transcript() const { return transcript_; }

  /// One edge query, charge 1. Repeats are answered and counted again.
  bool edge_query(int row, int col);

  /// |cols| edge queries on one row, answers written to `answers`.
  void query_row(int row, std::span<const int> cols,
                 std::span<std::uint8_t> answers);

  /// "Is X[col] >= threshold?" on a column-permuted half graph, realized as
  /// one edge query at (n - threshold + 1, col).
  bool threshold_query(int col, int threshold);

  /// "Is R[i] >= B[j]?" on a half graph, realized as one edge query at (i, j).
  bool comparison_query(int r_index, int b_index);

  /// Ordering of two rows restricted to `cols`, charged under GROVER as
  /// ceil(sqrt(|cols| / d)) with d the restricted Hamming distance. Requires
  /// the GROVER cost model and rows that differ on `cols`.
  Ordering charged_row_compare(int row1, int row2, std::span<const int> cols);

 protected:
  Oracle(int n, CostModel cost_model, TranscriptMode mode);

  virtual bool answer(int row, int col) = 0;
  virtual void answer_row(int row, std::span<const int> cols,
                          std::span<std::uint8_t> out);
  virtual std::optional<Family> family() const = 0;
  /// Ground-truth (ordering, restricted distance).
  virtual std::pair<Ordering, std::uint64_t> ground_truth_compare(
      int row1, int row2, std::span<const int> cols);

  void check_cell(int row, int col) const;

 private:
  int n_;
  CostModel cost_model_;
  QueryTranscript transcript_;
};

/// Counting oracle over a concrete hidden instance.
class InstanceOracle final : public Oracle {
 public:
  explicit InstanceOracle(HiddenInstance instance,
                          CostModel cost_model = CostModel::Unit,
                          TranscriptMode mode = TranscriptMode::Full);

  const HiddenInstance& instance() const { return instance_; }

 protected:
  bool answer(int row, int col) override;
  void answer_row(int row, std::span<const int> cols,
                  std::span<std::uint8_t> out) override;
  std::optional<Family> family() const override { return family_of(instance_); }
  std::pair<Ordering, std::uint64_t> ground_truth_compare(
      int row1, int row2, std::span<const int> cols) override;

 private:
  HiddenInstance instance_;
  std::vector<std::int32_t> scratch_;
};

/// Adversary for the matching family: answers 0 whenever some perfect
/// matching avoids the queried cell, otherwise 1. The set of still-possible
/// edges always contains a perfect matching, and every 1-answer is forced.
class LazyAdversaryOracle final : public Oracle {
 public:
  explicit LazyAdversaryOracle(int n, TranscriptMode mode = TranscriptMode::Full);

  /// A matching consistent with every answer given so far.
  Matching final_instance() const;

  /// Still-possible edges, 0-based.
  const BitMatrix& allowed() const { return allowed_; }

  /// Answer previously given at (row, col), 1-based; nullopt if never asked.
  std::optional<bool> answered(int row, int col) const;

 protected:
  bool answer(int row, int col) override;
  std::optional<Family> family() const override { return Family::Matching; }

 private:
  BitMatrix allowed_;
  std::vector<std::int8_t> answers_;
  std::vector<int> row_match_;
  std::vector<int> col_match_;
};

}  // namespace edgelab
