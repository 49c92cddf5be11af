#pragma once

// Reconstruction algorithms. Each learner talks to the hidden instance only
// through an Oracle and returns the instance it deduced. All of them are
// Las Vegas: randomness changes the cost, never the answer.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "edgelab/instances.hpp"
#include "edgelab/oracles.hpp"
#include "edgelab/rng.hpp"

namespace edgelab {

/// Raised when oracle answers contradict the family the learner assumes.
class InconsistentOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Greedy neighbor search: row i probes all but one of the still-unmatched
/// columns and deduces the last by elimination. At most n(n-1)/2 queries.
Matching learn_matching_greedy(Oracle& oracle);

/// Row-major scan until each row's 1 is found. Baseline only.
Matching learn_matching_full(Oracle& oracle);

/// Binary search for the top-most 1 of every column. At most
/// n * (ceil(log2 n) + 1) queries.
ColumnPermutedHalfGraph learn_column_permuted(Oracle& oracle);

/// How a threshold-list sorter reaches the oracle.
enum class ThresholdChannel { Threshold, TranslatedEdge };

/// Binary search for every X[j] phrased as "Is X[j] >= t?". With
/// TranslatedEdge each question becomes an edge query at (n - t + 1, j).
Permutation sort_threshold_list(Oracle& oracle, ThresholdChannel channel);

/// How half-graph learners read single cells.
enum class CellChannel { Edge, Comparison };

struct RowComparison {
  Ordering order;
  /// Column where the two rows differ; empty for charged comparisons.
  std::optional<int> witness;
};

/// Compares `row` against `other` on `cols`: Less means `row` <= `other`
/// entrywise. Rows must be comparable and unequal on `cols`.
using RowComparator =
    std::function<RowComparison(int row, int other, std::span<const int> cols)>;

/// Sampling comparison: draw a uniform column from `cols`, read both rows
/// there (2 queries), repeat until they differ. Throws after 64 * |cols|
/// draws, which only happens if the rows are equal on `cols`.
RowComparison compare_rows_sampling(Oracle& oracle, int row1, int row2,
                                    std::span<const int> cols, Rng& rng,
                                    CellChannel channel = CellChannel::Edge);

struct SubProblem {
  std::vector<int> rows;
  std::vector<int> cols;
};

/// Row indices in ascending order of row value.
using RowOrder = std::vector<int>;

/// Observer for one pivot step; used by tests to check partition invariants.
using PartitionObserver =
    std::function<void(const SubProblem& parent, int pivot,
                       const SubProblem& less, const SubProblem& greater)>;

struct QuicksortStats {
  std::uint64_t comparisons = 0;
  std::uint64_t pivot_reads = 0;
  int max_depth = 0;
};

/// Randomized quicksort over rows: read a uniform pivot's restricted row,
/// compare every other live row against it, keep the pivot's 1-columns for
/// the smaller side and its 0-columns for the larger side, recurse.
RowOrder quicksort_rows(Oracle& oracle, SubProblem sub, Rng& rng,
                        const RowComparator& compare,
                        CellChannel channel = CellChannel::Edge,
                        QuicksortStats* stats = nullptr,
                        const PartitionObserver& observer = {});

/// Column values B given the true ascending row order, by one binary search
/// per column along the order.
Permutation locate_columns(Oracle& oracle, std::span<const int> row_order,
                           CellChannel channel = CellChannel::Edge);

/// Row sort with the comparator picked by `cost_model` (UNIT/SAMPLING:
/// sampling, GROVER: charged), then column location.
HalfGraph learn_half_graph(Oracle& oracle, Rng& rng, CostModel cost_model,
                           CellChannel channel = CellChannel::Edge,
                           QuicksortStats* stats = nullptr);

}  // namespace edgelab
