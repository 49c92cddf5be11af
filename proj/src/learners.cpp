#include "edgelab/learners.hpp"

#include <string>
#include <utility>

namespace edgelab {
namespace {

bool read_cell(Oracle& oracle, int row, int col, CellChannel channel) {
  return channel == CellChannel::Comparison ? oracle.comparison_query(row, col)
                                            : oracle.edge_query(row, col);
}

Permutation require_learned_permutation(Permutation values, const char* what) {
  if (!is_permutation(values)) {
    throw InconsistentOracle(std::string(what) +
                             ": answers do not describe a member of the family");
  }
  return values;
}

class RowSorter {
 public:
  RowSorter(Oracle& oracle, Rng& rng, const RowComparator& compare,
            CellChannel channel, QuicksortStats* stats,
            const PartitionObserver& observer)
      : oracle_(oracle),
        rng_(rng),
        compare_(compare),
        channel_(channel),
        stats_(stats),
        observer_(observer),
        pivot_bit_(static_cast<std::size_t>(oracle.n()) + 1, -1) {}

  void sort(SubProblem sub, int depth, RowOrder& out) {
    if (stats_ && depth > stats_->max_depth) stats_->max_depth = depth;
    if (sub.rows.size() <= 1) {
      out.insert(out.end(), sub.rows.begin(), sub.rows.end());
      return;
    }
    const int pivot = sub.rows[rng_.below(sub.rows.size())];
    read_pivot(pivot, sub.cols);

    SubProblem less;
    SubProblem greater;
    for (const int c : sub.cols) {
      (pivot_bit_[c] == 1 ? less.cols : greater.cols).push_back(c);
    }
    for (const int row : sub.rows) {
      if (row == pivot) continue;
      const RowComparison result = compare_(row, pivot, sub.cols);
      if (stats_) ++stats_->comparisons;
      if (result.witness) {
        // A smaller row differs from the pivot only where the pivot has a 1.
        const int expected = result.order == Ordering::Less ? 1 : 0;
        if (pivot_bit_[*result.witness] != expected) {
          throw InconsistentOracle("quicksort_rows: row " + std::to_string(row) +
                                   " contradicts pivot " + std::to_string(pivot) +
                                   " at column " + std::to_string(*result.witness));
        }
      }
      (result.order == Ordering::Less ? less.rows : greater.rows).push_back(row);
    }
    for (const int c : sub.cols) pivot_bit_[c] = -1;

    if (observer_) observer_(sub, pivot, less, greater);
    sub = {};
    sort(std::move(less), depth + 1, out);
    out.push_back(pivot);
    sort(std::move(greater), depth + 1, out);
  }

 private:
  void read_pivot(int pivot, const std::vector<int>& cols) {
    answers_.resize(cols.size());
    if (channel_ == CellChannel::Edge) {
      oracle_.query_row(pivot, cols, answers_);
    } else {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        answers_[k] = oracle_.comparison_query(pivot, cols[k]) ? 1 : 0;
      }
    }
    for (std::size_t k = 0; k < cols.size(); ++k) pivot_bit_[cols[k]] = answers_[k];
    if (stats_) stats_->pivot_reads += cols.size();
  }

  Oracle& oracle_;
  Rng& rng_;
  const RowComparator& compare_;
  CellChannel channel_;
  QuicksortStats* stats_;
  const PartitionObserver& observer_;
  std::vector<std::int8_t> pivot_bit_;
  std::vector<std::uint8_t> answers_;
};

}  // namespace

Matching learn_matching_greedy(Oracle& oracle) {
  const int n = oracle.n();
  std::vector<int> unmatched = identity_permutation(n);
  Permutation perm(static_cast<std::size_t>(n));
  for (int row = 1; row <= n; ++row) {
    std::size_t pick = unmatched.size() - 1;
    for (std::size_t k = 0; k + 1 < unmatched.size(); ++k) {
      if (oracle.edge_query(row, unmatched[k])) {
        pick = k;
        break;
      }
    }
    perm[row - 1] = unmatched[pick];
    unmatched.erase(unmatched.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Matching(std::move(perm));
}

Matching learn_matching_full(Oracle& oracle) {
  const int n = oracle.n();
  Permutation perm(static_cast<std::size_t>(n), 0);
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col) {
      if (oracle.edge_query(row, col)) {
        perm[row - 1] = col;
        break;
      }
    }
    if (perm[row - 1] == 0) {
      throw InconsistentOracle("learn_matching_full: row " + std::to_string(row) +
                               " has no neighbor");
    }
  }
  return Matching(require_learned_permutation(std::move(perm), "learn_matching_full"));
}

ColumnPermutedHalfGraph learn_column_permuted(Oracle& oracle) {
  const int n = oracle.n();
  Permutation weights(static_cast<std::size_t>(n));
  for (int col = 1; col <= n; ++col) {
    // lo: last row known 0 (0 = above the matrix); hi: first row known 1.
    // Row n is always 1 since every weight is at least 1.
    int lo = 0;
    int hi = n;
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      if (oracle.edge_query(mid, col)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    weights[col - 1] = n - hi + 1;
  }
  return ColumnPermutedHalfGraph(
      require_learned_permutation(std::move(weights), "learn_column_permuted"));
}

Permutation sort_threshold_list(Oracle& oracle, ThresholdChannel channel) {
  const int n = oracle.n();
  Permutation thresholds(static_cast<std::size_t>(n));
  for (int col = 1; col <= n; ++col) {
    // X[col] >= lo is known true, X[col] >= hi known false.
    int lo = 1;
    int hi = n + 1;
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      const bool at_least =
          channel == ThresholdChannel::Threshold
              ? oracle.threshold_query(col, mid)
              : oracle.edge_query(threshold_row(n, mid), col);
      if (at_least) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    thresholds[col - 1] = lo;
  }
  return require_learned_permutation(std::move(thresholds), "sort_threshold_list");
}

RowComparison compare_rows_sampling(Oracle& oracle, int row1, int row2,
                                    std::span<const int> cols, Rng& rng,
                                    CellChannel channel) {
  if (cols.empty()) throw std::invalid_argument("compare_rows_sampling: empty column set");
  const std::uint64_t cap = 64 * static_cast<std::uint64_t>(cols.size());
  for (std::uint64_t draw = 0; draw < cap; ++draw) {
    const int col = cols[rng.below(cols.size())];
    const bool a = read_cell(oracle, row1, col, channel);
    const bool b = read_cell(oracle, row2, col, channel);
    if (a != b) return {a ? Ordering::Greater : Ordering::Less, col};
  }
  throw InconsistentOracle("compare_rows_sampling: rows " + std::to_string(row1) +
                           " and " + std::to_string(row2) + " showed no difference in " +
                           std::to_string(cap) + " draws");
}

RowOrder quicksort_rows(Oracle& oracle, SubProblem sub, Rng& rng,
                        const RowComparator& compare, CellChannel channel,
                        QuicksortStats* stats, const PartitionObserver& observer) {
  RowOrder order;
  order.reserve(sub.rows.size());
  RowSorter(oracle, rng, compare, channel, stats, observer)
      .sort(std::move(sub), 0, order);
  return order;
}

Permutation locate_columns(Oracle& oracle, std::span<const int> row_order,
                           CellChannel channel) {
  const int n = oracle.n();
  if (static_cast<int>(row_order.size()) != n) {
    throw std::invalid_argument("locate_columns: row order must cover all rows");
  }
  Permutation values(static_cast<std::size_t>(n));
  for (int col = 1; col <= n; ++col) {
    // Positions along the order are 1-based. Position n holds the largest
    // row, which dominates every column.
    int lo = 0;
    int hi = n;
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      if (read_cell(oracle, row_order[mid - 1], col, channel)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    values[col - 1] = hi;
  }
  return require_learned_permutation(std::move(values), "locate_columns");
}

HalfGraph learn_half_graph(Oracle& oracle, Rng& rng, CostModel cost_model,
                           CellChannel channel, QuicksortStats* stats) {
  const int n = oracle.n();
  SubProblem root{identity_permutation(n), identity_permutation(n)};
  RowComparator compare;
  if (cost_model == CostModel::Grover) {
    compare = [&oracle](int row, int other, std::span<const int> cols) {
      return RowComparison{oracle.charged_row_compare(row, other, cols), std::nullopt};
    };
  } else {
    compare = [&oracle, &rng, channel](int row, int other, std::span<const int> cols) {
      return compare_rows_sampling(oracle, row, other, cols, rng, channel);
    };
  }
  const RowOrder order = quicksort_rows(oracle, std::move(root), rng, compare,
                                        channel, stats);
  Permutation row_values(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos) row_values[order[pos - 1] - 1] = pos;
  Permutation col_values = locate_columns(oracle, order, channel);
  return HalfGraph(std::move(row_values), std::move(col_values));
}

}  // namespace edgelab
