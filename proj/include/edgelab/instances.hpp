#pragma once

// Hidden bipartite instances for the three families, stored in permutation
// form. Row and column indices are 1-based throughout the public API; row 1 is
// the top row of the adjacency matrix.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace edgelab {

enum class Family { Matching, ColPermuted, HalfGraph };

std::string_view to_string(Family family);
/// Accepts MATCHING, COL_PERMUTED, HALF_GRAPH (case-insensitive).
Family parse_family(std::string_view text);

/// A permutation of [n] stored as values 1..n; element k-1 holds the image of k.
using Permutation = std::vector<std::int32_t>;

bool is_permutation(std::span<const std::int32_t> values);
Permutation identity_permutation(int n);

/// Perfect matching: left vertex i is adjacent to right vertex perm[i].
class Matching {
 public:
  explicit Matching(Permutation perm);

  int n() const { return static_cast<int>(perm_.size()); }
  std::span<const std::int32_t> perm() const { return perm_; }
  std::int32_t partner(int row) const { return perm_[row - 1]; }
  bool entry(int row, int col) const { return perm_[row - 1] == col; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  Permutation perm_;
};

/// Lower-triangular matrix with columns permuted. Column j reads
/// 0^(n - X[j]) 1^(X[j]) from top to bottom, where X[j] is its weight.
class ColumnPermutedHalfGraph {
 public:
  explicit ColumnPermutedHalfGraph(Permutation col_weights);

  int n() const { return static_cast<int>(weights_.size()); }
  std::span<const std::int32_t> col_weights() const { return weights_; }
  std::int32_t weight(int col) const { return weights_[col - 1]; }
  bool entry(int row, int col) const {
    return weights_[col - 1] >= n() - row + 1;
  }

  friend bool operator==(const ColumnPermutedHalfGraph&,
                         const ColumnPermutedHalfGraph&) = default;

 private:
  Permutation weights_;
};

/// Lower-triangular matrix with rows and columns permuted: M(i,j) = 1 iff
/// R[i] >= B[j]. The same data is a nuts-and-bolts instance (R, B).
class HalfGraph {
 public:
  HalfGraph(Permutation row_values, Permutation col_values);

  int n() const { return static_cast<int>(rows_.size()); }
  std::span<const std::int32_t> row_values() const { return rows_; }
  std::span<const std::int32_t> col_values() const { return cols_; }
  std::int32_t row_value(int row) const { return rows_[row - 1]; }
  std::int32_t col_value(int col) const { return cols_[col - 1]; }
  bool entry(int row, int col) const { return rows_[row - 1] >= cols_[col - 1]; }

  friend bool operator==(const HalfGraph&, const HalfGraph&) = default;

 private:
  Permutation rows_;
  Permutation cols_;
};

using HiddenInstance = std::variant<Matching, ColumnPermutedHalfGraph, HalfGraph>;

Family family_of(const HiddenInstance& inst);
int size_of(const HiddenInstance& inst);

/// Ground-truth matrix entry. Pure; throws std::out_of_range on bad indices.
bool entry(const HiddenInstance& inst, int row, int col);

/// Uniform member of the family; reproducible for a fixed (family, n, seed).
HiddenInstance gen_instance(Family family, int n, std::uint64_t seed);

// Threshold-list view of a column-permuted half graph (same data).
Permutation threshold_list_view(const ColumnPermutedHalfGraph& inst);
ColumnPermutedHalfGraph matrix_from_threshold_list(Permutation thresholds);
/// Row of the cell that answers "X[col] >= threshold".
inline int threshold_row(int n, int threshold) { return n - threshold + 1; }

// Nuts-and-bolts view of a half graph (same data).
std::pair<Permutation, Permutation> bipartite_view(const HalfGraph& inst);
HalfGraph half_graph_from_lists(Permutation row_values, Permutation col_values);
/// Perfectly interleaved lists: R'[i] = 2 R[i] (even), B'[j] = 2 B[j] - 1 (odd).
std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>
interleaved_lists(const HalfGraph& inst);

/// Row-major dense 0/1 matrix. Only for small verification sizes.
std::vector<std::uint8_t> materialize(const HiddenInstance& inst);

/// `FAMILY n v1 ... vn [w1 ... wn]`, 1-indexed, space separated.
std::string serialize(const HiddenInstance& inst);
HiddenInstance parse_instance(std::string_view line);

}  // namespace edgelab
