#pragma once

// Small dense bipartite graphs and maximum matching, used by the lazy
// adversary for feasibility and by tests as an independent checker.

#include <cstdint>
#include <vector>

namespace edgelab {

/// n x n 0/1 matrix, 0-based indices.
class BitMatrix {
 public:
  explicit BitMatrix(int n, bool fill = false)
      : n_(n), bits_(static_cast<std::size_t>(n) * n, fill ? 1 : 0) {}

  int n() const { return n_; }
  bool get(int row, int col) const { return bits_[index(row, col)] != 0; }
  void set(int row, int col, bool value) { bits_[index(row, col)] = value; }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * n_ + col;
  }
  int n_;
  std::vector<std::uint8_t> bits_;
};

/// Hopcroft-Karp. Returns the partner column of every row, -1 if unmatched.
std::vector<int> maximum_matching(const BitMatrix& edges);

bool has_perfect_matching(const BitMatrix& edges);

/// Single-source augmenting-path search (Kuhn). `row_match` / `col_match`
/// describe the current matching; on success they are updated in place and
/// `row` becomes matched. On failure they are left untouched.
bool augment_from(const BitMatrix& edges, int row, std::vector<int>& row_match,
                  std::vector<int>& col_match);

}  // namespace edgelab
