#include "edgelab/bounds_lab.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace edgelab {
namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : static_cast<int>(std::bit_width(x - 1));
}

void require_cap(int n, int cap, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (n > cap) {
    throw EnumerationTooLarge(std::string(what) + ": n=" + std::to_string(n) +
                              " exceeds the enumeration cap " + std::to_string(cap));
  }
}

/// Cell (row, col), 1-based, to bit position in a row-major cell mask.
int cell_bit(int n, int row, int col) { return (row - 1) * n + (col - 1); }

std::uint64_t cell_mask(const HiddenInstance& inst) {
  const int n = size_of(inst);
  std::uint64_t mask = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (entry(inst, i, j)) mask |= std::uint64_t{1} << cell_bit(n, i, j);
    }
  }
  return mask;
}

std::vector<std::uint64_t> family_masks(Family family, int n) {
  std::vector<std::uint64_t> masks;
  const auto perms = all_permutations(n);
  switch (family) {
    case Family::Matching:
      for (const auto& p : perms) masks.push_back(cell_mask(Matching(p)));
      break;
    case Family::ColPermuted:
      for (const auto& p : perms) masks.push_back(cell_mask(ColumnPermutedHalfGraph(p)));
      break;
    case Family::HalfGraph:
      for (const auto& r : perms) {
        for (const auto& b : perms) masks.push_back(cell_mask(HalfGraph(r, b)));
      }
      break;
  }
  return masks;
}

// Consistent sets are bitsets over family members.
using MemberSet = std::vector<std::uint64_t>;

struct MemberSetHash {
  std::size_t operator()(const MemberSet& s) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (const auto w : s) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t popcount(const MemberSet& s) {
  std::uint64_t c = 0;
  for (const auto w : s) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

class DepthSearch {
 public:
  DepthSearch(Family family, int n) : n_(n) {
    const auto masks = family_masks(family, n);
    words_ = (masks.size() + 63) / 64;
    const int cells = n * n;
    ones_.assign(static_cast<std::size_t>(cells), MemberSet(words_, 0));
    full_.assign(words_, 0);
    for (std::size_t m = 0; m < masks.size(); ++m) {
      full_[m / 64] |= std::uint64_t{1} << (m % 64);
      for (int c = 0; c < cells; ++c) {
        if ((masks[m] >> c) & 1U) ones_[c][m / 64] |= std::uint64_t{1} << (m % 64);
      }
    }
    for (int c = 0; c < cells; ++c) all_cells_.push_back(c);
    // Relabeling symmetries make many first queries equivalent: every cell
    // for matchings and half graphs, every cell of a row for column-permuted.
    if (family == Family::ColPermuted) {
      for (int row = 1; row <= n; ++row) root_cells_.push_back(cell_bit(n, row, 1));
    } else {
      root_cells_.push_back(cell_bit(n, 1, 1));
    }
  }

  int run() { return solve(full_, true); }

 private:
  int solve(const MemberSet& set, bool root) {
    const std::uint64_t count = popcount(set);
    if (count <= 1) return 0;
    if (const auto it = memo_.find(set); it != memo_.end()) return it->second;

    struct Split {
      int cell;
      std::uint64_t larger;
    };
    std::vector<Split> splits;
    for (const int c : root ? root_cells_ : all_cells_) {
      std::uint64_t with_one = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        with_one += static_cast<std::uint64_t>(std::popcount(set[w] & ones_[c][w]));
      }
      if (with_one == 0 || with_one == count) continue;
      splits.push_back({c, std::max(with_one, count - with_one)});
    }
    std::sort(splits.begin(), splits.end(),
              [](const Split& a, const Split& b) { return a.larger < b.larger; });

    const int lower = ceil_log2(count);
    int best = INT_MAX;
    MemberSet one(words_);
    MemberSet zero(words_);
    for (const Split& s : splits) {
      if (1 + ceil_log2(s.larger) >= best) break;
      for (std::size_t w = 0; w < words_; ++w) {
        one[w] = set[w] & ones_[s.cell][w];
        zero[w] = set[w] & ~ones_[s.cell][w];
      }
      const bool one_larger = popcount(one) >= popcount(zero);
      const int first = solve(one_larger ? one : zero, false);
      if (1 + first >= best) continue;
      const int second = solve(one_larger ? zero : one, false);
      best = std::min(best, 1 + std::max(first, second));
      if (best == lower) break;
    }
    memo_.emplace(set, best);
    return best;
  }

  int n_;
  std::size_t words_ = 0;
  std::vector<MemberSet> ones_;
  MemberSet full_;
  std::vector<int> all_cells_;
  std::vector<int> root_cells_;
  std::unordered_map<MemberSet, int, MemberSetHash> memo_;
};

std::vector<std::uint8_t> dense(const HiddenInstance& inst) { return materialize(inst); }

}  // namespace

std::uint64_t family_size(Family family, int n) {
  if (n < 1) throw std::invalid_argument("family_size: n must be >= 1");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
      throw std::overflow_error("family_size: n! overflows 64 bits");
    }
    f *= static_cast<std::uint64_t>(k);
  }
  if (family != Family::HalfGraph) return f;
  if (f > std::numeric_limits<std::uint64_t>::max() / f) {
    throw std::overflow_error("family_size: (n!)^2 overflows 64 bits");
  }
  return f * f;
}

int exact_det_depth(Family family, int n, const EnumerationCaps& caps) {
  const int cap = family == Family::Matching      ? caps.matching
                  : family == Family::ColPermuted ? caps.col_permuted
                                                  : caps.half_graph;
  require_cap(n, std::min(cap, 8), "exact_det_depth");
  return DepthSearch(family, n).run();
}

std::uint64_t info_lower_bound(std::uint64_t family_size) {
  if (family_size == 0) throw std::invalid_argument("info_lower_bound: empty family");
  return static_cast<std::uint64_t>(ceil_log2(family_size));
}

std::uint64_t ceil_log2_factorial(int n) {
  if (n < 1) throw std::invalid_argument("ceil_log2_factorial: n must be >= 1");
  if (n <= 20) return info_lower_bound(family_size(Family::Matching, n));
  // For n >= 3, n! is not a power of two, so log2(n!) is never an integer and
  // the long-double sum is far from any integer boundary.
  long double bits = 0.0L;
  for (int k = 2; k <= n; ++k) bits += std::log2(static_cast<long double>(k));
  return static_cast<std::uint64_t>(std::ceil(bits));
}

CraResult cra_value_matching(int n) {
  require_cap(n, 6, "cra_value_matching");
  if (n < 2) throw std::invalid_argument("cra_value_matching: needs n >= 2");
  const auto perms = all_permutations(n);
  const std::size_t count = perms.size();
  const int cells = n * n;
  std::vector<std::vector<std::uint8_t>> mats;
  mats.reserve(count);
  for (const auto& p : perms) mats.push_back(dense(Matching(p)));

  // Related iff the two matrices differ in exactly two columns and those
  // columns are exchanged.
  const auto one_column_swap = [&](const std::vector<std::uint8_t>& x,
                                   const std::vector<std::uint8_t>& y) {
    std::vector<int> differing;
    for (int col = 0; col < n; ++col) {
      for (int row = 0; row < n; ++row) {
        if (x[row * n + col] != y[row * n + col]) {
          differing.push_back(col);
          break;
        }
      }
      if (differing.size() > 2) return false;
    }
    if (differing.size() != 2) return false;
    const int a = differing[0];
    const int b = differing[1];
    for (int row = 0; row < n; ++row) {
      if (x[row * n + a] != y[row * n + b] || x[row * n + b] != y[row * n + a]) {
        return false;
      }
    }
    return true;
  };

  std::vector<std::vector<std::size_t>> neighbors(count);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      if (x != y && one_column_swap(mats[x], mats[y])) neighbors[x].push_back(y);
    }
  }
  // differing[x][c]: neighbors of x that disagree with x at cell c.
  std::vector<std::vector<std::int64_t>> differing(
      count, std::vector<std::int64_t>(static_cast<std::size_t>(cells), 0));
  for (std::size_t x = 0; x < count; ++x) {
    for (const std::size_t y : neighbors[x]) {
      for (int c = 0; c < cells; ++c) differing[x][c] += mats[x][c] != mats[y][c];
    }
  }

  CraResult result;
  bool any = false;
  for (std::size_t x = 0; x < count; ++x) {
    const auto deg_x = static_cast<std::int64_t>(neighbors[x].size());
    for (const std::size_t y : neighbors[x]) {
      const auto deg_y = static_cast<std::int64_t>(neighbors[y].size());
      for (int c = 0; c < cells; ++c) {
        if (mats[x][c] == mats[y][c]) continue;
        const Rational theta_x(deg_x, differing[x][c]);
        const Rational theta_y(deg_y, differing[y][c]);
        const bool x_side = theta_x >= theta_y;
        const Rational larger = x_side ? theta_x : theta_y;
        result.extremal_thetas.insert(x_side ? std::pair{deg_x, differing[x][c]}
                                             : std::pair{deg_y, differing[y][c]});
        if (!any || larger < result.value) result.value = larger;
        any = true;
      }
    }
  }
  return result;
}

double QuantumAdversaryParams::value() const {
  return std::sqrt(static_cast<double>(m) * m_prime / (static_cast<double>(l) * l_prime));
}

QuantumAdversaryParams quantum_adversary_params_colperm(int n) {
  require_cap(n, 7, "quantum_adversary_params_colperm");
  if (n < 2) throw std::invalid_argument("quantum_adversary_params_colperm: needs n >= 2");
  const auto lists = all_permutations(n);
  const std::size_t count = lists.size();
  const int cells = n * n;

  // y is x with the columns of weight j and j+1 interchanged.
  const auto related = [&](const Permutation& x, const Permutation& y) {
    int first = -1;
    int second = -1;
    for (int k = 0; k < n; ++k) {
      if (x[k] == y[k]) continue;
      if (first < 0) {
        first = k;
      } else if (second < 0) {
        second = k;
      } else {
        return false;
      }
    }
    if (second < 0) return false;
    return x[first] == y[second] && x[second] == y[first] &&
           std::abs(x[first] - x[second]) == 1;
  };

  std::vector<std::vector<std::uint8_t>> mats;
  mats.reserve(count);
  for (const auto& x : lists) mats.push_back(dense(ColumnPermutedHalfGraph(x)));

  std::vector<int> out_degree(count, 0);
  std::vector<int> in_degree(count, 0);
  std::vector<std::vector<int>> out_by_cell(count, std::vector<int>(cells, 0));
  std::vector<std::vector<int>> in_by_cell(count, std::vector<int>(cells, 0));
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      if (x == y || !related(lists[x], lists[y])) continue;
      ++out_degree[x];
      ++in_degree[y];
      for (int c = 0; c < cells; ++c) {
        if (mats[x][c] != mats[y][c]) {
          ++out_by_cell[x][c];
          ++in_by_cell[y][c];
        }
      }
    }
  }
  QuantumAdversaryParams p;
  p.m = *std::min_element(out_degree.begin(), out_degree.end());
  p.m_prime = *std::min_element(in_degree.begin(), in_degree.end());
  for (std::size_t x = 0; x < count; ++x) {
    p.l = std::max(p.l, *std::max_element(out_by_cell[x].begin(), out_by_cell[x].end()));
    p.l_prime =
        std::max(p.l_prime, *std::max_element(in_by_cell[x].begin(), in_by_cell[x].end()));
  }
  return p;
}

Certificate zero_certificate(int n) {
  if (n < 2) throw std::invalid_argument("zero_certificate: needs n >= 2");
  Certificate cert{n, {}, 0};
  for (int i = 1; i <= n; ++i) {
    for (const int j : {i + 1, i + 2}) {
      if (j <= n) cert.cells.emplace_back(i, j);
    }
  }
  return cert;
}

Certificate one_certificate(int n) {
  if (n < 2) throw std::invalid_argument("one_certificate: needs n >= 2");
  Certificate cert{n, {}, 1};
  for (int j = 1; j <= n; ++j) {
    for (const int i : {j, j + 1}) {
      if (i <= n) cert.cells.emplace_back(i, j);
    }
  }
  std::sort(cert.cells.begin(), cert.cells.end());
  return cert;
}

std::uint64_t count_consistent_half_graphs(const Certificate& cert) {
  require_cap(cert.n, 6, "count_consistent_half_graphs");
  for (const auto& [row, col] : cert.cells) {
    if (row < 1 || row > cert.n || col < 1 || col > cert.n) {
      throw std::out_of_range("certificate cell outside the matrix");
    }
  }
  const auto perms = all_permutations(cert.n);
  const bool want = cert.polarity != 0;
  std::uint64_t consistent = 0;
  for (const auto& r : perms) {
    for (const auto& b : perms) {
      bool ok = true;
      for (const auto& [row, col] : cert.cells) {
        if ((r[row - 1] >= b[col - 1]) != want) {
          ok = false;
          break;
        }
      }
      consistent += ok;
    }
  }
  return consistent;
}

bool verify_unique(const Certificate& cert) {
  return count_consistent_half_graphs(cert) == 1;
}

std::string render_certificate(const Certificate& cert) {
  std::vector<char> grid(static_cast<std::size_t>(cert.n) * cert.n, '.');
  for (const auto& [row, col] : cert.cells) {
    grid[static_cast<std::size_t>(row - 1) * cert.n + (col - 1)] =
        static_cast<char>('0' + cert.polarity);
  }
  std::ostringstream out;
  for (int i = 0; i < cert.n; ++i) {
    for (int j = 0; j < cert.n; ++j) {
      if (j) out << ' ';
      out << grid[static_cast<std::size_t>(i) * cert.n + j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace edgelab
