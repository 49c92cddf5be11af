#pragma once

// Exhaustive checks of query lower bounds at brute-force sizes: exact
// decision-tree depth, counting bound, classical and quantum adversary
// quantities, and small certificates for half graphs.

#include <boost/rational.hpp>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgelab/instances.hpp"

namespace edgelab {

/// Largest n the exhaustive searches accept, per family.
struct EnumerationCaps {
  int matching = 5;
  int col_permuted = 5;
  int half_graph = 3;
};

/// Thrown when a request exceeds the enumeration caps.
class EnumerationTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of members of the family at size n (n! or (n!)^2).
std::uint64_t family_size(Family family, int n);

/// Exact deterministic query complexity of learning a member of the family:
/// the minimax value of the query game over consistent sets.
int exact_det_depth(Family family, int n, const EnumerationCaps& caps = {});

/// ceil(log2 family_size): binary-answer counting bound.
std::uint64_t info_lower_bound(std::uint64_t family_size);

/// ceil(log2 n!) for sizes where n! overflows 64 bits.
std::uint64_t ceil_log2_factorial(int n);

using Rational = boost::rational<std::int64_t>;

struct CraResult {
  Rational value;
  /// (numerator, denominator) of the theta attaining the max in every
  /// minimized triple, as raw neighbor counts.
  std::set<std::pair<std::int64_t, std::int64_t>> extremal_thetas;
};

/// Classical relational adversary value for matchings under the
/// single-column-swap relation, by enumeration. n <= 6.
CraResult cra_value_matching(int n);

struct QuantumAdversaryParams {
  int m = 0;
  int m_prime = 0;
  int l = 0;
  int l_prime = 0;

  double value() const;
  friend bool operator==(const QuantumAdversaryParams&,
                         const QuantumAdversaryParams&) = default;
};

/// Extremal degrees of the adjacent-weight column-swap relation on
/// column-permuted half graphs, by enumeration. n <= 7.
QuantumAdversaryParams quantum_adversary_params_colperm(int n);

struct Certificate {
  int n = 0;
  /// 1-based (row, col) cells.
  std::vector<std::pair<int, int>> cells;
  int polarity = 0;
};

/// {(i, j) : j in {i+1, i+2}, j <= n}, all 0 in the lower-triangular matrix.
Certificate zero_certificate(int n);

/// {(i, j) : i in {j, j+1}, i <= n}, all 1. The plain 180-degree rotation of
/// the zero pattern leaves several half graphs consistent; under R[i] >= B[j]
/// the diagonal is 1, so the mirror sits one diagonal lower.
Certificate one_certificate(int n);

/// Members of the half-graph family with the certificate's polarity at every
/// certificate cell. n <= 6.
std::uint64_t count_consistent_half_graphs(const Certificate& cert);

/// True iff exactly one half graph is consistent with the certificate.
bool verify_unique(const Certificate& cert);

/// Grid with the polarity digit at certificate cells and '.' elsewhere.
std::string render_certificate(const Certificate& cert);

}  // namespace edgelab
