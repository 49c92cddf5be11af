#include "edgelab/oracles.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>

#include "edgelab/kernels.hpp"

namespace edgelab {

std::string_view to_string(CostModel model) {
  switch (model) {
    case CostModel::Unit: return "UNIT";
    case CostModel::Sampling: return "SAMPLING";
    case CostModel::Grover: return "GROVER";
  }
  return "?";
}

CostModel parse_cost_model(std::string_view text) {
  std::string u(text);
  for (char& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "UNIT") return CostModel::Unit;
  if (u == "SAMPLING") return CostModel::Sampling;
  if (u == "GROVER") return CostModel::Grover;
  throw std::invalid_argument("unknown cost model '" + std::string(text) + "'");
}

std::uint64_t grover_charge(std::uint64_t width, std::uint64_t distance) {
  if (distance == 0 || distance > width) {
    throw std::invalid_argument("grover_charge: need 1 <= d <= m");
  }
  std::uint64_t c = 1;
  while (c * c * distance < width) ++c;
  return c;
}

std::string_view to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::Edge: return "EDGE";
    case QueryKind::Threshold: return "THRESHOLD";
    case QueryKind::Comparison: return "COMPARISON";
    case QueryKind::ChargedCompare: return "CHARGED_COMPARE";
  }
  return "?";
}

void QueryTranscript::append(const QueryRecord& record) {
  if (record.kind != QueryKind::ChargedCompare) ++total_queries_;
  total_charge_ += record.charge;
  ++record_count_;
  if (mode_ == TranscriptMode::Full) records_.push_back(record);
}

void QueryTranscript::write_csv(std::ostream& out) const {
  out << "kind,a,b,answer,charge,width\n";
  for (const auto& r : records_) {
    out << to_string(r.kind) << ',' << r.a << ',' << r.b << ',' << r.answer
        << ',' << r.charge << ',' << r.width << '\n';
  }
}

void QueryTranscript::write_text(std::ostream& out) const {
  std::uint64_t step = 0;
  for (const auto& r : records_) {
    out << ++step << ' ' << to_string(r.kind) << '(' << r.a << ',' << r.b;
    if (r.kind == QueryKind::ChargedCompare) {
      out << ";|cols|=" << r.width << ") -> " << (r.answer ? "GREATER" : "LESS");
    } else {
      out << ") -> " << r.answer;
    }
    out << " charge " << r.charge << '\n';
  }
  out << "total_queries " << total_queries_ << "\ntotal_charge " << total_charge_
      << '\n';
}

Oracle::Oracle(int n, CostModel cost_model, TranscriptMode mode)
    : n_(n), cost_model_(cost_model), transcript_(mode) {
  if (n < 1) throw std::invalid_argument("oracle: n must be >= 1");
}

void Oracle::check_cell(int row, int col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw std::out_of_range("query index (" + std::to_string(row) + "," +
                            std::to_string(col) + ") outside [1," +
                            std::to_string(n_) + "]");
  }
}

bool Oracle::edge_query(int row, int col) {
  check_cell(row, col);
  const bool bit = answer(row, col);
  transcript_.append({QueryKind::Edge, row, col, bit ? 1 : 0, 1});
  return bit;
}

void Oracle::query_row(int row, std::span<const int> cols,
                       std::span<std::uint8_t> answers) {
  if (answers.size() < cols.size()) {
    throw std::invalid_argument("query_row: answer buffer too small");
  }
  for (const int c : cols) check_cell(row, c);
  answer_row(row, cols, answers);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    transcript_.append({QueryKind::Edge, row, cols[k], answers[k], 1});
  }
}

void Oracle::answer_row(int row, std::span<const int> cols,
                        std::span<std::uint8_t> out) {
  for (std::size_t k = 0; k < cols.size(); ++k) {
    out[k] = answer(row, cols[k]) ? 1 : 0;
  }
}

bool Oracle::threshold_query(int col, int threshold) {
  if (family() != Family::ColPermuted) {
    throw std::logic_error("threshold_query needs a column-permuted half graph");
  }
  if (threshold < 1 || threshold > n_) {
    throw std::out_of_range("threshold_query: threshold outside [1,n]");
  }
  const int row = threshold_row(n_, threshold);
  check_cell(row, col);
  const bool bit = answer(row, col);
  transcript_.append({QueryKind::Threshold, col, threshold, bit ? 1 : 0, 1});
  return bit;
}

bool Oracle::comparison_query(int r_index, int b_index) {
  if (family() != Family::HalfGraph) {
    throw std::logic_error("comparison_query needs a half graph");
  }
  check_cell(r_index, b_index);
  const bool bit = answer(r_index, b_index);
  transcript_.append({QueryKind::Comparison, r_index, b_index, bit ? 1 : 0, 1});
  return bit;
}

Ordering Oracle::charged_row_compare(int row1, int row2,
                                     std::span<const int> cols) {
  if (cost_model_ != CostModel::Grover) {
    throw std::logic_error("charged_row_compare requires the GROVER cost model");
  }
  if (cols.empty()) throw std::invalid_argument("charged_row_compare: empty column set");
  for (const int c : cols) {
    check_cell(row1, c);
    check_cell(row2, c);
  }
  if (row1 == row2) throw std::logic_error("charged_row_compare: identical rows");
  const auto [order, distance] = ground_truth_compare(row1, row2, cols);
  if (distance == 0) {
    throw std::logic_error("charged_row_compare: rows " + std::to_string(row1) +
                           " and " + std::to_string(row2) +
                           " are equal on the column set");
  }
  const std::uint64_t charge = grover_charge(cols.size(), distance);
  transcript_.append({QueryKind::ChargedCompare, row1, row2,
                      order == Ordering::Greater ? 1 : 0, charge,
                      static_cast<int>(cols.size())});
  return order;
}

std::pair<Ordering, std::uint64_t> Oracle::ground_truth_compare(
    int, int, std::span<const int>) {
  throw std::logic_error("charged_row_compare needs a half graph");
}

InstanceOracle::InstanceOracle(HiddenInstance instance, CostModel cost_model,
                               TranscriptMode mode)
    : Oracle(size_of(instance), cost_model, mode), instance_(std::move(instance)) {}

bool InstanceOracle::answer(int row, int col) {
  return std::visit([&](const auto& g) { return g.entry(row, col); }, instance_);
}

void InstanceOracle::answer_row(int row, std::span<const int> cols,
                                std::span<std::uint8_t> out) {
  const auto* half = std::get_if<HalfGraph>(&instance_);
  if (half == nullptr) {
    Oracle::answer_row(row, cols, out);
    return;
  }
  // M(row, c) = 1 iff B[c] <= R[row].
  scratch_.resize(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) scratch_[k] = half->col_value(cols[k]);
  kernels::mask_at_most(scratch_, half->row_value(row), out);
}

std::pair<Ordering, std::uint64_t> InstanceOracle::ground_truth_compare(
    int row1, int row2, std::span<const int> cols) {
  const auto* half = std::get_if<HalfGraph>(&instance_);
  if (half == nullptr) return Oracle::ground_truth_compare(row1, row2, cols);
  const std::int32_t r1 = half->row_value(row1);
  const std::int32_t r2 = half->row_value(row2);
  // Rows differ exactly on columns with min(r1, r2) < B[c] <= max(r1, r2).
  scratch_.resize(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) scratch_[k] = half->col_value(cols[k]);
  const std::uint64_t distance =
      kernels::count_in_range(scratch_, std::min(r1, r2), std::max(r1, r2));
  return {r1 < r2 ? Ordering::Less : Ordering::Greater, distance};
}

LazyAdversaryOracle::LazyAdversaryOracle(int n, TranscriptMode mode)
    : Oracle(n, CostModel::Unit, mode),
      allowed_(n, true),
      answers_(static_cast<std::size_t>(n) * n, -1),
      row_match_(static_cast<std::size_t>(n)),
      col_match_(static_cast<std::size_t>(n)) {
  for (int k = 0; k < n; ++k) {
    row_match_[k] = k;
    col_match_[k] = k;
  }
}

std::optional<bool> LazyAdversaryOracle::answered(int row, int col) const {
  check_cell(row, col);
  const auto a = answers_[static_cast<std::size_t>(row - 1) * n() + (col - 1)];
  if (a < 0) return std::nullopt;
  return a == 1;
}

bool LazyAdversaryOracle::answer(int row, int col) {
  const int r = row - 1;
  const int c = col - 1;
  auto& memo = answers_[static_cast<std::size_t>(r) * n() + c];
  if (memo >= 0) return memo == 1;

  allowed_.set(r, c, false);
  bool still_feasible = true;
  if (row_match_[r] == c) {
    row_match_[r] = -1;
    col_match_[c] = -1;
    still_feasible = augment_from(allowed_, r, row_match_, col_match_);
    if (!still_feasible) {
      row_match_[r] = c;
      col_match_[c] = r;
    }
  }
  if (!still_feasible) allowed_.set(r, c, true);
  memo = still_feasible ? 0 : 1;
  return !still_feasible;
}

Matching LazyAdversaryOracle::final_instance() const {
  Permutation perm(row_match_.size());
  for (std::size_t k = 0; k < row_match_.size(); ++k) perm[k] = row_match_[k] + 1;
  return Matching(std::move(perm));
}

}  // namespace edgelab
