#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "edgelab/learners.hpp"

using namespace edgelab;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> all_columns(int n) {
  std::vector<int> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = j + 1;
  return cols;
}

RowOrder true_row_order(const HalfGraph& g) {
  RowOrder order(g.n());
  for (int i = 1; i <= g.n(); ++i) order[g.row_value(i) - 1] = i;
  return order;
}

RowComparator sampling_comparator(Oracle& oracle, Rng& rng) {
  return [&oracle, &rng](int row, int other, std::span<const int> cols) {
    return compare_rows_sampling(oracle, row, other, cols, rng);
  };
}

int restricted_weight(const HalfGraph& g, int row, const std::vector<int>& cols) {
  int w = 0;
  for (int c : cols) w += g.entry(row, c);
  return w;
}

}  // namespace

TEST_CASE("greedy matching: trivial and adversarial counts") {
  InstanceOracle one(Matching({1}));
  CHECK(learn_matching_greedy(one).perm()[0] == 1);
  CHECK(one.transcript().total_queries() == 0);

  LazyAdversaryOracle two(2);
  learn_matching_greedy(two);
  CHECK(two.transcript().total_queries() == 1);

  LazyAdversaryOracle ten(10);
  const Matching learned = learn_matching_greedy(ten);
  CHECK(ten.transcript().total_queries() == 45);
  CHECK(learned == ten.final_instance());
}

TEST_CASE("greedy matching recovers random instances within budget") {
  for (int n : {1, 2, 3, 7, 20, 64}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto inst = gen_instance(Family::Matching, n, seed);
      InstanceOracle o(inst);
      CHECK(HiddenInstance(learn_matching_greedy(o)) == inst);
      CHECK(o.transcript().total_queries() <= std::uint64_t(n) * (n - 1) / 2);
    }
  }
}

TEST_CASE("full scan baseline") {
  InstanceOracle one(Matching({1}));
  learn_matching_full(one);
  CHECK(one.transcript().total_queries() <= 1);

  for (int n : {1, 4, 9, 30}) {
    InstanceOracle id(Matching(identity_permutation(n)));
    CHECK(learn_matching_full(id) == Matching(identity_permutation(n)));
    CHECK(id.transcript().total_queries() == std::uint64_t(n) * (n + 1) / 2);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_instance(Family::Matching, 12, seed);
    InstanceOracle o(inst);
    CHECK(HiddenInstance(learn_matching_full(o)) == inst);
  }
}

TEST_CASE("column learner: small cases") {
  InstanceOracle one(ColumnPermutedHalfGraph({1}));
  CHECK(learn_column_permuted(one).weight(1) == 1);
  CHECK(one.transcript().total_queries() == 0);

  for (const auto& x : all_permutations(2)) {
    InstanceOracle o{ColumnPermutedHalfGraph(x)};
    CHECK(learn_column_permuted(o) == ColumnPermutedHalfGraph(x));
    CHECK(o.transcript().total_queries() <= 2);
  }
  for (int n = 3; n <= 6; ++n) {
    const std::uint64_t budget = n * (std::uint64_t(std::ceil(std::log2(n))) + 1);
    for (const auto& x : all_permutations(n)) {
      InstanceOracle o{ColumnPermutedHalfGraph(x)};
      REQUIRE(learn_column_permuted(o) == ColumnPermutedHalfGraph(x));
      REQUIRE(o.transcript().total_queries() <= budget);
    }
  }
}

TEST_CASE("column learner at n = 1024") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_instance(Family::ColPermuted, 1024, seed);
    InstanceOracle o(inst, CostModel::Unit, TranscriptMode::TotalsOnly);
    CHECK(HiddenInstance(learn_column_permuted(o)) == inst);
    CHECK(o.transcript().total_queries() <= 11264);
  }
}

TEST_CASE("column learner rejects answers that repeat a weight") {
  InstanceOracle o(HalfGraph({2, 1}, {1, 2}));
  CHECK_THROWS_AS(learn_column_permuted(o), InconsistentOracle);
}

TEST_CASE("threshold sorter channels agree on all of size 5") {
  for (const auto& x : all_permutations(5)) {
    InstanceOracle a{ColumnPermutedHalfGraph(x)};
    InstanceOracle b{ColumnPermutedHalfGraph(x)};
    REQUIRE(sort_threshold_list(a, ThresholdChannel::Threshold) == x);
    REQUIRE(sort_threshold_list(b, ThresholdChannel::TranslatedEdge) == x);
    const auto ra = a.transcript().records();
    const auto rb = b.transcript().records();
    REQUIRE(ra.size() == rb.size());
    for (std::size_t k = 0; k < ra.size(); ++k) {
      REQUIRE(ra[k].kind == QueryKind::Threshold);
      REQUIRE(rb[k].kind == QueryKind::Edge);
      REQUIRE(ra[k].answer == rb[k].answer);
    }
  }
}

TEST_CASE("sampling comparison on a single column") {
  InstanceOracle o(HalfGraph(identity_permutation(5), identity_permutation(5)));
  Rng rng(1);
  const std::vector<int> col{3};
  const auto r = compare_rows_sampling(o, 4, 2, col, rng);
  CHECK(r.order == Ordering::Greater);
  CHECK(r.witness == 3);
  CHECK(o.transcript().total_queries() == 2);
}

TEST_CASE("sampling comparison cost on the extreme rows") {
  for (int n : {4, 16, 64}) {
    const auto id = identity_permutation(n);
    InstanceOracle o(HalfGraph(id, id), CostModel::Sampling, TranscriptMode::TotalsOnly);
    Rng rng(static_cast<std::uint64_t>(n));
    const auto cols = all_columns(n);
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
      REQUIRE(compare_rows_sampling(o, 1, n, cols, rng).order == Ordering::Less);
    }
    const double mean = double(o.transcript().total_queries()) / trials;
    CHECK(mean >= 2.0);
    CHECK(mean <= 2.0 * n / (n - 1) * 1.2);
  }
}

TEST_CASE("sampling comparison agrees with reading both rows") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(20));
    const auto g = std::get<HalfGraph>(gen_instance(Family::HalfGraph, n, rng.next()));
    InstanceOracle o(g);
    const int r1 = 1 + static_cast<int>(rng.below(n));
    const int r2 = 1 + static_cast<int>(rng.below(n));
    if (r1 == r2) continue;
    const auto cols = all_columns(n);
    const auto r = compare_rows_sampling(o, r1, r2, cols, rng);
    CHECK((r.order == Ordering::Less) == (g.row_value(r1) < g.row_value(r2)));
    REQUIRE(r.witness);
    CHECK(g.entry(r1, *r.witness) != g.entry(r2, *r.witness));
  }
}

TEST_CASE("sampling comparison reports equal rows") {
  InstanceOracle o(HalfGraph({1, 2, 3}, {1, 2, 3}));
  Rng rng(2);
  const std::vector<int> cols{3};
  CHECK_THROWS_AS(compare_rows_sampling(o, 1, 2, cols, rng), InconsistentOracle);
}

TEST_CASE("quicksort base cases") {
  const auto id = identity_permutation(4);
  InstanceOracle o(HalfGraph(id, id));
  Rng rng(0);
  const auto cmp = sampling_comparator(o, rng);
  CHECK(quicksort_rows(o, {{3}, {1, 2}}, rng, cmp) == RowOrder{3});
  CHECK(o.transcript().total_queries() == 0);

  for (const auto& r : all_permutations(2)) {
    for (const auto& b : all_permutations(2)) {
      const HalfGraph g(r, b);
      InstanceOracle o2(g);
      QuicksortStats stats;
      const auto order = quicksort_rows(o2, {{1, 2}, {1, 2}}, rng,
                                        sampling_comparator(o2, rng),
                                        CellChannel::Edge, &stats);
      CHECK(order == true_row_order(g));
      CHECK(stats.pivot_reads == 2);
      CHECK(stats.comparisons == 1);
    }
  }
}

TEST_CASE("quicksort partition invariants against ground truth") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const auto g = std::get<HalfGraph>(gen_instance(Family::HalfGraph, n, rng.next()));
    InstanceOracle o(g);
    QuicksortStats stats;
    std::uint64_t expected_comparisons = 0;
    const auto observer = [&](const SubProblem& parent, int pivot,
                              const SubProblem& less, const SubProblem& greater) {
      expected_comparisons += parent.rows.size() - 1;
      REQUIRE(parent.rows.size() <= parent.cols.size());
      REQUIRE(parent.cols.size() <= parent.rows.size() + 1);
      REQUIRE(less.cols.size() + greater.cols.size() == parent.cols.size());
      for (int r : less.rows) REQUIRE(g.row_value(r) < g.row_value(pivot));
      for (int r : greater.rows) REQUIRE(g.row_value(r) > g.row_value(pivot));
      for (int c : less.cols) REQUIRE(g.entry(pivot, c));
      for (int c : greater.cols) REQUIRE_FALSE(g.entry(pivot, c));
      for (int r : less.rows) {
        for (int c : greater.cols) REQUIRE_FALSE(g.entry(r, c));
      }
      for (int r : greater.rows) {
        for (int c : less.cols) REQUIRE(g.entry(r, c));
      }
      for (const SubProblem* side : {&parent, &less, &greater}) {
        std::set<int> weights;
        for (int r : side->rows) weights.insert(restricted_weight(g, r, side->cols));
        REQUIRE(weights.size() == side->rows.size());
        if (!weights.empty()) {
          REQUIRE(*weights.rbegin() - *weights.begin() + 1 == int(weights.size()));
        }
      }
    };
    const auto order = quicksort_rows(o, {all_columns(n), all_columns(n)}, rng,
                                      sampling_comparator(o, rng), CellChannel::Edge,
                                      &stats, observer);
    REQUIRE(order == true_row_order(g));
    CHECK(stats.comparisons == expected_comparisons);
  }
}

TEST_CASE("locate columns") {
  InstanceOracle one(HalfGraph({1}, {1}));
  CHECK(locate_columns(one, RowOrder{1}) == Permutation{1});
  CHECK(one.transcript().total_queries() == 0);

  const auto id = identity_permutation(7);
  InstanceOracle lower(HalfGraph(id, id));
  CHECK(locate_columns(lower, id) == id);

  for (int n = 1; n <= 10; ++n) {
    const std::uint64_t budget = n * (std::uint64_t(std::ceil(std::log2(n))) + 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = std::get<HalfGraph>(gen_instance(Family::HalfGraph, n, seed));
      for (CellChannel ch : {CellChannel::Edge, CellChannel::Comparison}) {
        InstanceOracle o(g);
        const auto b = locate_columns(o, true_row_order(g), ch);
        CHECK(b == Permutation(g.col_values().begin(), g.col_values().end()));
        CHECK(o.transcript().total_queries() <= budget);
      }
    }
  }
}

TEST_CASE("locate columns rejects a wrong row order") {
  const HalfGraph g({1, 2, 3, 4}, {1, 2, 3, 4});
  InstanceOracle o(g);
  CHECK_THROWS_AS(locate_columns(o, RowOrder{4, 3, 2, 1}), InconsistentOracle);
}

TEST_CASE("learn_half_graph on one row") {
  InstanceOracle o(HalfGraph({1}, {1}), CostModel::Sampling);
  Rng rng(0);
  CHECK(learn_half_graph(o, rng, CostModel::Sampling) == HalfGraph({1}, {1}));
  CHECK(o.transcript().total_queries() <= 1);
}

TEST_CASE("learn_half_graph is exact on every instance of size 4") {
  const auto perms = all_permutations(4);
  int runs = 0;
  for (const auto& r : perms) {
    for (const auto& b : perms) {
      const HalfGraph g(r, b);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng(seed);
        InstanceOracle o(g, CostModel::Sampling);
        REQUIRE(learn_half_graph(o, rng, CostModel::Sampling) == g);
        Rng rng2(seed);
        InstanceOracle q(g, CostModel::Grover);
        REQUIRE(learn_half_graph(q, rng2, CostModel::Grover) == g);
        ++runs;
      }
    }
  }
  CHECK(runs == 576 * 5);
}

TEST_CASE("learn_half_graph channels give identical answers") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = std::get<HalfGraph>(gen_instance(Family::HalfGraph, 8, seed));
    Rng ra(seed), rb(seed);
    InstanceOracle a(g, CostModel::Sampling), b(g, CostModel::Sampling);
    REQUIRE(learn_half_graph(a, ra, CostModel::Sampling, CellChannel::Edge) == g);
    REQUIRE(learn_half_graph(b, rb, CostModel::Sampling, CellChannel::Comparison) == g);
    const auto ta = a.transcript().records();
    const auto tb = b.transcript().records();
    REQUIRE(ta.size() == tb.size());
    for (std::size_t k = 0; k < ta.size(); ++k) {
      REQUIRE(ta[k].kind == QueryKind::Edge);
      REQUIRE(tb[k].kind == QueryKind::Comparison);
      REQUIRE(ta[k].answer == tb[k].answer);
      REQUIRE(ta[k].a == tb[k].a);
      REQUIRE(ta[k].b == tb[k].b);
    }
  }
}

TEST_CASE("learn_half_graph at moderate sizes") {
  for (int n : {50, 200}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto inst = gen_instance(Family::HalfGraph, n, seed);
      for (CostModel model : {CostModel::Sampling, CostModel::Grover}) {
        Rng rng(seed + 100);
        InstanceOracle o(inst, model, TranscriptMode::TotalsOnly);
        CHECK(HiddenInstance(learn_half_graph(o, rng, model)) == inst);
      }
    }
  }
}
