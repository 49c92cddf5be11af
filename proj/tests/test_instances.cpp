#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "edgelab/instances.hpp"

using namespace edgelab;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> dense(const HiddenInstance& inst) {
  const int n = size_of(inst);
  const auto flat = materialize(inst);
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = flat[i * n + j];
  }
  return rows;
}

using Grid = std::vector<std::vector<int>>;

}  // namespace

TEST_CASE("entry examples") {
  CHECK(entry(Matching({2, 1}), 1, 2));
  CHECK_FALSE(entry(Matching({2, 1}), 1, 1));
  CHECK(dense(ColumnPermutedHalfGraph({2, 1})) == Grid{{1, 0}, {1, 1}});
  CHECK_FALSE(entry(HalfGraph({2, 1, 3}, {1, 3, 2}), 2, 3));
}

TEST_CASE("entry rejects out-of-range indices") {
  const HiddenInstance inst = Matching({1, 2, 3});
  CHECK_THROWS_AS(entry(inst, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(entry(inst, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(entry(inst, 4, 1), std::out_of_range);
}

TEST_CASE("constructors reject non-permutations") {
  CHECK_THROWS_AS(Matching({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ColumnPermutedHalfGraph({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_threshold_list({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(HalfGraph({1, 2}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(half_graph_from_lists({2, 2}, {1, 2}), std::invalid_argument);
  CHECK_FALSE(is_permutation(std::vector<std::int32_t>{2, 3}));
  CHECK(is_permutation(std::vector<std::int32_t>{}));
}

TEST_CASE("gen_instance basics") {
  CHECK(std::get<Matching>(gen_instance(Family::Matching, 1, 5)).perm()[0] == 1);
  CHECK_THROWS_AS(gen_instance(Family::HalfGraph, 0, 5), std::invalid_argument);
  for (Family f : {Family::Matching, Family::ColPermuted, Family::HalfGraph}) {
    const auto inst = gen_instance(f, 17, 3);
    CHECK(family_of(inst) == f);
    CHECK(size_of(inst) == 17);
  }
}

TEST_CASE("threshold list round trip is exhaustive for n <= 7") {
  CHECK(threshold_list_view(matrix_from_threshold_list({2, 1})) == Permutation{2, 1});
  CHECK(dense(matrix_from_threshold_list({2, 1})) == Grid{{1, 0}, {1, 1}});
  for (int n = 1; n <= 7; ++n) {
    for (const auto& x : all_permutations(n)) {
      const auto inst = matrix_from_threshold_list(x);
      REQUIRE(threshold_list_view(inst) == x);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          REQUIRE(inst.entry(i, j) == (x[j - 1] >= n - i + 1));
        }
      }
    }
  }
}

TEST_CASE("column weight profile") {
  // Column j reads 0^(n - X[j]) 1^X[j] top to bottom.
  for (const auto& x : all_permutations(5)) {
    const ColumnPermutedHalfGraph inst(x);
    for (int j = 1; j <= 5; ++j) {
      int ones = 0;
      bool seen_one = false;
      for (int i = 1; i <= 5; ++i) {
        if (inst.entry(i, j)) {
          seen_one = true;
          ++ones;
        } else {
          REQUIRE_FALSE(seen_one);
        }
      }
      REQUIRE(ones == x[j - 1]);
    }
  }
}

TEST_CASE("bipartite view round trip is exhaustive for n <= 5") {
  CHECK(dense(half_graph_from_lists({2, 1}, {1, 2})) == Grid{{1, 1}, {1, 0}});
  const auto id = identity_permutation(4);
  const auto lower = dense(HalfGraph(id, id));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(lower[i][j] == (j <= i ? 1 : 0));
  }

  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& r : perms) {
      for (const auto& b : perms) {
        const auto inst = half_graph_from_lists(r, b);
        const auto [r2, b2] = bipartite_view(inst);
        REQUIRE(r2 == r);
        REQUIRE(b2 == b);
      }
    }
  }
}

TEST_CASE("interleaved lists keep the same comparisons") {
  const HalfGraph inst({3, 1, 4, 2}, {2, 4, 1, 3});
  const auto [r, b] = interleaved_lists(inst);
  for (int i = 1; i <= 4; ++i) {
    CHECK(r[i - 1] % 2 == 0);
    CHECK(b[i - 1] % 2 == 1);
    for (int j = 1; j <= 4; ++j) CHECK(inst.entry(i, j) == (r[i - 1] > b[j - 1]));
  }
}

TEST_CASE("serialize and parse round trip") {
  for (Family f : {Family::Matching, Family::ColPermuted, Family::HalfGraph}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto inst = gen_instance(f, 9, seed);
      CHECK(parse_instance(serialize(inst)) == inst);
    }
  }
  CHECK(serialize(Matching({2, 1})) == "MATCHING 2 2 1");
  CHECK(serialize(HalfGraph({2, 1}, {1, 2})) == "HALF_GRAPH 2 2 1 1 2");
  CHECK(parse_family("col_permuted") == Family::ColPermuted);
  CHECK_THROWS(parse_family("TREE"));
  CHECK_THROWS(parse_instance("MATCHING 2 1"));
  CHECK_THROWS(parse_instance("MATCHING 2 1 2 3"));
  CHECK_THROWS(parse_instance("MATCHING 2 1 1"));
  CHECK_THROWS(parse_instance("HALF_GRAPH 2 1 2"));
}
