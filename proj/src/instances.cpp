#include "edgelab/instances.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "edgelab/rng.hpp"

namespace edgelab {
namespace {

Permutation require_permutation(Permutation values, const char* what) {
  if (values.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty permutation");
  }
  if (!is_permutation(values)) {
    throw std::invalid_argument(std::string(what) + ": not a permutation of [n]");
  }
  return values;
}

Permutation random_permutation(int n, Rng& rng) {
  Permutation p = identity_permutation(n);
  rng.shuffle(std::span<std::int32_t>(p));
  return p;
}

std::string upper(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Matching: return "MATCHING";
    case Family::ColPermuted: return "COL_PERMUTED";
    case Family::HalfGraph: return "HALF_GRAPH";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  const std::string u = upper(text);
  if (u == "MATCHING") return Family::Matching;
  if (u == "COL_PERMUTED") return Family::ColPermuted;
  if (u == "HALF_GRAPH") return Family::HalfGraph;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

bool is_permutation(std::span<const std::int32_t> values) {
  const auto n = static_cast<std::int32_t>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (const std::int32_t v : values) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Matching::Matching(Permutation perm)
    : perm_(require_permutation(std::move(perm), "Matching")) {}

ColumnPermutedHalfGraph::ColumnPermutedHalfGraph(Permutation col_weights)
    : weights_(require_permutation(std::move(col_weights),
                                   "ColumnPermutedHalfGraph")) {}

HalfGraph::HalfGraph(Permutation row_values, Permutation col_values)
    : rows_(require_permutation(std::move(row_values), "HalfGraph rows")),
      cols_(require_permutation(std::move(col_values), "HalfGraph columns")) {
  if (rows_.size() != cols_.size()) {
    throw std::invalid_argument("HalfGraph: row and column lists differ in length");
  }
}

Family family_of(const HiddenInstance& inst) {
  return static_cast<Family>(inst.index());
}

int size_of(const HiddenInstance& inst) {
  return std::visit([](const auto& g) { return g.n(); }, inst);
}

bool entry(const HiddenInstance& inst, int row, int col) {
  const int n = size_of(inst);
  if (row < 1 || row > n || col < 1 || col > n) {
    throw std::out_of_range("entry: index (" + std::to_string(row) + "," +
                            std::to_string(col) + ") outside [1," +
                            std::to_string(n) + "]");
  }
  return std::visit([&](const auto& g) { return g.entry(row, col); }, inst);
}

HiddenInstance gen_instance(Family family, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_instance: n must be >= 1");
  Rng rng(seed);
  switch (family) {
    case Family::Matching:
      return Matching(random_permutation(n, rng));
    case Family::ColPermuted:
      return ColumnPermutedHalfGraph(random_permutation(n, rng));
    case Family::HalfGraph: {
      Permutation rows = random_permutation(n, rng);
      Permutation cols = random_permutation(n, rng);
      return HalfGraph(std::move(rows), std::move(cols));
    }
  }
  throw std::invalid_argument("gen_instance: bad family");
}

Permutation threshold_list_view(const ColumnPermutedHalfGraph& inst) {
  return Permutation(inst.col_weights().begin(), inst.col_weights().end());
}

ColumnPermutedHalfGraph matrix_from_threshold_list(Permutation thresholds) {
  return ColumnPermutedHalfGraph(std::move(thresholds));
}

std::pair<Permutation, Permutation> bipartite_view(const HalfGraph& inst) {
  return {Permutation(inst.row_values().begin(), inst.row_values().end()),
          Permutation(inst.col_values().begin(), inst.col_values().end())};
}

HalfGraph half_graph_from_lists(Permutation row_values, Permutation col_values) {
  return HalfGraph(std::move(row_values), std::move(col_values));
}

std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>
interleaved_lists(const HalfGraph& inst) {
  std::vector<std::int32_t> even;
  std::vector<std::int32_t> odd;
  for (const auto r : inst.row_values()) even.push_back(2 * r);
  for (const auto b : inst.col_values()) odd.push_back(2 * b - 1);
  return {std::move(even), std::move(odd)};
}

std::vector<std::uint8_t> materialize(const HiddenInstance& inst) {
  const int n = size_of(inst);
  std::vector<std::uint8_t> dense(static_cast<std::size_t>(n) * n);
  std::visit(
      [&](const auto& g) {
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) {
            dense[static_cast<std::size_t>(i - 1) * n + (j - 1)] = g.entry(i, j);
          }
        }
      },
      inst);
  return dense;
}

std::string serialize(const HiddenInstance& inst) {
  std::ostringstream out;
  out << to_string(family_of(inst)) << ' ' << size_of(inst);
  const auto put = [&](std::span<const std::int32_t> values) {
    for (const auto v : values) out << ' ' << v;
  };
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Matching>) {
          put(g.perm());
        } else if constexpr (std::is_same_v<T, ColumnPermutedHalfGraph>) {
          put(g.col_weights());
        } else {
          put(g.row_values());
          put(g.col_values());
        }
      },
      inst);
  return out.str();
}

HiddenInstance parse_instance(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string family_text;
  long long n = 0;
  if (!(in >> family_text >> n) || n < 1) {
    throw std::invalid_argument("parse_instance: expected 'FAMILY n values...'");
  }
  const Family family = parse_family(family_text);
  const auto read = [&] {
    Permutation values;
    values.reserve(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k) {
      long long v = 0;
      if (!(in >> v)) throw std::invalid_argument("parse_instance: too few values");
      values.push_back(static_cast<std::int32_t>(v));
    }
    return values;
  };
  Permutation first = read();
  HiddenInstance result = [&]() -> HiddenInstance {
    switch (family) {
      case Family::Matching: return Matching(std::move(first));
      case Family::ColPermuted: return ColumnPermutedHalfGraph(std::move(first));
      case Family::HalfGraph: return HalfGraph(std::move(first), read());
    }
    throw std::invalid_argument("parse_instance: bad family");
  }();
  std::string extra;
  if (in >> extra) throw std::invalid_argument("parse_instance: trailing values");
  return result;
}

}  // namespace edgelab
