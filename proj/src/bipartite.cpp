#include "edgelab/bipartite.hpp"

#include <limits>
#include <queue>

namespace edgelab {
namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BitMatrix& edges)
      : edges_(edges),
        n_(edges.n()),
        row_match_(static_cast<std::size_t>(n_), -1),
        col_match_(static_cast<std::size_t>(n_), -1),
        level_(static_cast<std::size_t>(n_), kInf) {}

  std::vector<int> run() {
    while (bfs()) {
      for (int r = 0; r < n_; ++r) {
        if (row_match_[r] == -1) dfs(r);
      }
    }
    return row_match_;
  }

 private:
  bool bfs() {
    std::queue<int> queue;
    for (int r = 0; r < n_; ++r) {
      if (row_match_[r] == -1) {
        level_[r] = 0;
        queue.push(r);
      } else {
        level_[r] = kInf;
      }
    }
    bool found_free = false;
    while (!queue.empty()) {
      const int r = queue.front();
      queue.pop();
      for (int c = 0; c < n_; ++c) {
        if (!edges_.get(r, c)) continue;
        const int next = col_match_[c];
        if (next == -1) {
          found_free = true;
        } else if (level_[next] == kInf) {
          level_[next] = level_[r] + 1;
          queue.push(next);
        }
      }
    }
    return found_free;
  }

  bool dfs(int r) {
    for (int c = 0; c < n_; ++c) {
      if (!edges_.get(r, c)) continue;
      const int next = col_match_[c];
      if (next == -1 || (level_[next] == level_[r] + 1 && dfs(next))) {
        row_match_[r] = c;
        col_match_[c] = r;
        return true;
      }
    }
    level_[r] = kInf;
    return false;
  }

  const BitMatrix& edges_;
  int n_;
  std::vector<int> row_match_;
  std::vector<int> col_match_;
  std::vector<int> level_;
};

bool kuhn(const BitMatrix& edges, int row, std::vector<int>& row_match,
          std::vector<int>& col_match, std::vector<std::uint8_t>& visited) {
  for (int c = 0; c < edges.n(); ++c) {
    if (!edges.get(row, c) || visited[c]) continue;
    visited[c] = 1;
    if (col_match[c] == -1 || kuhn(edges, col_match[c], row_match, col_match, visited)) {
      row_match[row] = c;
      col_match[c] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> maximum_matching(const BitMatrix& edges) {
  return HopcroftKarp(edges).run();
}

bool has_perfect_matching(const BitMatrix& edges) {
  for (const int c : maximum_matching(edges)) {
    if (c == -1) return false;
  }
  return true;
}

bool augment_from(const BitMatrix& edges, int row, std::vector<int>& row_match,
                  std::vector<int>& col_match) {
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(edges.n()), 0);
  return kuhn(edges, row, row_match, col_match, visited);
}

}  // namespace edgelab
