#include "groupsel/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "groupsel/errors.hpp"

namespace groupsel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Potential-based Hungarian method on the min-cost convention, 1-indexed
// internally.  Returns row -> column and the final dual potentials.
struct HungarianOutput {
  std::vector<int> row_to_col;
  std::vector<double> u;
  std::vector<double> v;
};

HungarianOutput hungarian_min(int n, const std::vector<double>& cost) {
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[static_cast<std::size_t>(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  HungarianOutput out;
  out.row_to_col.assign(n, -1);
  for (int j = 1; j <= n; ++j) out.row_to_col[p[j] - 1] = j - 1;
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

// Kuhn augmenting-path matching restricted to the given adjacency, used to
// test whether a partial lexicographic choice can still complete.
bool try_augment(int row, const std::vector<std::vector<int>>& adj, std::vector<int>& col_match,
                 std::vector<char>& visited) {
  for (int col : adj[row]) {
    if (visited[col]) continue;
    visited[col] = 1;
    if (col_match[col] < 0 || try_augment(col_match[col], adj, col_match, visited)) {
      col_match[col] = row;
      return true;
    }
  }
  return false;
}

bool has_perfect_matching(int n, const std::vector<std::vector<int>>& adj,
                          const std::vector<int>& fixed_cols, int from_row) {
  std::vector<int> col_match(n, -1);
  for (int r = 0; r < from_row; ++r) col_match[fixed_cols[r]] = r;
  for (int r = from_row; r < n; ++r) {
    std::vector<char> visited(n, 0);
    for (int c : fixed_cols)
      if (c >= 0) visited[c] = 1;
    if (!try_augment(r, adj, col_match, visited)) return false;
  }
  return true;
}

}  // namespace

AssignmentResult max_assignment(int m, const std::vector<double>& score) {
  if (m < 1) throw ValidationError("assignment needs a positive dimension");
  if (score.size() != static_cast<std::size_t>(m) * m)
    throw ValidationError("assignment score matrix must be square");
  double max_abs = 0.0;
  for (double s : score) {
    if (!std::isfinite(s)) throw ValidationError("assignment scores must be finite");
    max_abs = std::max(max_abs, std::abs(s));
  }

  std::vector<double> cost(score.size());
  for (std::size_t k = 0; k < score.size(); ++k) cost[k] = -score[k];
  const HungarianOutput hung = hungarian_min(m, cost);

  // Complementary slackness: optimal assignments use tight edges only.
  const double eps = 1e-9 * (1.0 + max_abs);
  std::vector<std::vector<int>> tight(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (std::abs(cost[static_cast<std::size_t>(i) * m + j] - hung.u[i + 1] - hung.v[j + 1]) <=
          eps)
        tight[i].push_back(j);

  std::vector<int> lex_cols(m, -1);
  bool lex_ok = true;
  for (int i = 0; i < m && lex_ok; ++i) {
    lex_ok = false;
    for (int j : tight[i]) {
      if (std::find(lex_cols.begin(), lex_cols.begin() + i, j) != lex_cols.begin() + i) continue;
      lex_cols[i] = j;
      if (has_perfect_matching(m, tight, lex_cols, i + 1)) {
        lex_ok = true;
        break;
      }
      lex_cols[i] = -1;
    }
  }

  const std::vector<int>& images = lex_ok ? lex_cols : hung.row_to_col;
  double value = 0.0;
  for (int i = 0; i < m; ++i) value += score[static_cast<std::size_t>(i) * m + images[i]];
  return {Permutation(images), value};
}

}  // namespace groupsel
