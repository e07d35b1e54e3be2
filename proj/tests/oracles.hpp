#pragma once

// Independent reference computations. None of these go through LaurentPoly
// expansions: they work on integer matrices only.

#include "clusteralg/int_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using clusteralg::IntMatrix;
using Vec = std::vector<std::int64_t>;

inline std::int64_t pos(std::int64_t v) { return v > 0 ? v : 0; }

// b'_ij = b_ij + sgn(b_ik) [b_ik b_kj]_+ off the k-th row and column.
inline IntMatrix mutate(const IntMatrix& b, std::size_t k) {
  const std::size_t n = b.rows();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const std::int64_t s = (b(i, k) > 0) - (b(i, k) < 0);
        out(i, j) = b(i, j) + s * pos(b(i, k) * b(k, j));
      }
    }
  return out;
}

// Smallest-trace diagonal by brute force over entries 1..bound.
inline std::optional<Vec> symmetrizer(const IntMatrix& b, std::int64_t bound = 12) {
  const std::size_t n = b.rows();
  std::optional<Vec> best;
  std::int64_t best_trace = 0;
  Vec d(n, 1);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = d[i] * b(i, j) == -d[j] * b(j, i);
    std::int64_t trace = 0;
    for (auto v : d) trace += v;
    if (ok && (!best || trace < best_trace)) {
      best = d;
      best_trace = trace;
    }
    std::size_t p = 0;
    while (p < n && d[p] == bound) d[p++] = 1;
    if (p == n) break;
    ++d[p];
  }
  return best;
}

// Exchange graph through the tropical dual: (B, C, G) with
//   c'_j = c_j + [b_kj]_+ c_k + b_kj [-c_k]_+   (j != k),  c'_k = -c_k
//   g'_k = -g_k + sum_i [-b_ik]_+ g_i - sum_j [-c_jk]_+ b0_j
// Seed classes are identified by their set of g-vectors.
struct GraphSummary {
  std::set<std::set<Vec>> clusters;
  std::set<Vec> variables;
  bool truncated = false;
};

inline GraphSummary explore(const IntMatrix& b0, std::size_t limit = 5000) {
  const std::size_t n = b0.rows();
  struct State {
    IntMatrix b, c, g;
  };
  auto key = [&](const State& s) {
    std::set<Vec> out;
    for (std::size_t j = 0; j < n; ++j) out.insert(s.g.column(j));
    return out;
  };
  GraphSummary sum;
  std::queue<State> todo;
  State root{b0, IntMatrix::identity(n), IntMatrix::identity(n)};
  sum.clusters.insert(key(root));
  todo.push(root);
  while (!todo.empty()) {
    const State s = todo.front();
    todo.pop();
    for (std::size_t k = 0; k < n; ++k) {
      State t{mutate(s.b, k), s.c, s.g};
      for (std::size_t r = 0; r < n; ++r) {
        t.c(r, k) = -s.c(r, k);
        for (std::size_t j = 0; j < n; ++j)
          if (j != k) t.c(r, j) = s.c(r, j) + pos(s.b(k, j)) * s.c(r, k) + s.b(k, j) * pos(-s.c(r, k));
      }
      for (std::size_t r = 0; r < n; ++r) {
        std::int64_t v = -s.g(r, k);
        for (std::size_t i = 0; i < n; ++i) v += pos(-s.b(i, k)) * s.g(r, i);
        for (std::size_t j = 0; j < n; ++j) v -= pos(-s.c(j, k)) * b0(r, j);
        t.g(r, k) = v;
      }
      if (sum.clusters.insert(key(t)).second) {
        if (sum.clusters.size() >= limit) {
          sum.truncated = true;
          break;
        }
        todo.push(t);
      }
    }
    if (sum.truncated) break;
  }
  for (const auto& cl : sum.clusters) sum.variables.insert(cl.begin(), cl.end());
  return sum;
}

}  // namespace oracle
