#pragma once
// Brute-force reference implementations. They only read adjacency through
// SmallGraph::adjacent and share no code with the library algorithms.

#include "pentaflag/graph.hpp"
#include "pentaflag/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using pentaflag::Rational;
using pentaflag::SmallGraph;
using Matrix = std::vector<std::vector<Rational>>;

inline bool triangle_free(const SmallGraph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;
  return true;
}

inline bool is_automorphism_like(const SmallGraph& a, const SmallGraph& b, const std::vector<int>& p) {
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (a.adjacent(i, j) != b.adjacent(p[i], p[j])) return false;
  return true;
}

inline bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_automorphism_like(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::uint64_t automorphisms(const SmallGraph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    count += is_automorphism_like(g, g, p);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Visits every map [m] -> [n] as a vector.
inline void for_each_map(int m, int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> a(m, 0);
  while (true) {
    visit(a);
    int i = m - 1;
    while (i >= 0 && a[i] == n - 1) a[i--] = 0;
    if (i < 0) return;
    ++a[i];
  }
}

inline std::uint64_t strong_homs(const SmallGraph& h, const SmallGraph& g) {
  std::uint64_t count = 0;
  for_each_map(h.order(), g.order(), [&](const std::vector<int>& a) {
    for (int i = 0; i < h.order(); ++i)
      for (int j = i + 1; j < h.order(); ++j)
        if (h.adjacent(i, j) != g.adjacent(a[i], a[j])) return;
    ++count;
  });
  return count;
}

// Injective maps preserving adjacency and non-adjacency, divided by |Aut h|.
inline std::uint64_t induced_copies(const SmallGraph& h, const SmallGraph& g) {
  std::uint64_t embeddings = 0;
  for_each_map(h.order(), g.order(), [&](const std::vector<int>& a) {
    for (int i = 0; i < h.order(); ++i)
      for (int j = i + 1; j < h.order(); ++j)
        if (a[i] == a[j] || h.adjacent(i, j) != g.adjacent(a[i], a[j])) return;
    ++embeddings;
  });
  return embeddings / automorphisms(h);
}

// Probability that m independent uniform vertices of g, read as classes of an
// infinite balanced blow-up, span a copy of h. Same-class vertices are non-adjacent.
inline Rational blowup_limit_density(const SmallGraph& h, const SmallGraph& g) {
  const int m = h.order();
  std::uint64_t hits = 0, total = 0;
  for_each_map(m, g.order(), [&](const std::vector<int>& a) {
    ++total;
    SmallGraph sample(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (a[i] != a[j] && g.adjacent(a[i], a[j])) sample.add_edge(i, j);
    hits += isomorphic(sample, h);
  });
  return Rational(static_cast<long>(hits), static_cast<long>(total));
}

// 5-cycles of a triangle-free graph: every closed 5-walk traverses a pentagon.
inline std::uint64_t pentagons_by_trace(const SmallGraph& g) {
  const int n = g.order();
  using M = std::vector<std::vector<std::int64_t>>;
  M a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j);
  auto mul = [n](const M& x, const M& y) {
    M z(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (x[i][k])
          for (int j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  const M a2 = mul(a, a);
  const M a4 = mul(a2, a2);
  std::int64_t trace = 0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) trace += a4[i][k] * a[k][i];
  return static_cast<std::uint64_t>(trace / 10);
}

// Same quantity for any order that fits a DenseGraph-free test: explicit cycles.
inline std::uint64_t pentagons_by_cycles(const SmallGraph& g) {
  const int n = g.order();
  std::uint64_t twice_rooted = 0;
  // Count sequences v0 < v1..v4 with v0 the minimum, closed, all distinct; each cycle twice.
  for (int v0 = 0; v0 < n; ++v0)
    for (int v1 = v0 + 1; v1 < n; ++v1) {
      if (!g.adjacent(v0, v1)) continue;
      for (int v2 = v0 + 1; v2 < n; ++v2) {
        if (v2 == v1 || !g.adjacent(v1, v2)) continue;
        for (int v3 = v0 + 1; v3 < n; ++v3) {
          if (v3 == v1 || v3 == v2 || !g.adjacent(v2, v3)) continue;
          for (int v4 = v0 + 1; v4 < n; ++v4) {
            if (v4 == v1 || v4 == v2 || v4 == v3 || !g.adjacent(v3, v4)) continue;
            twice_rooted += g.adjacent(v4, v0);
          }
        }
      }
    }
  return twice_rooted / 2;
}

// Number of triangle-free graphs on n vertices up to isomorphism, by Burnside:
// average over S_n of the number of labeled triangle-free graphs fixed by the
// permutation. The count only depends on the cycle type.
namespace detail {

inline std::uint64_t count_fixed(int n, const std::vector<int>& perm) {
  // Orbits of the permutation on unordered pairs.
  std::vector<std::vector<std::pair<int, int>>> orbits;
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (seen[i][j]) continue;
      std::vector<std::pair<int, int>> orbit;
      int a = i, b = j;
      while (!seen[std::min(a, b)][std::max(a, b)]) {
        seen[std::min(a, b)][std::max(a, b)] = true;
        orbit.emplace_back(std::min(a, b), std::max(a, b));
        a = perm[a];
        b = perm[b];
      }
      orbits.push_back(orbit);
    }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == orbits.size()) {
      ++count;
      return;
    }
    rec(k + 1);
    for (auto [u, v] : orbits[k]) adj[u][v] = adj[v][u] = true;
    bool ok = true;
    for (auto [u, v] : orbits[k]) {
      for (int w = 0; w < n && ok; ++w) ok = !(adj[u][w] && adj[v][w]);
      if (!ok) break;
    }
    if (ok) rec(k + 1);
    for (auto [u, v] : orbits[k]) adj[u][v] = adj[v][u] = false;
  };
  rec(0);
  return count;
}

inline void partitions(int n, int max_part, std::vector<int>& current,
                       const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) {
    visit(current);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(n - p, p, current, visit);
    current.pop_back();
  }
}

}  // namespace detail

inline std::uint64_t triangle_free_classes(int n) {
  if (n == 0) return 1;
  pentaflag::BigInt total = 0;
  std::vector<int> current;
  detail::partitions(n, n, current, [&](const std::vector<int>& cycle_type) {
    std::vector<int> perm(n);
    int start = 0;
    for (int len : cycle_type) {
      for (int i = 0; i < len; ++i) perm[start + i] = start + (i + 1) % len;
      start += len;
    }
    // n! / prod(len) / prod(multiplicity!)
    pentaflag::BigInt size = pentaflag::factorial(n);
    std::vector<int> mult(n + 1, 0);
    for (int len : cycle_type) {
      size /= len;
      ++mult[len];
    }
    for (int m : mult) size /= pentaflag::factorial(m);
    total += size * detail::count_fixed(n, perm);
  });
  total /= pentaflag::factorial(n);
  return total.get_ui();
}

// Cut norm by enumerating all (S, T) pairs.
inline Rational cut_norm(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  Rational best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s)
    for (std::uint32_t t = 0; t < (1U << n); ++t) {
      Rational sum = 0;
      for (int i = 0; i < n; ++i)
        if ((s >> i) & 1U)
          for (int j = 0; j < n; ++j)
            if ((t >> j) & 1U) sum += a[i][j];
      if (sum.sign() < 0) sum = -sum;
      if (sum > best) best = sum;
    }
  return best / Rational(n * n);
}

inline Rational determinant(Matrix m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c].sign() == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Sylvester's criterion for semidefiniteness: all principal minors >= 0.
inline bool psd(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1U) idx.push_back(i);
    Matrix sub(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = m[idx[i]][idx[j]];
    if (determinant(sub).sign() < 0) return false;
  }
  return true;
}

// Fraction of the a-subsets S of V(host) with host[S] ~ f1 and host[V \ S] ~ f2.
inline Rational split_probability(const SmallGraph& f1, const SmallGraph& f2, const SmallGraph& host) {
  const int n = host.order();
  std::uint64_t hits = 0, total = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (std::popcount(s) != f1.order()) continue;
    ++total;
    std::vector<int> in, out;
    for (int i = 0; i < n; ++i) ((s >> i) & 1U ? in : out).push_back(i);
    if (isomorphic(host.induced(in), f1) && isomorphic(host.induced(out), f2)) ++hits;
  }
  return Rational(static_cast<long>(hits), static_cast<long>(total));
}

// Random triangle-free graph: edges offered in random order, kept unless they close a triangle.
inline SmallGraph random_triangle_free(int n, std::mt19937_64& rng, double keep = 1.0) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(keep);
  SmallGraph g(n);
  for (auto [u, v] : pairs) {
    if (!coin(rng) || (g.neighbors(u) & g.neighbors(v)) != 0) continue;
    g.add_edge(u, v);
  }
  return g;
}

inline SmallGraph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  SmallGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace oracle

namespace oracle {

// Integer cut norm (unnormalized) by full 2^n x 2^n enumeration, Gray code over T.
inline std::int64_t cut_mass(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::int64_t best = 0;
  std::vector<std::int64_t> col(n);
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    std::fill(col.begin(), col.end(), 0);
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1U)
        for (int j = 0; j < n; ++j) col[j] += a[i][j];
    std::int64_t sum = 0;
    std::uint32_t t = 0;
    for (std::uint32_t step = 1; step < (1U << n); ++step) {
      const int j = std::countr_zero(step);
      t ^= 1U << j;
      sum += ((t >> j) & 1U) ? col[j] : -col[j];
      best = std::max(best, sum < 0 ? -sum : sum);
    }
  }
  return best;
}

}  // namespace oracle
