#include "pentaflag/cut_metric.hpp"

#include "pentaflag/extremal.hpp"
#include "pentaflag/parallel.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>

namespace pentaflag {

namespace {

struct IntegerCut {
  std::int64_t value = 0;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
};

// For a fixed row set S the best column set takes every column of one sign, so the
// 4^n search collapses to a Gray-code walk over S. Rows in `fixed_high` are forced.
IntegerCut best_cut_with_prefix(const std::vector<std::int64_t>& b, int n, int low_bits,
                                std::uint32_t fixed_high) {
  std::vector<std::int64_t> col(static_cast<std::size_t>(n), 0);
  for (int i = low_bits; i < n; ++i) {
    if (!((fixed_high >> i) & 1U)) continue;
    for (int j = 0; j < n; ++j) col[j] += b[static_cast<std::size_t>(i) * n + j];
  }
  IntegerCut best;
  std::uint32_t rows = fixed_high;
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t step = 0;; ++step) {
    std::int64_t pos = 0;
    std::int64_t neg = 0;
    std::uint32_t pos_cols = 0;
    std::uint32_t neg_cols = 0;
    for (int j = 0; j < n; ++j) {
      if (col[j] > 0) {
        pos += col[j];
        pos_cols |= std::uint32_t{1} << j;
      } else if (col[j] < 0) {
        neg -= col[j];
        neg_cols |= std::uint32_t{1} << j;
      }
    }
    if (pos > best.value) best = {pos, rows, pos_cols};
    if (neg > best.value) best = {neg, rows, neg_cols};
    if (step + 1 == steps) break;
    const int flip = std::countr_zero(step + 1);
    const std::int64_t sign = ((rows >> flip) & 1U) ? -1 : 1;
    rows ^= std::uint32_t{1} << flip;
    for (int j = 0; j < n; ++j) col[j] += sign * b[static_cast<std::size_t>(flip) * n + j];
  }
  return best;
}

IntegerCut integer_cut_norm(const std::vector<std::int64_t>& b, int n, unsigned workers) {
  const int high_bits = std::min(n, 4);
  const int low_bits = n - high_bits;
  const std::size_t chunks = std::size_t{1} << high_bits;
  std::vector<IntegerCut> partial(chunks);
  parallel_for(chunks, std::max(1U, workers), [&](std::size_t c, unsigned) {
    partial[c] = best_cut_with_prefix(b, n, low_bits, static_cast<std::uint32_t>(c) << low_bits);
  });
  IntegerCut best;
  for (const auto& p : partial) {
    if (p.value > best.value) best = p;
  }
  return best;
}

std::vector<std::int64_t> signed_adjacency_difference(const SmallGraph& a, const SmallGraph& b,
                                                      std::span<const int> relabel_a) {
  const int n = a.order();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::int64_t>(a.adjacent(relabel_a[i], relabel_a[j])) - b.adjacent(i, j);
    }
  }
  return out;
}

void require_same_order(const SmallGraph& a, const SmallGraph& b) {
  if (a.order() != b.order()) throw std::invalid_argument("graphs must have the same number of vertices");
}

}  // namespace

SignedMatrix SignedMatrix::adjacency(const SmallGraph& g) {
  SignedMatrix m(g.order());
  for (auto [u, v] : g.edges()) {
    m.at(u, v) = 1;
    m.at(v, u) = 1;
  }
  return m;
}

SignedMatrix SignedMatrix::adjacency_difference(const SmallGraph& a, const SmallGraph& b) {
  require_same_order(a, b);
  SignedMatrix m(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) m.at(i, j) = Rational(static_cast<long>(a.adjacent(i, j)) - b.adjacent(i, j));
  }
  return m;
}

bool SignedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.sign() == 0; });
}

CutNormResult cut_norm(const SignedMatrix& a, unsigned workers) {
  const int n = a.order();
  if (n > kMaxExactCutNormOrder) throw std::out_of_range("exact cut norm supports n <= 20");
  if (n == 0) return {0, 0, 0};
  BigInt scale = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BigInt d = a.at(i, j).denominator();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    }
  }
  // Every partial sum stays below n^2 * max|entry|.
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / (n * n));
  std::vector<std::int64_t> b(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const BigInt scaled = a.at(i, j).numerator() * (scale / a.at(i, j).denominator());
      if (abs(scaled) >= limit) throw std::overflow_error("matrix entries too large for exact cut norm");
      b[static_cast<std::size_t>(i) * n + j] = scaled.get_si();
    }
  }
  const IntegerCut best = integer_cut_norm(b, n, workers);
  return {Rational(BigInt(static_cast<long>(best.value)), scale * n * n), best.rows, best.cols};
}

CutNormResult d_box(const SmallGraph& g1, const SmallGraph& g2) {
  require_same_order(g1, g2);
  const int n = g1.order();
  if (n == 0) return {0, 0, 0};
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  const IntegerCut best = integer_cut_norm(signed_adjacency_difference(g1, g2, id), n, 1);
  return {Rational(static_cast<long>(best.value), static_cast<long>(n) * n), best.rows, best.cols};
}

DeltaHatResult delta_hat(const SmallGraph& g1, const SmallGraph& g2, unsigned workers) {
  require_same_order(g1, g2);
  const int n = g1.order();
  if (n > kMaxDeltaHatOrder) throw std::out_of_range("exact delta_hat supports n <= 9");
  if (workers == 0) workers = default_workers();
  if (n == 0) return {0, {}, {0, 0, 0}};
  // S = T = all vertices already achieves |2(e1 - e2)|; no relabeling can do better.
  const std::int64_t floor_value = 2 * std::abs(static_cast<std::int64_t>(g1.edge_count()) - g2.edge_count());

  struct Best {
    IntegerCut cut{std::numeric_limits<std::int64_t>::max(), 0, 0};
    std::vector<int> perm;
  };
  std::vector<Best> partial(static_cast<std::size_t>(n));
  std::atomic<bool> floor_reached{false};
  parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t first, unsigned) {
    std::vector<int> perm;
    perm.push_back(static_cast<int>(first));
    for (int v = 0; v < n; ++v) {
      if (v != static_cast<int>(first)) perm.push_back(v);
    }
    Best& best = partial[first];
    do {
      if (floor_reached) break;
      const IntegerCut cut = integer_cut_norm(signed_adjacency_difference(g1, g2, perm), n, 1);
      if (cut.value < best.cut.value) {
        best = {cut, perm};
        if (cut.value == floor_value) floor_reached = true;
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  });
  Best best;
  for (auto& p : partial) {
    if (!p.perm.empty() && p.cut.value < best.cut.value) best = p;
  }
  const Rational value(static_cast<long>(best.cut.value), static_cast<long>(n) * n);
  return {value, best.perm, {value, best.cut.rows, best.cut.cols}};
}

std::vector<Rational> delta_blowup_sequence(const SmallGraph& g1, const SmallGraph& g2, int k_max,
                                            unsigned workers) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  if (static_cast<long>(n1) * n2 * k_max > kMaxDeltaHatOrder) {
    throw std::out_of_range("blown-up order exceeds the exact delta_hat regime");
  }
  std::vector<Rational> out;
  for (int k = 1; k <= k_max; ++k) {
    const SmallGraph b1 = balanced_blowup(g1, n2 * k).to_small();
    const SmallGraph b2 = balanced_blowup(g2, n1 * k).to_small();
    out.push_back(delta_hat(b1, b2, workers).value);
  }
  return out;
}

std::string mask_string(std::uint32_t mask, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) s[i] = '1';
  }
  return s;
}

}  // namespace pentaflag
