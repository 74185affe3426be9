#pragma once

#include "pentaflag/graph.hpp"
#include "pentaflag/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pentaflag {

/// Square matrix of exact rationals, row-major.
class SignedMatrix {
 public:
  SignedMatrix() = default;
  explicit SignedMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  static SignedMatrix adjacency(const SmallGraph& g);
  static SignedMatrix adjacency_difference(const SmallGraph& a, const SmallGraph& b);

  int order() const { return n_; }
  const Rational& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  Rational& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  bool is_zero() const;

 private:
  int n_ = 0;
  std::vector<Rational> entries_;
};

inline constexpr int kMaxExactCutNormOrder = 20;
inline constexpr int kMaxDeltaHatOrder = 9;

struct CutNormResult {
  Rational value;          // (1/n^2) max |sum_{S x T} A|
  std::uint32_t rows = 0;  // optimizing S, bit i = index i
  std::uint32_t cols = 0;  // optimizing T
};

/// Exact cut norm; rejects n > 20 rather than approximating.
CutNormResult cut_norm(const SignedMatrix& a, unsigned workers = 1);

/// Cut distance of two graphs on the same labeled vertex set.
CutNormResult d_box(const SmallGraph& g1, const SmallGraph& g2);

struct DeltaHatResult {
  Rational value;
  std::vector<int> relabeling;  // g1 vertex relabeling[i] sits at position i
  CutNormResult witness;
};

/// Minimum of d_box over relabelings of g1 against g2; n <= 9.
DeltaHatResult delta_hat(const SmallGraph& g1, const SmallGraph& g2, unsigned workers = 0);

/// delta_hat(g1^(n2 k), g2^(n1 k)) for k = 1..k_max; every blown-up order must stay <= 9.
std::vector<Rational> delta_blowup_sequence(const SmallGraph& g1, const SmallGraph& g2, int k_max,
                                            unsigned workers = 0);

/// "0110..." with character i set when bit i is set.
std::string mask_string(std::uint32_t mask, int n);

}  // namespace pentaflag
