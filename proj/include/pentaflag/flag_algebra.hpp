#pragma once

#include "pentaflag/graph.hpp"
#include "pentaflag/rational.hpp"

#include <initializer_list>
#include <map>
#include <vector>

namespace pentaflag {

/// A fully labeled triangle-free graph; vertex i carries label i + 1.
class TypeSigma {
 public:
  TypeSigma() = default;
  explicit TypeSigma(SmallGraph graph);

  static TypeSigma trivial() { return TypeSigma(); }

  int size() const { return graph_.order(); }
  const SmallGraph& graph() const { return graph_; }
  bool is_independent(VertexMask label_mask) const;

  friend bool operator==(const TypeSigma&, const TypeSigma&) = default;
  friend auto operator<=>(const TypeSigma&, const TypeSigma&) = default;

 private:
  SmallGraph graph_;
};

/// The three-vertex types with 0, 1 or 2 edges on which swapping labels 1 and 2
/// is an automorphism.
TypeSigma sigma_type(int edges);
/// The labeled pentagon 1-2-3-4-5-1.
TypeSigma type_P();

/// A flag over some type: the first k vertices carry labels 1..k and the graph is
/// canonical under label-preserving isomorphism. Mirror-image flags (related by a
/// non-trivial type automorphism) stay distinct.
class Flag {
 public:
  Flag() = default;

  /// `theta[i]` is the vertex of `g` carrying label i + 1.
  static Flag from_embedding(const SmallGraph& g, std::span<const int> theta, const TypeSigma& type);
  /// Flag of `g` whose first `type.size()` vertices are the labels in order.
  static Flag from_labeled_prefix(const SmallGraph& g, const TypeSigma& type);
  /// The type itself, i.e. the multiplicative unit of its algebra.
  static Flag unit(const TypeSigma& type);
  /// An unlabeled graph as a flag over the trivial type.
  static Flag graph(const SmallGraph& g);

  const SmallGraph& underlying() const { return graph_; }
  int size() const { return graph_.order(); }
  int type_size() const { return k_; }
  TypeSigma type() const;
  /// Subgraph induced on the unlabeled vertices.
  SmallGraph free_part() const;

  friend bool operator==(const Flag&, const Flag&) = default;
  friend auto operator<=>(const Flag& a, const Flag& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.graph_ <=> b.graph_;
  }

 private:
  Flag(SmallGraph canonical, int k) : graph_(std::move(canonical)), k_(k) {}
  SmallGraph graph_;
  int k_ = 0;
};

/// Finite rational combination of flags over a common type.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(TypeSigma type) : type_(std::move(type)) {}

  static AlgebraElement of(const Flag& f, const Rational& c = 1);
  static AlgebraElement constant(const TypeSigma& type, const Rational& c);
  static AlgebraElement unit(const TypeSigma& type) { return constant(type, 1); }
  static AlgebraElement graph(const SmallGraph& g, const Rational& c = 1) { return of(Flag::graph(g), c); }

  const TypeSigma& type() const { return type_; }
  const std::map<Flag, Rational>& terms() const { return terms_; }
  Rational coefficient(const Flag& f) const;
  bool is_zero() const { return terms_.empty(); }
  /// Largest flag size among the terms (the type size for a zero element).
  int max_flag_size() const;

  void add_term(const Flag& f, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  TypeSigma type_;
  std::map<Flag, Rational> terms_;
};

class FlagError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All triangle-free flags of the given size over `type`, sorted.
const std::vector<Flag>& flags_of_size(const TypeSigma& type, int size);

/// F^sigma_V: one unlabeled vertex adjacent exactly to the labels in V (1-based).
Flag flag_FV(const TypeSigma& type, std::initializer_list<int> labels);
Flag flag_FV(const TypeSigma& type, std::span<const int> labels);

/// Sum of F^sigma_V over the independent label sets V of size j.
AlgebraElement flag_fj(const TypeSigma& type, int j);

/// Probability that a random subset of the unlabeled vertices of `host` of the
/// right size induces `pattern` together with the labels.
Rational flag_density(const Flag& pattern, const Flag& host);

AlgebraElement flag_product(const AlgebraElement& a, const AlgebraElement& b);

/// q_sigma(F): probability that a uniformly random injective labeling of the
/// underlying graph reproduces F.
Rational averaging_factor(const Flag& f);

/// Unlabeling operator into the trivial-type algebra.
AlgebraElement average(const AlgebraElement& a);

/// Each graph G maps to the sum of the type flags whose unlabeled part is a copy of G.
AlgebraElement upward_pi(const TypeSigma& type, const AlgebraElement& g);

/// Re-expresses `a` in the basis of flags of size `size`.
AlgebraElement lift(const AlgebraElement& a, int size);

/// Value of `a` (trivial type) under the limit of balanced blow-ups of `g`.
Rational eval_blowup(const AlgebraElement& a, const SmallGraph& g);

}  // namespace pentaflag
