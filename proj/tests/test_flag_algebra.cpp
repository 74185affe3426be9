#include "oracles.hpp"
#include "pentaflag/census.hpp"
#include "pentaflag/extremal.hpp"
#include "pentaflag/flag_algebra.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace pentaflag;

namespace {

const TypeSigma kTrivial = TypeSigma::trivial();

AlgebraElement rho() { return AlgebraElement::graph(complete_graph(2)); }
SmallGraph K2K1() { return disjoint_union(complete_graph(2), SmallGraph(1)); }
SmallGraph star(int leaves) {
  SmallGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Valid label tuples of the flag's underlying graph, via brute-force automorphisms.
Rational averaging_oracle(const Flag& f) {
  const SmallGraph& g = f.underlying();
  const int n = g.order(), k = f.type_size();
  std::set<std::vector<int>> tuples;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!oracle::is_automorphism_like(g, g, p)) continue;
    // p maps vertex v to p[v]; the tuple is p^{-1}(0..k-1).
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[p[v]] = v;
    tuples.emplace(inv.begin(), inv.begin() + k);
  } while (std::next_permutation(p.begin(), p.end()));
  return Rational(BigInt(static_cast<unsigned long>(tuples.size())), falling_factorial(n, k));
}

AlgebraElement random_element(const TypeSigma& type, int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  AlgebraElement a(type);
  for (const Flag& f : flags_of_size(type, size)) a.add_term(f, Rational(coef(rng), 1 + (coef(rng) + 5) % 3));
  return a;
}

}  // namespace

TEST_CASE("types") {
  CHECK(sigma_type(0).graph().edge_count() == 0);
  CHECK(sigma_type(1).graph().adjacent(0, 1));
  CHECK(sigma_type(2).graph().adjacent(0, 2));
  CHECK(sigma_type(2).graph().adjacent(1, 2));
  CHECK_FALSE(sigma_type(2).graph().adjacent(0, 1));
  CHECK(type_P().size() == 5);
  CHECK_THROWS(TypeSigma(complete_graph(3)));
  CHECK_THROWS(sigma_type(3));
}

TEST_CASE("one-vertex flags F_V") {
  CHECK_THROWS_AS(flag_FV(sigma_type(1), {1, 2}), FlagError);
  CHECK_THROWS_WITH(flag_FV(sigma_type(1), {1, 2}), doctest::Contains("not independent"));
  const Flag f3 = flag_FV(sigma_type(1), {3});
  CHECK(f3.size() == 4);
  CHECK(f3.underlying().adjacent(2, 3));
  CHECK(f3.underlying().degree(3) == 1);
  // Mirror images under the type automorphism stay distinct.
  CHECK(flag_FV(sigma_type(2), {1}) != flag_FV(sigma_type(2), {2}));
  CHECK(flag_FV(sigma_type(1), {1}) != flag_FV(sigma_type(1), {2}));
  CHECK_THROWS(flag_FV(sigma_type(0), {4}));
}

TEST_CASE("f_j sums") {
  CHECK(flag_fj(sigma_type(0), 1).terms().size() == 3);
  CHECK(flag_fj(sigma_type(1), 2).terms().size() == 2);
  CHECK(flag_fj(sigma_type(2), 2).terms().size() == 1);
  CHECK(flag_fj(sigma_type(0), 0).terms().size() == 1);
  CHECK(flag_fj(sigma_type(0), 3).terms().size() == 1);
  CHECK(flag_fj(sigma_type(1), 3).is_zero());
}

TEST_CASE("flag families") {
  // Flags over σ0 of size 4: the new vertex picks any subset of the three labels.
  CHECK(flags_of_size(sigma_type(0), 4).size() == 8);
  CHECK(flags_of_size(sigma_type(1), 4).size() == 6);
  CHECK(flags_of_size(kTrivial, 5).size() == 14);
  for (const Flag& f : flags_of_size(sigma_type(1), 5)) {
    CHECK(f.type() == sigma_type(1));
    CHECK(oracle::triangle_free(f.underlying()));
  }
}

TEST_CASE("products of unlabeled graphs match the split oracle") {
  const AlgebraElement rr = flag_product(rho(), rho());
  CHECK(rr.coefficient(Flag::graph(canonical_form(cycle_graph(4)))) == Rational(2, 3));
  CHECK(rr.coefficient(Flag::graph(empty_graph(4))) == 0);

  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& f1 : enumerate_models(a).models)
        for (const auto& f2 : enumerate_models(b).models) {
          const AlgebraElement prod = flag_product(AlgebraElement::graph(f1), AlgebraElement::graph(f2));
          for (const auto& host : enumerate_models(a + b).models) {
            CHECK(prod.coefficient(Flag::graph(host)) == oracle::split_probability(f1, f2, host));
          }
        }
}

TEST_CASE("the type is the unit") {
  std::mt19937_64 rng(1);
  for (int e = 0; e <= 2; ++e) {
    const TypeSigma t = sigma_type(e);
    const AlgebraElement a = random_element(t, 4, rng);
    CHECK(flag_product(AlgebraElement::unit(t), a) == a);
    CHECK(flag_product(a, AlgebraElement::unit(t)) == a);
  }
}

TEST_CASE("product is commutative and associative") {
  std::mt19937_64 rng(2);
  for (int e = 0; e <= 2; ++e) {
    const TypeSigma t = sigma_type(e);
    const AlgebraElement a = random_element(t, 4, rng);
    const AlgebraElement b = random_element(t, 4, rng);
    const AlgebraElement c = random_element(t, 4, rng);
    CHECK(flag_product(a, b) == flag_product(b, a));
    CHECK(flag_product(flag_product(a, b), c) == flag_product(a, flag_product(b, c)));
    // Lifting a factor does not change the product.
    CHECK(lift(flag_product(lift(a, 5), b), 6) == lift(flag_product(a, b), 6));
  }
  const AlgebraElement x = AlgebraElement::graph(path_graph(3)) - AlgebraElement::graph(empty_graph(2));
  CHECK(flag_product(flag_product(x, rho()), rho()) == flag_product(x, flag_product(rho(), rho())));
}

TEST_CASE("averaging") {
  CHECK(average(AlgebraElement::unit(sigma_type(0))) == AlgebraElement::graph(empty_graph(3)));
  CHECK(average(AlgebraElement::unit(sigma_type(1))) == AlgebraElement::graph(canonical_form(K2K1()), Rational(1, 3)));
  CHECK(average(AlgebraElement::of(flag_FV(sigma_type(0), {1, 2, 3}))) ==
        AlgebraElement::graph(canonical_form(star(3)), Rational(1, 4)));
  for (int e = 0; e <= 2; ++e)
    for (int size = 3; size <= 5; ++size)
      for (const Flag& f : flags_of_size(sigma_type(e), size)) CHECK(averaging_factor(f) == averaging_oracle(f));
  for (const Flag& f : flags_of_size(type_P(), 6)) CHECK(averaging_factor(f) == averaging_oracle(f));
}

TEST_CASE("upward operator") {
  const AlgebraElement k1 = AlgebraElement::graph(SmallGraph(1));
  CHECK(upward_pi(sigma_type(0), k1).terms().size() == 8);
  CHECK(upward_pi(sigma_type(1), k1).terms().size() == 6);
  for (int e = 0; e <= 2; ++e) {
    const TypeSigma t = sigma_type(e);
    CHECK(upward_pi(t, AlgebraElement::unit(kTrivial)) == AlgebraElement::unit(t));
    // Homomorphism: pi(a) pi(b) = pi(ab).
    const AlgebraElement a = AlgebraElement::graph(SmallGraph(1)) - Rational(2, 5) * AlgebraElement::unit(kTrivial);
    const AlgebraElement b = AlgebraElement::graph(SmallGraph(1), 3);
    CHECK(lift(flag_product(upward_pi(t, a), upward_pi(t, b)), 5) == lift(upward_pi(t, flag_product(a, b)), 5));
    const AlgebraElement c = AlgebraElement::graph(complete_graph(2)) - AlgebraElement::graph(empty_graph(2));
    CHECK(flag_product(upward_pi(t, c), upward_pi(t, b)) == upward_pi(t, flag_product(c, b)));
  }
}

TEST_CASE("lift") {
  const AlgebraElement one = lift(AlgebraElement::unit(kTrivial), 5);
  CHECK(one.terms().size() == 14);
  for (const auto& [f, c] : one.terms()) CHECK(c == 1);

  AlgebraElement expected(kTrivial);
  expected.add_term(Flag::graph(canonical_form(K2K1())), Rational(1, 3));
  expected.add_term(Flag::graph(canonical_form(path_graph(3))), Rational(2, 3));
  CHECK(lift(rho(), 3) == expected);
  CHECK(lift(rho(), 2) == rho());
  CHECK_THROWS_AS(lift(expected, 2), FlagError);

  // Chain rule: lifting in two steps equals lifting in one.
  std::mt19937_64 rng(4);
  for (int e = 0; e <= 2; ++e) {
    const AlgebraElement a = random_element(sigma_type(e), 4, rng);
    CHECK(lift(lift(a, 5), 6) == lift(a, 6));
  }
  CHECK(lift(lift(rho(), 4), 6) == lift(rho(), 6));
}

TEST_CASE("densities sum to one") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const SmallGraph g = oracle::random_triangle_free(8, rng, 0.5);
    for (int m = 1; m <= 5; ++m) {
      Rational total = 0;
      for (const auto& h : enumerate_models(m).models) total += density(h, g);
      CHECK(total == 1);
    }
  }
}

TEST_CASE("blow-up evaluation") {
  const SmallGraph c5 = cycle_graph(5);
  CHECK(eval_blowup(AlgebraElement::graph(canonical_form(c5)), c5) == Rational(120, 3125));
  CHECK(eval_blowup(rho(), c5) == Rational(2, 5));
  CHECK(eval_blowup(AlgebraElement::unit(kTrivial), michael_graph()) == 1);
  CHECK_THROWS_AS(eval_blowup(AlgebraElement::unit(sigma_type(1)), c5), FlagError);

  // Against the sampling oracle, and multiplicativity.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const SmallGraph g = oracle::random_triangle_free(3 + trial % 3, rng);
    for (const auto& h : enumerate_models(1 + trial % 4).models)
      CHECK(eval_blowup(AlgebraElement::graph(h), g) == oracle::blowup_limit_density(h, g));
    const AlgebraElement a = random_element(kTrivial, 3, rng);
    const AlgebraElement b = random_element(kTrivial, 2, rng);
    CHECK(eval_blowup(flag_product(a, b), g) == eval_blowup(a, g) * eval_blowup(b, g));
    CHECK(eval_blowup(lift(a, 5), g) == eval_blowup(a, g));
  }
}

TEST_CASE("algebra element bookkeeping") {
  AlgebraElement a = rho();
  a -= rho();
  CHECK(a.is_zero());
  CHECK(a.max_flag_size() == 0);
  CHECK_THROWS_AS(AlgebraElement::unit(sigma_type(1)) + AlgebraElement::unit(sigma_type(2)), FlagError);
  CHECK_THROWS_AS(flag_product(AlgebraElement::unit(sigma_type(1)), rho()), FlagError);
  CHECK_THROWS(Flag::graph(complete_graph(3)));
  const std::vector<int> theta{0, 1};
  CHECK_THROWS(Flag::from_embedding(cycle_graph(5), theta, sigma_type(1)));  // wrong type size
}
