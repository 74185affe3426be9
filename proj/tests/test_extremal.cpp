#include "oracles.hpp"
#include "pentaflag/census.hpp"
#include "pentaflag/extremal.hpp"

#include <doctest.h>

#include <random>

using namespace pentaflag;

namespace {

SmallGraph C5() { return cycle_graph(5); }

std::uint64_t product(const std::vector<int>& v) {
  std::uint64_t p = 1;
  for (int x : v) p *= static_cast<std::uint64_t>(x);
  return p;
}

}  // namespace

TEST_CASE("blow-ups") {
  const DenseGraph g = blowup(parse_blowup_spec("DLo:2,2,2,2,2"));
  CHECK(g.order() == 10);
  CHECK(g.edge_count() == 20);
  CHECK(is_triangle_free(g));
  const SmallGraph m = michael_graph();
  CHECK(blowup({DenseGraph(m), std::vector<int>(8, 1)}).to_small() == m);
  CHECK(balanced_blowup(C5(), 3) == blowup({DenseGraph(C5()), {3, 3, 3, 3, 3}}));
  // Classes are independent sets; base edges become complete bipartite pairs.
  const DenseGraph b = blowup({DenseGraph(C5()), {1, 2, 3, 1, 2}});
  CHECK(b.order() == 9);
  CHECK(b.edge_count() == 1 * 2 + 2 * 3 + 3 * 1 + 1 * 2 + 2 * 1);
  CHECK_FALSE(b.adjacent(1, 2));
  CHECK(b.adjacent(0, 1));

  CHECK(format_blowup_spec(parse_blowup_spec("DLo:1,2,3,4,5")) == "DLo:1,2,3,4,5");
  for (const char* bad : {"DLo", "DLo:", "DLo:1,2,3,4", "DLo:1,2,3,4,5,6", "DLo:1,2,0,4,5", "DLo:1,2,x,4,5",
                          "D~:1,1,1,1,1", ":1", "DLo:1,,2,3,4"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_blowup_spec(bad), std::invalid_argument);
  }
}

TEST_CASE("pentagon counts") {
  CHECK(count_pentagons(C5()) == 1);
  CHECK(count_pentagons(michael_graph()) == 8);
  CHECK(count_pentagons(DenseGraph(michael_graph())) == 8);
  CHECK(count_pentagons(empty_graph(6)) == 0);
  CHECK_THROWS_AS(count_pentagons(complete_graph(3)), std::invalid_argument);
  CHECK_THROWS_AS(count_pentagons(DenseGraph(complete_graph(3))), std::invalid_argument);
  CHECK_THROWS_AS(count_pentagons(DenseGraph(300)), std::out_of_range);

  for (int k = 1; k <= 10; ++k) CHECK(count_pentagons(balanced_blowup(C5(), k)) == product({k, k, k, k, k}));
  for (int k = 1; k <= 3; ++k) {
    const SmallGraph g = balanced_blowup(C5(), k).to_small();
    CHECK(count_pentagons(g) == count_induced(C5(), g));
  }

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const SmallGraph g = oracle::random_triangle_free(5 + trial % 12, rng);
    CHECK(count_pentagons(g) == oracle::pentagons_by_trace(g));
    CHECK(count_pentagons(DenseGraph(g)) == oracle::pentagons_by_cycles(g));
  }
}

TEST_CASE("pentagons in blow-ups of C5 are transversals") {
  std::vector<int> k(5, 1);
  int checked = 0;
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == 5) {
      CHECK(count_pentagons(blowup({DenseGraph(C5()), k})) == product(k));
      ++checked;
      return;
    }
    for (int x = 1; x <= budget - (4 - i); ++x) {
      k[i] = x;
      rec(i + 1, budget - x);
    }
  };
  rec(0, 25);
  CHECK(checked == 53130);  // C(25, 5) positive vectors with sum <= 25
}

TEST_CASE("chi") {
  CHECK(chi(5) == 1);
  CHECK(chi(8) == 8);
  CHECK(chi(10) == 32);
  CHECK(chi(11) == 48);
  for (int n = 5; n <= 40; ++n) {
    for (const auto& parts : almost_balanced_part_vectors(n)) {
      CHECK(BigInt(static_cast<unsigned long>(product(parts))) == chi(n));
    }
  }
}

TEST_CASE("Michael graph") {
  const SmallGraph m = michael_graph();
  CHECK(m.order() == 8);
  CHECK(m.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(m.degree(v) == 3);
  CHECK(is_triangle_free(m));
  CHECK(count_pentagons(m) == 8);
}

TEST_CASE("almost balanced blow-ups") {
  CHECK(almost_balanced_part_vectors(10).size() == 1);
  CHECK(almost_balanced_part_vectors(11).size() == 1);
  CHECK(almost_balanced_part_vectors(12).size() == 2);
  CHECK(almost_balanced_part_vectors(13).size() == 2);
  for (int n = 5; n <= 20; ++n) {
    const auto graphs = almost_balanced_blowups(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      CHECK(BigInt(static_cast<unsigned long>(count_pentagons(graphs[i]))) == chi(n));
      if (graphs[i].fits_small())
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
          CHECK_FALSE(are_isomorphic(graphs[i].to_small(), graphs[j].to_small()));
    }
  }
}

TEST_CASE("blow-up limit densities") {
  CHECK(phi_blowup_density(C5(), C5()) == Rational(120, 3125));
  CHECK(phi_blowup_density(SmallGraph(1), michael_graph()) == 1);
  CHECK(phi_blowup_density(complete_graph(2), C5()) == Rational(2, 5));
  CHECK(phi_blowup_density(path_graph(5), C5()) == 0);
  CHECK_THROWS(phi_blowup_density_twin_free(cycle_graph(4), C5()));

  // General formula vs the twin-free shortcut, every twin-free H <= 5 against every G <= 6.
  int pairs = 0;
  for (int m = 1; m <= 5; ++m)
    for (const auto& h : enumerate_models(m).models) {
      if (!is_twin_free(h)) continue;
      for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_models(n).models) {
          CHECK(phi_blowup_density(h, g) == phi_blowup_density_twin_free(h, g));
          ++pairs;
        }
    }
  CHECK(pairs > 0);

  // Against the sampling oracle on small cases.
  for (int m = 1; m <= 4; ++m)
    for (const auto& h : enumerate_models(m).models)
      for (const auto& g : enumerate_models(4).models)
        CHECK(phi_blowup_density(h, g) == oracle::blowup_limit_density(h, g));
}

TEST_CASE("densities in finite blow-ups converge to the limit") {
  for (int k = 1; k <= 5; ++k) {
    const SmallGraph g = balanced_blowup(C5(), k).to_small();
    CHECK(density(C5(), g) == Rational(BigInt(k * k * k * k * k), binomial(5 * k, 5)));
  }
}

TEST_CASE("blow-up limits separate non-isomorphic graphs") {
  for (int n = 1; n <= 5; ++n) {
    const auto& models = enumerate_models(n).models;
    for (std::size_t i = 0; i < models.size(); ++i)
      for (std::size_t j = i + 1; j < models.size(); ++j) {
        bool separated = false;
        for (int m = 1; m <= 5 && !separated; ++m)
          for (const auto& h : enumerate_models(m).models)
            if (phi_blowup_density(h, models[i]) != phi_blowup_density(h, models[j])) {
              separated = true;
              break;
            }
        CHECK(separated);
      }
  }
}

TEST_CASE("strong homomorphism expansion") {
  CHECK(strong_hom_expansion(C5()) == Rational(120, 3125));
  CHECK(strong_hom_expansion(SmallGraph(1)) == 1);
  CHECK(strong_hom_expansion(path_graph(5)) == phi_blowup_density(path_graph(5), C5()));
  for (int m = 1; m <= 6; ++m)
    for (const auto& h : enumerate_models(m).models) CHECK(strong_hom_expansion(h) == phi_blowup_density(h, C5()));
}

TEST_CASE("exhaustive pentagon maxima") {
  const ExtremalReport r5 = exhaustive_max_pentagons(5);
  CHECK(r5.max_pentagons == 1);
  CHECK(r5.extremal_graph6 == std::vector<std::string>{to_graph6(canonical_form(C5()))});

  const ExtremalReport r8 = exhaustive_max_pentagons(8, 2);
  CHECK(r8.max_pentagons == 8);
  CHECK(r8.models_scanned == 410);
  CHECK(r8.sporadic_present);
  CHECK(r8.sporadic_graph6 == std::vector<std::string>{to_graph6(canonical_form(michael_graph()))});
  for (const auto& g : almost_balanced_blowups(8)) {
    const std::string code = to_graph6(canonical_form(g.to_small()));
    CHECK(std::find(r8.extremal_graph6.begin(), r8.extremal_graph6.end(), code) != r8.extremal_graph6.end());
  }
  CHECK(r8.extremal_graph6.size() == almost_balanced_blowups(8).size() + 1);

  for (int n = 5; n <= 9; ++n) {
    const ExtremalReport r = exhaustive_max_pentagons(n);
    CHECK(BigInt(static_cast<unsigned long>(r.max_pentagons)) == r.chi);
    CHECK(r.all_almost_balanced == (n != 8));
  }
  CHECK_THROWS_AS(exhaustive_max_pentagons(4), std::out_of_range);
  CHECK_THROWS_AS(exhaustive_max_pentagons(11), std::out_of_range);
}
