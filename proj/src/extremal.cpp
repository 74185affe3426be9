#include "pentaflag/extremal.hpp"

#include "pentaflag/census.hpp"
#include "pentaflag/flag_algebra.hpp"
#include "pentaflag/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace pentaflag {

Rational phi_blowup_density(const SmallGraph& h, const SmallGraph& g) {
  const auto m = static_cast<unsigned>(h.order());
  const auto n = static_cast<unsigned>(g.order());
  if (m == 0) return 1;
  if (n == 0) return 0;
  return Rational(factorial(m) * strong_hom_count(h, g), automorphism_count(h) * power(n, m));
}

Rational phi_blowup_density_twin_free(const SmallGraph& h, const SmallGraph& g) {
  if (!is_twin_free(h)) throw std::invalid_argument("pattern graph has twins");
  const auto m = static_cast<unsigned>(h.order());
  const auto n = static_cast<unsigned>(g.order());
  if (m == 0) return 1;
  if (m > n) return 0;
  return density(h, g) * Rational(falling_factorial(n, m), power(n, m));
}

BlowupSpec parse_blowup_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("blow-up spec needs 'graph6:k1,k2,...'");
  BlowupSpec spec{dense_from_graph6(text.substr(0, colon)), {}};
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    int k = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
    if (ec != std::errc() || ptr != item.data() + item.size() || k < 1) {
      throw std::invalid_argument("class sizes must be positive integers, got '" + std::string(item) + "'");
    }
    spec.parts.push_back(k);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw std::invalid_argument("trailing comma in blow-up spec");
  }
  if (static_cast<int>(spec.parts.size()) != spec.base.order()) {
    throw std::invalid_argument("blow-up spec lists " + std::to_string(spec.parts.size()) +
                                " class sizes for a base graph on " +
                                std::to_string(spec.base.order()) + " vertices");
  }
  return spec;
}

std::string format_blowup_spec(const BlowupSpec& spec) {
  std::string out = to_graph6(spec.base) + ":";
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(spec.parts[i]);
  }
  return out;
}

DenseGraph blowup(const BlowupSpec& spec) {
  const int b = spec.base.order();
  if (static_cast<int>(spec.parts.size()) != b) throw std::invalid_argument("one class size per base vertex");
  std::vector<int> offset(static_cast<std::size_t>(b) + 1, 0);
  for (int v = 0; v < b; ++v) {
    if (spec.parts[v] < 1) throw std::invalid_argument("class sizes must be positive");
    offset[v + 1] = offset[v] + spec.parts[v];
  }
  DenseGraph g(offset[b]);
  for (int u = 0; u < b; ++u) {
    for (int v = u + 1; v < b; ++v) {
      if (!spec.base.adjacent(u, v)) continue;
      for (int x = offset[u]; x < offset[u + 1]; ++x) {
        for (int y = offset[v]; y < offset[v + 1]; ++y) g.add_edge(x, y);
      }
    }
  }
  return g;
}

DenseGraph balanced_blowup(const SmallGraph& base, int k) {
  return blowup({DenseGraph(base), std::vector<int>(static_cast<std::size_t>(base.order()), k)});
}

// Rooted closure of 5-paths: every 5-cycle is seen once per starting vertex and direction.
std::uint64_t count_pentagons(const DenseGraph& g) {
  if (g.order() > kMaxPentagonGraphOrder) throw std::out_of_range("pentagon counting supports up to 256 vertices");
  if (!is_triangle_free(g)) throw std::invalid_argument("graph contains a triangle");
  const std::size_t words = g.words();
  std::vector<std::uint64_t> scratch(words);
  std::uint64_t walks = 0;
  const int n = g.order();
  for (int v1 = 0; v1 < n; ++v1) {
    for (int v0 = 0; v0 < n; ++v0) {
      if (!g.adjacent(v0, v1)) continue;
      const auto r0 = g.row(v0);
      for (int v2 = 0; v2 < n; ++v2) {
        if (v2 == v0 || !g.adjacent(v1, v2)) continue;
        for (int v3 = 0; v3 < n; ++v3) {
          if (v3 == v1 || v3 == v0 || !g.adjacent(v2, v3)) continue;
          const auto r3 = g.row(v3);
          std::uint64_t c = 0;
          for (std::size_t w = 0; w < words; ++w) c += std::popcount(r0[w] & r3[w]);
          // v1 and v2 cannot be common neighbours of v0 and v3 without a triangle.
          walks += c;
        }
      }
    }
  }
  return walks / 10;
}

std::uint64_t count_pentagons(const SmallGraph& g) {
  if (!is_triangle_free(g)) throw std::invalid_argument("graph contains a triangle");
  std::uint64_t walks = 0;
  for (int v1 = 0; v1 < g.order(); ++v1) {
    const VertexMask n1 = g.neighbors(v1);
    for (VertexMask a = n1; a != 0; a &= a - 1) {
      const int v0 = std::countr_zero(a);
      for (VertexMask b = n1 & ~(VertexMask{1} << v0); b != 0; b &= b - 1) {
        const int v2 = std::countr_zero(b);
        for (VertexMask c = g.neighbors(v2) & ~(VertexMask{1} << v1); c != 0; c &= c - 1) {
          const int v3 = std::countr_zero(c);
          walks += std::popcount(g.neighbors(v0) & g.neighbors(v3));
        }
      }
    }
  }
  return walks / 10;
}

BigInt chi(int n) {
  if (n < 0) throw std::invalid_argument("chi needs n >= 0");
  const auto l = static_cast<unsigned>(n / 5);
  const auto a = static_cast<unsigned>(n % 5);
  return power(l, 5 - a) * power(l + 1, a);
}

SmallGraph michael_graph() {
  SmallGraph g(8);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

std::vector<std::vector<int>> almost_balanced_part_vectors(int n) {
  if (n < 5) throw std::invalid_argument("almost balanced pentagon blow-ups need n >= 5");
  const int l = n / 5;
  const int a = n % 5;
  std::set<std::vector<int>> classes;
  for (int mask = 0; mask < 32; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != a) continue;
    std::vector<int> parts(5);
    for (int i = 0; i < 5; ++i) parts[i] = l + ((mask >> i) & 1);
    std::vector<int> best = parts;
    for (int r = 0; r < 5; ++r) {
      for (int dir : {1, -1}) {
        std::vector<int> image(5);
        for (int i = 0; i < 5; ++i) image[i] = parts[((r + dir * i) % 5 + 5) % 5];
        best = std::min(best, image);
      }
    }
    classes.insert(best);
  }
  return {classes.begin(), classes.end()};
}

std::vector<DenseGraph> almost_balanced_blowups(int n) {
  std::vector<DenseGraph> out;
  for (const auto& parts : almost_balanced_part_vectors(n)) {
    out.push_back(blowup({DenseGraph(cycle_graph(5)), parts}));
  }
  return out;
}

ExtremalReport exhaustive_max_pentagons(int n, unsigned workers) {
  if (n < kMinExhaustiveOrder || n > kMaxExhaustiveOrder) {
    throw std::out_of_range("exhaustive search supports 5 <= n <= 10");
  }
  if (workers == 0) workers = default_workers();
  const auto& models = enumerate_models(n, workers).models;

  struct Best {
    std::uint64_t count = 0;
    std::vector<std::size_t> argmax;
  };
  std::vector<Best> partial(workers);
  parallel_for(models.size(), workers, [&](std::size_t i, unsigned w) {
    const std::uint64_t c = count_pentagons(models[i]);
    Best& b = partial[w];
    if (c > b.count) {
      b.count = c;
      b.argmax.clear();
    }
    if (c == b.count) b.argmax.push_back(i);
  });
  Best total;
  for (const auto& b : partial) {
    if (b.count > total.count) total = Best{b.count, {}};
    if (b.count == total.count) total.argmax.insert(total.argmax.end(), b.argmax.begin(), b.argmax.end());
  }
  std::sort(total.argmax.begin(), total.argmax.end());

  std::set<SmallGraph> balanced;
  for (const auto& g : almost_balanced_blowups(n)) balanced.insert(canonical_form(g.to_small()));

  ExtremalReport report;
  report.n = n;
  report.max_pentagons = total.count;
  report.chi = chi(n);
  report.models_scanned = models.size();
  for (std::size_t i : total.argmax) {
    const std::string g6 = to_graph6(models[i]);
    report.extremal_graph6.push_back(g6);
    if (!balanced.contains(models[i])) report.sporadic_graph6.push_back(g6);
  }
  report.sporadic_present = !report.sporadic_graph6.empty();
  report.all_almost_balanced = !report.sporadic_present;
  return report;
}

Rational strong_hom_expansion(const SmallGraph& h) {
  if (!is_triangle_free(h)) throw std::invalid_argument("pattern graph contains a triangle");
  const SmallGraph c5 = cycle_graph(5);
  const TypeSigma pentagon = type_P();
  const int m = h.order();
  if (m + 5 > SmallGraph::kMaxVertices) throw std::out_of_range("pattern graph too large");
  // One term per distinct flag F_alpha: maps related by an automorphism of h coincide.
  std::set<Flag> seen;
  BigInt sum = 0;
  const BigInt n_fact = factorial(static_cast<unsigned>(m));
  for_each_strong_hom(h, c5, [&](std::span<const int> alpha) {
    SmallGraph f = c5;
    for (int v = 0; v < m; ++v) {
      f.add_vertex((VertexMask{1} << ((alpha[v] + 1) % 5)) | (VertexMask{1} << ((alpha[v] + 4) % 5)));
    }
    for (auto [u, v] : h.edges()) f.add_edge(5 + u, 5 + v);
    if (!seen.insert(Flag::from_labeled_prefix(f, pentagon)).second) return;
    std::array<unsigned, 5> class_size{};
    for (int v : alpha) ++class_size[v];
    BigInt c = n_fact;
    for (unsigned s : class_size) c /= factorial(s);
    sum += c;
  });
  return Rational(sum, power(5, static_cast<unsigned>(m)));
}

}  // namespace pentaflag
