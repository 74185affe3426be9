#pragma once

#include "pentaflag/graph.hpp"
#include "pentaflag/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pentaflag {

/// Limit density of `h` in the balanced blow-ups of `g`:
/// m! / |Aut(h)| * s(h, g) / n^m.
Rational phi_blowup_density(const SmallGraph& h, const SmallGraph& g);

/// The twin-free shortcut p(h, g) * (n)_m / n^m. Throws if `h` has twins.
Rational phi_blowup_density_twin_free(const SmallGraph& h, const SmallGraph& g);

struct BlowupSpec {
  DenseGraph base;
  std::vector<int> parts;  // class size per base vertex, all >= 1
};

/// Parses "graph6:k1,k2,...".
BlowupSpec parse_blowup_spec(std::string_view text);
std::string format_blowup_spec(const BlowupSpec& spec);

/// Vertex (v, i) gets index offset(v) + i; classes are independent, adjacent base
/// vertices become complete bipartite pairs of classes.
DenseGraph blowup(const BlowupSpec& spec);
DenseGraph balanced_blowup(const SmallGraph& base, int k);

inline constexpr int kMaxPentagonGraphOrder = 256;

/// Number of 5-cycles. Throws std::invalid_argument on graphs with a triangle.
std::uint64_t count_pentagons(const DenseGraph& g);
std::uint64_t count_pentagons(const SmallGraph& g);

/// l^(5-a) (l+1)^a for n = 5l + a.
BigInt chi(int n);

/// The 8-cycle with its four long diagonals.
SmallGraph michael_graph();

/// Part vectors of the almost balanced pentagon blow-ups on n vertices, one per
/// isomorphism class (dihedral orbit), lexicographically smallest representative.
std::vector<std::vector<int>> almost_balanced_part_vectors(int n);
std::vector<DenseGraph> almost_balanced_blowups(int n);

struct ExtremalReport {
  int n = 0;
  std::uint64_t max_pentagons = 0;
  BigInt chi;
  std::vector<std::string> extremal_graph6;   // sorted
  std::vector<std::string> sporadic_graph6;   // extremal graphs that are not almost balanced blow-ups
  bool all_almost_balanced = false;
  bool sporadic_present = false;
  std::size_t models_scanned = 0;
};

inline constexpr int kMinExhaustiveOrder = 5;
inline constexpr int kMaxExhaustiveOrder = 10;

/// Exact maximum pentagon count over all triangle-free graphs on n vertices.
ExtremalReport exhaustive_max_pentagons(int n, unsigned workers = 0);

/// 5^-n times the sum of the multinomials n! / prod |alpha^-1(i)|! over the distinct
/// pentagon-typed flags F_alpha, one per strong homomorphism alpha: h -> C5 up to Aut(h).
Rational strong_hom_expansion(const SmallGraph& h);

}  // namespace pentaflag
