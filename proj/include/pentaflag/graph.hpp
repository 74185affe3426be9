#pragma once

#include "pentaflag/rational.hpp"

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pentaflag {

using VertexMask = std::uint32_t;

/// Undirected simple graph on at most 32 vertices, one adjacency bitset per vertex.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 32;

  SmallGraph() = default;
  explicit SmallGraph(int n);
  SmallGraph(int n, std::initializer_list<std::pair<int, int>> edges);
  SmallGraph(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  VertexMask all_vertices() const { return n_ == 32 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1); }
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Appends a vertex adjacent to `mask`; returns its index.
  int add_vertex(VertexMask mask = 0);

  /// Subgraph induced on the set bits of `mask`, vertices kept in increasing order.
  SmallGraph induced(VertexMask mask) const;
  /// Subgraph induced on `vertices`; new vertex i is old vertex vertices[i].
  SmallGraph induced(std::span<const int> vertices) const;
  /// Relabeling: new vertex i is old vertex order[i]. `order` must be a permutation.
  SmallGraph permuted(std::span<const int> order) const;

  const std::array<VertexMask, kMaxVertices>& rows() const { return adj_; }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
  friend std::strong_ordering operator<=>(const SmallGraph& a, const SmallGraph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.adj_ <=> b.adj_;
  }

 private:
  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

struct SmallGraphHash {
  std::size_t operator()(const SmallGraph& g) const noexcept;
};

/// Simple graph with dynamic vertex count, used where blow-ups exceed 32 vertices.
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(int n);
  explicit DenseGraph(const SmallGraph& g);

  int order() const { return n_; }
  std::size_t words() const { return words_; }
  bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1U; }
  void add_edge(int u, int v);
  std::int64_t edge_count() const;
  int degree(int v) const;
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  bool fits_small() const { return n_ <= SmallGraph::kMaxVertices; }
  SmallGraph to_small() const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_graph6(const SmallGraph& g);
std::string to_graph6(const DenseGraph& g);
DenseGraph dense_from_graph6(std::string_view text);
/// Throws Graph6Error if the encoded graph has more than 32 vertices.
SmallGraph from_graph6(std::string_view text);

// Named graphs used throughout.
SmallGraph empty_graph(int n);
SmallGraph complete_graph(int n);
SmallGraph cycle_graph(int n);
SmallGraph path_graph(int n);
SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);

bool is_triangle_free(const SmallGraph& g);
bool is_triangle_free(const DenseGraph& g);
bool is_twin_free(const SmallGraph& g);

/// Canonical representative of the isomorphism class of `g`.
SmallGraph canonical_form(const SmallGraph& g);
bool is_canonical(const SmallGraph& g);
bool are_isomorphic(const SmallGraph& a, const SmallGraph& b);

/// Canonical labeling relative to an ordered vertex partition. Automorphisms and
/// isomorphisms are required to map each initial cell onto itself.
struct CanonicalLabeling {
  SmallGraph graph;        // the canonical graph
  std::vector<int> order;  // canonical vertex i is original vertex order[i]
};
CanonicalLabeling canonical_labeling(const SmallGraph& g,
                                     const std::vector<std::vector<int>>& initial_cells);

/// |Aut(g)| (respecting `initial_cells` when given).
BigInt automorphism_count(const SmallGraph& g);
BigInt automorphism_count(const SmallGraph& g,
                          const std::vector<std::vector<int>>& initial_cells);

/// Number of |V(h)|-subsets of V(g) inducing a copy of h.
std::uint64_t count_induced(const SmallGraph& h, const SmallGraph& g);
/// p(h, g): induced density.
Rational density(const SmallGraph& h, const SmallGraph& g);

/// Maps V(h) -> V(g) with adjacency preserved in both directions (non-injective allowed).
BigInt strong_hom_count(const SmallGraph& h, const SmallGraph& g);
void for_each_strong_hom(const SmallGraph& h, const SmallGraph& g,
                         const std::function<void(std::span<const int>)>& visit);

/// Ordinary graph homomorphisms (edges to edges).
void for_each_homomorphism(const SmallGraph& h, const SmallGraph& g,
                           const std::function<void(std::span<const int>)>& visit);

/// Visits every k-subset of the set bits in `universe` as a mask.
template <typename Visit>
void for_each_subset_of_size(VertexMask universe, int k, Visit&& visit) {
  if (k == 0) {
    visit(VertexMask{0});
    return;
  }
  std::array<int, 32> elems{};
  int m = 0;
  for (VertexMask u = universe; u != 0; u &= u - 1) elems[m++] = std::countr_zero(u);
  if (k > m) return;
  std::array<int, 32> idx{};
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexMask mask = 0;
    for (int i = 0; i < k; ++i) mask |= VertexMask{1} << elems[idx[i]];
    visit(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace pentaflag
