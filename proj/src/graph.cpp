#include "pentaflag/graph.hpp"

#include <algorithm>
#include <cassert>

namespace pentaflag {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
}

}  // namespace

SmallGraph::SmallGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("SmallGraph supports 0..32 vertices");
}

SmallGraph::SmallGraph(int n, std::initializer_list<std::pair<int, int>> edges)
    : SmallGraph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

SmallGraph::SmallGraph(int n, std::span<const std::pair<int, int>> edges) : SmallGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int SmallGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void SmallGraph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u] |= VertexMask{1} << v;
  adj_[v] |= VertexMask{1} << u;
}

void SmallGraph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  adj_[u] &= ~(VertexMask{1} << v);
  adj_[v] &= ~(VertexMask{1} << u);
}

int SmallGraph::add_vertex(VertexMask mask) {
  if (n_ == kMaxVertices) throw std::out_of_range("SmallGraph supports 0..32 vertices");
  if ((mask & ~all_vertices()) != 0) throw std::out_of_range("neighbor mask out of range");
  const int v = n_++;
  adj_[v] = mask;
  for (VertexMask m = mask; m != 0; m &= m - 1) adj_[std::countr_zero(m)] |= VertexMask{1} << v;
  return v;
}

SmallGraph SmallGraph::induced(VertexMask mask) const {
  std::array<int, kMaxVertices> verts{};
  int k = 0;
  for (VertexMask m = mask & all_vertices(); m != 0; m &= m - 1) verts[k++] = std::countr_zero(m);
  return induced(std::span<const int>(verts.data(), k));
}

SmallGraph SmallGraph::induced(std::span<const int> vertices) const {
  SmallGraph out(static_cast<int>(vertices.size()));
  const int k = out.n_;
  for (int i = 0; i < k; ++i) {
    const VertexMask row = adj_[vertices[i]];
    VertexMask r = 0;
    for (int j = 0; j < k; ++j) r |= ((row >> vertices[j]) & 1U) << j;
    out.adj_[i] = r;
  }
  return out;
}

SmallGraph SmallGraph::permuted(std::span<const int> order) const {
  assert(static_cast<int>(order.size()) == n_);
  return induced(order);
}

std::size_t SmallGraphHash::operator()(const SmallGraph& g) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(g.order());
  for (int v = 0; v < g.order(); ++v) {
    h ^= g.neighbors(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

DenseGraph::DenseGraph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
  if (n < 0) throw std::out_of_range("negative vertex count");
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
}

DenseGraph::DenseGraph(const SmallGraph& g) : DenseGraph(g.order()) {
  for (auto [u, v] : g.edges()) add_edge(u, v);
}

void DenseGraph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int DenseGraph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::int64_t DenseGraph::edge_count() const {
  std::int64_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

SmallGraph DenseGraph::to_small() const {
  if (!fits_small()) throw std::out_of_range("graph has more than 32 vertices");
  SmallGraph g(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

// graph6: N(n) header followed by the upper triangle, column by column, six bits per byte.
namespace {

template <typename G>
std::string encode_graph6(const G& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw Graph6Error("graph too large for graph6 encoding");
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

}  // namespace

std::string to_graph6(const SmallGraph& g) { return encode_graph6(g); }
std::string to_graph6(const DenseGraph& g) { return encode_graph6(g); }

DenseGraph dense_from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 character");
  }
  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw Graph6Error("unsupported graph6 size header");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  const std::int64_t bit_count = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() - pos != expected) {
    throw Graph6Error("graph6 length mismatch: expected " + std::to_string(expected) +
                      " data bytes, got " + std::to_string(text.size() - pos));
  }
  DenseGraph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

SmallGraph from_graph6(std::string_view text) {
  DenseGraph d = dense_from_graph6(text);
  if (!d.fits_small()) throw Graph6Error("graph has more than 32 vertices");
  return d.to_small();
}

SmallGraph empty_graph(int n) { return SmallGraph(n); }

SmallGraph complete_graph(int n) {
  SmallGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SmallGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  SmallGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SmallGraph path_graph(int n) {
  SmallGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
  SmallGraph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

bool is_triangle_free(const SmallGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (VertexMask m = g.neighbors(u) & ~((VertexMask{2} << u) - 1); m != 0; m &= m - 1) {
      if (g.neighbors(u) & g.neighbors(std::countr_zero(m))) return false;
    }
  }
  return true;
}

bool is_triangle_free(const DenseGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    const auto ru = g.row(u);
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      const auto rv = g.row(v);
      for (std::size_t w = 0; w < g.words(); ++w) {
        if (ru[w] & rv[w]) return false;
      }
    }
  }
  return true;
}

bool is_twin_free(const SmallGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.neighbors(u) == g.neighbors(v)) return false;
    }
  }
  return true;
}

std::uint64_t count_induced(const SmallGraph& h, const SmallGraph& g) {
  if (h.order() > g.order()) {
    throw std::invalid_argument("pattern has more vertices than host");
  }
  const SmallGraph target = canonical_form(h);
  const int edges = h.edge_count();
  std::uint64_t count = 0;
  for_each_subset_of_size(g.all_vertices(), h.order(), [&](VertexMask mask) {
    const SmallGraph sub = g.induced(mask);
    if (sub.edge_count() != edges) return;
    if (canonical_form(sub) == target) ++count;
  });
  return count;
}

Rational density(const SmallGraph& h, const SmallGraph& g) {
  const std::uint64_t c = count_induced(h, g);
  return Rational(BigInt(static_cast<unsigned long>(c)),
                  binomial(static_cast<unsigned>(g.order()), static_cast<unsigned>(h.order())));
}

namespace {

// Backtracking over maps V(h) -> V(g). `strong` also requires non-edges to map to non-edges.
class MapSearch {
 public:
  MapSearch(const SmallGraph& h, const SmallGraph& g, bool strong)
      : h_(h), g_(g), strong_(strong), image_(static_cast<std::size_t>(h.order()), -1) {}

  void run(const std::function<void(std::span<const int>)>& visit) { extend(0, visit); }

  BigInt count() {
    if (h_.order() == 0) return 1;
    BigInt total = 0;
    count_from(0, total);
    return total;
  }

 private:
  VertexMask candidates(int v) const {
    VertexMask cand = g_.all_vertices();
    for (int u = 0; u < v; ++u) {
      const VertexMask nu = g_.neighbors(image_[u]);
      if (h_.adjacent(u, v)) {
        cand &= nu;
      } else if (strong_) {
        cand &= ~nu;
      }
    }
    return cand;
  }

  void extend(int v, const std::function<void(std::span<const int>)>& visit) {
    if (v == h_.order()) {
      visit(image_);
      return;
    }
    for (VertexMask c = candidates(v); c != 0; c &= c - 1) {
      image_[v] = std::countr_zero(c);
      extend(v + 1, visit);
    }
  }

  void count_from(int v, BigInt& total) {
    const VertexMask cand = candidates(v);
    if (v + 1 == h_.order()) {
      total += std::popcount(cand);
      return;
    }
    for (VertexMask c = cand; c != 0; c &= c - 1) {
      image_[v] = std::countr_zero(c);
      count_from(v + 1, total);
    }
  }

  const SmallGraph& h_;
  const SmallGraph& g_;
  bool strong_;
  std::vector<int> image_;
};

}  // namespace

BigInt strong_hom_count(const SmallGraph& h, const SmallGraph& g) {
  return MapSearch(h, g, true).count();
}

void for_each_strong_hom(const SmallGraph& h, const SmallGraph& g,
                         const std::function<void(std::span<const int>)>& visit) {
  MapSearch(h, g, true).run(visit);
}

void for_each_homomorphism(const SmallGraph& h, const SmallGraph& g,
                           const std::function<void(std::span<const int>)>& visit) {
  MapSearch(h, g, false).run(visit);
}

}  // namespace pentaflag
