// Canonical labeling by partition refinement and individualization, with
// automorphism pruning of the search tree.

#include "pentaflag/graph.hpp"

#include <algorithm>
#include <numeric>

namespace pentaflag {

namespace {

using Cells = std::vector<std::vector<int>>;

VertexMask mask_of(const std::vector<int>& cell) {
  VertexMask m = 0;
  for (int v : cell) m |= VertexMask{1} << v;
  return m;
}

// Splits cells by neighbor counts into other cells until the partition is equitable.
// Depends only on the cell order and the graph, so it commutes with relabeling.
void refine(const SmallGraph& g, Cells& cells) {
  bool changed = true;
  std::array<int, SmallGraph::kMaxVertices> count{};
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexMask splitter = mask_of(cells[s]);
      for (std::size_t x = 0; x < cells.size(); ++x) {
        auto& cell = cells[x];
        if (cell.size() == 1) continue;
        bool uniform = true;
        for (int v : cell) {
          count[v] = std::popcount(g.neighbors(v) & splitter);
          uniform = uniform && count[v] == count[cell.front()];
        }
        if (uniform) continue;
        std::vector<int> sorted = cell;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [&](int a, int b) { return count[a] < count[b]; });
        Cells pieces;
        for (int v : sorted) {
          if (pieces.empty() || count[pieces.back().front()] != count[v]) pieces.emplace_back();
          pieces.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

int target_cell(const Cells& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() > 1) return static_cast<int>(i);
  }
  return -1;
}

Cells individualize(const Cells& cells, int t, int v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    if (i != t) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back({v});
    std::vector<int> rest;
    for (int w : cells[i]) {
      if (w != v) rest.push_back(w);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

std::vector<int> leaf_order(const Cells& cells) {
  std::vector<int> order;
  order.reserve(cells.size());
  for (const auto& c : cells) order.push_back(c.front());
  return order;
}

std::vector<std::size_t> shape(const Cells& cells) {
  std::vector<std::size_t> s;
  s.reserve(cells.size());
  for (const auto& c : cells) s.push_back(c.size());
  return s;
}

Cells initial_partition(const SmallGraph& g, const std::vector<std::vector<int>>& initial) {
  Cells cells;
  VertexMask seen = 0;
  for (const auto& c : initial) {
    if (c.empty()) continue;
    for (int v : c) {
      if (v < 0 || v >= g.order() || ((seen >> v) & 1U)) {
        throw std::invalid_argument("initial cells must partition the vertex set");
      }
      seen |= VertexMask{1} << v;
    }
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    cells.push_back(std::move(sorted));
  }
  if (seen != g.all_vertices()) throw std::invalid_argument("initial cells must cover every vertex");
  return cells;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SmallGraph& g) : g_(g) {}

  CanonicalLabeling run(Cells cells) {
    std::vector<int> prefix;
    visit(std::move(cells), prefix);
    return {best_, best_order_};
  }

 private:
  void visit(Cells cells, std::vector<int>& prefix) {
    refine(g_, cells);
    const int t = target_cell(cells);
    if (t < 0) {
      leaf(leaf_order(cells));
      return;
    }
    std::vector<int> explored;
    for (int w : cells[t]) {
      if (!explored.empty() && pruned(w, explored, prefix)) continue;
      explored.push_back(w);
      prefix.push_back(w);
      visit(individualize(cells, t, w), prefix);
      prefix.pop_back();
    }
  }

  // True if `w` shares an orbit with an explored sibling under automorphisms fixing `prefix`.
  bool pruned(int w, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    UnionFind uf(g_.order());
    bool any = false;
    for (const auto& gen : generators_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gen[p] == p; })) continue;
      any = true;
      for (int v = 0; v < g_.order(); ++v) uf.unite(v, gen[v]);
    }
    if (!any) return false;
    return std::any_of(explored.begin(), explored.end(),
                       [&](int e) { return uf.find(e) == uf.find(w); });
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gen(from.size());
    bool identity = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
      gen[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(std::move(gen));
  }

  void leaf(std::vector<int> order) {
    SmallGraph candidate = g_.permuted(order);
    if (!have_first_) {
      have_first_ = true;
      first_ = candidate;
      first_order_ = order;
      best_ = std::move(candidate);
      best_order_ = std::move(order);
      return;
    }
    if (candidate == first_) record_automorphism(first_order_, order);
    if (candidate == best_) {
      record_automorphism(best_order_, order);
    } else if (candidate < best_) {
      best_ = std::move(candidate);
      best_order_ = std::move(order);
    }
  }

  const SmallGraph& g_;
  bool have_first_ = false;
  SmallGraph first_;
  std::vector<int> first_order_;
  SmallGraph best_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> generators_;
};

// Searches the subtree below `cells` for a leaf equal to `target`, matching the
// partition shapes recorded along the first path.
class EquivalentLeafSearch {
 public:
  EquivalentLeafSearch(const SmallGraph& g, const SmallGraph& target,
                       const std::vector<std::vector<std::size_t>>& shapes)
      : g_(g), target_(target), shapes_(shapes) {}

  bool exists(Cells cells, std::size_t level) {
    refine(g_, cells);
    if (shape(cells) != shapes_[level]) return false;
    const int t = target_cell(cells);
    if (t < 0) return g_.permuted(leaf_order(cells)) == target_;
    for (int w : cells[t]) {
      if (exists(individualize(cells, t, w), level + 1)) return true;
    }
    return false;
  }

 private:
  const SmallGraph& g_;
  const SmallGraph& target_;
  const std::vector<std::vector<std::size_t>>& shapes_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const SmallGraph& g,
                                     const std::vector<std::vector<int>>& initial_cells) {
  if (g.order() == 0) return {g, {}};
  return CanonicalSearch(g).run(initial_partition(g, initial_cells));
}

SmallGraph canonical_form(const SmallGraph& g) {
  if (g.order() == 0) return g;
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return CanonicalSearch(g).run({all}).graph;
}

bool is_canonical(const SmallGraph& g) { return canonical_form(g) == g; }

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

BigInt automorphism_count(const SmallGraph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return automorphism_count(g, {all});
}

// |Aut| as the product, along the first path of the search tree, of the orbit
// sizes of each individualized vertex in the stabilizer of its predecessors.
BigInt automorphism_count(const SmallGraph& g,
                          const std::vector<std::vector<int>>& initial_cells) {
  if (g.order() == 0) return 1;
  std::vector<Cells> nodes;
  std::vector<std::vector<std::size_t>> shapes;
  Cells cells = initial_partition(g, initial_cells);
  refine(g, cells);
  while (true) {
    nodes.push_back(cells);
    shapes.push_back(shape(cells));
    const int t = target_cell(cells);
    if (t < 0) break;
    cells = individualize(cells, t, cells[t].front());
    refine(g, cells);
  }
  const SmallGraph first_leaf = g.permuted(leaf_order(nodes.back()));
  EquivalentLeafSearch search(g, first_leaf, shapes);

  BigInt total = 1;
  for (std::size_t level = 0; level + 1 < nodes.size(); ++level) {
    const Cells& node = nodes[level];
    const int t = target_cell(node);
    unsigned long orbit = 1;
    for (std::size_t i = 1; i < node[t].size(); ++i) {
      if (search.exists(individualize(node, t, node[t][i]), level + 1)) ++orbit;
    }
    total *= orbit;
  }
  return total;
}

}  // namespace pentaflag
