#include "pentaflag/flag_algebra.hpp"

#include "pentaflag/extremal.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace pentaflag {

namespace {

template <typename Key, typename Value>
class Memo {
 public:
  template <typename Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> map_;
};

std::vector<std::vector<int>> flag_cells(int k, int n) {
  std::vector<std::vector<int>> cells;
  for (int i = 0; i < k; ++i) cells.push_back({i});
  std::vector<int> rest;
  for (int v = k; v < n; ++v) rest.push_back(v);
  cells.push_back(std::move(rest));
  return cells;
}

VertexMask label_mask(int k) { return k == 0 ? 0 : ((VertexMask{1} << k) - 1); }

VertexMask mask_from_labels(const TypeSigma& type, std::span<const int> labels) {
  VertexMask m = 0;
  for (int l : labels) {
    if (l < 1 || l > type.size()) throw FlagError("label " + std::to_string(l) + " out of range");
    m |= VertexMask{1} << (l - 1);
  }
  return m;
}

bool independent(const SmallGraph& g, VertexMask s) {
  for (VertexMask m = s; m != 0; m &= m - 1) {
    if (g.neighbors(std::countr_zero(m)) & s) return false;
  }
  return true;
}

// Flag induced on the labels plus the unlabeled vertices in `free_mask`.
Flag subflag(const Flag& f, VertexMask free_mask) {
  return Flag::from_labeled_prefix(f.underlying().induced(label_mask(f.type_size()) | free_mask),
                                   f.type());
}

VertexMask free_vertices(const Flag& f) {
  return f.underlying().all_vertices() & ~label_mask(f.type_size());
}

void require_same_type(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.type() != b.type()) throw FlagError("algebra elements over different types");
}

Memo<std::pair<TypeSigma, int>, std::vector<Flag>> flag_lists;
Memo<std::pair<Flag, Flag>, Rational> densities;
Memo<std::pair<Flag, Flag>, std::vector<std::pair<Flag, Rational>>> products;
Memo<Flag, Rational> averaging_factors;

}  // namespace

TypeSigma::TypeSigma(SmallGraph graph) : graph_(std::move(graph)) {
  if (!is_triangle_free(graph_)) throw FlagError("type must be triangle-free");
}

bool TypeSigma::is_independent(VertexMask label_mask_) const { return independent(graph_, label_mask_); }

TypeSigma sigma_type(int edges) {
  switch (edges) {
    case 0: return TypeSigma(SmallGraph(3));
    case 1: return TypeSigma(SmallGraph(3, {{0, 1}}));
    case 2: return TypeSigma(SmallGraph(3, {{0, 2}, {1, 2}}));
    default: throw FlagError("sigma types exist for 0, 1 or 2 edges");
  }
}

TypeSigma type_P() { return TypeSigma(cycle_graph(5)); }

Flag Flag::from_embedding(const SmallGraph& g, std::span<const int> theta, const TypeSigma& type) {
  const int k = type.size();
  if (static_cast<int>(theta.size()) != k) throw FlagError("embedding size differs from type size");
  if (k > g.order()) throw FlagError("flag smaller than its type");
  if (!is_triangle_free(g)) throw FlagError("flag graph is not triangle-free");
  std::vector<int> order(theta.begin(), theta.end());
  VertexMask used = 0;
  for (int v : order) {
    if (v < 0 || v >= g.order() || ((used >> v) & 1U)) throw FlagError("embedding is not injective");
    used |= VertexMask{1} << v;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!((used >> v) & 1U)) order.push_back(v);
  }
  const SmallGraph labeled_first = g.permuted(order);
  if (labeled_first.induced(label_mask(k)) != type.graph()) {
    throw FlagError("labeled vertices do not induce the type");
  }
  return Flag(canonical_labeling(labeled_first, flag_cells(k, g.order())).graph, k);
}

Flag Flag::from_labeled_prefix(const SmallGraph& g, const TypeSigma& type) {
  std::vector<int> theta(static_cast<std::size_t>(type.size()));
  std::iota(theta.begin(), theta.end(), 0);
  return from_embedding(g, theta, type);
}

Flag Flag::unit(const TypeSigma& type) { return Flag(type.graph(), type.size()); }

Flag Flag::graph(const SmallGraph& g) {
  if (!is_triangle_free(g)) throw FlagError("graph is not triangle-free");
  return Flag(canonical_form(g), 0);
}

TypeSigma Flag::type() const { return TypeSigma(graph_.induced(label_mask(k_))); }

SmallGraph Flag::free_part() const { return graph_.induced(free_vertices(*this)); }

AlgebraElement AlgebraElement::of(const Flag& f, const Rational& c) {
  AlgebraElement e(f.type());
  e.add_term(f, c);
  return e;
}

AlgebraElement AlgebraElement::constant(const TypeSigma& type, const Rational& c) {
  AlgebraElement e(type);
  e.add_term(Flag::unit(type), c);
  return e;
}

Rational AlgebraElement::coefficient(const Flag& f) const {
  const auto it = terms_.find(f);
  return it == terms_.end() ? Rational(0) : it->second;
}

int AlgebraElement::max_flag_size() const {
  int m = type_.size();
  for (const auto& [f, c] : terms_) m = std::max(m, f.size());
  return m;
}

void AlgebraElement::add_term(const Flag& f, const Rational& c) {
  if (f.type_size() != type_.size() || f.type() != type_) throw FlagError("flag type mismatch");
  if (c.sign() == 0) return;
  auto [it, inserted] = terms_.emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second.sign() == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_type(*this, o);
  for (const auto& [f, c] : o.terms_) add_term(f, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_type(*this, o);
  for (const auto& [f, c] : o.terms_) add_term(f, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c.sign() == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, v] : terms_) v *= c;
  return *this;
}

const std::vector<Flag>& flags_of_size(const TypeSigma& type, int size) {
  if (size < type.size()) throw FlagError("flag size below type size");
  if (size > SmallGraph::kMaxVertices) throw FlagError("flag size exceeds 32 vertices");
  return flag_lists.get({type, size}, [&] {
    if (size == type.size()) return std::vector<Flag>{Flag::unit(type)};
    std::set<Flag> found;
    for (const Flag& parent : flags_of_size(type, size - 1)) {
      const SmallGraph& p = parent.underlying();
      for (VertexMask s = 0;; ++s) {
        if (independent(p, s)) {
          SmallGraph child = p;
          child.add_vertex(s);
          found.insert(Flag::from_labeled_prefix(child, type));
        }
        if (s == p.all_vertices()) break;
      }
    }
    return std::vector<Flag>(found.begin(), found.end());
  });
}

Flag flag_FV(const TypeSigma& type, std::initializer_list<int> labels) {
  return flag_FV(type, std::span<const int>(labels.begin(), labels.size()));
}

Flag flag_FV(const TypeSigma& type, std::span<const int> labels) {
  const VertexMask v = mask_from_labels(type, labels);
  if (!type.is_independent(v)) throw FlagError("V not independent in the type");
  SmallGraph g = type.graph();
  g.add_vertex(v);
  return Flag::from_labeled_prefix(g, type);
}

AlgebraElement flag_fj(const TypeSigma& type, int j) {
  if (j < 0 || j > type.size()) throw FlagError("j out of range");
  AlgebraElement e(type);
  for_each_subset_of_size(label_mask(type.size()), j, [&](VertexMask v) {
    if (!type.is_independent(v)) return;
    SmallGraph g = type.graph();
    g.add_vertex(v);
    e.add_term(Flag::from_labeled_prefix(g, type), 1);
  });
  return e;
}

Rational flag_density(const Flag& pattern, const Flag& host) {
  if (pattern.type_size() != host.type_size() || pattern.type() != host.type()) {
    throw FlagError("flag type mismatch");
  }
  if (pattern.size() > host.size()) return 0;
  return densities.get({pattern, host}, [&] {
    const int k = host.type_size();
    unsigned long hits = 0;
    for_each_subset_of_size(free_vertices(host), pattern.size() - k, [&](VertexMask a) {
      if (subflag(host, a) == pattern) ++hits;
    });
    return Rational(BigInt(hits), binomial(static_cast<unsigned>(host.size() - k),
                                           static_cast<unsigned>(pattern.size() - k)));
  });
}

namespace {

const std::vector<std::pair<Flag, Rational>>& product_of_flags(const Flag& a, const Flag& b) {
  return products.get({a, b}, [&] {
    const TypeSigma type = a.type();
    const int k = type.size();
    const int size = a.size() + b.size() - k;
    std::vector<std::pair<Flag, Rational>> out;
    const BigInt partitions =
        binomial(static_cast<unsigned>(size - k), static_cast<unsigned>(a.size() - k));
    for (const Flag& host : flags_of_size(type, size)) {
      const VertexMask free = free_vertices(host);
      unsigned long hits = 0;
      for_each_subset_of_size(free, a.size() - k, [&](VertexMask part) {
        if (subflag(host, part) == a && subflag(host, free & ~part) == b) ++hits;
      });
      if (hits > 0) out.emplace_back(host, Rational(BigInt(hits), partitions));
    }
    return out;
  });
}

}  // namespace

AlgebraElement flag_product(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_type(a, b);
  AlgebraElement out(a.type());
  for (const auto& [fa, ca] : a.terms()) {
    for (const auto& [fb, cb] : b.terms()) {
      const Rational c = ca * cb;
      for (const auto& [f, p] : product_of_flags(std::min(fa, fb), std::max(fa, fb))) {
        out.add_term(f, c * p);
      }
    }
  }
  return out;
}

Rational averaging_factor(const Flag& f) {
  const int k = f.type_size();
  if (k == 0) return 1;
  return averaging_factors.get(f, [&] {
    const TypeSigma type = f.type();
    const int n = f.size();
    unsigned long hits = 0;
    std::vector<int> theta(static_cast<std::size_t>(k));
    // Enumerate ordered k-tuples of distinct vertices.
    std::function<void(int, VertexMask)> extend = [&](int i, VertexMask used) {
      if (i == k) {
        if (f.underlying().induced(theta) != type.graph()) return;
        if (Flag::from_embedding(f.underlying(), theta, type) == f) ++hits;
        return;
      }
      for (int v = 0; v < n; ++v) {
        if ((used >> v) & 1U) continue;
        theta[i] = v;
        extend(i + 1, used | (VertexMask{1} << v));
      }
    };
    extend(0, 0);
    return Rational(BigInt(hits), falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
  });
}

AlgebraElement average(const AlgebraElement& a) {
  AlgebraElement out{TypeSigma::trivial()};
  for (const auto& [f, c] : a.terms()) {
    out.add_term(Flag::graph(f.underlying()), c * averaging_factor(f));
  }
  return out;
}

AlgebraElement upward_pi(const TypeSigma& type, const AlgebraElement& g) {
  if (g.type().size() != 0) throw FlagError("upward operator expects a trivial-type element");
  AlgebraElement out(type);
  for (const auto& [h, c] : g.terms()) {
    const SmallGraph target = h.underlying();
    for (const Flag& f : flags_of_size(type, type.size() + h.size())) {
      if (canonical_form(f.free_part()) == target) out.add_term(f, c);
    }
  }
  return out;
}

AlgebraElement lift(const AlgebraElement& a, int size) {
  if (size < a.max_flag_size()) throw FlagError("cannot lift below the largest flag size");
  AlgebraElement out(a.type());
  for (const auto& [f, c] : a.terms()) {
    if (f.size() == size) {
      out.add_term(f, c);
      continue;
    }
    for (const Flag& host : flags_of_size(a.type(), size)) {
      const Rational p = flag_density(f, host);
      if (p.sign() != 0) out.add_term(host, c * p);
    }
  }
  return out;
}

Rational eval_blowup(const AlgebraElement& a, const SmallGraph& g) {
  if (a.type().size() != 0) throw FlagError("blow-up evaluation needs a trivial-type element");
  Rational total = 0;
  for (const auto& [h, c] : a.terms()) total += c * phi_blowup_density(h.underlying(), g);
  return total;
}

}  // namespace pentaflag
