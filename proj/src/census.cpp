#include "pentaflag/census.hpp"

#include "pentaflag/parallel.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>

namespace pentaflag {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxCensusOrder) {
    throw std::out_of_range("census order must be in 1.." + std::to_string(kMaxCensusOrder));
  }
}

bool independent(const SmallGraph& g, VertexMask s) {
  for (VertexMask m = s; m != 0; m &= m - 1) {
    if (g.neighbors(std::countr_zero(m)) & s) return false;
  }
  return true;
}

void sort_by_graph6(std::vector<SmallGraph>& graphs) {
  std::vector<std::pair<std::string, SmallGraph>> keyed;
  keyed.reserve(graphs.size());
  for (auto& g : graphs) keyed.emplace_back(to_graph6(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  graphs.clear();
  for (auto& [key, g] : keyed) graphs.push_back(std::move(g));
}

std::mutex cache_mutex;
std::array<std::unique_ptr<ModelCensus>, kMaxCensusOrder> cache;

}  // namespace

int ModelCensus::index_of(const SmallGraph& g) const {
  if (g.order() != n) return -1;
  const SmallGraph c = canonical_form(g);
  const auto it = std::find(models.begin(), models.end(), c);
  return it == models.end() ? -1 : static_cast<int>(it - models.begin());
}

std::vector<SmallGraph> augment_census(const std::vector<SmallGraph>& parents, unsigned workers) {
  if (workers == 0) workers = default_workers();
  std::vector<std::unordered_set<SmallGraph, SmallGraphHash>> found(workers);
  parallel_for(parents.size(), workers, [&](std::size_t i, unsigned w) {
    const SmallGraph& p = parents[i];
    const VertexMask limit = p.all_vertices();
    for (VertexMask s = 0;; ++s) {
      if (independent(p, s)) {
        SmallGraph child = p;
        child.add_vertex(s);
        found[w].insert(canonical_form(child));
      }
      if (s == limit) break;
    }
  });
  std::unordered_set<SmallGraph, SmallGraphHash> merged;
  for (auto& set : found) merged.insert(set.begin(), set.end());
  std::vector<SmallGraph> out(merged.begin(), merged.end());
  sort_by_graph6(out);
  return out;
}

const ModelCensus& enumerate_models(int n, unsigned workers) {
  check_order(n);
  if (n == kMaxCensusOrder) {
    throw std::out_of_range("order 11 is only available through enumerate_models_stream");
  }
  std::lock_guard lock(cache_mutex);
  for (int m = 1; m <= n; ++m) {
    if (cache[m - 1]) continue;
    auto census = std::make_unique<ModelCensus>();
    census->n = m;
    census->models = m == 1 ? std::vector<SmallGraph>{SmallGraph(1)}
                            : augment_census(cache[m - 2]->models, workers);
    cache[m - 1] = std::move(census);
  }
  return *cache[n - 1];
}

void enumerate_models_stream(int n, const std::function<void(const SmallGraph&)>& visitor,
                             unsigned workers) {
  check_order(n);
  if (n < kMaxCensusOrder) {
    for (const auto& g : enumerate_models(n, workers).models) visitor(g);
    return;
  }
  const auto models = augment_census(enumerate_models(n - 1, workers).models, workers);
  for (const auto& g : models) visitor(g);
}

}  // namespace pentaflag
