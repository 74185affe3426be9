#pragma once

#include "pentaflag/graph.hpp"

#include <functional>
#include <vector>

namespace pentaflag {

inline constexpr int kMaxCensusOrder = 11;

/// Triangle-free graphs on n vertices up to isomorphism, canonical, sorted by graph6.
struct ModelCensus {
  int n = 0;
  std::vector<SmallGraph> models;

  std::size_t size() const { return models.size(); }
  /// Index of the canonical form of g, or -1 if absent.
  int index_of(const SmallGraph& g) const;
};

/// Cached for n <= 10. Throws std::out_of_range outside 1..11.
const ModelCensus& enumerate_models(int n, unsigned workers = 0);

/// Visits every model of order n exactly once in census order; n = 11 is not cached.
void enumerate_models_stream(int n, const std::function<void(const SmallGraph&)>& visitor,
                             unsigned workers = 0);

/// One augmentation step: all canonical triangle-free one-vertex extensions of
/// `parents`, deduplicated and sorted by graph6.
std::vector<SmallGraph> augment_census(const std::vector<SmallGraph>& parents, unsigned workers);

}  // namespace pentaflag
