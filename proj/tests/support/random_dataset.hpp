#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "warnet/types.hpp"

namespace warnet::testing {

// Portable draws: std distributions differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  bool chance(int percent) { return uniform(0, 99) < percent; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct RandomDatasetLimits {
  int max_wars = 50;
  int max_entities = 30;
  int first_year = 1480;  // some wars straddle the horizon edges
  int last_year = 2020;
  int max_length = 40;
};

/// Dataset with random kinds, continents, intervals, and disjoint sides.
inline Dataset random_dataset(std::uint64_t seed, const RandomDatasetLimits& limits = {}) {
  Rng rng(seed);
  Dataset d;
  const int n = rng.uniform(2, limits.max_entities);
  for (int i = 0; i < n; ++i) {
    Entity e;
    e.id = i;
    e.canonical_name = "E" + std::to_string(rng.uniform(0, 9)) + "_" + std::to_string(i);
    constexpr EntityKind kOthers[] = {EntityKind::kCountry, EntityKind::kEmpire, EntityKind::kAlliance,
                                      EntityKind::kOther};
    e.kind = rng.chance(15) ? EntityKind::kTerrorOrg : kOthers[rng.uniform(0, 3)];
    e.continent = static_cast<Continent>(rng.uniform(0, 7));
    d.entities.push_back(e);
  }
  // Names sorted so ids follow name order, as ingest produces.
  std::sort(d.entities.begin(), d.entities.end(),
            [](const Entity& l, const Entity& r) { return l.canonical_name < r.canonical_name; });
  for (int i = 0; i < n; ++i) d.entities[static_cast<std::size_t>(i)].id = i;

  const int m = rng.uniform(0, limits.max_wars);
  std::vector<EntityId> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  for (int w = 0; w < m; ++w) {
    WarRecord war;
    war.war_id = w;
    war.name = "War " + std::to_string(w);
    const int start = rng.uniform(limits.first_year, limits.last_year);
    war.interval = {start, std::min(limits.last_year, start + rng.uniform(0, limits.max_length))};
    std::shuffle(ids.begin(), ids.end(), rng.engine());
    const int total = rng.uniform(2, std::min(n, 8));
    const int split = rng.uniform(1, total - 1);
    war.side_a.assign(ids.begin(), ids.begin() + split);
    war.side_b.assign(ids.begin() + split, ids.begin() + total);
    std::sort(war.side_a.begin(), war.side_a.end());
    std::sort(war.side_b.begin(), war.side_b.end());
    d.wars.push_back(std::move(war));
  }
  return d;
}

}  // namespace warnet::testing
