#include "warnet/graph.hpp"

#include <algorithm>

#include "warnet/error.hpp"

namespace warnet {
namespace {

constexpr int kYears = kHorizonEnd - kHorizonStart + 1;

template <typename Interval>
void for_each_horizon_year(const Interval& interval, auto&& fn) {
  const int first = std::max(interval.start, kHorizonStart);
  const int last = std::min(interval.end, kHorizonEnd);
  for (int y = first; y <= last; ++y) fn(y - kHorizonStart);
}

void check_side(const WarRecord& war, std::vector<EntityId>& side, std::size_t entity_count) {
  if (side.empty()) throw Error(ErrorKind::kInvalidWar, "war '" + war.name + "' has an empty side");
  std::sort(side.begin(), side.end());
  if (std::adjacent_find(side.begin(), side.end()) != side.end()) {
    throw Error(ErrorKind::kInvalidWar, "war '" + war.name + "' lists a participant twice");
  }
  for (EntityId id : side) {
    if (id < 0 || static_cast<std::size_t>(id) >= entity_count) {
      throw Error(ErrorKind::kUnknownEntityId,
                  "war '" + war.name + "' references entity " + std::to_string(id));
    }
  }
}

}  // namespace

std::string_view to_string(DegreeMode mode) {
  return mode == DegreeMode::kActive ? "active" : "started";
}

std::string_view to_string(DegreeMetric metric) {
  return metric == DegreeMetric::kWar ? "war" : "edge";
}

bool admits(const YearInterval& window, const YearInterval& interval, DegreeMode mode) noexcept {
  return mode == DegreeMode::kActive ? window.intersects(interval) : window.contains(interval.start);
}

void check_window(const YearInterval& window) {
  if (window.start > window.end) {
    throw Error(ErrorKind::kInvalidWindow,
                std::to_string(window.start) + " > " + std::to_string(window.end));
  }
}

std::span<const std::int32_t> TemporalMultiGraph::YearIndex::at(int year) const {
  const auto slot = static_cast<std::size_t>(year - kHorizonStart);
  return std::span<const std::int32_t>(items).subspan(
      static_cast<std::size_t>(offsets[slot]), static_cast<std::size_t>(offsets[slot + 1] - offsets[slot]));
}

TemporalMultiGraph TemporalMultiGraph::build(std::vector<WarRecord> wars, std::vector<Entity> entities) {
  TemporalMultiGraph g;
  for (std::size_t i = 0; i < entities.size(); ++i) {
    if (entities[i].id != static_cast<EntityId>(i)) {
      throw Error(ErrorKind::kUnknownEntityId,
                  "entity '" + entities[i].canonical_name + "' has id " +
                      std::to_string(entities[i].id) + ", expected " + std::to_string(i));
    }
    if (!g.by_name_.emplace(entities[i].canonical_name, entities[i].id).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate entity '" + entities[i].canonical_name + "'");
    }
  }
  for (std::size_t w = 0; w < wars.size(); ++w) {
    WarRecord& war = wars[w];
    if (war.war_id != static_cast<WarId>(w)) {
      throw Error(ErrorKind::kInvalidWar, "war '" + war.name + "' has id " + std::to_string(war.war_id));
    }
    if (war.interval.start > war.interval.end) {
      throw Error(ErrorKind::kInvalidWar, "war '" + war.name + "' has an inverted interval");
    }
    check_side(war, war.side_a, entities.size());
    check_side(war, war.side_b, entities.size());
    std::vector<EntityId> common;
    std::set_intersection(war.side_a.begin(), war.side_a.end(), war.side_b.begin(), war.side_b.end(),
                          std::back_inserter(common));
    if (!common.empty()) {
      throw Error(ErrorKind::kInvalidWar, "war '" + war.name + "' has an entity on both sides");
    }
  }
  g.entities_ = std::move(entities);
  g.wars_ = std::move(wars);

  const std::size_t n = g.entities_.size();
  g.wars_by_entity_.resize(n);
  g.edges_by_entity_.resize(n);
  g.terror_war_.assign(g.wars_.size(), false);

  std::size_t edge_total = 0;
  for (const auto& war : g.wars_) edge_total += war.side_a.size() * war.side_b.size();
  g.edges_.reserve(edge_total);

  for (const auto& war : g.wars_) {
    for (EntityId a : war.side_a) {
      for (EntityId b : war.side_b) {
        const auto id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({id, war.war_id, a, b, war.interval});
        g.edges_by_entity_[static_cast<std::size_t>(a)].push_back(id);
        g.edges_by_entity_[static_cast<std::size_t>(b)].push_back(id);
      }
    }
    for (const auto* side : {&war.side_a, &war.side_b}) {
      for (EntityId id : *side) {
        g.wars_by_entity_[static_cast<std::size_t>(id)].push_back(war.war_id);
        if (g.entities_[static_cast<std::size_t>(id)].kind == EntityKind::kTerrorOrg) {
          g.terror_war_[static_cast<std::size_t>(war.war_id)] = true;
        }
      }
    }
  }
  for (auto& list : g.wars_by_entity_) std::sort(list.begin(), list.end());

  auto fill_index = [](YearIndex& index, const auto& items) {
    index.offsets.assign(kYears + 1, 0);
    for (const auto& item : items) {
      for_each_horizon_year(item.interval, [&](int slot) { ++index.offsets[slot + 1]; });
    }
    for (int s = 0; s < kYears; ++s) index.offsets[s + 1] += index.offsets[s];
    index.items.resize(static_cast<std::size_t>(index.offsets[kYears]));
    std::vector<std::int32_t> cursor(index.offsets.begin(), index.offsets.end() - 1);
    std::int32_t id = 0;
    for (const auto& item : items) {
      for_each_horizon_year(item.interval, [&](int slot) { index.items[cursor[slot]++] = id; });
      ++id;
    }
  };
  fill_index(g.edges_by_year_, g.edges_);
  fill_index(g.wars_by_year_, g.wars_);
  return g;
}

const Entity& TemporalMultiGraph::entity(EntityId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= entities_.size()) {
    throw Error(ErrorKind::kUnknownEntity, "entity id " + std::to_string(id));
  }
  return entities_[static_cast<std::size_t>(id)];
}

std::optional<EntityId> TemporalMultiGraph::find(std::string_view canonical_name) const {
  auto it = by_name_.find(canonical_name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

EntityId TemporalMultiGraph::id_of(std::string_view canonical_name) const {
  if (auto id = find(canonical_name)) return *id;
  throw Error(ErrorKind::kUnknownEntity, "'" + std::string(canonical_name) + "'");
}

std::span<const EdgeId> TemporalMultiGraph::active_edges(int year) const {
  if (!kFullWindow.contains(year)) {
    throw Error(ErrorKind::kYearOutOfRange, std::to_string(year));
  }
  return edges_by_year_.at(year);
}

std::span<const WarId> TemporalMultiGraph::active_wars(int year) const {
  if (!kFullWindow.contains(year)) {
    throw Error(ErrorKind::kYearOutOfRange, std::to_string(year));
  }
  return wars_by_year_.at(year);
}

std::span<const WarId> TemporalMultiGraph::incident_wars(EntityId id) const {
  entity(id);
  return wars_by_entity_[static_cast<std::size_t>(id)];
}

std::span<const EdgeId> TemporalMultiGraph::incident_edges(EntityId id) const {
  entity(id);
  return edges_by_entity_[static_cast<std::size_t>(id)];
}

Side TemporalMultiGraph::side_of(WarId war_id, EntityId id) const {
  const WarRecord& w = war(war_id);
  if (std::binary_search(w.side_a.begin(), w.side_a.end(), id)) return Side::kA;
  if (std::binary_search(w.side_b.begin(), w.side_b.end(), id)) return Side::kB;
  return Side::kNone;
}

std::int64_t war_degree(const TemporalMultiGraph& g, EntityId entity, const YearInterval& window,
                        DegreeMode mode) {
  check_window(window);
  std::int64_t count = 0;
  for (WarId w : g.incident_wars(entity)) count += admits(window, g.war(w).interval, mode) ? 1 : 0;
  return count;
}

std::int64_t edge_degree(const TemporalMultiGraph& g, EntityId entity, const YearInterval& window,
                         DegreeMode mode) {
  check_window(window);
  const auto edges = g.edges();
  std::int64_t count = 0;
  for (EdgeId e : g.incident_edges(entity)) {
    count += admits(window, edges[static_cast<std::size_t>(e)].interval, mode) ? 1 : 0;
  }
  return count;
}

std::int64_t degree(const TemporalMultiGraph& g, EntityId entity, const YearInterval& window,
                    DegreeMetric metric, DegreeMode mode) {
  return metric == DegreeMetric::kWar ? war_degree(g, entity, window, mode)
                                      : edge_degree(g, entity, window, mode);
}

}  // namespace warnet
