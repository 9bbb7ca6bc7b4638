#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "warnet/types.hpp"

namespace warnet {

/// One opposed pair within a war: `a` from side A, `b` from side B.
struct Edge {
  EdgeId id = 0;
  WarId war_id = 0;
  EntityId a = 0;
  EntityId b = 0;
  YearInterval interval;
};

enum class Side { kNone, kA, kB };

/// Which wars/edges a window admits: those overlapping it, or those
/// starting inside it.
enum class DegreeMode { kActive, kStarted };

enum class DegreeMetric { kWar, kEdge };

std::string_view to_string(DegreeMode mode);
std::string_view to_string(DegreeMetric metric);

bool admits(const YearInterval& window, const YearInterval& interval, DegreeMode mode) noexcept;

/// Throws Error(kInvalidWindow) when start > end.
void check_window(const YearInterval& window);

/// Immutable multigraph of wars. Every war contributes |side_a| * |side_b|
/// edges. Year indices cover [kHorizonStart, kHorizonEnd]; intervals reaching
/// outside it are indexed only for the years inside.
class TemporalMultiGraph {
 public:
  /// Throws Error(kUnknownEntityId) for side members outside `entities` and
  /// Error(kInvalidWar) for overlapping, empty, or duplicated sides, bad
  /// intervals, or non-dense ids.
  static TemporalMultiGraph build(std::vector<WarRecord> wars, std::vector<Entity> entities);
  static TemporalMultiGraph build(Dataset dataset) {
    return build(std::move(dataset.wars), std::move(dataset.entities));
  }

  std::span<const Entity> entities() const noexcept { return entities_; }
  std::span<const WarRecord> wars() const noexcept { return wars_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Throws Error(kUnknownEntity).
  const Entity& entity(EntityId id) const;
  const WarRecord& war(WarId id) const { return wars_.at(static_cast<std::size_t>(id)); }

  std::optional<EntityId> find(std::string_view canonical_name) const;
  /// Throws Error(kUnknownEntity).
  EntityId id_of(std::string_view canonical_name) const;

  /// Edges whose interval contains `year`. Throws Error(kYearOutOfRange).
  std::span<const EdgeId> active_edges(int year) const;
  std::span<const WarId> active_wars(int year) const;

  std::span<const WarId> incident_wars(EntityId id) const;
  std::span<const EdgeId> incident_edges(EntityId id) const;

  Side side_of(WarId war, EntityId id) const;
  bool is_terror(EntityId id) const { return entity(id).kind == EntityKind::kTerrorOrg; }
  bool has_terror_participant(WarId war) const { return terror_war_[static_cast<std::size_t>(war)]; }
  bool touches_terror(const Edge& edge) const { return is_terror(edge.a) || is_terror(edge.b); }

  Dataset to_dataset() const { return {entities_, wars_}; }

 private:
  struct YearIndex {
    std::vector<std::int32_t> offsets;  // one slot per horizon year, plus end
    std::vector<std::int32_t> items;

    std::span<const std::int32_t> at(int year) const;
  };

  TemporalMultiGraph() = default;

  std::vector<Entity> entities_;
  std::vector<WarRecord> wars_;
  std::vector<Edge> edges_;
  std::vector<bool> terror_war_;
  std::map<std::string, EntityId, std::less<>> by_name_;
  YearIndex edges_by_year_;
  YearIndex wars_by_year_;
  std::vector<std::vector<WarId>> wars_by_entity_;
  std::vector<std::vector<EdgeId>> edges_by_entity_;
};

/// Distinct incident wars admitted by the window.
std::int64_t war_degree(const TemporalMultiGraph& g, EntityId entity, const YearInterval& window,
                        DegreeMode mode = DegreeMode::kActive);

/// Incident pairwise edges admitted by the window.
std::int64_t edge_degree(const TemporalMultiGraph& g, EntityId entity, const YearInterval& window,
                         DegreeMode mode = DegreeMode::kActive);

std::int64_t degree(const TemporalMultiGraph& g, EntityId entity, const YearInterval& window,
                    DegreeMetric metric, DegreeMode mode = DegreeMode::kActive);

}  // namespace warnet
