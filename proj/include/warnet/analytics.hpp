#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "warnet/graph.hpp"

namespace warnet {

// Display range for terror-war yearly counts; earlier years are nearly empty.
inline constexpr YearInterval kTerrorDisplayWindow{1950, kHorizonEnd};

struct CumulativeRow {
  std::string label;  // "1", "<=10", "<=50", "<=100", "<=300", ">=301"
  std::int64_t nodes = 0;

  friend bool operator==(const CumulativeRow&, const CumulativeRow&) = default;
};

/// Node counts per degree value, over entities with nonzero degree.
struct DegreeHistogram {
  DegreeMetric metric = DegreeMetric::kWar;
  YearInterval window = kFullWindow;
  std::map<std::int64_t, std::int64_t> bins;
  std::vector<CumulativeRow> cumulative;

  std::int64_t nodes() const;
};

/// Dense per-year counts over [first_year, first_year + counts.size()).
struct YearSeries {
  std::string label;
  int first_year = kHorizonStart;
  std::vector<std::int64_t> counts;

  int last_year() const noexcept { return first_year + static_cast<int>(counts.size()) - 1; }
  /// Zero outside the covered range.
  std::int64_t at(int year) const noexcept;

  friend bool operator==(const YearSeries&, const YearSeries&) = default;
};

struct RankedRow {
  std::vector<EntityId> key;  // one entity, or an entity pair
  std::vector<std::string> names;
  std::int64_t count = 0;

  friend bool operator==(const RankedRow&, const RankedRow&) = default;
};

/// Rows sorted by count descending, then names ascending.
struct RankedList {
  YearInterval window = kFullWindow;
  DegreeMetric metric = DegreeMetric::kWar;
  DegreeMode mode = DegreeMode::kActive;
  std::vector<RankedRow> rows;
};

/// Per-year (opposed, allied) flags for a pair over the horizon. Both flags
/// may be set in the same year.
struct RelationTimeline {
  EntityId a = 0;
  EntityId b = 0;
  int first_year = kHorizonStart;
  std::vector<std::uint8_t> opposed;
  std::vector<std::uint8_t> allied;

  bool opposed_in(int year) const { return opposed.at(static_cast<std::size_t>(year - first_year)) != 0; }
  bool allied_in(int year) const { return allied.at(static_cast<std::size_t>(year - first_year)) != 0; }
};

struct TerrorStats {
  RankedList top_orgs;       // terror orgs by distinct wars
  RankedList top_countries;  // others by wars with a terror org opposite
  RankedList top_pairs;      // (other, terror org) by wars fought against each other
  YearSeries yearly;         // wars with a terror participant, kTerrorDisplayWindow
};

struct GraphSummary {
  std::int64_t nodes = 0;
  std::int64_t edges = 0;
  double average_edge_degree = 0.0;  // 2 * edges / nodes
  std::int64_t max_edge_degree = 0;
  std::int64_t min_edge_degree = 0;
};

/// Edge degrees over every incident edge regardless of year; all zero for an
/// empty graph.
GraphSummary summarize(const TemporalMultiGraph& g);

DegreeHistogram degree_distribution(const TemporalMultiGraph& g, const YearInterval& window,
                                    DegreeMetric metric);

/// Active edges per horizon year; without terror, edges touching a terror org
/// are skipped.
YearSeries yearly_edge_counts(const TemporalMultiGraph& g, bool include_terror);

/// Active wars per horizon year; without terror, wars with a terror
/// participant are skipped.
YearSeries yearly_war_counts(const TemporalMultiGraph& g, bool include_terror);

/// One series per continent (kAllContinents order). An active edge counts for
/// a continent when one of its endpoints is on it and has full-horizon
/// war_degree > min_degree. An edge may count toward two continents.
std::vector<YearSeries> continent_yearly(const TemporalMultiGraph& g, std::int64_t min_degree = 40);

/// Entities with nonzero degree in the window, top k. Throws Error(kInvalidArgument) for k < 1.
RankedList top_nodes(const TemporalMultiGraph& g, const YearInterval& window, std::size_t k,
                     DegreeMetric metric = DegreeMetric::kWar, DegreeMode mode = DegreeMode::kActive);

/// Unordered pairs by number of wars fought on opposite sides.
RankedList rival_pairs(const TemporalMultiGraph& g, const YearInterval& window, std::size_t k,
                       DegreeMode mode = DegreeMode::kActive);

/// Unordered pairs by number of wars fought on the same side.
RankedList common_side_pairs(const TemporalMultiGraph& g, const YearInterval& window, std::size_t k,
                             DegreeMode mode = DegreeMode::kActive);

/// Throws Error(kSameEntity) when a == b, Error(kUnknownEntity) for bad ids.
RelationTimeline relation_timeline(const TemporalMultiGraph& g, EntityId a, EntityId b);

/// Distinct active wars per horizon year involving the entity.
YearSeries entity_yearly(const TemporalMultiGraph& g, EntityId entity, bool exclude_terror);

TerrorStats terror_stats(const TemporalMultiGraph& g, std::size_t k,
                         const YearInterval& window = kFullWindow);

}  // namespace warnet
