#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "warnet/graph.hpp"
#include "warnet/names.hpp"

namespace warnet {

// Years kept from GDP input; earlier series are too sparse.
inline constexpr YearInterval kGdpYears{1850, 2016};

/// GDP per capita by year for one entity.
struct GdpSeries {
  std::string entity;
  std::map<int, double> points;
};

struct OverlayRow {
  int year = 0;
  double gdp = 0.0;
  double gdp_scaled = 0.0;
  std::int64_t wars_last3 = 0;  // active-war counts summed over year-2 .. year
};

struct OverlaySeries {
  EntityId entity = 0;
  std::string name;
  double scale = 1.0;
  std::vector<OverlayRow> rows;  // ascending year, one per GDP point
};

/// Reads `country,year,gdp_per_capita` with a mandatory header row. Country
/// names go through the alias map. Rows outside kGdpYears and rows with an
/// empty GDP cell are skipped. Throws Error(kMalformedRow) with the line for
/// bad structure or duplicates, Error(kNonPositiveGdp) for values <= 0.
/// Series are returned sorted by entity name.
std::vector<GdpSeries> load_gdp(std::istream& in, const AliasMap& aliases = {});

/// Active wars of the entity in one year (zero before kHorizonStart).
std::int64_t active_war_count(const TemporalMultiGraph& g, EntityId entity, int year);

/// Throws Error(kUnknownEntity) when the series' entity is not in the graph,
/// Error(kNonPositiveScale) unless scale > 0.
OverlaySeries overlay(const TemporalMultiGraph& g, const GdpSeries& series, double scale = 1.0);

/// Pearson correlation between wars_last3(y) and the relative GDP change
/// (gdp(y) - gdp(y-1)) / gdp(y-1), over rows whose previous year is present.
/// Uses unscaled GDP. Throws Error(kInsufficientData) with fewer than 3 pairs
/// and Error(kDegenerateVariance) when either side is constant.
double dip_correlation(const OverlaySeries& series);

}  // namespace warnet
