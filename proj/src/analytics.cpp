#include "warnet/analytics.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "warnet/error.hpp"

namespace warnet {
namespace {

constexpr std::size_t kHorizonYears = kHorizonEnd - kHorizonStart + 1;

void check_k(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "k must be at least 1");
}

YearSeries empty_series(std::string label, const YearInterval& range = kFullWindow) {
  return {std::move(label), range.start, std::vector<std::int64_t>(static_cast<std::size_t>(range.length()), 0)};
}

// Adds `delta` to every year of `interval` inside the series range.
void add_interval(YearSeries& series, const YearInterval& interval, std::int64_t delta = 1) {
  const int first = std::max(interval.start, series.first_year);
  const int last = std::min(interval.end, series.last_year());
  for (int y = first; y <= last; ++y) series.counts[static_cast<std::size_t>(y - series.first_year)] += delta;
}

void sort_and_truncate(std::vector<RankedRow>& rows, std::size_t k) {
  std::sort(rows.begin(), rows.end(), [](const RankedRow& l, const RankedRow& r) {
    if (l.count != r.count) return l.count > r.count;
    return l.names < r.names;
  });
  if (rows.size() > k) rows.resize(k);
}

std::uint64_t pair_key(EntityId a, EntityId b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Builds rows for unordered pairs; `ordered` keeps (first, second) as given
// instead of sorting the pair by name.
RankedList pair_ranking(const TemporalMultiGraph& g, const std::unordered_map<std::uint64_t, std::int64_t>& counts,
                        const YearInterval& window, DegreeMode mode, std::size_t k, bool ordered) {
  RankedList list{window, DegreeMetric::kWar, mode, {}};
  list.rows.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    auto a = static_cast<EntityId>(key >> 32);
    auto b = static_cast<EntityId>(key & 0xffffffffu);
    if (!ordered && g.entity(b).canonical_name < g.entity(a).canonical_name) std::swap(a, b);
    list.rows.push_back({{a, b}, {g.entity(a).canonical_name, g.entity(b).canonical_name}, count});
  }
  sort_and_truncate(list.rows, k);
  return list;
}

std::uint64_t unordered_key(EntityId a, EntityId b) { return a < b ? pair_key(a, b) : pair_key(b, a); }

}  // namespace

std::int64_t DegreeHistogram::nodes() const {
  std::int64_t total = 0;
  for (const auto& [degree, count] : bins) total += count;
  return total;
}

std::int64_t YearSeries::at(int year) const noexcept {
  if (year < first_year || year > last_year()) return 0;
  return counts[static_cast<std::size_t>(year - first_year)];
}

GraphSummary summarize(const TemporalMultiGraph& g) {
  GraphSummary s;
  s.nodes = static_cast<std::int64_t>(g.entities().size());
  s.edges = static_cast<std::int64_t>(g.edges().size());
  if (s.nodes == 0) return s;
  s.average_edge_degree = 2.0 * static_cast<double>(s.edges) / static_cast<double>(s.nodes);
  s.min_edge_degree = s.edges * 2;
  for (const auto& e : g.entities()) {
    const auto d = static_cast<std::int64_t>(g.incident_edges(e.id).size());
    s.max_edge_degree = std::max(s.max_edge_degree, d);
    s.min_edge_degree = std::min(s.min_edge_degree, d);
  }
  return s;
}

DegreeHistogram degree_distribution(const TemporalMultiGraph& g, const YearInterval& window,
                                    DegreeMetric metric) {
  check_window(window);
  DegreeHistogram hist{metric, window, {}, {}};
  for (const auto& e : g.entities()) {
    const auto d = degree(g, e.id, window, metric);
    if (d > 0) ++hist.bins[d];
  }
  auto at_most = [&](std::int64_t limit) {
    std::int64_t n = 0;
    for (const auto& [d, count] : hist.bins) n += d <= limit ? count : 0;
    return n;
  };
  const std::int64_t total = hist.nodes();
  hist.cumulative = {{"1", at_most(1)},     {"<=10", at_most(10)},   {"<=50", at_most(50)},
                     {"<=100", at_most(100)}, {"<=300", at_most(300)}, {">=301", total - at_most(300)}};
  return hist;
}

YearSeries yearly_edge_counts(const TemporalMultiGraph& g, bool include_terror) {
  YearSeries series = empty_series(include_terror ? "edges" : "edges_without_terror");
  const auto edges = g.edges();
  for (int y = kHorizonStart; y <= kHorizonEnd; ++y) {
    const auto active = g.active_edges(y);
    std::int64_t n = static_cast<std::int64_t>(active.size());
    if (!include_terror) {
      for (EdgeId e : active) n -= g.touches_terror(edges[static_cast<std::size_t>(e)]) ? 1 : 0;
    }
    series.counts[static_cast<std::size_t>(y - kHorizonStart)] = n;
  }
  return series;
}

YearSeries yearly_war_counts(const TemporalMultiGraph& g, bool include_terror) {
  YearSeries series = empty_series(include_terror ? "wars" : "wars_without_terror");
  for (int y = kHorizonStart; y <= kHorizonEnd; ++y) {
    const auto active = g.active_wars(y);
    std::int64_t n = static_cast<std::int64_t>(active.size());
    if (!include_terror) {
      for (WarId w : active) n -= g.has_terror_participant(w) ? 1 : 0;
    }
    series.counts[static_cast<std::size_t>(y - kHorizonStart)] = n;
  }
  return series;
}

std::vector<YearSeries> continent_yearly(const TemporalMultiGraph& g, std::int64_t min_degree) {
  if (min_degree < 0) throw Error(ErrorKind::kInvalidArgument, "min_degree must be non-negative");
  // Continent index per entity, or -1 when below the degree cut.
  std::vector<int> slot(g.entities().size(), -1);
  for (const auto& e : g.entities()) {
    if (war_degree(g, e.id, kFullWindow) > min_degree) slot[static_cast<std::size_t>(e.id)] = static_cast<int>(e.continent);
  }
  std::vector<YearSeries> out;
  for (auto c : kAllContinents) out.push_back(empty_series(std::string(to_string(c))));

  const auto edges = g.edges();
  for (int y = kHorizonStart; y <= kHorizonEnd; ++y) {
    const auto at = static_cast<std::size_t>(y - kHorizonStart);
    for (EdgeId id : g.active_edges(y)) {
      const Edge& e = edges[static_cast<std::size_t>(id)];
      const int ca = slot[static_cast<std::size_t>(e.a)];
      const int cb = slot[static_cast<std::size_t>(e.b)];
      if (ca >= 0) ++out[static_cast<std::size_t>(ca)].counts[at];
      if (cb >= 0 && cb != ca) ++out[static_cast<std::size_t>(cb)].counts[at];
    }
  }
  return out;
}

RankedList top_nodes(const TemporalMultiGraph& g, const YearInterval& window, std::size_t k,
                     DegreeMetric metric, DegreeMode mode) {
  check_k(k);
  check_window(window);
  RankedList list{window, metric, mode, {}};
  for (const auto& e : g.entities()) {
    const auto d = degree(g, e.id, window, metric, mode);
    if (d > 0) list.rows.push_back({{e.id}, {e.canonical_name}, d});
  }
  sort_and_truncate(list.rows, k);
  return list;
}

RankedList rival_pairs(const TemporalMultiGraph& g, const YearInterval& window, std::size_t k,
                       DegreeMode mode) {
  check_k(k);
  check_window(window);
  std::unordered_map<std::uint64_t, std::int64_t> counts;
  for (const auto& war : g.wars()) {
    if (!admits(window, war.interval, mode)) continue;
    for (EntityId a : war.side_a) {
      for (EntityId b : war.side_b) ++counts[unordered_key(a, b)];
    }
  }
  return pair_ranking(g, counts, window, mode, k, false);
}

RankedList common_side_pairs(const TemporalMultiGraph& g, const YearInterval& window, std::size_t k,
                             DegreeMode mode) {
  check_k(k);
  check_window(window);
  std::unordered_map<std::uint64_t, std::int64_t> counts;
  for (const auto& war : g.wars()) {
    if (!admits(window, war.interval, mode)) continue;
    for (const auto* side : {&war.side_a, &war.side_b}) {
      for (std::size_t i = 0; i < side->size(); ++i) {
        for (std::size_t j = i + 1; j < side->size(); ++j) ++counts[unordered_key((*side)[i], (*side)[j])];
      }
    }
  }
  return pair_ranking(g, counts, window, mode, k, false);
}

RelationTimeline relation_timeline(const TemporalMultiGraph& g, EntityId a, EntityId b) {
  g.entity(a);
  g.entity(b);
  if (a == b) throw Error(ErrorKind::kSameEntity, g.entity(a).canonical_name);
  RelationTimeline timeline{a, b, kHorizonStart, std::vector<std::uint8_t>(kHorizonYears, 0),
                            std::vector<std::uint8_t>(kHorizonYears, 0)};
  for (WarId w : g.incident_wars(a)) {
    const Side sb = g.side_of(w, b);
    if (sb == Side::kNone) continue;
    auto& flags = sb == g.side_of(w, a) ? timeline.allied : timeline.opposed;
    const auto& interval = g.war(w).interval;
    for (int y = std::max(interval.start, kHorizonStart); y <= std::min(interval.end, kHorizonEnd); ++y) {
      flags[static_cast<std::size_t>(y - kHorizonStart)] = 1;
    }
  }
  return timeline;
}

YearSeries entity_yearly(const TemporalMultiGraph& g, EntityId entity, bool exclude_terror) {
  YearSeries series = empty_series(g.entity(entity).canonical_name);
  for (WarId w : g.incident_wars(entity)) {
    if (exclude_terror && g.has_terror_participant(w)) continue;
    add_interval(series, g.war(w).interval);
  }
  return series;
}

TerrorStats terror_stats(const TemporalMultiGraph& g, std::size_t k, const YearInterval& window) {
  check_k(k);
  check_window(window);
  TerrorStats stats;
  stats.top_orgs = {window, DegreeMetric::kWar, DegreeMode::kActive, {}};
  for (const auto& e : g.entities()) {
    if (e.kind != EntityKind::kTerrorOrg) continue;
    const auto d = war_degree(g, e.id, window);
    if (d > 0) stats.top_orgs.rows.push_back({{e.id}, {e.canonical_name}, d});
  }
  sort_and_truncate(stats.top_orgs.rows, k);

  std::unordered_map<EntityId, std::int64_t> country_wars;
  std::unordered_map<std::uint64_t, std::int64_t> pair_wars;
  for (const auto& war : g.wars()) {
    if (!g.has_terror_participant(war.war_id) || !window.intersects(war.interval)) continue;
    auto tally = [&](const std::vector<EntityId>& own, const std::vector<EntityId>& other) {
      const bool terror_opposite =
          std::any_of(other.begin(), other.end(), [&](EntityId id) { return g.is_terror(id); });
      if (!terror_opposite) return;
      for (EntityId x : own) {
        if (g.is_terror(x)) continue;
        ++country_wars[x];
        for (EntityId t : other) {
          if (g.is_terror(t)) ++pair_wars[pair_key(x, t)];
        }
      }
    };
    tally(war.side_a, war.side_b);
    tally(war.side_b, war.side_a);
  }
  stats.top_countries = {window, DegreeMetric::kWar, DegreeMode::kActive, {}};
  for (const auto& [id, count] : country_wars) {
    stats.top_countries.rows.push_back({{id}, {g.entity(id).canonical_name}, count});
  }
  sort_and_truncate(stats.top_countries.rows, k);
  stats.top_pairs = pair_ranking(g, pair_wars, window, DegreeMode::kActive, k, true);

  stats.yearly = empty_series("terror_wars", kTerrorDisplayWindow);
  for (int y = kTerrorDisplayWindow.start; y <= kTerrorDisplayWindow.end; ++y) {
    std::int64_t n = 0;
    for (WarId w : g.active_wars(y)) n += g.has_terror_participant(w) ? 1 : 0;
    stats.yearly.counts[static_cast<std::size_t>(y - kTerrorDisplayWindow.start)] = n;
  }
  return stats;
}

}  // namespace warnet
