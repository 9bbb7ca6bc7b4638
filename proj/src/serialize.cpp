#include "warnet/serialize.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include <json.hpp>

#include "warnet/csv.hpp"

namespace warnet {
namespace {

using Json = nlohmann::ordered_json;

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json window_json(const YearInterval& w) { return Json{{"start", w.start}, {"end", w.end}}; }

Json ranked_json(const RankedList& list, const std::vector<std::string>& columns) {
  Json doc;
  doc["window"] = window_json(list.window);
  doc["metric"] = to_string(list.metric);
  doc["mode"] = to_string(list.mode);
  doc["rows"] = Json::array();
  for (const auto& row : list.rows) {
    Json r;
    for (std::size_t i = 0; i < row.names.size(); ++i) r[columns[i]] = row.names[i];
    r[columns.back()] = row.count;
    doc["rows"].push_back(std::move(r));
  }
  return doc;
}

void ranked_csv(std::ostream& out, const RankedList& list, const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : list.rows) {
    for (const auto& name : row.names) out << csv::quote(name) << ',';
    out << row.count << '\n';
  }
}

Json series_json(const YearSeries& s) {
  Json doc;
  doc["label"] = s.label;
  doc["rows"] = Json::array();
  for (int y = s.first_year; y <= s.last_year(); ++y) doc["rows"].push_back({{"year", y}, {"count", s.at(y)}});
  return doc;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

void write_summary(std::ostream& out, const GraphSummary& s, OutputFormat format) {
  std::array<char, 32> avg{};
  std::snprintf(avg.data(), avg.size(), "%.1f", s.average_edge_degree);
  if (format == OutputFormat::kStructured) {
    emit(out, Json{{"nodes", s.nodes},
                   {"edges", s.edges},
                   {"avg_edge_degree", Json::parse(avg.data())},
                   {"max_edge_degree", s.max_edge_degree},
                   {"min_edge_degree", s.min_edge_degree}});
    return;
  }
  out << "metric,value\n"
      << "nodes," << s.nodes << '\n'
      << "edges," << s.edges << '\n'
      << "avg_edge_degree," << avg.data() << '\n'
      << "max_edge_degree," << s.max_edge_degree << '\n'
      << "min_edge_degree," << s.min_edge_degree << '\n';
}

void write_histogram(std::ostream& out, const DegreeHistogram& hist, OutputFormat format) {
  if (format == OutputFormat::kStructured) {
    Json doc;
    doc["metric"] = to_string(hist.metric);
    doc["window"] = window_json(hist.window);
    doc["bins"] = Json::array();
    for (const auto& [degree, nodes] : hist.bins) doc["bins"].push_back({{"degree", degree}, {"nodes", nodes}});
    doc["cumulative"] = Json::array();
    for (const auto& row : hist.cumulative) {
      doc["cumulative"].push_back({{"threshold", row.label}, {"nodes", row.nodes}});
    }
    emit(out, doc);
    return;
  }
  out << "# bins\ndegree,nodes\n";
  for (const auto& [degree, nodes] : hist.bins) out << degree << ',' << nodes << '\n';
  out << "# cumulative\nthreshold,nodes\n";
  for (const auto& row : hist.cumulative) out << row.label << ',' << row.nodes << '\n';
}

void write_series(std::ostream& out, std::span<const YearSeries> series, OutputFormat format) {
  if (format == OutputFormat::kStructured) {
    Json doc = Json::array();
    for (const auto& s : series) doc.push_back(series_json(s));
    emit(out, series.size() == 1 ? doc[0] : doc);
    return;
  }
  out << "year";
  for (const auto& s : series) out << ',' << csv::quote(s.label);
  out << '\n';
  if (series.empty()) return;
  for (int y = series.front().first_year; y <= series.front().last_year(); ++y) {
    out << y;
    for (const auto& s : series) out << ',' << s.at(y);
    out << '\n';
  }
}

void write_ranked(std::ostream& out, const RankedList& list, const std::vector<std::string>& columns,
                  OutputFormat format) {
  if (format == OutputFormat::kStructured) {
    emit(out, ranked_json(list, columns));
  } else {
    ranked_csv(out, list, columns);
  }
}

void write_relation(std::ostream& out, const RelationTimeline& t, std::string_view a_name,
                    std::string_view b_name, OutputFormat format) {
  const int last = t.first_year + static_cast<int>(t.opposed.size()) - 1;
  if (format == OutputFormat::kStructured) {
    Json doc;
    doc["a"] = a_name;
    doc["b"] = b_name;
    doc["rows"] = Json::array();
    for (int y = t.first_year; y <= last; ++y) {
      doc["rows"].push_back({{"year", y},
                             {"opposed", t.opposed_in(y) ? 1 : 0},
                             {"allied", t.allied_in(y) ? 1 : 0}});
    }
    emit(out, doc);
    return;
  }
  out << "year,opposed,allied\n";
  for (int y = t.first_year; y <= last; ++y) {
    out << y << ',' << (t.opposed_in(y) ? 1 : 0) << ',' << (t.allied_in(y) ? 1 : 0) << '\n';
  }
}

void write_terror(std::ostream& out, const TerrorStats& stats, OutputFormat format) {
  const std::vector<std::string> org_cols{"terror_org", "wars"};
  const std::vector<std::string> country_cols{"country", "wars"};
  const std::vector<std::string> pair_cols{"country", "terror_org", "wars"};
  if (format == OutputFormat::kStructured) {
    Json doc;
    doc["top_orgs"] = ranked_json(stats.top_orgs, org_cols);
    doc["top_countries"] = ranked_json(stats.top_countries, country_cols);
    doc["top_pairs"] = ranked_json(stats.top_pairs, pair_cols);
    doc["yearly"] = series_json(stats.yearly);
    emit(out, doc);
    return;
  }
  out << "# top_orgs\n";
  ranked_csv(out, stats.top_orgs, org_cols);
  out << "# top_countries\n";
  ranked_csv(out, stats.top_countries, country_cols);
  out << "# top_pairs\n";
  ranked_csv(out, stats.top_pairs, pair_cols);
  out << "# yearly\n";
  write_series(out, stats.yearly, OutputFormat::kDelimited);
}

void write_overlay(std::ostream& out, const OverlaySeries& overlay, std::optional<double> correlation,
                   std::string_view correlation_note, OutputFormat format) {
  if (format == OutputFormat::kStructured) {
    Json doc;
    doc["entity"] = overlay.name;
    doc["scale"] = overlay.scale;
    doc["rows"] = Json::array();
    for (const auto& row : overlay.rows) {
      doc["rows"].push_back({{"year", row.year}, {"gdp_scaled", row.gdp_scaled}, {"wars_last3", row.wars_last3}});
    }
    doc["dip_correlation"] = correlation ? Json(*correlation) : Json(nullptr);
    if (!correlation) doc["dip_correlation_note"] = correlation_note;
    emit(out, doc);
    return;
  }
  out << "# overlay\nyear,gdp_scaled,wars_last3\n";
  for (const auto& row : overlay.rows) {
    out << row.year << ',' << format_double(row.gdp_scaled) << ',' << row.wars_last3 << '\n';
  }
  out << "# dip_correlation\nvalue,note\n";
  if (correlation) {
    out << format_double(*correlation) << ",\n";
  } else {
    out << "NA," << csv::quote(correlation_note) << '\n';
  }
}

}  // namespace warnet
