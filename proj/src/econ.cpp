#include "warnet/econ.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "warnet/csv.hpp"
#include "warnet/error.hpp"

namespace warnet {
namespace {

[[noreturn]] void malformed(int line, const std::string& what) {
  throw Error(ErrorKind::kMalformedRow, "gdp line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(const std::string& raw, int line, const char* what) {
  const std::string text = clean_name(raw);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    malformed(line, std::string("bad ") + what + " '" + raw + "'");
  }
  return value;
}

}  // namespace

std::vector<GdpSeries> load_gdp(std::istream& in, const AliasMap& aliases) {
  const auto rows = csv::read(in);
  if (rows.empty()) malformed(1, "missing header row");
  const auto& header = rows.front().fields;
  if (header.size() != 3 || fold_name(header[0]) != "country" || fold_name(header[1]) != "year" ||
      fold_name(header[2]) != "gdp_per_capita") {
    malformed(rows.front().line, "header must be country,year,gdp_per_capita");
  }

  std::map<std::string, GdpSeries> by_entity;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.fields.size() != 3) malformed(row.line, "expected 3 columns");
    std::string name;
    try {
      name = normalize_name(row.fields[0], aliases).canonical;
    } catch (const Error&) {
      malformed(row.line, "empty country");
    }
    const int year = parse_number<int>(row.fields[1], row.line, "year");
    if (clean_name(row.fields[2]).empty()) continue;
    const double gdp = parse_number<double>(row.fields[2], row.line, "gdp");
    if (!std::isfinite(gdp)) malformed(row.line, "non-finite gdp");
    if (!kGdpYears.contains(year)) continue;
    if (gdp <= 0.0) {
      throw Error(ErrorKind::kNonPositiveGdp,
                  "gdp line " + std::to_string(row.line) + ": " + row.fields[2]);
    }
    auto& series = by_entity[name];
    series.entity = name;
    if (!series.points.emplace(year, gdp).second) {
      malformed(row.line, "duplicate year " + std::to_string(year) + " for " + name);
    }
  }
  std::vector<GdpSeries> out;
  out.reserve(by_entity.size());
  for (auto& [name, series] : by_entity) out.push_back(std::move(series));
  return out;
}

std::int64_t active_war_count(const TemporalMultiGraph& g, EntityId entity, int year) {
  if (year < kHorizonStart) return 0;
  std::int64_t n = 0;
  for (WarId w : g.incident_wars(entity)) n += g.war(w).interval.contains(year) ? 1 : 0;
  return n;
}

OverlaySeries overlay(const TemporalMultiGraph& g, const GdpSeries& series, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorKind::kNonPositiveScale, std::to_string(scale));
  }
  const EntityId id = g.id_of(series.entity);
  OverlaySeries out{id, series.entity, scale, {}};
  out.rows.reserve(series.points.size());
  for (const auto& [year, gdp] : series.points) {
    std::int64_t trailing = 0;
    for (int y = year - 2; y <= year; ++y) trailing += active_war_count(g, id, y);
    out.rows.push_back({year, gdp, gdp / scale, trailing});
  }
  return out;
}

double dip_correlation(const OverlaySeries& series) {
  std::vector<double> wars;
  std::vector<double> change;
  for (std::size_t i = 1; i < series.rows.size(); ++i) {
    const auto& prev = series.rows[i - 1];
    const auto& cur = series.rows[i];
    if (cur.year != prev.year + 1) continue;
    wars.push_back(static_cast<double>(cur.wars_last3));
    change.push_back((cur.gdp - prev.gdp) / prev.gdp);
  }
  const std::size_t n = wars.size();
  if (n < 3) {
    throw Error(ErrorKind::kInsufficientData, std::to_string(n) + " consecutive-year pairs");
  }
  double mean_w = 0.0;
  double mean_c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_w += wars[i];
    mean_c += change[i];
  }
  mean_w /= static_cast<double>(n);
  mean_c /= static_cast<double>(n);
  double cov = 0.0;
  double var_w = 0.0;
  double var_c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dw = wars[i] - mean_w;
    const double dc = change[i] - mean_c;
    cov += dw * dc;
    var_w += dw * dw;
    var_c += dc * dc;
  }
  if (var_w == 0.0 || var_c == 0.0) {
    throw Error(ErrorKind::kDegenerateVariance, "constant war or gdp-change series");
  }
  return std::clamp(cov / std::sqrt(var_w * var_c), -1.0, 1.0);
}

}  // namespace warnet
