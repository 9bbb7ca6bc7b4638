#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "warnet/analytics.hpp"
#include "warnet/econ.hpp"

namespace warnet {

/// kDelimited writes CSV with a header row per table; multi-table results
/// precede each table with a "# name" line. kStructured writes one JSON
/// document with keys in the same order as the CSV columns.
enum class OutputFormat { kDelimited, kStructured };

/// Shortest decimal that round-trips, locale independent.
std::string format_double(double value);

void write_summary(std::ostream& out, const GraphSummary& summary, OutputFormat format);
void write_histogram(std::ostream& out, const DegreeHistogram& hist, OutputFormat format);

/// Columns: year, then one column per series label.
void write_series(std::ostream& out, std::span<const YearSeries> series, OutputFormat format);
inline void write_series(std::ostream& out, const YearSeries& series, OutputFormat format) {
  write_series(out, std::span<const YearSeries>(&series, 1), format);
}

/// `columns` names the key columns followed by the count column.
void write_ranked(std::ostream& out, const RankedList& list, const std::vector<std::string>& columns,
                  OutputFormat format);

/// Columns: year, opposed, allied.
void write_relation(std::ostream& out, const RelationTimeline& timeline, std::string_view a_name,
                    std::string_view b_name, OutputFormat format);

void write_terror(std::ostream& out, const TerrorStats& stats, OutputFormat format);

/// Columns: year, gdp_scaled, wars_last3; then the dip correlation, or NA
/// with `correlation_note` when it is undefined.
void write_overlay(std::ostream& out, const OverlaySeries& overlay, std::optional<double> correlation,
                   std::string_view correlation_note, OutputFormat format);

}  // namespace warnet
