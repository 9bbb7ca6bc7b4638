#pragma once

#include <string_view>

#include "warnet/types.hpp"

namespace warnet {

enum class CenturyPart { kWhole, kEarly, kMid, kLate };

// Year offsets within a century for each qualifier: Early = 1..33,
// Mid = 34..66, Late = 67..100, Whole = 1..100.
struct CenturySpan {
  int first_offset;
  int last_offset;
};
CenturySpan century_span(CenturyPart part) noexcept;

/// Years covered by the `century`-th century CE restricted to `part`.
YearInterval century_years(int century, CenturyPart part) noexcept;

/// Parses free-text war timelines into an inclusive year interval.
///
/// The first temporal expression found contributes the start and the last
/// one the end:
///   * 3-4 digit numbers are years; day/month decorations are ignored.
///   * "Nth century", optionally qualified by Early/Mid/Late, contributes the
///     first year of its span as a start and the last year as an end.
///   * "present" / "ongoing" contribute kHorizonEnd.
/// Years past kHorizonEnd are capped to it.
///
/// Throws Error(kUnparseableTimeline) when nothing temporal is found and
/// Error(kInvertedInterval) when start > end.
YearInterval parse_timeline(std::string_view text);

}  // namespace warnet
