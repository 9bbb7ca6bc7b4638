#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "warnet/names.hpp"
#include "warnet/types.hpp"

namespace warnet {

/// One row of a per-country war listing, as scraped.
struct RawRecord {
  std::string source_page;
  std::string war_name;
  std::string timeline_text;
  std::vector<std::string> ally_names;  // includes the page's own country
  std::vector<std::string> opponent_names;
  int line = 0;  // source line, 0 when not read from a file
};

enum class NoteKind {
  kMalformedRecord,
  kUnparseableTimeline,
  kInvertedInterval,
  kEmptyName,
  kOrientationAmbiguity,
  kSideConflict,
  kDisjointIntervals,
  kEmptySide,
  kOutOfHorizon,
  kUnregisteredEntity,
};

std::string_view to_string(NoteKind kind);

struct ValidationNote {
  NoteKind kind;
  std::string war;
  std::string detail;

  friend bool operator==(const ValidationNote&, const ValidationNote&) = default;
};

struct ValidationReport {
  std::vector<ValidationNote> notes;
  std::size_t records_read = 0;
  std::size_t records_dropped = 0;  // rejected before merging
  std::size_t wars_excluded = 0;    // merged but left out of the dataset

  std::size_t count(NoteKind kind) const;
  /// True when any input failed to reach the dataset.
  bool degraded() const noexcept { return records_dropped > 0 || wars_excluded > 0; }
};

struct MergeResult {
  Dataset dataset;
  ValidationReport report;
};

/// Merges per-page records of the same war into deduplicated WarRecords.
///
/// Records are grouped by fold_name(war_name). The first record of a group
/// seeds side A with its allies and side B with its opponents; later records
/// are oriented by the first of their allies (then opponents) already placed.
/// Records with no overlap are taken as-is and noted as ambiguous. Names
/// that would land on both sides keep their first side. Wars whose merged
/// interval misses [kHorizonStart, kHorizonEnd] or that end up with an empty
/// side are excluded.
///
/// Output entities are sorted by canonical name and wars by
/// (start, end, merge key), so ids do not depend on input order.
MergeResult merge_records(std::span<const RawRecord> records, const AliasMap& aliases,
                          const EntityRegistry& registry);

// File readers. A header row matching the documented column names is
// optional. Structural problems throw Error(kMalformedRow) with the line.
std::vector<RawRecord> read_raw_records(std::istream& in);
AliasMap read_alias_map(std::istream& in);
EntityRegistry read_registry(std::istream& in);

void write_raw_records(std::ostream& out, std::span<const RawRecord> records);

/// One note per line: kind<TAB>war<TAB>detail.
void write_report_text(std::ostream& out, const ValidationReport& report);
void write_report_json(std::ostream& out, const ValidationReport& report);

}  // namespace warnet
