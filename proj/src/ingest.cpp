#include "warnet/ingest.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "warnet/csv.hpp"
#include "warnet/error.hpp"
#include "warnet/timeline.hpp"

namespace warnet {
namespace {

constexpr int kDisjointGapYears = 50;

struct Group {
  std::string key;
  std::string name;
  YearInterval interval;
  std::array<std::vector<std::string>, 2> sides;
  std::map<std::string, int, std::less<>> side_of;
};

class Merger {
 public:
  Merger(const AliasMap& aliases, ValidationReport& report) : aliases_(aliases), report_(report) {}

  void add(const RawRecord& record) {
    ++report_.records_read;
    const std::string war = clean_name(record.war_name);
    if (war.empty()) {
      drop(NoteKind::kMalformedRecord, war, context(record) + "empty war name");
      return;
    }

    YearInterval interval;
    try {
      interval = parse_timeline(record.timeline_text);
    } catch (const Error& e) {
      const auto kind = e.kind() == ErrorKind::kInvertedInterval ? NoteKind::kInvertedInterval
                                                                : NoteKind::kUnparseableTimeline;
      drop(kind, war, context(record) + "timeline '" + record.timeline_text + "'");
      return;
    }

    const auto allies = normalize_all(record.ally_names, war, record);
    const auto opponents = normalize_all(record.opponent_names, war, record);
    if (allies.empty()) {
      drop(NoteKind::kMalformedRecord, war, context(record) + "no allied names");
      return;
    }

    const std::string key = fold_name(war);
    auto [it, created] = index_.try_emplace(key, groups_.size());
    if (created) {
      groups_.push_back(Group{key, war, interval, {}, {}});
      Group& group = groups_.back();
      place(group, allies, 0);
      place(group, opponents, 1);
      return;
    }

    Group& group = groups_[it->second];
    const int gap = std::max(interval.start - group.interval.end, group.interval.start - interval.end);
    if (gap > kDisjointGapYears) {
      note(NoteKind::kDisjointIntervals, group.name,
           context(record) + std::to_string(gap) + " years from earlier listings");
    }
    group.interval = {std::min(group.interval.start, interval.start),
                      std::max(group.interval.end, interval.end)};

    int ally_side = -1;
    for (const auto& name : allies) {
      if (auto s = group.side_of.find(name); s != group.side_of.end()) {
        ally_side = s->second;
        break;
      }
    }
    if (ally_side < 0) {
      for (const auto& name : opponents) {
        if (auto s = group.side_of.find(name); s != group.side_of.end()) {
          ally_side = 1 - s->second;
          break;
        }
      }
    }
    if (ally_side < 0) {
      note(NoteKind::kOrientationAmbiguity, group.name,
           context(record) + "no participant overlaps earlier listings");
      ally_side = 0;
    }
    place(group, allies, ally_side);
    place(group, opponents, 1 - ally_side);
  }

  std::vector<Group>& groups() { return groups_; }

 private:
  static std::string context(const RawRecord& record) {
    std::string out;
    if (!record.source_page.empty()) out += "page " + record.source_page + ": ";
    if (record.line > 0) out = "line " + std::to_string(record.line) + ": " + out;
    return out;
  }

  void note(NoteKind kind, std::string war, std::string detail) {
    report_.notes.push_back({kind, std::move(war), std::move(detail)});
  }

  void drop(NoteKind kind, std::string war, std::string detail) {
    ++report_.records_dropped;
    note(kind, std::move(war), std::move(detail));
  }

  std::vector<std::string> normalize_all(const std::vector<std::string>& names, const std::string& war,
                                         const RawRecord& record) {
    std::vector<std::string> out;
    for (const auto& raw : names) {
      try {
        auto canonical = normalize_name(raw, aliases_).canonical;
        if (std::find(out.begin(), out.end(), canonical) == out.end()) {
          out.push_back(std::move(canonical));
        }
      } catch (const Error&) {
        note(NoteKind::kEmptyName, war, context(record) + "blank participant name skipped");
      }
    }
    return out;
  }

  void place(Group& group, const std::vector<std::string>& names, int side) {
    for (const auto& name : names) {
      auto [it, inserted] = group.side_of.try_emplace(name, side);
      if (inserted) {
        group.sides[side].push_back(name);
      } else if (it->second != side) {
        note(NoteKind::kSideConflict, group.name,
             name + " already on side " + (it->second == 0 ? "A" : "B"));
      }
    }
  }

  const AliasMap& aliases_;
  ValidationReport& report_;
  std::vector<Group> groups_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

bool is_header(const csv::Row& row, std::initializer_list<std::string_view> names) {
  if (row.fields.size() != names.size()) return false;
  std::size_t i = 0;
  for (auto expected : names) {
    if (fold_name(row.fields[i++]) != expected) return false;
  }
  return true;
}

std::vector<csv::Row> read_table(std::istream& in, std::initializer_list<std::string_view> header,
                                 std::string_view what) {
  auto rows = csv::read(in);
  if (!rows.empty() && is_header(rows.front(), header)) rows.erase(rows.begin());
  for (const auto& row : rows) {
    if (row.fields.size() != header.size()) {
      throw Error(ErrorKind::kMalformedRow,
                  std::string(what) + " line " + std::to_string(row.line) + ": expected " +
                      std::to_string(header.size()) + " columns, found " +
                      std::to_string(row.fields.size()));
    }
  }
  return rows;
}

std::string join_list(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& name : names) {
    if (!out.empty()) out += ';';
    out += name;
  }
  return out;
}

}  // namespace

std::string_view to_string(NoteKind kind) {
  switch (kind) {
    case NoteKind::kMalformedRecord: return "MalformedRecord";
    case NoteKind::kUnparseableTimeline: return "UnparseableTimeline";
    case NoteKind::kInvertedInterval: return "InvertedInterval";
    case NoteKind::kEmptyName: return "EmptyName";
    case NoteKind::kOrientationAmbiguity: return "OrientationAmbiguity";
    case NoteKind::kSideConflict: return "SideConflict";
    case NoteKind::kDisjointIntervals: return "DisjointIntervals";
    case NoteKind::kEmptySide: return "EmptySide";
    case NoteKind::kOutOfHorizon: return "OutOfHorizon";
    case NoteKind::kUnregisteredEntity: return "UnregisteredEntity";
  }
  return "Unknown";
}

std::size_t ValidationReport::count(NoteKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(notes.begin(), notes.end(), [kind](const auto& n) { return n.kind == kind; }));
}

MergeResult merge_records(std::span<const RawRecord> records, const AliasMap& aliases,
                          const EntityRegistry& registry) {
  MergeResult result;
  ValidationReport& report = result.report;
  Merger merger(aliases, report);
  for (const auto& record : records) merger.add(record);

  std::vector<const Group*> kept;
  for (const auto& group : merger.groups()) {
    if (group.sides[0].empty() || group.sides[1].empty()) {
      ++report.wars_excluded;
      report.notes.push_back({NoteKind::kEmptySide, group.name, "no opponents after merging"});
      continue;
    }
    if (!group.interval.intersects(kFullWindow)) {
      ++report.wars_excluded;
      report.notes.push_back({NoteKind::kOutOfHorizon, group.name,
                              std::to_string(group.interval.start) + "-" +
                                  std::to_string(group.interval.end) + " outside " +
                                  std::to_string(kHorizonStart) + "-" + std::to_string(kHorizonEnd)});
      continue;
    }
    kept.push_back(&group);
  }
  std::sort(kept.begin(), kept.end(), [](const Group* l, const Group* r) {
    return std::tie(l->interval.start, l->interval.end, l->key) <
           std::tie(r->interval.start, r->interval.end, r->key);
  });

  // Entity ids follow name order; first_war remembers where each name showed up.
  std::map<std::string, std::string> first_war;
  for (const Group* group : kept) {
    for (const auto& side : group->sides) {
      for (const auto& name : side) first_war.try_emplace(name, group->name);
    }
  }
  std::map<std::string, EntityId, std::less<>> ids;
  for (const auto& [name, war] : first_war) {
    Entity entity{static_cast<EntityId>(result.dataset.entities.size()), name, EntityKind::kOther,
                  Continent::kUnknown};
    if (const auto* entry = registry.find(name)) {
      entity.kind = entry->kind;
      entity.continent = entry->continent;
    } else {
      report.notes.push_back({NoteKind::kUnregisteredEntity, war, name});
    }
    ids.emplace(name, entity.id);
    result.dataset.entities.push_back(std::move(entity));
  }

  for (const Group* group : kept) {
    WarRecord war{static_cast<WarId>(result.dataset.wars.size()), group->name, group->interval, {}, {}};
    for (const auto& name : group->sides[0]) war.side_a.push_back(ids.at(name));
    for (const auto& name : group->sides[1]) war.side_b.push_back(ids.at(name));
    std::sort(war.side_a.begin(), war.side_a.end());
    std::sort(war.side_b.begin(), war.side_b.end());
    result.dataset.wars.push_back(std::move(war));
  }
  return result;
}

std::vector<RawRecord> read_raw_records(std::istream& in) {
  const auto rows = read_table(
      in, {"source_page", "war_name", "timeline_text", "allies", "opponents"}, "raw records");
  std::vector<RawRecord> records;
  records.reserve(rows.size());
  for (const auto& row : rows) {
    records.push_back({row.fields[0], row.fields[1], row.fields[2], csv::split_list(row.fields[3]),
                       csv::split_list(row.fields[4]), row.line});
  }
  return records;
}

AliasMap read_alias_map(std::istream& in) {
  const auto rows = read_table(in, {"variant", "canonical"}, "alias map");
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& row : rows) entries.emplace_back(row.fields[0], row.fields[1]);
  return AliasMap(entries);
}

EntityRegistry read_registry(std::istream& in) {
  const auto rows = read_table(in, {"canonical", "kind", "continent"}, "registry");
  std::vector<RegistryEntry> entries;
  for (const auto& row : rows) {
    const auto kind = parse_entity_kind(row.fields[1]);
    const auto continent = parse_continent(row.fields[2]);
    if (!kind || !continent) {
      throw Error(ErrorKind::kMalformedRow, "registry line " + std::to_string(row.line) +
                                                ": unknown kind or continent");
    }
    entries.push_back({row.fields[0], *kind, *continent});
  }
  return EntityRegistry(std::move(entries));
}

void write_raw_records(std::ostream& out, std::span<const RawRecord> records) {
  out << "source_page,war_name,timeline_text,allies,opponents\n";
  for (const auto& r : records) {
    out << csv::quote(r.source_page) << ',' << csv::quote(r.war_name) << ','
        << csv::quote(r.timeline_text) << ',' << csv::quote(join_list(r.ally_names)) << ','
        << csv::quote(join_list(r.opponent_names)) << '\n';
  }
}

void write_report_text(std::ostream& out, const ValidationReport& report) {
  for (const auto& note : report.notes) {
    out << to_string(note.kind) << '\t' << note.war << '\t' << note.detail << '\n';
  }
}

void write_report_json(std::ostream& out, const ValidationReport& report) {
  nlohmann::ordered_json doc;
  doc["records_read"] = report.records_read;
  doc["records_dropped"] = report.records_dropped;
  doc["wars_excluded"] = report.wars_excluded;
  doc["notes"] = nlohmann::ordered_json::array();
  for (const auto& note : report.notes) {
    doc["notes"].push_back({{"kind", to_string(note.kind)}, {"war", note.war}, {"detail", note.detail}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace warnet
