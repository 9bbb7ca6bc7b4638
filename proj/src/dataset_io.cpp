#include "warnet/dataset_io.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "warnet/error.hpp"

namespace warnet {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = line.find(sep, begin);
    out.push_back(line.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return out;
}

[[noreturn]] void malformed(int line, const std::string& what) {
  throw Error(ErrorKind::kMalformedRow, "dataset line " + std::to_string(line) + ": " + what);
}

int to_int(std::string_view text, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    malformed(line, "expected an integer, found '" + std::string(text) + "'");
  }
  return value;
}

std::vector<EntityId> to_ids(std::string_view text, int line) {
  std::vector<EntityId> ids;
  if (text.empty()) return ids;
  for (auto piece : split(text, ';')) ids.push_back(to_int(piece, line));
  return ids;
}

std::string join_ids(const std::vector<EntityId>& ids) {
  std::string out;
  for (EntityId id : ids) {
    if (!out.empty()) out += ';';
    out += std::to_string(id);
  }
  return out;
}

}  // namespace

void write_dataset(std::ostream& out, const Dataset& dataset) {
  out << kDatasetMagic << '\t' << kDatasetVersion << '\n';
  for (const auto& e : dataset.entities) {
    out << "entity\t" << e.id << '\t' << e.canonical_name << '\t' << to_string(e.kind) << '\t'
        << to_string(e.continent) << '\n';
  }
  for (const auto& w : dataset.wars) {
    out << "war\t" << w.war_id << '\t' << w.interval.start << '\t' << w.interval.end << '\t'
        << join_ids(w.side_a) << '\t' << join_ids(w.side_b) << '\t' << w.name << '\n';
  }
}

Dataset read_dataset(std::istream& in) {
  Dataset dataset;
  std::string raw;
  int line = 0;
  bool seen_magic = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = split(text, '\t');
    if (!seen_magic) {
      if (fields.size() != 2 || fields[0] != kDatasetMagic) malformed(line, "missing dataset header");
      if (to_int(fields[1], line) != kDatasetVersion) malformed(line, "unsupported version");
      seen_magic = true;
      continue;
    }
    if (fields[0] == "entity") {
      if (fields.size() != 5) malformed(line, "entity needs 5 fields");
      if (!dataset.wars.empty()) malformed(line, "entity after wars");
      const auto kind = parse_entity_kind(fields[3]);
      const auto continent = parse_continent(fields[4]);
      if (!kind || !continent) malformed(line, "unknown kind or continent");
      const int id = to_int(fields[1], line);
      if (id != static_cast<int>(dataset.entities.size())) malformed(line, "entity ids must be dense");
      dataset.entities.push_back({id, std::string(fields[2]), *kind, *continent});
    } else if (fields[0] == "war") {
      if (fields.size() != 7) malformed(line, "war needs 7 fields");
      const int id = to_int(fields[1], line);
      if (id != static_cast<int>(dataset.wars.size())) malformed(line, "war ids must be dense");
      dataset.wars.push_back({id, std::string(fields[6]),
                              {to_int(fields[2], line), to_int(fields[3], line)},
                              to_ids(fields[4], line), to_ids(fields[5], line)});
    } else {
      malformed(line, "unknown record '" + std::string(fields[0]) + "'");
    }
  }
  if (!seen_magic) malformed(line, "empty dataset file");
  return dataset;
}

}  // namespace warnet
