#include "warnet/types.hpp"

#include <cctype>

namespace warnet {
namespace {

std::string fold_enum_text(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == ' ' || c == '-' || c == '_' || c == '\t') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::kCountry: return "country";
    case EntityKind::kEmpire: return "empire";
    case EntityKind::kTerrorOrg: return "terror_org";
    case EntityKind::kAlliance: return "alliance";
    case EntityKind::kOther: return "other";
  }
  return "other";
}

std::string_view to_string(Continent continent) {
  switch (continent) {
    case Continent::kAsia: return "Asia";
    case Continent::kEurope: return "Europe";
    case Continent::kAfrica: return "Africa";
    case Continent::kNorthAmerica: return "NorthAmerica";
    case Continent::kSouthAmerica: return "SouthAmerica";
    case Continent::kAustralia: return "Australia";
    case Continent::kEuroAsia: return "EuroAsia";
    case Continent::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<EntityKind> parse_entity_kind(std::string_view text) {
  const std::string folded = fold_enum_text(text);
  for (auto kind : {EntityKind::kCountry, EntityKind::kEmpire, EntityKind::kTerrorOrg,
                    EntityKind::kAlliance, EntityKind::kOther}) {
    if (fold_enum_text(to_string(kind)) == folded) return kind;
  }
  if (folded == "terrororganization" || folded == "terrororganisation" || folded == "terror") {
    return EntityKind::kTerrorOrg;
  }
  return std::nullopt;
}

std::optional<Continent> parse_continent(std::string_view text) {
  const std::string folded = fold_enum_text(text);
  for (auto continent : kAllContinents) {
    if (fold_enum_text(to_string(continent)) == folded) return continent;
  }
  if (folded == "eurasia") return Continent::kEuroAsia;
  if (folded == "oceania") return Continent::kAustralia;
  return std::nullopt;
}

}  // namespace warnet
