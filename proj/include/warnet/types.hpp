#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace warnet {

using EntityId = std::int32_t;
using WarId = std::int32_t;
using EdgeId = std::int32_t;

// Years the analyses cover; also the cap applied to ongoing wars.
inline constexpr int kHorizonStart = 1500;
inline constexpr int kHorizonEnd = 2020;

/// Inclusive range of years CE.
struct YearInterval {
  int start = 0;
  int end = 0;

  bool contains(int year) const noexcept { return start <= year && year <= end; }
  bool intersects(const YearInterval& other) const noexcept {
    return start <= other.end && other.start <= end;
  }
  int length() const noexcept { return end - start + 1; }

  friend bool operator==(const YearInterval&, const YearInterval&) = default;
};

inline constexpr YearInterval kFullWindow{kHorizonStart, kHorizonEnd};

enum class EntityKind { kCountry, kEmpire, kTerrorOrg, kAlliance, kOther };

enum class Continent {
  kAsia,
  kEurope,
  kAfrica,
  kNorthAmerica,
  kSouthAmerica,
  kAustralia,
  kEuroAsia,
  kUnknown,
};

inline constexpr std::array<Continent, 8> kAllContinents = {
    Continent::kAsia,         Continent::kEurope,    Continent::kAfrica,
    Continent::kNorthAmerica, Continent::kSouthAmerica, Continent::kAustralia,
    Continent::kEuroAsia,     Continent::kUnknown,
};

std::string_view to_string(EntityKind kind);
std::string_view to_string(Continent continent);

// Lenient: case, spaces, '-' and '_' are ignored ("North America",
// "north_america" and "NorthAmerica" all match).
std::optional<EntityKind> parse_entity_kind(std::string_view text);
std::optional<Continent> parse_continent(std::string_view text);

struct Entity {
  EntityId id = 0;
  std::string canonical_name;
  EntityKind kind = EntityKind::kOther;
  Continent continent = Continent::kUnknown;

  friend bool operator==(const Entity&, const Entity&) = default;
};

/// A deduplicated war. Sides hold sorted entity ids and are disjoint.
struct WarRecord {
  WarId war_id = 0;
  std::string name;
  YearInterval interval;
  std::vector<EntityId> side_a;
  std::vector<EntityId> side_b;

  friend bool operator==(const WarRecord&, const WarRecord&) = default;
};

/// Entities plus wars; what ingest produces and what the dataset file stores.
struct Dataset {
  std::vector<Entity> entities;
  std::vector<WarRecord> wars;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

}  // namespace warnet
