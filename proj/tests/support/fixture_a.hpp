#pragma once

#include <filesystem>
#include <string>

#include "warnet/types.hpp"

namespace warnet::testing {

// Entities A, B, C (countries) and T (terror org); ids follow name order.
inline constexpr EntityId kA = 0;
inline constexpr EntityId kB = 1;
inline constexpr EntityId kC = 2;
inline constexpr EntityId kT = 3;

// W1 {A} vs {B} 1700-1702, W2 {A,C} vs {B} 1701, W3 {A} vs {C} 1800,
// W4 {A,B} vs {T} 2001-2003.
inline Dataset fixture_a() {
  Dataset d;
  d.entities = {{kA, "A", EntityKind::kCountry, Continent::kEurope},
                {kB, "B", EntityKind::kCountry, Continent::kEurope},
                {kC, "C", EntityKind::kCountry, Continent::kAsia},
                {kT, "T", EntityKind::kTerrorOrg, Continent::kUnknown}};
  d.wars = {{0, "W1", {1700, 1702}, {kA}, {kB}},
            {1, "W2", {1701, 1701}, {kA, kC}, {kB}},
            {2, "W3", {1800, 1800}, {kA}, {kC}},
            {3, "W4", {2001, 2003}, {kA, kB}, {kT}}};
  return d;
}

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(WARNET_TEST_DATA_DIR) / name;
}

}  // namespace warnet::testing
