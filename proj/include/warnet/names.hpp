#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "warnet/types.hpp"

namespace warnet {

/// Trims and collapses internal whitespace runs to one space.
std::string clean_name(std::string_view name);

/// ASCII case-fold of clean_name; used for war merge keys.
std::string fold_name(std::string_view name);

/// Many-to-one map from name variants to canonical names.
///
/// Keys and values are stored cleaned. Construction rejects empty entries
/// and chains (a canonical that is itself remapped), so lookups are
/// idempotent.
class AliasMap {
 public:
  AliasMap() = default;
  explicit AliasMap(const std::vector<std::pair<std::string, std::string>>& entries);
  AliasMap(std::initializer_list<std::pair<std::string, std::string>> entries)
      : AliasMap(std::vector<std::pair<std::string, std::string>>(entries)) {}

  std::optional<std::string_view> find(std::string_view cleaned) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::string, std::string, std::less<>>& entries() const noexcept {
    return entries_;
  }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

struct NormalizedName {
  std::string canonical;
  bool was_mapped = false;

  friend bool operator==(const NormalizedName&, const NormalizedName&) = default;
};

/// Throws Error(kEmptyName) for whitespace-only input.
NormalizedName normalize_name(std::string_view name, const AliasMap& aliases);

struct RegistryEntry {
  std::string canonical_name;
  EntityKind kind = EntityKind::kOther;
  Continent continent = Continent::kUnknown;
};

class EntityRegistry {
 public:
  EntityRegistry() = default;
  /// Throws Error(kInvalidRegistry) on duplicate or empty names.
  explicit EntityRegistry(std::vector<RegistryEntry> entries);

  const RegistryEntry* find(std::string_view canonical) const;
  const std::vector<RegistryEntry>& entries() const noexcept { return entries_; }

 private:
  std::vector<RegistryEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace warnet
