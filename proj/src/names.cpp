#include "warnet/names.hpp"

#include <cctype>

#include "warnet/error.hpp"

namespace warnet {

std::string clean_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  bool pending_space = false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string fold_name(std::string_view name) {
  std::string out = clean_name(name);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

AliasMap::AliasMap(const std::vector<std::pair<std::string, std::string>>& entries) {
  for (const auto& [variant, canonical] : entries) {
    std::string key = clean_name(variant);
    std::string value = clean_name(canonical);
    if (key.empty() || value.empty()) {
      throw Error(ErrorKind::kInvalidAliasMap, "empty entry '" + variant + "' -> '" + canonical + "'");
    }
    auto [it, inserted] = entries_.emplace(std::move(key), value);
    if (!inserted && it->second != value) {
      throw Error(ErrorKind::kInvalidAliasMap,
                  "'" + it->first + "' maps to both '" + it->second + "' and '" + value + "'");
    }
  }
  for (const auto& [variant, canonical] : entries_) {
    auto hit = entries_.find(canonical);
    if (hit != entries_.end() && hit->second != canonical) {
      throw Error(ErrorKind::kInvalidAliasMap, "canonical '" + canonical + "' (from '" + variant +
                                                   "') is itself mapped to '" + hit->second + "'");
    }
  }
}

std::optional<std::string_view> AliasMap::find(std::string_view cleaned) const {
  auto it = entries_.find(cleaned);
  if (it == entries_.end()) return std::nullopt;
  return std::string_view(it->second);
}

NormalizedName normalize_name(std::string_view name, const AliasMap& aliases) {
  std::string cleaned = clean_name(name);
  if (cleaned.empty()) throw Error(ErrorKind::kEmptyName, "whitespace-only name");
  if (auto hit = aliases.find(cleaned)) return {std::string(*hit), true};
  return {std::move(cleaned), false};
}

EntityRegistry::EntityRegistry(std::vector<RegistryEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i].canonical_name = clean_name(entries_[i].canonical_name);
    if (entries_[i].canonical_name.empty()) {
      throw Error(ErrorKind::kInvalidRegistry, "empty canonical name at entry " + std::to_string(i));
    }
    if (!index_.emplace(entries_[i].canonical_name, i).second) {
      throw Error(ErrorKind::kInvalidRegistry, "duplicate entity '" + entries_[i].canonical_name + "'");
    }
  }
}

const RegistryEntry* EntityRegistry::find(std::string_view canonical) const {
  auto it = index_.find(canonical);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

}  // namespace warnet
