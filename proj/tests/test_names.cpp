#include <gtest/gtest.h>

#include <sstream>

#include "warnet/csv.hpp"
#include "warnet/error.hpp"
#include "warnet/names.hpp"

namespace warnet {
namespace {

AliasMap argentina() {
  return AliasMap({{"Argentine Republic", "Argentina"},
                   {"Argentine Armed Forces", "Argentina"},
                   {"Argentine Air Force", "Argentina"},
                   {"Argentine Navy", "Argentina"},
                   {"Government of Argentina", "Argentina"}});
}

TEST(NormalizeName, MapsVariant) {
  EXPECT_EQ(normalize_name("Argentine Navy", argentina()), (NormalizedName{"Argentina", true}));
}

TEST(NormalizeName, CanonicalIsFixedPoint) {
  EXPECT_EQ(normalize_name("Argentina", argentina()), (NormalizedName{"Argentina", false}));
}

TEST(NormalizeName, CleansWhitespace) {
  EXPECT_EQ(normalize_name("  France ", AliasMap{}), (NormalizedName{"France", false}));
  EXPECT_EQ(normalize_name("United \t  Kingdom", AliasMap{}), (NormalizedName{"United Kingdom", false}));
  EXPECT_EQ(normalize_name(" Argentine   Air\tForce ", argentina()), (NormalizedName{"Argentina", true}));
}

TEST(NormalizeName, EmptyNameRejected) {
  try {
    normalize_name(" \t ", AliasMap{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyName);
  }
}

TEST(NormalizeName, Idempotent) {
  const AliasMap map = argentina();
  for (const char* name : {"Argentine Navy", "Argentina", " Government  of Argentina", "Chile", "France "}) {
    const auto once = normalize_name(name, map).canonical;
    EXPECT_EQ(normalize_name(once, map).canonical, once) << name;
  }
}

using Entries = std::vector<std::pair<std::string, std::string>>;

TEST(AliasMap, RejectsChainsAndEmpties) {
  EXPECT_THROW(AliasMap({{"A", "B"}, {"B", "C"}}), Error);
  EXPECT_THROW(AliasMap(Entries{{"", "B"}}), Error);
  EXPECT_THROW(AliasMap(Entries{{"A", "  "}}), Error);
  EXPECT_THROW(AliasMap({{"A", "B"}, {"A", "C"}}), Error);
  EXPECT_NO_THROW(AliasMap({{"A", "B"}, {"B", "B"}}));
}

TEST(EntityRegistry, RejectsDuplicates) {
  EXPECT_THROW(EntityRegistry({{"A", EntityKind::kCountry, Continent::kAsia},
                               {" A ", EntityKind::kEmpire, Continent::kAsia}}),
               Error);
  const EntityRegistry registry({{"Ottoman Empire", EntityKind::kEmpire, Continent::kEuroAsia}});
  ASSERT_NE(registry.find("Ottoman Empire"), nullptr);
  EXPECT_EQ(registry.find("Ottoman Empire")->continent, Continent::kEuroAsia);
  EXPECT_EQ(registry.find("Ottoman"), nullptr);
}

TEST(EnumText, LenientParsing) {
  EXPECT_EQ(parse_continent("North America"), Continent::kNorthAmerica);
  EXPECT_EQ(parse_continent("Euro-Asia"), Continent::kEuroAsia);
  EXPECT_EQ(parse_continent("europe"), Continent::kEurope);
  EXPECT_EQ(parse_continent("Atlantis"), std::nullopt);
  EXPECT_EQ(parse_entity_kind("terror_org"), EntityKind::kTerrorOrg);
  EXPECT_EQ(parse_entity_kind("Terror Org"), EntityKind::kTerrorOrg);
  EXPECT_EQ(parse_entity_kind("kingdom"), std::nullopt);
}

TEST(Csv, QuotedFieldsAndLineNumbers) {
  std::istringstream in("a,b\n\n\"x, y\",\"he said \"\"hi\"\"\"\r\n\"multi\nline\",z\nlast,row");
  const auto rows = csv::read(in);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1].fields, (std::vector<std::string>{"x, y", "he said \"hi\""}));
  EXPECT_EQ(rows[1].line, 3);
  EXPECT_EQ(rows[2].fields[0], "multi\nline");
  EXPECT_EQ(rows[2].line, 4);
  EXPECT_EQ(rows[3].line, 6);
}

TEST(Csv, UnterminatedQuote) {
  std::istringstream in("a,\"b\n");
  EXPECT_THROW(csv::read(in), Error);
}

TEST(Csv, QuoteRoundTrip) {
  for (std::string field : {"plain", "with,comma", "with \"quote\"", "line\nbreak", ""}) {
    std::istringstream in(csv::quote(field) + ",end\n");
    const auto rows = csv::read(in);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].fields[0], field);
  }
}

TEST(Csv, SplitList) {
  EXPECT_EQ(csv::split_list(" A ; B;;C ;"), (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_TRUE(csv::split_list("").empty());
}

}  // namespace
}  // namespace warnet
