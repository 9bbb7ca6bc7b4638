#include <gtest/gtest.h>

#include <sstream>

#include "support/fixture_a.hpp"
#include "support/random_dataset.hpp"
#include "warnet/dataset_io.hpp"
#include "warnet/error.hpp"

namespace warnet {
namespace {

using namespace testing;

Dataset round_trip(const Dataset& d) {
  std::stringstream buf;
  write_dataset(buf, d);
  return read_dataset(buf);
}

std::string read_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_dataset(in);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMalformedRow);
    return e.what();
  }
  ADD_FAILURE() << "read: " << text;
  return {};
}

TEST(DatasetIo, FixtureRoundTrip) {
  std::stringstream buf;
  write_dataset(buf, fixture_a());
  const std::string text = buf.str();
  EXPECT_EQ(text.rfind("warnet-dataset\t1\n", 0), 0u);
  EXPECT_NE(text.find("entity\t3\tT\tterror_org\tUnknown\n"), std::string::npos);
  EXPECT_NE(text.find("war\t1\t1701\t1701\t0;2\t1\t"), std::string::npos);
  EXPECT_EQ(read_dataset(buf), fixture_a());
}

TEST(DatasetIo, EmptyDataset) { EXPECT_EQ(round_trip(Dataset{}), Dataset{}); }

TEST(DatasetIo, NamesWithPunctuation) {
  Dataset d;
  d.entities = {{0, "Côte d'Ivoire", EntityKind::kCountry, Continent::kAfrica},
                {1, "Holy League, the", EntityKind::kAlliance, Continent::kEurope}};
  d.wars = {{0, "War of \"the\" League; part 2", {1600, 1610}, {0}, {1}}};
  EXPECT_EQ(round_trip(d), d);
}

TEST(DatasetIo, CommentsAndBlankLines) {
  std::istringstream in(
      "warnet-dataset\t1\n# entities\nentity\t0\tX\tcountry\tAsia\n\nentity\t1\tY\tempire\tEurope\n"
      "war\t0\t1900\t1901\t0\t1\tDuel\n");
  const auto d = read_dataset(in);
  ASSERT_EQ(d.entities.size(), 2u);
  EXPECT_EQ(d.wars.at(0).interval, (YearInterval{1900, 1901}));
}

TEST(DatasetIo, MalformedInputs) {
  EXPECT_NE(read_error("").find("line"), std::string::npos);
  read_error("warnet-dataset\t2\n");
  read_error("something\t1\n");
  EXPECT_NE(read_error("warnet-dataset\t1\nentity\t0\tX\tcountry\n").find("line 2"), std::string::npos);
  read_error("warnet-dataset\t1\nentity\t1\tX\tcountry\tAsia\n");
  read_error("warnet-dataset\t1\nentity\t0\tX\tplanet\tAsia\n");
  read_error("warnet-dataset\t1\nentity\t0\tX\tcountry\tAtlantis\n");
  EXPECT_NE(read_error("warnet-dataset\t1\nentity\t0\tX\tcountry\tAsia\nentity\t1\tY\tcountry\tAsia\n"
                       "war\t0\t19o0\t1901\t0\t1\tDuel\n")
                .find("line 4"),
            std::string::npos);
  read_error("warnet-dataset\t1\nentity\t0\tX\tcountry\tAsia\nentity\t1\tY\tcountry\tAsia\n"
             "war\t0\t1900\t1901\t0;x\t1\tDuel\n");
  read_error("warnet-dataset\t1\nentity\t0\tX\tcountry\tAsia\nentity\t1\tY\tcountry\tAsia\n"
             "war\t3\t1900\t1901\t0\t1\tDuel\n");
  read_error("warnet-dataset\t1\nbattle\t0\n");
}

class RandomDatasetIo : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomDatasetIo, RoundTripIsIdentity) {
  const Dataset d = random_dataset(GetParam());
  const Dataset back = round_trip(d);
  EXPECT_EQ(back, d);
  std::stringstream first;
  std::stringstream second;
  write_dataset(first, d);
  write_dataset(second, back);
  EXPECT_EQ(first.str(), second.str());
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomDatasetIo, ::testing::Range<std::uint64_t>(1, 101));

}  // namespace
}  // namespace warnet
