#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace warnet::csv {

struct Row {
  int line = 0;  // 1-based line the row starts on
  std::vector<std::string> fields;
};

/// Reads comma-separated text with RFC 4180 quoting. Blank lines are skipped;
/// CRLF is accepted. Throws Error(kMalformedRow) on an unterminated quote.
std::vector<Row> read(std::istream& in);

/// Quotes a field when it contains a comma, quote, or line break.
std::string quote(std::string_view field);

/// Splits a multi-valued field on ';', trimming pieces and dropping empties.
std::vector<std::string> split_list(std::string_view field);

}  // namespace warnet::csv
