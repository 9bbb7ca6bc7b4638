#include "warnet/timeline.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "warnet/error.hpp"

namespace warnet {
namespace {

struct Mark {
  int start;
  int end;
};

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_ordinal_suffix(std::string_view s) {
  return s == "st" || s == "nd" || s == "rd" || s == "th";
}

// Word ending right before `pos`, skipping spaces and hyphens ("mid-17th").
std::string_view word_before(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end > 0 && (text[end - 1] == ' ' || text[end - 1] == '-' || text[end - 1] == '\t')) --end;
  std::size_t begin = end;
  while (begin > 0 && is_alpha(text[begin - 1])) --begin;
  return text.substr(begin, end - begin);
}

CenturyPart qualifier_from(std::string_view word) {
  if (word == "early") return CenturyPart::kEarly;
  if (word == "mid" || word == "middle") return CenturyPart::kMid;
  if (word == "late") return CenturyPart::kLate;
  return CenturyPart::kWhole;
}

int cap_year(int year) { return std::min(year, kHorizonEnd); }

std::vector<Mark> scan(std::string_view text) {
  std::vector<Mark> marks;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < text.size() && is_digit(text[j])) ++j;
      const std::size_t digits = j - i;
      std::size_t k = j;
      while (k < text.size() && is_alpha(text[k])) ++k;
      const std::string_view suffix = text.substr(j, k - j);

      if (digits <= 2 && is_ordinal_suffix(suffix)) {
        std::size_t w = k;
        while (w < text.size() && (text[w] == ' ' || text[w] == '-' || text[w] == '\t')) ++w;
        if (text.substr(w, 7) == "century" &&
            (w + 7 == text.size() || !is_alpha(text[w + 7]))) {
          const int century = std::stoi(std::string(text.substr(i, digits)));
          if (century >= 1) {
            const auto years = century_years(century, qualifier_from(word_before(text, i)));
            marks.push_back({cap_year(years.start), cap_year(years.end)});
          }
          i = w + 7;
          continue;
        }
      }
      // Ordinals ("5th") are day numbers; "1940s" still counts as a year.
      const bool ordinal = is_ordinal_suffix(suffix);
      if ((digits == 3 || digits == 4) && text[i] != '0' && !ordinal) {
        const int year = cap_year(std::stoi(std::string(text.substr(i, digits))));
        marks.push_back({year, year});
      }
      i = k;
      continue;
    }
    if (is_alpha(c)) {
      std::size_t j = i;
      while (j < text.size() && is_alpha(text[j])) ++j;
      const std::string_view word = text.substr(i, j - i);
      if (word == "present" || word == "ongoing") {
        marks.push_back({kHorizonEnd, kHorizonEnd});
      }
      i = j;
      continue;
    }
    ++i;
  }
  return marks;
}

}  // namespace

CenturySpan century_span(CenturyPart part) noexcept {
  switch (part) {
    case CenturyPart::kEarly: return {1, 33};
    case CenturyPart::kMid: return {34, 66};
    case CenturyPart::kLate: return {67, 100};
    case CenturyPart::kWhole: return {1, 100};
  }
  return {1, 100};
}

YearInterval century_years(int century, CenturyPart part) noexcept {
  const int base = 100 * (century - 1);
  const auto span = century_span(part);
  return {base + span.first_offset, base + span.last_offset};
}

YearInterval parse_timeline(std::string_view text) {
  const std::string lowered = lowercase(text);
  const auto marks = scan(lowered);
  if (marks.empty()) {
    throw Error(ErrorKind::kUnparseableTimeline, "no year or century in '" + std::string(text) + "'");
  }
  const YearInterval interval{marks.front().start, marks.back().end};
  if (interval.start > interval.end) {
    throw Error(ErrorKind::kInvertedInterval,
                "'" + std::string(text) + "' gives " + std::to_string(interval.start) + " > " +
                    std::to_string(interval.end));
  }
  return interval;
}

}  // namespace warnet
