#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace warnet {

enum class ErrorKind {
  kUnparseableTimeline,
  kInvertedInterval,
  kEmptyName,
  kInvalidAliasMap,
  kInvalidRegistry,
  kUnknownEntityId,
  kUnknownEntity,
  kInvalidWar,
  kInvalidWindow,
  kYearOutOfRange,
  kSameEntity,
  kInvalidArgument,
  kMalformedRow,
  kNonPositiveGdp,
  kNonPositiveScale,
  kInsufficientData,
  kDegenerateVariance,
  kIo,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace warnet
