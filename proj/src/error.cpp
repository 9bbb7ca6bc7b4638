#include "warnet/error.hpp"

namespace warnet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnparseableTimeline: return "UnparseableTimeline";
    case ErrorKind::kInvertedInterval: return "InvertedInterval";
    case ErrorKind::kEmptyName: return "EmptyName";
    case ErrorKind::kInvalidAliasMap: return "InvalidAliasMap";
    case ErrorKind::kInvalidRegistry: return "InvalidRegistry";
    case ErrorKind::kUnknownEntityId: return "UnknownEntityId";
    case ErrorKind::kUnknownEntity: return "UnknownEntity";
    case ErrorKind::kInvalidWar: return "InvalidWar";
    case ErrorKind::kInvalidWindow: return "InvalidWindow";
    case ErrorKind::kYearOutOfRange: return "YearOutOfRange";
    case ErrorKind::kSameEntity: return "SameEntity";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kMalformedRow: return "MalformedRow";
    case ErrorKind::kNonPositiveGdp: return "NonPositiveGdp";
    case ErrorKind::kNonPositiveScale: return "NonPositiveScale";
    case ErrorKind::kInsufficientData: return "InsufficientData";
    case ErrorKind::kDegenerateVariance: return "DegenerateVariance";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace warnet
