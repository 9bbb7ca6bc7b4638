#pragma once

#include <istream>
#include <ostream>

#include "warnet/types.hpp"

namespace warnet {

// Canonical dataset file, tab-separated, one record per line:
//
//   warnet-dataset<TAB>1
//   entity<TAB>id<TAB>name<TAB>kind<TAB>continent
//   war<TAB>id<TAB>start<TAB>end<TAB>side_a<TAB>side_b<TAB>name
//
// Sides are ';'-joined entity ids. Entities precede wars; ids are dense and
// in file order. Lines starting with '#' are comments.
inline constexpr const char* kDatasetMagic = "warnet-dataset";
inline constexpr int kDatasetVersion = 1;

void write_dataset(std::ostream& out, const Dataset& dataset);

/// Throws Error(kMalformedRow) with the offending line number.
Dataset read_dataset(std::istream& in);

}  // namespace warnet
