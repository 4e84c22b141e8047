#pragma once

#include <cstdint>

#include "dendro/theta.hpp"

namespace dendro {

// Counts strict 2-functors between the free 2-categories presented by two
// tables of height <= 2, by direct enumeration over object maps, generator
// words and vertical-order constraints.  Independent of the wreath
// recursion used by hom_tables.
uint64_t strict_two_functor_count(const DimTable& s, const DimTable& t);

// Counts monotone maps between linear orders of sizes m+1 and p+1 through
// the closed binomial formula (stars and bars).
uint64_t monotone_map_count(int m, int p);

}  // namespace dendro
