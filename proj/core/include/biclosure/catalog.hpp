#pragma once

#include <cstddef>
#include <vector>

#include "biclosure/poset.hpp"

namespace biclosure {

/// Default upper bound on the catalog order. Class counts grow quickly
/// (1, 2, 5, 16, 63, 318, 2045, 16999 for n = 1..8) and every class is
/// canonicalized by permutation search, so n = 8 already takes a while.
inline constexpr std::size_t kDefaultCatalogBound = 6;

/// One poset per isomorphism class of n-element posets, relabelled p0..p{n-1}
/// in canonical order and sorted by canonical code. Built by adding a new
/// maximal element above every down-set of each (n-1)-element class.
/// Throws BoundExceeded if n > max_n or n exceeds the canonical-code limit.
std::vector<Poset> enumerate_posets(std::size_t n, std::size_t max_n = kDefaultCatalogBound);

}  // namespace biclosure
