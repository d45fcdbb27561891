#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "biclosure/poset.hpp"

namespace biclosure {

/// A candidate orthocomplementation: image[p] is p'.
struct OrthoMap {
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t p) const { return image[p]; }
  friend bool operator==(const OrthoMap&, const OrthoMap&) = default;
  friend auto operator<=>(const OrthoMap&, const OrthoMap&) = default;
};

/// Empty string when f is an orthocomplementation of P, otherwise the first
/// violated law (involution, anti-isotone, join with complement, meet with
/// complement) with the offending element.
std::string ortho_violation(const Poset& P, const OrthoMap& f);

inline bool is_orthocomplementation(const Poset& P, const OrthoMap& f) {
  return ortho_violation(P, f).empty();
}

/// Every orthocomplementation of P, in lexicographic order of image vectors.
/// Empty when P is unbounded.
std::vector<OrthoMap> find_orthocomplementations(const Poset& P);

}  // namespace biclosure
