#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "biclosure/poset.hpp"

namespace biclosure {

/// witness[p] is the element of Q that p is sent to.
using Bijection = std::vector<std::size_t>;

/// An order isomorphism P -> Q if one exists.
std::optional<Bijection> find_isomorphism(const Poset& P, const Poset& Q);

inline bool are_isomorphic(const Poset& P, const Poset& Q) {
  return find_isomorphism(P, Q).has_value();
}

/// True iff f is a bijection P -> Q with p <= q  <=>  f(p) <= f(q).
bool is_order_isomorphism(const Poset& P, const Poset& Q, const Bijection& f);

/// Largest poset the canonical code can describe (n*n relation bits in one word).
inline constexpr std::size_t kMaxCanonicalOrder = 8;

/// Canonical form of P: the minimum relation code over all element orders that
/// respect the (|down-set|, |up-set|) invariant. Equal codes <=> isomorphic.
/// `order`, when given, receives the element order that realizes the minimum.
std::uint64_t canonical_code(const Poset& P, std::vector<std::size_t>* order = nullptr);

}  // namespace biclosure
