#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biclosure {

/// A subset of a poset's carrier, one bit per element index.
using ElementSet = std::uint64_t;

/// Largest carrier a Poset can hold (one machine word of element bits).
inline constexpr std::size_t kMaxElements = 64;

constexpr ElementSet element_bit(std::size_t i) { return ElementSet{1} << i; }

constexpr ElementSet full_set(std::size_t n) {
  return n >= 64 ? ~ElementSet{0} : element_bit(n) - 1;
}

constexpr bool contains(ElementSet s, std::size_t i) { return (s >> i) & 1U; }

constexpr bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

/// Calls f(i) for every element index i in s, ascending.
template <typename F>
void for_each_element(ElementSet s, F&& f) {
  while (s != 0) {
    f(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

/// Finite partial order on the indices 0..n-1.
///
/// Labels are only kept for I/O; every algorithm works on indices and
/// ElementSet bitmasks. The relation is stored twice, as the up-set and the
/// down-set of each element, so cone queries are single loads.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from an already reflexive-transitive relation given as
  /// up-sets (up[i] has bit j iff i <= j). Throws CycleError when the relation
  /// is not a partial order.
  static Poset from_up_sets(std::vector<std::string> labels, std::vector<ElementSet> up);

  std::size_t size() const { return up_.size(); }
  ElementSet carrier() const { return full_set(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  bool leq(std::size_t p, std::size_t q) const { return contains(up_[p], q); }
  bool less(std::size_t p, std::size_t q) const { return p != q && leq(p, q); }

  /// Elements q with p <= q.
  ElementSet up_set(std::size_t p) const { return up_[p]; }
  /// Elements q with q <= p.
  ElementSet down_set(std::size_t p) const { return down_[p]; }

  bool is_up_set(ElementSet s) const;
  bool is_down_set(ElementSet s) const;
  /// Smallest up-set (down-set) containing s.
  ElementSet up_closure(ElementSet s) const;
  ElementSet down_closure(ElementSet s) const;

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  /// Covering pairs (p, q): p < q with nothing strictly in between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Reflexive-transitive closure of the asserted pairs (lo, hi) meaning lo <= hi.
/// Throws UnknownLabel, CycleError, or BoundExceeded (more than kMaxElements).
Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& pairs);

/// Greatest lower bound / least upper bound, when it exists.
std::optional<std::size_t> meet(const Poset& P, std::size_t p, std::size_t q);
std::optional<std::size_t> join(const Poset& P, std::size_t p, std::size_t q);

bool is_lattice(const Poset& P);
bool is_bounded(const Poset& P);
/// Checks a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) over all triples. False for non-lattices.
bool is_distributive(const Poset& P);
/// Bounded, distributive, and every element has a complement.
bool is_boolean(const Poset& P);

// Small named posets used by tests, the CLI examples and the benchmarks.
namespace named {
Poset chain(std::size_t n);
Poset antichain(std::size_t n);
/// Boolean lattice of all subsets of a k-element set (2^k elements).
Poset boolean_lattice(std::size_t k);
/// Bottom, k pairwise incomparable atoms, top. M_2 is the diamond B4.
Poset m_lattice(std::size_t k);
/// The pentagon 0 < a < c < 1, 0 < b < 1.
Poset pentagon();
/// a < c, b < c.
Poset v_poset();
/// 0 < a∧b < a, b < a∨b < 1.
Poset free_distributive_2();
}  // namespace named

}  // namespace biclosure
