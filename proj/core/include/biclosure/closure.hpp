#pragma once

#include <cstddef>
#include <optional>

#include "biclosure/dual_space.hpp"
#include "biclosure/family.hpp"

namespace biclosure {

/// Carriers up to this size get their closed-set family computed at
/// construction; larger ones compute it on each request.
inline constexpr std::size_t kEagerCarrierLimit = 20;

/// Closure operator on {0..m-1} given by a base: the closed sets are the
/// intersections of base members, with the full carrier as the empty
/// intersection.
class ClosureOperator {
 public:
  /// Throws MemberOutOfRange if a base member is not over an m-point carrier.
  ClosureOperator(std::size_t m, SubsetFamily base);

  std::size_t carrier_size() const { return m_; }
  const SubsetFamily& base() const { return base_; }

  /// Smallest closed superset of X: the intersection of the base members
  /// containing X.
  PointSet apply(const PointSet& X) const;
  bool is_closed(const PointSet& X) const { return apply(X) == X; }

  /// The Moore family of closed sets, sorted.
  SubsetFamily closed_sets() const;

 private:
  SubsetFamily compute_closed_sets() const;

  std::size_t m_;
  SubsetFamily base_;
  std::optional<SubsetFamily> closed_;
};

ClosureOperator closure_from_base(std::size_t m, SubsetFamily base);

/// C(∅) = ∅.
bool is_exact(const ClosureOperator& C);

/// C(X ∪ Y) = C(X) ∪ C(Y). Checked as "the union of any two closed sets is
/// closed", which is equivalent for closure operators.
bool is_topological(const ClosureOperator& C);

/// Sets that are closed with a closed complement.
SubsetFamily clopen_sets(const ClosureOperator& C);

/// Sets closed under C1 whose complement is closed under C2. Throws CarrierMismatch.
SubsetFamily c1o2_family(const ClosureOperator& C1, const ClosureOperator& C2);

/// Same closed sets. Throws CarrierMismatch.
bool closures_equal(const ClosureOperator& C1, const ClosureOperator& C2);

struct ClosurePair {
  ClosureOperator c1;
  ClosureOperator c2;
};

/// The two closures a subspace A inherits: C1 generated by {UP_A(p)} and C2
/// by {LO_A(p)}, p ranging over the base poset.
ClosurePair closures_of_subspace(const Subspace& A);

}  // namespace biclosure
