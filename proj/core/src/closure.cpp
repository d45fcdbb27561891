#include "biclosure/closure.hpp"

#include <set>
#include <vector>

#include "biclosure/error.hpp"

namespace biclosure {

ClosureOperator::ClosureOperator(std::size_t m, SubsetFamily base) : m_(m), base_(std::move(base)) {
  if (base_.carrier_size() != m_) {
    throw MemberOutOfRange("base is over a carrier of " + std::to_string(base_.carrier_size()) +
                           " points, expected " + std::to_string(m_));
  }
  if (m_ <= kEagerCarrierLimit) closed_ = compute_closed_sets();
}

PointSet ClosureOperator::apply(const PointSet& X) const {
  if (X.size() != m_) throw MemberOutOfRange("argument is not a subset of the carrier");
  PointSet r = all_points(m_);
  for (const PointSet& b : base_) {
    if (X.is_subset_of(b)) r &= b;
  }
  return r;
}

SubsetFamily ClosureOperator::closed_sets() const {
  return closed_ ? *closed_ : compute_closed_sets();
}

SubsetFamily ClosureOperator::compute_closed_sets() const {
  std::set<PointSet> seen{all_points(m_)};
  std::vector<PointSet> family{all_points(m_)};
  for (const PointSet& b : base_) {
    std::vector<PointSet> fresh;
    for (const PointSet& m : family) {
      PointSet r = m & b;
      if (seen.insert(r).second) fresh.push_back(std::move(r));
    }
    family.insert(family.end(), fresh.begin(), fresh.end());
  }
  return SubsetFamily(m_, std::move(family));
}

ClosureOperator closure_from_base(std::size_t m, SubsetFamily base) {
  return ClosureOperator(m, std::move(base));
}

bool is_exact(const ClosureOperator& C) {
  return C.apply(empty_points(C.carrier_size())).none();
}

bool is_topological(const ClosureOperator& C) {
  const SubsetFamily closed = C.closed_sets();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      if (!closed.contains(closed[i] | closed[j])) return false;
    }
  }
  return true;
}

SubsetFamily c1o2_family(const ClosureOperator& C1, const ClosureOperator& C2) {
  if (C1.carrier_size() != C2.carrier_size()) {
    throw CarrierMismatch("closures act on carriers of different sizes");
  }
  std::vector<PointSet> out;
  for (const PointSet& X : C1.closed_sets()) {
    if (C2.is_closed(~X)) out.push_back(X);
  }
  return SubsetFamily(C1.carrier_size(), std::move(out));
}

SubsetFamily clopen_sets(const ClosureOperator& C) { return c1o2_family(C, C); }

bool closures_equal(const ClosureOperator& C1, const ClosureOperator& C2) {
  if (C1.carrier_size() != C2.carrier_size()) {
    throw CarrierMismatch("closures act on carriers of different sizes");
  }
  return C1.closed_sets() == C2.closed_sets();
}

ClosurePair closures_of_subspace(const Subspace& A) {
  std::vector<PointSet> ups;
  std::vector<PointSet> los;
  for (std::size_t p = 0; p < A.base().size(); ++p) {
    ups.push_back(A.up(p));
    los.push_back(A.lo(p));
  }
  return {ClosureOperator(A.size(), SubsetFamily(A.size(), std::move(ups))),
          ClosureOperator(A.size(), SubsetFamily(A.size(), std::move(los)))};
}

}  // namespace biclosure
