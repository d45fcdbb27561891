#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "biclosure/poset.hpp"

namespace biclosure {

/// A subset of a finite carrier {0..m-1} whose size is only known at run time
/// (points of a dual subspace can number far more than 64).
using PointSet = boost::dynamic_bitset<std::uint64_t>;

/// Sorted, duplicate-free list of subsets of a fixed carrier.
/// Members are ordered as binary numbers (bit m-1 most significant).
class SubsetFamily {
 public:
  SubsetFamily() = default;
  explicit SubsetFamily(std::size_t carrier_size) : carrier_size_(carrier_size) {}
  /// Throws MemberOutOfRange if some member's size differs from carrier_size.
  SubsetFamily(std::size_t carrier_size, std::vector<PointSet> members);

  std::size_t carrier_size() const { return carrier_size_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<PointSet>& members() const { return members_; }
  const PointSet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const PointSet& s) const;
  /// Index of s in members(), or size() if absent.
  std::size_t index_of(const PointSet& s) const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  std::size_t carrier_size_ = 0;
  std::vector<PointSet> members_;
};

/// The members of F ordered by inclusion. Labels are the members written as
/// index sets, e.g. "{0,2}".
Poset poset_of_family(const SubsetFamily& F);

/// "{0,2}" style rendering of a point set.
std::string format_point_set(const PointSet& s);

inline PointSet empty_points(std::size_t m) { return PointSet(m); }
inline PointSet all_points(std::size_t m) { return ~PointSet(m); }

}  // namespace biclosure
