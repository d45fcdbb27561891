#include "biclosure/family.hpp"

#include <algorithm>

#include "biclosure/error.hpp"

namespace biclosure {

SubsetFamily::SubsetFamily(std::size_t carrier_size, std::vector<PointSet> members)
    : carrier_size_(carrier_size), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.size() != carrier_size_) {
      throw MemberOutOfRange("family member has carrier " + std::to_string(m.size()) +
                             ", expected " + std::to_string(carrier_size_));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SubsetFamily::contains(const PointSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::size_t SubsetFamily::index_of(const PointSet& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

Poset poset_of_family(const SubsetFamily& F) {
  const std::size_t n = F.size();
  if (n > kMaxElements) {
    throw BoundExceeded("family has " + std::to_string(n) + " members; a poset holds at most " +
                        std::to_string(kMaxElements));
  }
  std::vector<std::string> labels;
  std::vector<ElementSet> up(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(format_point_set(F[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (F[i].is_subset_of(F[j])) up[i] |= element_bit(j);
    }
  }
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

std::string format_point_set(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace biclosure
