#include "biclosure/catalog.hpp"

#include <map>
#include <string>

#include "biclosure/error.hpp"
#include "biclosure/isomorphism.hpp"

namespace biclosure {

namespace {

Poset relabel_canonical(const Poset& P, const std::vector<std::size_t>& order) {
  const std::size_t n = P.size();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::string> labels;
  std::vector<ElementSet> up(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for_each_element(P.up_set(order[i]), [&](std::size_t j) { up[i] |= element_bit(position[j]); });
  }
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t n, std::size_t max_n) {
  if (n > max_n) {
    throw BoundExceeded("catalog order " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(max_n));
  }
  if (n > kMaxCanonicalOrder) {
    throw BoundExceeded("catalog order " + std::to_string(n) + " exceeds the hard limit " +
                        std::to_string(kMaxCanonicalOrder));
  }

  std::vector<Poset> level{Poset::from_up_sets({}, {})};
  for (std::size_t k = 0; k < n; ++k) {
    std::map<std::uint64_t, Poset> classes;
    for (const Poset& P : level) {
      for (ElementSet below = 0; below <= full_set(k); ++below) {
        if (!P.is_down_set(below)) continue;
        std::vector<std::string> labels = P.labels();
        labels.push_back("new");
        std::vector<ElementSet> up(k + 1);
        for (std::size_t i = 0; i < k; ++i) {
          up[i] = P.up_set(i) | (contains(below, i) ? element_bit(k) : 0);
        }
        up[k] = element_bit(k);
        Poset Q = Poset::from_up_sets(std::move(labels), std::move(up));
        std::vector<std::size_t> order;
        const std::uint64_t code = canonical_code(Q, &order);
        if (!classes.contains(code)) classes.emplace(code, relabel_canonical(Q, order));
      }
    }
    level.clear();
    for (auto& [code, P] : classes) level.push_back(std::move(P));
  }
  return level;
}

}  // namespace biclosure
