#include "biclosure/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <utility>

#include "biclosure/error.hpp"

namespace biclosure {

namespace {

using Invariant = std::pair<int, int>;

std::vector<Invariant> invariants(const Poset& P) {
  std::vector<Invariant> inv(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    inv[i] = {std::popcount(P.down_set(i)), std::popcount(P.up_set(i))};
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const Poset& P, const Poset& Q)
      : P_(P), Q_(Q), inv_p_(invariants(P)), inv_q_(invariants(Q)), map_(P.size()), used_(0) {}

  std::optional<Bijection> run() {
    auto sp = inv_p_;
    auto sq = inv_q_;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t p) {
    if (p == P_.size()) return true;
    for (std::size_t q = 0; q < Q_.size(); ++q) {
      if (contains(used_, q) || inv_q_[q] != inv_p_[p]) continue;
      if (!consistent(p, q)) continue;
      map_[p] = q;
      used_ |= element_bit(q);
      if (extend(p + 1)) return true;
      used_ &= ~element_bit(q);
    }
    return false;
  }

  bool consistent(std::size_t p, std::size_t q) const {
    for (std::size_t a = 0; a < p; ++a) {
      if (P_.leq(a, p) != Q_.leq(map_[a], q)) return false;
      if (P_.leq(p, a) != Q_.leq(q, map_[a])) return false;
    }
    return true;
  }

  const Poset& P_;
  const Poset& Q_;
  std::vector<Invariant> inv_p_;
  std::vector<Invariant> inv_q_;
  Bijection map_;
  ElementSet used_;
};

std::uint64_t relation_code(const Poset& P, const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      code <<= 1;
      code |= P.leq(order[i], order[j]) ? 1U : 0U;
    }
  }
  return code;
}

}  // namespace

std::optional<Bijection> find_isomorphism(const Poset& P, const Poset& Q) {
  if (P.size() != Q.size()) return std::nullopt;
  return IsoSearch(P, Q).run();
}

bool is_order_isomorphism(const Poset& P, const Poset& Q, const Bijection& f) {
  const std::size_t n = P.size();
  if (Q.size() != n || f.size() != n) return false;
  ElementSet hit = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (f[p] >= n || contains(hit, f[p])) return false;
    hit |= element_bit(f[p]);
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (P.leq(p, q) != Q.leq(f[p], f[q])) return false;
    }
  }
  return true;
}

std::uint64_t canonical_code(const Poset& P, std::vector<std::size_t>* order) {
  const std::size_t n = P.size();
  if (n > kMaxCanonicalOrder) {
    throw BoundExceeded("canonical codes are limited to " + std::to_string(kMaxCanonicalOrder) +
                        " elements");
  }
  const auto inv = invariants(P);
  std::vector<std::size_t> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::stable_sort(base.begin(), base.end(),
                   [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });

  // Cells are maximal runs of equal invariant; try every order within each cell.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[base[j]] == inv[base[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> current = base;
  auto visit = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      const std::uint64_t code = relation_code(P, current);
      if (code < best) {
        best = code;
        if (order) *order = current;
      }
      return;
    }
    auto first = current.begin() + static_cast<std::ptrdiff_t>(cells[cell].first);
    auto last = current.begin() + static_cast<std::ptrdiff_t>(cells[cell].second);
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  visit(visit, 0);
  if (n == 0 && order) order->clear();
  return n == 0 ? 0 : best;
}

}  // namespace biclosure
