#include "biclosure/dual_space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "biclosure/error.hpp"

namespace biclosure {

Subspace::Subspace(std::shared_ptr<const Poset> base, std::vector<ElementSet> one_sets)
    : base_(std::move(base)), points_(std::move(one_sets)) {
  for (ElementSet s : points_) {
    if (!is_subset(s, base_->carrier()) || !base_->is_up_set(s)) {
      throw Error("dual point is not an up-set of the base poset");
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::size_t Subspace::index_of(ElementSet one_set) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), one_set);
  if (it == points_.end() || *it != one_set) return points_.size();
  return static_cast<std::size_t>(it - points_.begin());
}

PointSet Subspace::up(std::size_t p) const {
  PointSet s(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (contains(points_[i], p)) s.set(i);
  }
  return s;
}

PointSet Subspace::lo(std::size_t p) const { return ~up(p); }

Subspace Subspace::restrict(const PointSet& keep) const {
  std::vector<ElementSet> kept;
  for (auto i = keep.find_first(); i != PointSet::npos; i = keep.find_next(i)) {
    kept.push_back(points_[i]);
  }
  return Subspace(base_, std::move(kept));
}

namespace {

// Enumerates up-sets by deciding elements from the top down: an element may
// join the current set only if everything strictly above it is already in.
// Every branch ends in a distinct up-set, so there is no dead search.
class UpSetEnumerator {
 public:
  UpSetEnumerator(const Poset& P, std::size_t cap) : P_(P), cap_(cap), order_(P.size()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(P.up_set(a)) < std::popcount(P.up_set(b));
    });
  }

  std::vector<ElementSet> run() {
    visit(0, 0);
    return std::move(out_);
  }

 private:
  void visit(std::size_t k, ElementSet current) {
    if (k == order_.size()) {
      if (out_.size() >= cap_) {
        throw BoundExceeded("dual space exceeds the cap of " + std::to_string(cap_) + " points");
      }
      out_.push_back(current);
      return;
    }
    const std::size_t e = order_[k];
    visit(k + 1, current);
    if (is_subset(P_.up_set(e) & ~element_bit(e), current)) visit(k + 1, current | element_bit(e));
  }

  const Poset& P_;
  std::size_t cap_;
  std::vector<std::size_t> order_;
  std::vector<ElementSet> out_;
};

std::vector<ElementSet> close_under_intersection(const std::vector<ElementSet>& generators) {
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> family;
  for (ElementSet g : generators) {
    std::vector<ElementSet> fresh;
    if (seen.insert(g).second) fresh.push_back(g);
    for (ElementSet m : family) {
      const ElementSet r = m & g;
      if (seen.insert(r).second) fresh.push_back(r);
    }
    family.insert(family.end(), fresh.begin(), fresh.end());
  }
  std::sort(family.begin(), family.end());
  return family;
}

}  // namespace

Subspace dual_space(std::shared_ptr<const Poset> P, std::size_t cap) {
  auto points = UpSetEnumerator(*P, cap).run();
  return Subspace(std::move(P), std::move(points));
}

Subspace dual_space(const Poset& P, std::size_t cap) {
  return dual_space(std::make_shared<const Poset>(P), cap);
}

Subspace orthodual_space(const Poset& P, const OrthoMap& f, std::size_t cap) {
  if (auto why = ortho_violation(P, f); !why.empty()) throw InvalidOrthoMap(why);
  Subspace all = dual_space(P, cap);
  std::vector<ElementSet> kept;
  for (ElementSet s : all.points()) {
    ElementSet image_of_complement = 0;
    for_each_element(P.carrier() & ~s, [&](std::size_t p) { image_of_complement |= element_bit(f(p)); });
    if (image_of_complement == s) kept.push_back(s);
  }
  return Subspace(all.base_ptr(), std::move(kept));
}

Subspace lattice_dual(const Poset& L, std::size_t cap) {
  if (!is_lattice(L)) throw NotALattice("poset is not a lattice");
  const std::size_t n = L.size();
  std::vector<std::size_t> meets(n * n), joins(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      meets[p * n + q] = *meet(L, p, q);
      joins[p * n + q] = *join(L, p, q);
    }
  }
  Subspace all = dual_space(L, cap);
  std::vector<ElementSet> kept;
  for (ElementSet s : all.points()) {
    bool morphism = true;
    for (std::size_t p = 0; p < n && morphism; ++p) {
      for (std::size_t q = p + 1; q < n && morphism; ++q) {
        const bool xp = contains(s, p);
        const bool xq = contains(s, q);
        morphism = contains(s, meets[p * n + q]) == (xp && xq) &&
                   contains(s, joins[p * n + q]) == (xp || xq);
      }
    }
    if (morphism) kept.push_back(s);
  }
  return Subspace(all.base_ptr(), std::move(kept));
}

ElementSet ideal_of(const Subspace& A, const PointSet& B) {
  ElementSet r = A.base().carrier();
  for (auto i = B.find_first(); i != PointSet::npos; i = B.find_next(i)) r &= ~A.point(i);
  return r;
}

ElementSet filter_of(const Subspace& A, const PointSet& B) {
  ElementSet r = A.base().carrier();
  for (auto i = B.find_first(); i != PointSet::npos; i = B.find_next(i)) r &= A.point(i);
  return r;
}

bool IdealFamily::contains(ElementSet s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

IdealFamily ideals_wrt(const Subspace& A) {
  std::vector<ElementSet> kernels;
  for (ElementSet s : A.points()) kernels.push_back(A.base().carrier() & ~s);
  return {FamilyRole::kIdeal, close_under_intersection(kernels)};
}

IdealFamily filters_wrt(const Subspace& A) {
  return {FamilyRole::kFilter, close_under_intersection(A.points())};
}

GeneratedSet generated_in(const IdealFamily& family, ElementSet Q, ElementSet carrier) {
  GeneratedSet g{carrier, false};
  for (ElementSet m : family.members) {
    if (is_subset(Q, m)) {
      g.set &= m;
      g.has_container = true;
    }
  }
  return g;
}

GeneratedSet generated_ideal(const Subspace& A, ElementSet Q) {
  return generated_in(ideals_wrt(A), Q, A.base().carrier());
}

GeneratedSet generated_filter(const Subspace& A, ElementSet Q) {
  return generated_in(filters_wrt(A), Q, A.base().carrier());
}

FullnessResult is_full(const Subspace& A) {
  const Poset& P = A.base();
  const std::size_t n = P.size();
  // separated[p] collects every q such that some point has p -> 1, q -> 0.
  std::vector<ElementSet> separated(n, 0);
  for (ElementSet s : A.points()) {
    const ElementSet zeros = P.carrier() & ~s;
    for_each_element(s, [&](std::size_t p) { separated[p] |= zeros; });
  }
  for (std::size_t p = 0; p < n; ++p) {
    const ElementSet not_above = P.carrier() & ~P.up_set(p);
    const ElementSet missing = not_above & ~separated[p];
    if (missing != 0) {
      return {false, std::make_pair(p, static_cast<std::size_t>(std::countr_zero(missing)))};
    }
  }
  return {};
}

SeparationResult is_separating(const Subspace& A) {
  const auto ideals = ideals_wrt(A);
  const auto filters = filters_wrt(A);
  for (ElementSet I : ideals.members) {
    for (ElementSet F : filters.members) {
      if ((I & F) != 0) continue;
      const bool separated = std::any_of(A.points().begin(), A.points().end(), [&](ElementSet s) {
        return (s & I) == 0 && is_subset(F, s);
      });
      if (!separated) return {false, std::make_pair(I, F)};
    }
  }
  return {};
}

bool cones_disjoint(const Subspace& A) {
  const Poset& P = A.base();
  const auto ideals = ideals_wrt(A);
  const auto filters = filters_wrt(A);
  for (std::size_t p = 0; p < P.size(); ++p) {
    const GeneratedSet ideal = generated_in(ideals, element_bit(p), P.carrier());
    for (std::size_t q = 0; q < P.size(); ++q) {
      if (P.leq(q, p)) continue;
      const GeneratedSet filter = generated_in(filters, element_bit(q), P.carrier());
      if ((ideal.set & filter.set) != 0) return false;
    }
  }
  return true;
}

Subspace remove_constants(const Subspace& A) {
  if (!is_bounded(A.base())) throw NotBounded("remove_constants needs a bounded poset");
  std::vector<ElementSet> kept;
  for (ElementSet s : A.points()) {
    if (s != 0 && s != A.base().carrier()) kept.push_back(s);
  }
  return Subspace(A.base_ptr(), std::move(kept));
}

}  // namespace biclosure
