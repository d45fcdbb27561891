#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "biclosure/family.hpp"
#include "biclosure/ortho.hpp"
#include "biclosure/poset.hpp"

namespace biclosure {

/// Default cap on the number of up-sets materialized for a dual space.
inline constexpr std::size_t kDefaultDualCap = std::size_t{1} << 20;

/// A set A of isotone maps P -> 2, each stored as its one-set (an up-set of P).
///
/// Points are kept sorted by one-set bitmask and deduplicated, so point
/// indices, and every PointSet over A, are reproducible across runs.
class Subspace {
 public:
  /// Throws Error if some one-set is not an up-set of *base.
  Subspace(std::shared_ptr<const Poset> base, std::vector<ElementSet> one_sets);

  const Poset& base() const { return *base_; }
  const std::shared_ptr<const Poset>& base_ptr() const { return base_; }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  ElementSet point(std::size_t i) const { return points_[i]; }
  const std::vector<ElementSet>& points() const { return points_; }

  /// Index of the point with this one-set, or size() if absent.
  std::size_t index_of(ElementSet one_set) const;

  /// UP_A(p): points mapping p to 1.
  PointSet up(std::size_t p) const;
  /// LO_A(p): points mapping p to 0.
  PointSet lo(std::size_t p) const;

  /// The points selected by `keep` (a PointSet over this subspace).
  Subspace restrict(const PointSet& keep) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.points_ == b.points_ && *a.base_ == *b.base_;
  }

 private:
  std::shared_ptr<const Poset> base_;
  std::vector<ElementSet> points_;
};

/// P*: every up-set of P exactly once, constants included.
/// Throws BoundExceeded when more than `cap` up-sets exist.
Subspace dual_space(std::shared_ptr<const Poset> P, std::size_t cap = kDefaultDualCap);
Subspace dual_space(const Poset& P, std::size_t cap = kDefaultDualCap);

/// P*': the points x with x(f(p)) = 1 - x(p). Throws InvalidOrthoMap.
Subspace orthodual_space(const Poset& P, const OrthoMap& f, std::size_t cap = kDefaultDualCap);

/// L^{*∧∨}: the points preserving binary meets and joins. Throws NotALattice.
Subspace lattice_dual(const Poset& L, std::size_t cap = kDefaultDualCap);

/// Intersection of kernels (co-kernels) of the points in B. B empty gives the carrier.
ElementSet ideal_of(const Subspace& A, const PointSet& B);
ElementSet filter_of(const Subspace& A, const PointSet& B);

enum class FamilyRole { kIdeal, kFilter };

/// A-ideals (or A-filters): intersections of nonempty families of kernels
/// (co-kernels) of points of A. The full carrier is a member only when some
/// point has it as kernel. Sorted ascending.
struct IdealFamily {
  FamilyRole role = FamilyRole::kIdeal;
  std::vector<ElementSet> members;
  bool contains(ElementSet s) const;
  friend bool operator==(const IdealFamily&, const IdealFamily&) = default;
};

IdealFamily ideals_wrt(const Subspace& A);
IdealFamily filters_wrt(const Subspace& A);

/// Smallest member of an ideal/filter family containing Q. When no member
/// contains Q the set is the full carrier and `has_container` is false.
struct GeneratedSet {
  ElementSet set = 0;
  bool has_container = false;
};

GeneratedSet generated_in(const IdealFamily& family, ElementSet Q, ElementSet carrier);
GeneratedSet generated_ideal(const Subspace& A, ElementSet Q);
GeneratedSet generated_filter(const Subspace& A, ElementSet Q);

struct FullnessResult {
  bool full = true;
  /// A pair p ≰ q that no point of A separates.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

FullnessResult is_full(const Subspace& A);

struct SeparationResult {
  bool separating = true;
  /// A disjoint (ideal, filter) pair that no point of A separates.
  std::optional<std::pair<ElementSet, ElementSet>> witness;
};

SeparationResult is_separating(const Subspace& A);

/// The separating-implies-full lemma's hypothesis: <p>ideal ∩ <q>filter = ∅
/// for every q ≰ p.
bool cones_disjoint(const Subspace& A);

/// A without the constant maps. Throws NotBounded.
Subspace remove_constants(const Subspace& A);

}  // namespace biclosure
