#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "biclosure/closure.hpp"
#include "biclosure/dual_space.hpp"
#include "biclosure/family.hpp"
#include "biclosure/ortho.hpp"
#include "biclosure/poset.hpp"

namespace biclosure {

/// sigma(p) = UP_A(p), the points of A sending p to 1.
PointSet sigma(std::size_t p, const Subspace& A);

/// Everything learned about sigma : P -> C1O2(A) on one subspace.
struct RepresentationReport {
  std::string subspace;
  std::size_t points = 0;

  bool isotone = false;
  bool injective = false;
  bool surjective = false;
  /// p <= q  <=>  sigma(p) ⊆ sigma(q).
  bool order_embedding = false;
  bool isomorphism = false;

  bool full = false;
  bool separating = false;
  /// isotone, full => injective, separating => surjective. For the last
  /// clause the empty-family pairs (∅, P) and (P, ∅) must be separated too.
  bool theorem_consistent = false;

  bool closures_coincide = false;
  bool c1_exact = false;
  bool c2_exact = false;
  bool c1_topological = false;
  bool c2_topological = false;

  SubsetFamily family;
  std::vector<PointSet> images;
  /// Isomorphism table on success, counterexamples otherwise.
  nlohmann::json witness;
};

RepresentationReport sigma_check(const Subspace& A, std::string description = "A");

/// A subspace together with the family it represents and sigma's images.
struct Representation {
  Subspace space;
  SubsetFamily family;
  std::vector<PointSet> images;
};

/// A = P* and its C1O2 family. Throws BoundExceeded; throws InternalError if
/// the isomorphism does not verify.
Representation represent(const Poset& P, std::size_t dual_cap = kDefaultDualCap);

/// A closure space whose clopen sets reproduce P.
struct ClosureSpaceRepresentation {
  Subspace space;
  ClosureOperator closure;
  SubsetFamily clopens;
  std::vector<PointSet> images;
};

/// The orthodual space with its single closure; sigma(f(p)) is the set
/// complement of sigma(p). Throws InvalidOrthoMap.
ClosureSpaceRepresentation represent_orthoposet(const Poset& P, const OrthoMap& f,
                                                std::size_t dual_cap = kDefaultDualCap);

struct DistributiveRepresentation {
  Representation rep;
  bool c1_topological = false;
  bool c2_topological = false;
};

/// A = lattice morphisms L -> 2 with two topological closures. Throws NotDistributive.
DistributiveRepresentation represent_distributive(const Poset& L,
                                                  std::size_t dual_cap = kDefaultDualCap);

/// Points are the non-constant lattice morphisms B -> 2.
struct StoneSpace {
  ClosureSpaceRepresentation rep;
  /// kernels[i] is the kernel (a maximal ideal) of point i.
  std::vector<ElementSet> kernels;
  bool topological = false;
  bool exact = false;
};

/// Throws NotBoolean.
StoneSpace stone(const Poset& B, std::size_t dual_cap = kDefaultDualCap);

/// Default bound on |P*| for the exhaustive search over subspaces.
inline constexpr std::size_t kDefaultSCap = 14;
/// Hard ceiling for that search (2^30 subspaces is already far out of reach).
inline constexpr std::size_t kMaxSCap = 30;

/// Every A ⊆ P* that is full, separating, and has C1 = C2, in increasing
/// order of the selection mask over P*. The empty subspace is admitted when
/// it satisfies the three conditions, which only happens for |P| <= 1.
/// Throws BoundExceeded when |P*| > s_cap.
std::vector<Subspace> collection_S(const Poset& P, std::size_t s_cap = kDefaultSCap);

/// Members of `family` not strictly contained in another member.
std::vector<Subspace> maximal_subspaces(const std::vector<Subspace>& family);

/// p -> sigma^{-1}(A \ sigma(p)). Throws NotInS unless A is full, separating
/// and has C1 = C2.
OrthoMap induced_orthocomplementation(const Subspace& A);

struct OrthoCharacterization {
  bool holds = false;
  std::vector<OrthoMap> orthocomplementations;
  std::size_t s_size = 0;
  std::vector<Subspace> maximal;
  nlohmann::json witness;
};

/// Verifies that f -> orthodual_space(P, f) is a bijection from the
/// orthocomplementations of P onto the maximal members of collection_S(P),
/// inverted by induced_orthocomplementation.
OrthoCharacterization ortho_characterization_check(const Poset& P,
                                                   std::size_t s_cap = kDefaultSCap);

}  // namespace biclosure
