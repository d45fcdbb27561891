#include "biclosure/representation.hpp"

#include <bit>

#include "biclosure/error.hpp"
#include "biclosure/io.hpp"

namespace biclosure {

using nlohmann::json;

PointSet sigma(std::size_t p, const Subspace& A) { return A.up(p); }

RepresentationReport sigma_check(const Subspace& A, std::string description) {
  const Poset& P = A.base();
  const std::size_t n = P.size();
  RepresentationReport r;
  r.subspace = std::move(description);
  r.points = A.size();

  const auto [c1, c2] = closures_of_subspace(A);
  r.family = c1o2_family(c1, c2);
  for (std::size_t p = 0; p < n; ++p) r.images.push_back(sigma(p, A));

  json problems = json::object();

  r.isotone = true;
  r.order_embedding = true;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const bool included = r.images[p].is_subset_of(r.images[q]);
      if (P.leq(p, q) && !included && r.isotone) {
        r.isotone = false;
        problems["not_isotone"] = {P.label(p), P.label(q)};
      }
      if (P.leq(p, q) != included && r.order_embedding) {
        r.order_embedding = false;
        problems["not_order_embedding"] = {P.label(p), P.label(q)};
      }
    }
  }

  r.injective = true;
  for (std::size_t p = 0; p < n && r.injective; ++p) {
    for (std::size_t q = p + 1; q < n && r.injective; ++q) {
      if (r.images[p] == r.images[q]) {
        r.injective = false;
        problems["same_image"] = {P.label(p), P.label(q)};
      }
    }
  }

  std::vector<bool> hit(r.family.size(), false);
  bool images_in_family = true;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t k = r.family.index_of(r.images[p]);
    if (k == r.family.size()) {
      images_in_family = false;
      problems["image_not_c1o2"] = P.label(p);
    } else {
      hit[k] = true;
    }
  }
  r.surjective = true;
  for (std::size_t k = 0; k < hit.size(); ++k) {
    if (!hit[k]) {
      r.surjective = false;
      problems["unreached_member"] = format_point_set(r.family[k]);
      break;
    }
  }
  r.isomorphism = images_in_family && r.injective && r.surjective && r.order_embedding;

  const auto full = is_full(A);
  const auto sep = is_separating(A);
  r.full = full.full;
  r.separating = sep.separating;
  if (full.witness) problems["unseparated_pair"] = {P.label(full.witness->first), P.label(full.witness->second)};
  if (sep.witness) {
    problems["unseparated_ideal_filter"] = {element_set_json(P, sep.witness->first),
                                            element_set_json(P, sep.witness->second)};
  }
  // The surjectivity argument takes F(∅) = P and I(∅) = P as a filter and an
  // ideal. Ideal families here come from nonempty families only, so the two
  // extra pairs (∅, P) and (P, ∅) are checked separately before applying
  // "separating => surjective".
  const ElementSet carrier = P.carrier();
  const bool has_zero = A.index_of(0) < A.size();
  const bool has_one = A.index_of(carrier) < A.size();
  const bool carrier_pairs_separated = (!ideals_wrt(A).contains(0) || has_one) &&
                                       (!filters_wrt(A).contains(0) || has_zero);
  r.theorem_consistent = r.isotone && images_in_family && (!r.full || r.injective) &&
                         (!(r.separating && carrier_pairs_separated) || r.surjective);

  r.closures_coincide = closures_equal(c1, c2);
  r.c1_exact = is_exact(c1);
  r.c2_exact = is_exact(c2);
  r.c1_topological = is_topological(c1);
  r.c2_topological = is_topological(c2);

  if (r.isomorphism) {
    json table = json::array();
    for (std::size_t p = 0; p < n; ++p) table.push_back({P.label(p), format_point_set(r.images[p])});
    r.witness = {{"isomorphism", std::move(table)}};
  } else {
    r.witness = std::move(problems);
  }
  return r;
}

Representation represent(const Poset& P, std::size_t dual_cap) {
  Subspace A = dual_space(P, dual_cap);
  auto report = sigma_check(A, "P*");
  if (!report.isomorphism) {
    throw InternalError("sigma is not an isomorphism onto C1O2(P*): " + report.witness.dump());
  }
  return {std::move(A), std::move(report.family), std::move(report.images)};
}

ClosureSpaceRepresentation represent_orthoposet(const Poset& P, const OrthoMap& f,
                                                std::size_t dual_cap) {
  Subspace A = orthodual_space(P, f, dual_cap);
  auto report = sigma_check(A, "P*'");
  if (!report.closures_coincide) throw InternalError("C1 and C2 differ on the orthodual space");
  if (!report.isomorphism) {
    throw InternalError("orthodual representation failed: " + report.witness.dump());
  }
  for (std::size_t p = 0; p < P.size(); ++p) {
    if (report.images[f(p)] != ~report.images[p]) {
      throw InternalError("complement of sigma(" + P.label(p) + ") is not sigma(" + P.label(f(p)) + ")");
    }
  }
  auto [c1, c2] = closures_of_subspace(A);
  return {std::move(A), std::move(c1), std::move(report.family), std::move(report.images)};
}

DistributiveRepresentation represent_distributive(const Poset& L, std::size_t dual_cap) {
  if (!is_distributive(L)) throw NotDistributive("lattice is not distributive");
  Subspace A = lattice_dual(L, dual_cap);
  auto report = sigma_check(A, "L*^v");
  if (!report.isomorphism) {
    throw InternalError("lattice-morphism representation failed: " + report.witness.dump());
  }
  if (!report.c1_topological || !report.c2_topological) {
    throw InternalError("induced closures on the lattice-morphism space are not topological");
  }
  return {{std::move(A), std::move(report.family), std::move(report.images)},
          report.c1_topological,
          report.c2_topological};
}

StoneSpace stone(const Poset& B, std::size_t dual_cap) {
  if (!is_boolean(B)) throw NotBoolean("poset is not a Boolean algebra");
  Subspace A = remove_constants(lattice_dual(B, dual_cap));
  auto report = sigma_check(A, "B*^v \\ {0,1}");
  if (!report.closures_coincide) throw InternalError("Stone space closures differ");
  if (!report.isomorphism) throw InternalError("Stone representation failed: " + report.witness.dump());
  if (!report.c1_topological || !report.c1_exact) {
    throw InternalError("Stone space closure is not an exact topological closure");
  }
  std::vector<ElementSet> kernels;
  for (ElementSet s : A.points()) kernels.push_back(B.carrier() & ~s);
  auto [c1, c2] = closures_of_subspace(A);
  StoneSpace out{{std::move(A), std::move(c1), std::move(report.family), std::move(report.images)},
                 std::move(kernels),
                 report.c1_topological,
                 report.c1_exact};
  return out;
}

}  // namespace biclosure
