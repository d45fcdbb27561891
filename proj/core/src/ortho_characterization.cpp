#include <algorithm>
#include <bit>

#include "biclosure/error.hpp"
#include "biclosure/io.hpp"
#include "biclosure/representation.hpp"

namespace biclosure {

using nlohmann::json;

namespace {

PointSet mask_to_points(std::uint64_t mask, std::size_t k) {
  PointSet s(k);
  for (std::size_t i = 0; i < k; ++i) {
    if ((mask >> i) & 1U) s.set(i);
  }
  return s;
}

bool in_S(const Subspace& A) {
  if (!is_full(A).full) return false;
  const auto [c1, c2] = closures_of_subspace(A);
  if (!closures_equal(c1, c2)) return false;
  return is_separating(A).separating;
}

}  // namespace

std::vector<Subspace> collection_S(const Poset& P, std::size_t s_cap) {
  const std::size_t bound = std::min(s_cap, kMaxSCap);
  const Subspace all = dual_space(P, std::size_t{1} << bound);
  const std::size_t k = all.size();
  if (k > bound) {
    throw BoundExceeded("|P*| = " + std::to_string(k) + " exceeds the subspace-search bound " +
                        std::to_string(bound));
  }

  // For each pair p ≰ q, the points of P* that separate it; a subspace is
  // full iff it meets every one of these masks.
  std::vector<std::uint64_t> separators;
  for (std::size_t p = 0; p < P.size(); ++p) {
    for (std::size_t q = 0; q < P.size(); ++q) {
      if (P.leq(p, q)) continue;
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (contains(all.point(i), p) && !contains(all.point(i), q)) m |= std::uint64_t{1} << i;
      }
      separators.push_back(m);
    }
  }

  std::vector<Subspace> out;
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const bool full = std::all_of(separators.begin(), separators.end(),
                                  [&](std::uint64_t m) { return (m & mask) != 0; });
    if (!full) continue;
    Subspace A = all.restrict(mask_to_points(mask, k));
    if (in_S(A)) out.push_back(std::move(A));
  }
  return out;
}

std::vector<Subspace> maximal_subspaces(const std::vector<Subspace>& family) {
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& a = family[i].points();
    const bool dominated = std::any_of(family.begin(), family.end(), [&](const Subspace& other) {
      const auto& b = other.points();
      return b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    });
    if (!dominated) out.push_back(family[i]);
  }
  return out;
}

OrthoMap induced_orthocomplementation(const Subspace& A) {
  const Poset& P = A.base();
  if (const auto full = is_full(A); !full.full) throw NotInS("subspace is not full");
  if (const auto sep = is_separating(A); !sep.separating) throw NotInS("subspace is not separating");
  const auto [c1, c2] = closures_of_subspace(A);
  if (!closures_equal(c1, c2)) throw NotInS("C1 and C2 differ on the subspace");

  std::vector<PointSet> images;
  for (std::size_t p = 0; p < P.size(); ++p) images.push_back(sigma(p, A));
  OrthoMap f;
  for (std::size_t p = 0; p < P.size(); ++p) {
    const PointSet complement = ~images[p];
    auto it = std::find(images.begin(), images.end(), complement);
    if (it == images.end()) {
      throw InternalError("complement of sigma(" + P.label(p) + ") is not in the image of sigma");
    }
    f.image.push_back(static_cast<std::size_t>(it - images.begin()));
  }
  if (auto why = ortho_violation(P, f); !why.empty()) {
    throw InternalError("induced map is not an orthocomplementation: " + why);
  }
  return f;
}

OrthoCharacterization ortho_characterization_check(const Poset& P, std::size_t s_cap) {
  OrthoCharacterization r;
  r.orthocomplementations = find_orthocomplementations(P);
  const auto S = collection_S(P, s_cap);
  r.s_size = S.size();
  r.maximal = maximal_subspaces(S);

  json problems = json::array();
  std::vector<bool> matched(r.maximal.size(), false);
  for (const OrthoMap& f : r.orthocomplementations) {
    const Subspace dual = orthodual_space(P, f);
    auto it = std::find(r.maximal.begin(), r.maximal.end(), dual);
    if (it == r.maximal.end()) {
      problems.push_back({{"orthodual_not_maximal_in_S", ortho_to_json(P, f)}});
      continue;
    }
    const auto k = static_cast<std::size_t>(it - r.maximal.begin());
    if (matched[k]) problems.push_back({{"orthodual_shared", ortho_to_json(P, f)}});
    matched[k] = true;
    if (induced_orthocomplementation(dual) != f) {
      problems.push_back({{"induced_map_differs", ortho_to_json(P, f)}});
    }
  }
  for (std::size_t k = 0; k < r.maximal.size(); ++k) {
    if (!matched[k]) problems.push_back({{"maximal_without_orthocomplementation", subspace_to_json(r.maximal[k])}});
  }

  r.holds = problems.empty();
  r.witness = {{"orthocomplementations", r.orthocomplementations.size()},
               {"maximal_in_S", r.maximal.size()},
               {"size_of_S", r.s_size}};
  if (!r.holds) r.witness["problems"] = std::move(problems);
  return r;
}

}  // namespace biclosure
