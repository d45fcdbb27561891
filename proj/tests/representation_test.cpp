#include <gtest/gtest.h>

#include "biclosure/catalog.hpp"
#include "biclosure/error.hpp"
#include "biclosure/isomorphism.hpp"
#include "biclosure/representation.hpp"
#include "biclosure/theorem_suite.hpp"
#include "oracles.hpp"

using namespace biclosure;

namespace {

PointSet bits(std::size_t m, std::uint64_t x) { return PointSet(m, x); }

std::set<PointSet> as_set(const SubsetFamily& F) { return {F.begin(), F.end()}; }

/// The two closure bases of a list of points, built by hand.
std::pair<ClosureOperator, ClosureOperator> hand_closures(const Poset& P, const std::vector<ElementSet>& pts) {
  const std::size_t m = pts.size();
  std::vector<PointSet> ups, los;
  for (std::size_t p = 0; p < P.size(); ++p) {
    PointSet up(m), lo(m);
    for (std::size_t i = 0; i < m; ++i) ((pts[i] >> p) & 1U ? up : lo).set(i);
    ups.push_back(up);
    los.push_back(lo);
  }
  return {closure_from_base(m, SubsetFamily(m, ups)), closure_from_base(m, SubsetFamily(m, los))};
}

/// Members of S for P, by testing each subset of P* against the definitions.
std::vector<std::vector<ElementSet>> brute_S(const Poset& P) {
  const auto all = oracle::up_sets(P);
  std::vector<std::vector<ElementSet>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<ElementSet> pts;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((mask >> i) & 1U) pts.push_back(all[i]);
    }
    if (!oracle::full_by_definition(P, pts) || !oracle::separating_by_definition(P, pts)) continue;
    const auto [c1, c2] = hand_closures(P, pts);
    if (oracle::closed_sets(c1) == oracle::closed_sets(c2)) out.push_back(pts);
  }
  return out;
}

OrthoMap ortho_from_labels(const Poset& P, std::initializer_list<std::pair<const char*, const char*>> pairs) {
  OrthoMap f{std::vector<std::size_t>(P.size())};
  for (auto [a, b] : pairs) {
    f.image[*P.index_of(a)] = *P.index_of(b);
    f.image[*P.index_of(b)] = *P.index_of(a);
  }
  return f;
}

}  // namespace

TEST(Sigma, TwoChainDual) {
  const Subspace A = dual_space(named::chain(2));
  EXPECT_EQ(sigma(0, A), bits(3, 0b100));
  EXPECT_EQ(sigma(1, A), bits(3, 0b110));
}

TEST(Sigma, IsomorphismOnCatalog) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Poset& P : enumerate_posets(n)) {
      const Subspace A = dual_space(P);
      const auto r = sigma_check(A);
      EXPECT_TRUE(r.isomorphism);
      EXPECT_TRUE(r.theorem_consistent);
      // Independent check: the images are exactly C1O2 and sigma reflects order.
      if (A.size() <= 16) {
        const auto [c1, c2] = hand_closures(P, A.points());
        std::set<PointSet> images;
        for (std::size_t p = 0; p < n; ++p) images.insert(sigma(p, A));
        EXPECT_EQ(images, oracle::c1o2(c1, c2));
      }
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          EXPECT_EQ(P.leq(p, q), sigma(p, A).is_subset_of(sigma(q, A)));
        }
      }
    }
  }
}

TEST(Sigma, LatticeDualOfM3IsNotInjective) {
  const Poset M3 = named::m_lattice(3);
  const auto r = sigma_check(lattice_dual(M3), "lattice dual");
  EXPECT_FALSE(r.injective);
  EXPECT_FALSE(r.full);
  EXPECT_FALSE(r.isomorphism);
  EXPECT_TRUE(r.theorem_consistent);
  EXPECT_TRUE(r.isotone);
}

TEST(Sigma, ReportFlagsAgreeWithDefinitions) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Poset& P : enumerate_posets(n)) {
      const Subspace all = dual_space(P);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()) && mask < 256; mask += 3) {
        const Subspace A = all.restrict(bits(all.size(), mask));
        const auto r = sigma_check(A);
        EXPECT_EQ(r.full, oracle::full_by_definition(P, A.points()));
        EXPECT_EQ(r.separating, oracle::separating_by_definition(P, A.points()));
        EXPECT_TRUE(r.theorem_consistent) << r.witness.dump();
        if (r.full) EXPECT_TRUE(r.injective);
        if (oracle::separating_by_definition(P, A.points(), true)) EXPECT_TRUE(r.surjective);
      }
    }
  }
}

TEST(Sigma, SeparatingButNotSurjectiveWithoutConstantOne) {
  // Two-element antichain, A = {χ{p0}, χ{p1}}: every nonempty-family pair is
  // separated, but ∅ is C1-closed and C2-open with no preimage. The theorem's
  // argument would need the constant 1 to separate ∅ from F(∅) = P.
  const Poset P = named::antichain(2);
  const Subspace A(std::make_shared<const Poset>(P), {0b01, 0b10});
  const auto r = sigma_check(A);
  EXPECT_TRUE(r.full);
  EXPECT_TRUE(r.separating);
  EXPECT_FALSE(r.surjective);
  EXPECT_TRUE(r.theorem_consistent);
}

TEST(Represent, SmallPosets) {
  for (const Poset& P : {named::antichain(2), named::v_poset(), named::chain(1), named::pentagon()}) {
    const auto rep = represent(P);
    EXPECT_EQ(rep.family.size(), P.size());
    EXPECT_TRUE(are_isomorphic(poset_of_family(rep.family), P));
  }
}

TEST(RepresentOrthoposet, Diamond) {
  const Poset B4 = named::m_lattice(2);
  const OrthoMap f = ortho_from_labels(B4, {{"0", "1"}, {"a", "b"}});
  const auto rep = represent_orthoposet(B4, f);
  EXPECT_EQ(rep.space.size(), 2U);
  EXPECT_EQ(rep.clopens.size(), 4U);
  for (std::size_t p = 0; p < B4.size(); ++p) EXPECT_EQ(rep.images[f(p)], ~rep.images[p]);
}

TEST(RepresentOrthoposet, TwoChain) {
  const auto rep = represent_orthoposet(named::chain(2), OrthoMap{{1, 0}});
  EXPECT_EQ(rep.space.size(), 1U);
  EXPECT_EQ(as_set(rep.clopens), (std::set<PointSet>{bits(1, 0), bits(1, 1)}));
}

TEST(RepresentOrthoposet, M4EveryPairing) {
  const Poset M4 = named::m_lattice(4);
  const auto fs = find_orthocomplementations(M4);
  ASSERT_EQ(fs.size(), 3U);
  for (const auto& f : fs) {
    const auto rep = represent_orthoposet(M4, f);
    EXPECT_EQ(rep.space.size(), 4U);
    EXPECT_TRUE(are_isomorphic(poset_of_family(rep.clopens), M4));
    for (std::size_t p = 0; p < M4.size(); ++p) EXPECT_EQ(rep.images[f(p)], ~rep.images[p]);
  }
}

TEST(RepresentOrthoposet, InvalidMap) {
  EXPECT_THROW(represent_orthoposet(named::chain(3), OrthoMap{{2, 1, 0}}), InvalidOrthoMap);
}

TEST(RepresentDistributive, Examples) {
  for (const Poset& L : {named::chain(3), named::m_lattice(2), named::free_distributive_2()}) {
    const auto d = represent_distributive(L);
    EXPECT_TRUE(d.c1_topological);
    EXPECT_TRUE(d.c2_topological);
    EXPECT_TRUE(are_isomorphic(poset_of_family(d.rep.family), L));
    const auto [c1, c2] = hand_closures(L, d.rep.space.points());
    EXPECT_TRUE(oracle::topological_by_definition(c1));
    EXPECT_TRUE(oracle::topological_by_definition(c2));
  }
  EXPECT_THROW(represent_distributive(named::m_lattice(3)), NotDistributive);
  EXPECT_THROW(represent_distributive(named::pentagon()), NotDistributive);
}

TEST(Stone, BooleanAlgebras) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const Poset B = named::boolean_lattice(k);
    const auto s = stone(B);
    EXPECT_EQ(s.rep.space.size(), k);
    EXPECT_EQ(s.rep.clopens.size(), std::size_t{1} << k);
    EXPECT_TRUE(s.topological);
    EXPECT_TRUE(s.exact);
    // Each kernel is a proper lattice ideal not contained in a larger proper one.
    const auto ideals = oracle::lattice_ideals(B);
    for (ElementSet K : s.kernels) {
      EXPECT_NE(K, B.carrier());
      EXPECT_TRUE(std::find(ideals.begin(), ideals.end(), K) != ideals.end());
      for (ElementSet J : ideals) {
        if (J != B.carrier() && J != K) EXPECT_FALSE(is_subset(K, J));
      }
    }
  }
  EXPECT_THROW(stone(named::chain(3)), NotBoolean);
}

TEST(CollectionS, MatchesDefinitionFilter) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Poset& P : enumerate_posets(n)) {
      if (oracle::up_sets(P).size() > 10) continue;
      std::vector<std::vector<ElementSet>> got;
      for (const Subspace& A : collection_S(P, 10)) got.push_back(A.points());
      auto expected = brute_S(P);
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(CollectionS, Examples) {
  EXPECT_TRUE(collection_S(named::chain(4)).empty());
  const Poset B4 = named::m_lattice(2);
  const auto maximal = maximal_subspaces(collection_S(B4));
  ASSERT_EQ(maximal.size(), 1U);
  EXPECT_EQ(maximal[0], orthodual_space(B4, find_orthocomplementations(B4).at(0)));
  EXPECT_THROW(collection_S(named::m_lattice(4)), BoundExceeded);
  // Caps above the hard ceiling are clamped to it.
  EXPECT_THROW(collection_S(named::antichain(5), 100), BoundExceeded);
}

TEST(InducedOrtho, RecoversPairing) {
  const Poset M4 = named::m_lattice(4);
  for (const auto& f : find_orthocomplementations(M4)) {
    EXPECT_EQ(induced_orthocomplementation(orthodual_space(M4, f)), f);
  }
  EXPECT_THROW(induced_orthocomplementation(dual_space(named::chain(2))), NotInS);
}

TEST(OrthoCharacterization, Examples) {
  const auto b4 = ortho_characterization_check(named::m_lattice(2));
  EXPECT_TRUE(b4.holds);
  EXPECT_EQ(b4.orthocomplementations.size(), 1U);
  EXPECT_EQ(b4.maximal.size(), 1U);

  const auto c4 = ortho_characterization_check(named::chain(4));
  EXPECT_TRUE(c4.holds);
  EXPECT_TRUE(c4.orthocomplementations.empty());
  EXPECT_EQ(c4.s_size, 0U);

  const auto m4 = ortho_characterization_check(named::m_lattice(4), 18);
  EXPECT_TRUE(m4.holds);
  EXPECT_EQ(m4.orthocomplementations.size(), 3U);
  EXPECT_EQ(m4.maximal.size(), 3U);
}

TEST(TheoremSuite, NamedExamples) {
  for (const Poset& P : {named::m_lattice(2), named::m_lattice(3), named::pentagon(), named::chain(3)}) {
    const auto r = theorem_suite(P);
    EXPECT_TRUE(r.all_pass()) << to_json(r).dump(2);
    EXPECT_FALSE(r.checks.empty());
  }
  const auto b4 = theorem_suite(named::m_lattice(2));
  std::set<std::string> names;
  for (const auto& c : b4.checks) names.insert(c.name);
  EXPECT_TRUE(names.count("stone-representation"));
  EXPECT_TRUE(names.count("orthocomplementation-characterization"));
  EXPECT_TRUE(names.count("distributive-representation"));
}

TEST(TheoremSuite, SuiteSelection) {
  SuiteOptions o;
  o.suite = Suite::kGeneral;
  for (const auto& c : theorem_suite(named::m_lattice(2), o).checks) {
    EXPECT_EQ(c.name.find("stone"), std::string::npos);
  }
  EXPECT_EQ(parse_suite("boolean"), Suite::kBoolean);
  EXPECT_THROW(parse_suite("nope"), Error);
}

TEST(TheoremSuite, SkipsCharacterizationAboveCap) {
  const auto r = theorem_suite(named::m_lattice(4));
  EXPECT_TRUE(r.all_pass());
  EXPECT_FALSE(r.skipped.empty());
}
