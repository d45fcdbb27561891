#include <gtest/gtest.h>

#include <random>

#include "biclosure/catalog.hpp"
#include "biclosure/closure.hpp"
#include "biclosure/error.hpp"
#include "biclosure/theorem_suite.hpp"
#include "oracles.hpp"

using namespace biclosure;

namespace {

PointSet bits(std::size_t m, std::uint64_t x) { return PointSet(m, x); }

SubsetFamily family(std::size_t m, std::initializer_list<std::uint64_t> xs) {
  std::vector<PointSet> v;
  for (auto x : xs) v.push_back(bits(m, x));
  return SubsetFamily(m, std::move(v));
}

std::set<PointSet> as_set(const SubsetFamily& F) { return {F.begin(), F.end()}; }

ClosureOperator random_closure(std::size_t m, std::mt19937& rng) {
  std::vector<PointSet> base;
  const std::size_t k = rng() % 7;
  for (std::size_t i = 0; i < k; ++i) base.push_back(bits(m, rng() & ((std::uint64_t{1} << m) - 1)));
  return closure_from_base(m, SubsetFamily(m, std::move(base)));
}

}  // namespace

TEST(Closure, SingletonBase) {
  const auto C = closure_from_base(3, family(3, {0b010}));
  EXPECT_EQ(C.apply(bits(3, 0)), bits(3, 0b010));
  EXPECT_EQ(C.apply(bits(3, 0b010)), bits(3, 0b010));
  EXPECT_EQ(C.apply(bits(3, 0b001)), bits(3, 0b111));
  EXPECT_EQ(as_set(C.closed_sets()), (std::set<PointSet>{bits(3, 0b010), bits(3, 0b111)}));
}

TEST(Closure, EmptyBaseIsIndiscrete) {
  const auto C = closure_from_base(3, SubsetFamily(3));
  EXPECT_EQ(C.apply(bits(3, 0)), bits(3, 0b111));
  EXPECT_EQ(C.closed_sets().size(), 1U);
  EXPECT_FALSE(is_exact(C));
}

TEST(Closure, TwoOverlappingBlocks) {
  const auto C = closure_from_base(3, family(3, {0b011, 0b110}));
  EXPECT_EQ(C.apply(bits(3, 0)), bits(3, 0b010));
  EXPECT_EQ(C.apply(bits(3, 0b101)), bits(3, 0b111));
  EXPECT_EQ(C.closed_sets().size(), 4U);
  EXPECT_TRUE(is_topological(C));
}

TEST(Closure, NotTopological) {
  // {0} and {1} closed but {0,1} is not.
  const auto C = closure_from_base(3, family(3, {0b001, 0b010}));
  EXPECT_FALSE(is_topological(C));
  EXPECT_FALSE(oracle::topological_by_definition(C));
}

TEST(Closure, AxiomsOnRandomBases) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng() % 8;
    const auto C = random_closure(m, rng);
    EXPECT_TRUE(closure_axioms_hold(C));
  }
}

TEST(Closure, ClosedSetsMatchSubfamilyIntersections) {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng() % 8;
    const auto C = random_closure(m, rng);
    EXPECT_EQ(as_set(C.closed_sets()), oracle::closed_sets(C));
    for (const PointSet& X : C.closed_sets()) EXPECT_TRUE(C.is_closed(X));
  }
}

TEST(Closure, TopologicalMatchesDefinition) {
  std::mt19937 rng(17);
  int topological = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + rng() % 10;
    const auto C = random_closure(m, rng);
    const bool expected = oracle::topological_by_definition(C);
    topological += expected;
    EXPECT_EQ(is_topological(C), expected);
  }
  EXPECT_GT(topological, 0);
  EXPECT_LT(topological, 300);
}

TEST(Closure, ExactIffEmptyClosed) {
  EXPECT_TRUE(is_exact(closure_from_base(2, family(2, {0}))));
  EXPECT_FALSE(is_exact(closure_from_base(2, family(2, {1}))));
}

TEST(Closure, LargeCarrierComputesLazily) {
  const std::size_t m = 40;
  PointSet a(m), b(m);
  a.set(0);
  a.set(39);
  b.set(39);
  const auto C = closure_from_base(m, SubsetFamily(m, {a, b}));
  PointSet x(m);
  x.set(0);
  EXPECT_EQ(C.apply(x), a);
  EXPECT_EQ(C.closed_sets().size(), 3U);
}

TEST(C1O2, MatchesBruteForce) {
  std::mt19937 rng(19);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng() % 8;
    const auto C1 = random_closure(m, rng);
    const auto C2 = random_closure(m, rng);
    EXPECT_EQ(as_set(c1o2_family(C1, C2)), oracle::c1o2(C1, C2));
    EXPECT_EQ(as_set(clopen_sets(C1)), oracle::c1o2(C1, C1));
  }
}

TEST(C1O2, TwoChainDual) {
  // P* = {const0, χ{1}, const1} indexed 0,1,2.
  const Subspace A = dual_space(named::chain(2));
  const auto cl = closures_of_subspace(A);
  EXPECT_EQ(as_set(c1o2_family(cl.c1, cl.c2)), (std::set<PointSet>{bits(3, 0b100), bits(3, 0b110)}));
  EXPECT_FALSE(closures_equal(cl.c1, cl.c2));
}

TEST(C1O2, DiamondOrthodualClosuresCoincide) {
  const Poset B4 = named::m_lattice(2);
  const Subspace A = orthodual_space(B4, find_orthocomplementations(B4).at(0));
  const auto cl = closures_of_subspace(A);
  EXPECT_TRUE(closures_equal(cl.c1, cl.c2));
  EXPECT_EQ(clopen_sets(cl.c1).size(), 4U);
}

TEST(C1O2, Errors) {
  const auto C2 = closure_from_base(2, SubsetFamily(2));
  const auto C3 = closure_from_base(3, SubsetFamily(3));
  EXPECT_THROW(c1o2_family(C2, C3), CarrierMismatch);
  EXPECT_THROW(closures_equal(C2, C3), CarrierMismatch);
  EXPECT_THROW(SubsetFamily(3, {bits(2, 1)}), MemberOutOfRange);
  EXPECT_THROW(closure_axioms_hold(closure_from_base(17, SubsetFamily(17))), BoundExceeded);
}

TEST(ClosureEquation, EverySubsetOnCatalogDuals) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Poset& P : enumerate_posets(n)) {
      const Subspace A = dual_space(P);
      if (A.size() > 12) continue;
      const auto cl = closures_of_subspace(A);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << A.size()); ++x) {
        EXPECT_TRUE(closure_equation_holds(A, cl, bits(A.size(), x)));
      }
    }
  }
}
