#include <gtest/gtest.h>

#include "biclosure/catalog.hpp"
#include "biclosure/error.hpp"
#include "biclosure/io.hpp"
#include "biclosure/representation.hpp"

using namespace biclosure;
using nlohmann::json;

TEST(PosetJson, RoundTripKeepsLabelsAndOrder) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Poset& P : enumerate_posets(n)) EXPECT_EQ(poset_from_json(poset_to_json(P)), P);
  }
  const Poset B4 = named::m_lattice(2);
  EXPECT_EQ(parse_poset(poset_to_json(B4).dump()), B4);
}

TEST(PosetJson, WritesCoveringPairs) {
  const json j = poset_to_json(named::chain(3));
  EXPECT_EQ(j["elements"], json({"c0", "c1", "c2"}));
  EXPECT_EQ(j["le"], json::parse(R"([["c0","c1"],["c1","c2"]])"));
}

TEST(PosetJson, AcceptsAnyGeneratingRelation) {
  const Poset P = parse_poset(R"({"elements":["x","y","z"],"le":[["x","y"],["y","z"],["x","z"],["x","x"]]})");
  EXPECT_TRUE(P.leq(0, 2));
  EXPECT_EQ(P.covers().size(), 2U);
  EXPECT_EQ(parse_poset(R"({"elements":["x"]})").size(), 1U);
}

TEST(PosetJson, Errors) {
  try {
    parse_poset(R"({"elements": ["a",)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
  EXPECT_THROW(parse_poset("[1,2]"), ParseError);
  EXPECT_THROW(parse_poset(R"({"le": []})"), ParseError);
  EXPECT_THROW(parse_poset(R"({"elements": [1]})"), ParseError);
  EXPECT_THROW(parse_poset(R"({"elements": ["a"], "le": [["a"]]})"), ParseError);
  EXPECT_THROW(parse_poset(R"({"elements": ["a"], "le": [["a", "b"]]})"), UnknownLabel);
  EXPECT_THROW(parse_poset(R"({"elements": ["a","b"], "le": [["a","b"],["b","a"]]})"), CycleError);
}

TEST(ExportJson, Shapes) {
  const Poset B4 = named::m_lattice(2);
  const OrthoMap f = find_orthocomplementations(B4).at(0);
  const Subspace O = orthodual_space(B4, f);
  EXPECT_EQ(subspace_to_json(O), json::parse(R"([["a","1"],["b","1"]])"));
  EXPECT_EQ(element_set_json(B4, B4.carrier()), json({"0", "a", "b", "1"}));
  EXPECT_EQ(ortho_to_json(B4, f), json::parse(R"([["0","1"],["a","b"],["b","a"],["1","0"]])"));
  const auto rep = represent(named::chain(2));
  EXPECT_EQ(family_to_json(rep.family), json::parse("[[2],[1,2]]"));
}

TEST(Dot, HasseAndRepresentation) {
  const Poset C2 = named::chain(2);
  const std::string h = hasse_dot(C2);
  EXPECT_EQ(h.rfind("digraph \"hasse\" {", 0), 0U);
  EXPECT_NE(h.find("\"c0\""), std::string::npos);
  EXPECT_NE(h.find(" -> "), std::string::npos);

  const auto rep = represent(C2);
  const std::string f = family_dot(rep.family);
  EXPECT_NE(f.find("{2}"), std::string::npos);
  const std::string r = representation_dot(C2, rep.family, rep.images);
  EXPECT_NE(r.find("subgraph \"cluster_input\""), std::string::npos);
  EXPECT_NE(r.find("dashed"), std::string::npos);
}
