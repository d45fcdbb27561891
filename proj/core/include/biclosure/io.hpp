#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "biclosure/dual_space.hpp"
#include "biclosure/family.hpp"
#include "biclosure/ortho.hpp"
#include "biclosure/poset.hpp"

namespace biclosure {

// Poset JSON: {"elements": ["a","b",...], "le": [["a","b"],...]}. On input
// `le` may be any generating set of assertions; on output it lists the
// covering pairs in carrier order.
nlohmann::json poset_to_json(const Poset& P);
/// Throws ParseError for schema problems, plus whatever build_poset throws.
Poset poset_from_json(const nlohmann::json& j);
/// Parses text; syntax errors become ParseError carrying the byte offset.
Poset parse_poset(std::string_view text);

/// Labels of the elements of s, in carrier order.
nlohmann::json element_set_json(const Poset& P, ElementSet s);
/// One label array per point, in the subspace's canonical point order.
nlohmann::json subspace_to_json(const Subspace& A);
/// One ascending index array per member, in family order.
nlohmann::json family_to_json(const SubsetFamily& F);
/// [[p, p'], ...] by label, in carrier order.
nlohmann::json ortho_to_json(const Poset& P, const OrthoMap& f);

// DOT is write-only. Edges run from lower to higher element.
std::string hasse_dot(const Poset& P, const std::string& graph_name = "hasse");
std::string family_dot(const SubsetFamily& F, const std::string& graph_name = "family");
/// Input Hasse diagram and the represented family in two clusters, with a
/// dashed edge from each p to sigma(p).
std::string representation_dot(const Poset& P, const SubsetFamily& family,
                               const std::vector<PointSet>& images);

}  // namespace biclosure
