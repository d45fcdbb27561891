#include "biclosure/io.hpp"

#include <sstream>

#include "biclosure/error.hpp"

namespace biclosure {

using nlohmann::json;

json poset_to_json(const Poset& P) {
  json le = json::array();
  for (const auto& [p, q] : P.covers()) le.push_back({P.label(p), P.label(q)});
  return {{"elements", P.labels()}, {"le", std::move(le)}};
}

Poset poset_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("poset must be a JSON object");
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw ParseError("poset needs an \"elements\" array");
  }
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("le")) {
    if (!j["le"].is_array()) throw ParseError("\"le\" must be an array of pairs");
    for (std::size_t i = 0; i < j["le"].size(); ++i) {
      const auto& pr = j["le"][i];
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string()) {
        throw ParseError("\"le\"[" + std::to_string(i) + "] must be a pair of labels");
      }
      pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  return build_poset(labels, pairs);
}

Poset parse_poset(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return poset_from_json(j);
}

json element_set_json(const Poset& P, ElementSet s) {
  json out = json::array();
  for_each_element(s, [&](std::size_t i) { out.push_back(P.label(i)); });
  return out;
}

json subspace_to_json(const Subspace& A) {
  json out = json::array();
  for (ElementSet s : A.points()) out.push_back(element_set_json(A.base(), s));
  return out;
}

json family_to_json(const SubsetFamily& F) {
  json out = json::array();
  for (const PointSet& m : F) {
    json member = json::array();
    for (auto i = m.find_first(); i != PointSet::npos; i = m.find_next(i)) member.push_back(i);
    out.push_back(std::move(member));
  }
  return out;
}

json ortho_to_json(const Poset& P, const OrthoMap& f) {
  json out = json::array();
  for (std::size_t p = 0; p < P.size(); ++p) out.push_back({P.label(p), P.label(f(p))});
  return out;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_hasse_body(std::ostream& os, const Poset& P, const std::string& prefix,
                      const std::string& indent) {
  for (std::size_t i = 0; i < P.size(); ++i) {
    os << indent << quote(prefix + std::to_string(i)) << " [label=" << quote(P.label(i)) << "];\n";
  }
  for (const auto& [p, q] : P.covers()) {
    os << indent << quote(prefix + std::to_string(p)) << " -> " << quote(prefix + std::to_string(q))
       << ";\n";
  }
}

}  // namespace

std::string hasse_dot(const Poset& P, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quote(graph_name) << " {\n  rankdir=BT;\n";
  write_hasse_body(os, P, "e", "  ");
  os << "}\n";
  return os.str();
}

std::string family_dot(const SubsetFamily& F, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quote(graph_name) << " {\n  rankdir=BT;\n";
  write_hasse_body(os, poset_of_family(F), "s", "  ");
  os << "}\n";
  return os.str();
}

std::string representation_dot(const Poset& P, const SubsetFamily& family,
                               const std::vector<PointSet>& images) {
  std::ostringstream os;
  os << "digraph \"representation\" {\n  rankdir=BT;\n";
  os << "  subgraph \"cluster_input\" {\n    label=\"P\";\n";
  write_hasse_body(os, P, "e", "    ");
  os << "  }\n";
  os << "  subgraph \"cluster_family\" {\n    label=\"C1O2\";\n";
  write_hasse_body(os, poset_of_family(family), "s", "    ");
  os << "  }\n";
  for (std::size_t p = 0; p < images.size() && p < P.size(); ++p) {
    const std::size_t k = family.index_of(images[p]);
    if (k == family.size()) continue;
    os << "  " << quote("e" + std::to_string(p)) << " -> " << quote("s" + std::to_string(k))
       << " [style=dashed, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace biclosure
