#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "biclosure/catalog.hpp"
#include "biclosure/error.hpp"
#include "biclosure/io.hpp"
#include "biclosure/isomorphism.hpp"
#include "biclosure/parallel.hpp"
#include "biclosure/representation.hpp"
#include "biclosure/theorem_suite.hpp"

namespace biclosure::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string out;
  std::string dot;
  std::string suite = "all";
  std::string kind = "full";
  std::string mode = "general";
  std::string what = "representation";
  std::size_t ortho_index = 0;
  std::size_t max_n = kDefaultCatalogBound;
  std::size_t min_n = 1;
  std::size_t dual_cap = kDefaultDualCap;
  std::size_t s_cap = kDefaultSCap;
};

std::string read_input(const std::string& source) {
  if (!source.empty() && source.front() == '{') return source;
  if (source == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open " + source);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int dual() {
    const Poset P = parse_poset(read_input(o_.input));
    Subspace A = select_subspace(P);
    emit({{"poset", poset_to_json(P)}, {"kind", o_.kind}, {"count", A.size()}, {"points", subspace_to_json(A)}});
    err_ << A.size() << " dual points\n";
    return kPass;
  }

  int represent() {
    const Poset P = parse_poset(read_input(o_.input));
    json j{{"poset", poset_to_json(P)}, {"mode", o_.mode}};
    std::optional<Subspace> space;
    SubsetFamily family;
    std::vector<PointSet> images;
    try {
      if (o_.mode == "general") {
        auto rep = biclosure::represent(P, o_.dual_cap);
        space = rep.space;
        family = rep.family;
        images = rep.images;
      } else if (o_.mode == "orthoposet") {
        const OrthoMap f = pick_ortho(P);
        auto rep = represent_orthoposet(P, f, o_.dual_cap);
        j["orthocomplementation"] = ortho_to_json(P, f);
        space = rep.space;
        family = rep.clopens;
        images = rep.images;
      } else if (o_.mode == "distributive") {
        auto rep = represent_distributive(P, o_.dual_cap);
        j["c1_topological"] = rep.c1_topological;
        j["c2_topological"] = rep.c2_topological;
        space = rep.rep.space;
        family = rep.rep.family;
        images = rep.rep.images;
      } else {
        throw Error("unknown --as mode: " + o_.mode);
      }
    } catch (const InternalError& e) {
      j["isomorphism"] = false;
      j["error"] = e.what();
      emit(j);
      err_ << "representation failed: " << e.what() << "\n";
      return kCheckFailed;
    }
    j["space"] = subspace_to_json(*space);
    j["family"] = family_to_json(family);
    json table = json::array();
    for (std::size_t p = 0; p < P.size(); ++p) table.push_back({P.label(p), format_point_set(images[p])});
    j["sigma"] = std::move(table);
    j["isomorphism"] = true;
    emit(j);
    maybe_dot(representation_dot(P, family, images));
    err_ << P.size() << " elements represented by " << family.size() << " sets over "
         << space->size() << " points\n";
    return kPass;
  }

  int ortho() {
    const Poset P = parse_poset(read_input(o_.input));
    const auto orthos = find_orthocomplementations(P);
    json list = json::array();
    for (const auto& f : orthos) list.push_back(ortho_to_json(P, f));
    json j{{"poset", poset_to_json(P)}, {"count", orthos.size()}, {"orthocomplementations", list}};
    int code = kPass;
    const Subspace dual = dual_space(P, o_.dual_cap);
    if (is_bounded(P) && dual.size() <= o_.s_cap) {
      const auto r = ortho_characterization_check(P, o_.s_cap);
      j["characterization"] = {{"holds", r.holds}, {"witness", r.witness}};
      if (!r.holds) code = kCheckFailed;
    } else {
      j["characterization"] = nullptr;
      if (is_bounded(P)) {
        err_ << "warning: |P*| = " << dual.size() << " exceeds --s-cap " << o_.s_cap
             << "; characterization skipped\n";
      }
    }
    emit(j);
    err_ << orthos.size() << " orthocomplementations\n";
    return code;
  }

  int stone() {
    const Poset P = parse_poset(read_input(o_.input));
    const auto s = biclosure::stone(P, o_.dual_cap);
    json kernels = json::array();
    for (ElementSet k : s.kernels) kernels.push_back(element_set_json(P, k));
    emit({{"poset", poset_to_json(P)},
          {"points", subspace_to_json(s.rep.space)},
          {"kernels", std::move(kernels)},
          {"clopen_sets", family_to_json(s.rep.clopens)},
          {"topological", s.topological},
          {"exact", s.exact}});
    maybe_dot(representation_dot(P, s.rep.clopens, s.rep.images));
    err_ << s.rep.space.size() << " points, " << s.rep.clopens.size() << " clopen sets\n";
    return kPass;
  }

  int check() {
    const Poset P = parse_poset(read_input(o_.input));
    const auto report = theorem_suite(P, suite_options());
    emit(to_json(report));
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const CheckResult& c) { return !c.pass; });
    err_ << report.checks.size() << " checks, " << failed << " failed\n";
    return report.all_pass() ? kPass : kCheckFailed;
  }

  int catalog() {
    if (o_.max_n > kDefaultCatalogBound) {
      err_ << "warning: --max-n " << o_.max_n << " is above the default bound "
           << kDefaultCatalogBound << "; class counts and sweep time grow very quickly\n";
    }
    const auto options = suite_options();
    json per_n = json::object();
    json failures = json::array();
    std::size_t total = 0;
    std::size_t checks = 0;
    for (std::size_t n = o_.min_n; n <= o_.max_n; ++n) {
      const auto posets = enumerate_posets(n, o_.max_n);
      const auto reports = parallel_map(posets.size(), [&](std::size_t i) {
        return theorem_suite(posets[i], options);
      });
      per_n[std::to_string(n)] = posets.size();
      total += posets.size();
      for (const auto& r : reports) {
        checks += r.checks.size();
        for (const auto& c : r.checks) {
          if (!c.pass) failures.push_back({{"poset", r.poset}, {"check", c.name}, {"witness", c.witness}});
        }
      }
    }
    emit({{"min_n", o_.min_n},
          {"max_n", o_.max_n},
          {"suite", o_.suite},
          {"classes", per_n},
          {"total_classes", total},
          {"checks_run", checks},
          {"failures", failures},
          {"pass", failures.empty()}});
    err_ << total << " classes processed";
    for (auto it = per_n.begin(); it != per_n.end(); ++it) err_ << " (n=" << it.key() << ": " << it.value() << ")";
    err_ << ", " << (failures.empty() ? "all pass" : std::to_string(failures.size()) + " failures") << "\n";
    return failures.empty() ? kPass : kCheckFailed;
  }

  int export_dot() {
    const Poset P = parse_poset(read_input(o_.input));
    std::string text;
    if (o_.what == "hasse") {
      text = hasse_dot(P);
    } else if (o_.what == "family") {
      const auto rep = biclosure::represent(P, o_.dual_cap);
      text = family_dot(rep.family);
    } else if (o_.what == "representation") {
      const auto rep = biclosure::represent(P, o_.dual_cap);
      text = representation_dot(P, rep.family, rep.images);
    } else {
      throw Error("unknown --what: " + o_.what);
    }
    write_text(o_.out.empty() ? o_.dot : o_.out, text, out_);
    return kPass;
  }

 private:
  SuiteOptions suite_options() const {
    SuiteOptions s;
    s.suite = parse_suite(o_.suite);
    s.dual_cap = o_.dual_cap;
    s.s_cap = o_.s_cap;
    return s;
  }

  OrthoMap pick_ortho(const Poset& P) const {
    const auto orthos = find_orthocomplementations(P);
    if (orthos.empty()) throw InvalidOrthoMap("poset has no orthocomplementation");
    if (o_.ortho_index >= orthos.size()) {
      throw Error("--ortho-index " + std::to_string(o_.ortho_index) + " out of range (" +
                  std::to_string(orthos.size()) + " orthocomplementations)");
    }
    return orthos[o_.ortho_index];
  }

  Subspace select_subspace(const Poset& P) const {
    if (o_.kind == "full") return dual_space(P, o_.dual_cap);
    if (o_.kind == "lattice") return lattice_dual(P, o_.dual_cap);
    if (o_.kind == "ortho") return orthodual_space(P, pick_ortho(P), o_.dual_cap);
    throw Error("unknown --kind: " + o_.kind);
  }

  void emit(const json& j) { write_text(o_.out, j.dump(2) + "\n", out_); }

  void maybe_dot(const std::string& text) {
    if (!o_.dot.empty()) write_text(o_.dot, text, out_);
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite poset duality: dual spaces, two-closure representations, theorem checks"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the JSON result to this file instead of stdout");
    sub->add_option("--dual-cap", o.dual_cap, "Maximum number of dual points")
        ->check(CLI::PositiveNumber);
    sub->add_option("--s-cap", o.s_cap, "Largest |P*| for the exhaustive subspace search")
        ->check(CLI::Range(std::size_t{1}, kMaxSCap));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Poset JSON file, '-' for stdin, or inline JSON")->required();
  };

  auto* dual = app.add_subcommand("dual", "Print the dual space of a poset");
  add_input(dual);
  add_common(dual);
  dual->add_option("--kind", o.kind, "full | lattice | ortho")
      ->check(CLI::IsMember({"full", "lattice", "ortho"}));
  dual->add_option("--ortho-index", o.ortho_index, "Which orthocomplementation for --kind ortho");

  auto* rep = app.add_subcommand("represent", "Represent a poset as a C1O2 family");
  add_input(rep);
  add_common(rep);
  rep->add_option("--as", o.mode, "general | orthoposet | distributive")
      ->check(CLI::IsMember({"general", "orthoposet", "distributive"}));
  rep->add_option("--ortho-index", o.ortho_index, "Which orthocomplementation for --as orthoposet");
  rep->add_option("--dot", o.dot, "Also write a DOT diagram to this file");

  auto* ortho = app.add_subcommand("ortho", "List orthocomplementations and check their characterization");
  add_input(ortho);
  add_common(ortho);

  auto* stone = app.add_subcommand("stone", "Build the Stone space of a finite Boolean algebra");
  add_input(stone);
  add_common(stone);
  stone->add_option("--dot", o.dot, "Also write a DOT diagram to this file");

  auto* check = app.add_subcommand("check", "Run the theorem suite on one poset");
  add_input(check);
  add_common(check);
  check->add_option("--suite", o.suite, "all | general | ortho | distributive | boolean")
      ->check(CLI::IsMember({"all", "general", "ortho", "distributive", "boolean"}));

  auto* catalog = app.add_subcommand("catalog", "Run the theorem suite over all small posets");
  add_common(catalog);
  catalog->add_option("--max-n", o.max_n, "Largest poset size to sweep")
      ->check(CLI::Range(std::size_t{1}, kMaxCanonicalOrder));
  catalog->add_option("--min-n", o.min_n, "Smallest poset size to sweep")->check(CLI::PositiveNumber);
  catalog->add_option("--suite", o.suite, "all | general | ortho | distributive | boolean")
      ->check(CLI::IsMember({"all", "general", "ortho", "distributive", "boolean"}));

  auto* dot = app.add_subcommand("export-dot", "Write Hasse or representation diagrams as DOT");
  add_input(dot);
  add_common(dot);
  dot->add_option("--what", o.what, "hasse | family | representation")
      ->check(CLI::IsMember({"hasse", "family", "representation"}));
  dot->add_option("--dot", o.dot, "Write the DOT text to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  Runner r(o, out, err);
  try {
    if (*dual) return r.dual();
    if (*rep) return r.represent();
    if (*ortho) return r.ortho();
    if (*stone) return r.stone();
    if (*check) return r.check();
    if (*catalog) return r.catalog();
    if (*dot) return r.export_dot();
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace biclosure::cli
