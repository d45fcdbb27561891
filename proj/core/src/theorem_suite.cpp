#include "biclosure/theorem_suite.hpp"

#include <algorithm>
#include <functional>

#include "biclosure/error.hpp"
#include "biclosure/io.hpp"

namespace biclosure {

using nlohmann::json;

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::kAll;
  if (name == "general") return Suite::kGeneral;
  if (name == "ortho") return Suite::kOrtho;
  if (name == "distributive") return Suite::kDistributive;
  if (name == "boolean") return Suite::kBoolean;
  throw Error("unknown suite: " + name);
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::kAll: return "all";
    case Suite::kGeneral: return "general";
    case Suite::kOrtho: return "ortho";
    case Suite::kDistributive: return "distributive";
    case Suite::kBoolean: return "boolean";
  }
  return "all";
}

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool closure_equation_holds(const Subspace& A, const ClosurePair& closures, const PointSet& X) {
  PointSet via_filter = all_points(A.size());
  for_each_element(filter_of(A, X), [&](std::size_t p) { via_filter &= A.up(p); });
  PointSet via_ideal = all_points(A.size());
  for_each_element(ideal_of(A, X), [&](std::size_t p) { via_ideal &= A.lo(p); });
  return closures.c1.apply(X) == via_filter && closures.c2.apply(X) == via_ideal;
}

bool closure_axioms_hold(const ClosureOperator& C, std::size_t max_carrier) {
  const std::size_t m = C.carrier_size();
  if (m > max_carrier || m >= 63) {
    throw BoundExceeded("exhaustive closure-axiom check limited to " + std::to_string(max_carrier) +
                        " points");
  }
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<std::uint64_t> image(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    image[x] = C.apply(PointSet(m, x)).to_ulong();
  }
  for (std::uint64_t x = 0; x < count; ++x) {
    const std::uint64_t y = image[x];
    if ((x & ~y) != 0) return false;   // extensive
    if (image[y] != y) return false;   // idempotent
    for (std::size_t e = 0; e < m; ++e) {
      const std::uint64_t bigger = x | (std::uint64_t{1} << e);
      if ((y & ~image[bigger]) != 0) return false;  // monotone
    }
  }
  return true;
}

namespace {

class SuiteRunner {
 public:
  SuiteRunner(const Poset& P, const SuiteOptions& o) : P_(P), opts_(o) {
    report_.poset = poset_to_json(P);
  }

  SuiteReport run() {
    const Suite s = opts_.suite;
    const Subspace dual = dual_space(P_, opts_.dual_cap);
    if (s == Suite::kAll || s == Suite::kGeneral) general(dual);
    if (s == Suite::kAll || s == Suite::kOrtho) ortho(dual);
    if (s == Suite::kAll || s == Suite::kDistributive) distributive();
    if (s == Suite::kAll || s == Suite::kBoolean) boolean();
    return std::move(report_);
  }

 private:
  // Runs one check; library errors thrown inside become failing entries.
  void check(std::string name, std::string statement, const std::function<bool(json&)>& body) {
    CheckResult c{std::move(name), std::move(statement), false, json::object()};
    try {
      c.pass = body(c.witness);
    } catch (const BoundExceeded&) {
      throw;
    } catch (const std::exception& e) {
      c.pass = false;
      c.witness["error"] = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  void general(const Subspace& dual) {
    check("dual-space-full-separating", "P* is full and separating", [&](json& w) {
      const auto full = is_full(dual);
      const auto sep = is_separating(dual);
      add_full_witness(w, full);
      add_separation_witness(w, sep);
      return full.full && sep.separating;
    });

    check("dual-space-ideals-are-order-ideals",
          "ideals (filters) with respect to P* are exactly the order ideals (filters)", [&](json& w) {
            std::vector<ElementSet> down_sets, up_sets;
            if (P_.size() <= 16) {
              for (ElementSet s = 0; s < (ElementSet{1} << P_.size()); ++s) {
                if (P_.is_down_set(s)) down_sets.push_back(s);
                if (P_.is_up_set(s)) up_sets.push_back(s);
              }
            } else {
              up_sets = dual.points();
              for (ElementSet u : up_sets) down_sets.push_back(P_.carrier() & ~u);
              std::sort(down_sets.begin(), down_sets.end());
            }
            const bool ideals_ok = ideals_wrt(dual).members == down_sets;
            const bool filters_ok = filters_wrt(dual).members == up_sets;
            w["ideals_match"] = ideals_ok;
            w["filters_match"] = filters_ok;
            return ideals_ok && filters_ok;
          });

    check("sigma-isomorphism-dual-space",
          "sigma: P -> C1O2(P*) is isotone, injective and surjective, hence an isomorphism",
          [&](json& w) {
            auto r = sigma_check(dual, "P*");
            w = r.witness;
            return r.isomorphism && r.theorem_consistent;
          });

    check("closure-equation-dual-space",
          "C1(X) is the intersection of UP(p) over F(X) and C2(X) of LO(p) over I(X)", [&](json& w) {
            const auto closures = closures_of_subspace(dual);
            std::size_t tested = 0;
            bool ok = true;
            for_each_probe(dual.size(), [&](const PointSet& X) {
              ++tested;
              if (ok && !closure_equation_holds(dual, closures, X)) {
                ok = false;
                w["counterexample"] = format_point_set(X);
              }
            });
            w["subsets_tested"] = tested;
            return ok;
          });

    check("separating-cones-imply-full",
          "A separating with <p>ideal and <q>filter disjoint for all q not <= p implies A full",
          [&](json& w) {
            const bool hyp = is_separating(dual).separating && cones_disjoint(dual);
            const bool full = is_full(dual).full;
            w["hypothesis"] = hyp;
            w["full"] = full;
            return !hyp || full;
          });

    if (is_bounded(P_)) {
      const Subspace reduced = remove_constants(dual);
      check("constants-removed-full-separating",
            "for bounded P, P* without the constant maps is still full and separating", [&](json& w) {
              const auto full = is_full(reduced);
              const auto sep = is_separating(reduced);
              add_full_witness(w, full);
              add_separation_witness(w, sep);
              return full.full && sep.separating;
            });
      check("sigma-isomorphism-without-constants",
            "for bounded P, P is isomorphic to C1O2 of P* without the constant maps", [&](json& w) {
              auto r = sigma_check(reduced, "P* \\ {0,1}");
              w = r.witness;
              return r.isomorphism && r.theorem_consistent;
            });
    }
  }

  void ortho(const Subspace& dual) {
    if (!is_bounded(P_)) return;
    const auto orthos = find_orthocomplementations(P_);
    for (std::size_t k = 0; k < orthos.size(); ++k) {
      const OrthoMap& f = orthos[k];
      const std::string tag = "#" + std::to_string(k);
      check("orthodual-full-separating" + tag, "the orthodual space P*' is full and separating",
            [&](json& w) {
              const Subspace A = orthodual_space(P_, f, opts_.dual_cap);
              const auto full = is_full(A);
              const auto sep = is_separating(A);
              w["orthocomplementation"] = ortho_to_json(P_, f);
              add_full_witness(w, full);
              add_separation_witness(w, sep);
              return full.full && sep.separating;
            });
      check("orthoposet-representation" + tag,
            "on P*' C1 = C2 and P is isomorphic to its clopen sets, with ' realized as set complement",
            [&](json& w) {
              w["orthocomplementation"] = ortho_to_json(P_, f);
              const auto rep = represent_orthoposet(P_, f, opts_.dual_cap);
              w["points"] = rep.space.size();
              w["clopen_sets"] = rep.clopens.size();
              return true;
            });
    }
    if (dual.size() <= opts_.s_cap) {
      check("orthocomplementation-characterization",
            "orthocomplementations correspond one-to-one to the maximal members of S", [&](json& w) {
              const auto r = ortho_characterization_check(P_, opts_.s_cap);
              w = r.witness;
              return r.holds;
            });
    } else {
      report_.skipped.push_back("orthocomplementation-characterization");
    }
  }

  void distributive() {
    if (!is_lattice(P_)) return;
    const bool dist = is_distributive(P_);
    check("distributive-iff-lattice-dual-full-separating",
          "a lattice is distributive iff its lattice-morphism dual is full and separating",
          [&](json& w) {
            const Subspace A = lattice_dual(P_, opts_.dual_cap);
            const auto full = is_full(A);
            const auto sep = is_separating(A);
            w["distributive"] = dist;
            w["points"] = A.size();
            add_full_witness(w, full);
            add_separation_witness(w, sep);
            return dist == (full.full && sep.separating);
          });
    if (dist) {
      check("distributive-representation",
            "a distributive lattice is C1O2 of a space with two topological closures", [&](json& w) {
              const auto rep = represent_distributive(P_, opts_.dual_cap);
              w["points"] = rep.rep.space.size();
              w["c1_topological"] = rep.c1_topological;
              w["c2_topological"] = rep.c2_topological;
              return rep.c1_topological && rep.c2_topological;
            });
    }
  }

  void boolean() {
    if (!is_distributive(P_)) return;
    const bool boole = is_boolean(P_);
    check("boolean-iff-closures-coincide",
          "a distributive lattice is Boolean iff C1 = C2 on its non-constant lattice morphisms",
          [&](json& w) {
            const Subspace A = remove_constants(lattice_dual(P_, opts_.dual_cap));
            const auto [c1, c2] = closures_of_subspace(A);
            const bool equal = closures_equal(c1, c2);
            w["boolean"] = boole;
            w["closures_coincide"] = equal;
            return boole == equal;
          });
    if (boole) {
      check("stone-representation",
            "a Boolean algebra is isomorphic to the clopen sets of its Stone space", [&](json& w) {
              const auto s = stone(P_, opts_.dual_cap);
              w["points"] = s.rep.space.size();
              w["clopen_sets"] = s.rep.clopens.size();
              json kernels = json::array();
              for (ElementSet k : s.kernels) kernels.push_back(element_set_json(P_, k));
              w["kernels"] = std::move(kernels);
              return s.topological && s.exact;
            });
    }
  }

  template <typename F>
  void for_each_probe(std::size_t m, F&& f) const {
    if (m <= opts_.exhaustive_carrier) {
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) f(PointSet(m, x));
      return;
    }
    f(empty_points(m));
    f(all_points(m));
    for (std::size_t i = 0; i < m; ++i) {
      PointSet s(m);
      s.set(i);
      f(s);
      f(~s);
      for (std::size_t j = i + 1; j < m; ++j) {
        PointSet t = s;
        t.set(j);
        f(t);
      }
    }
  }

  void add_full_witness(json& w, const FullnessResult& r) const {
    if (r.witness) w["unseparated_pair"] = {P_.label(r.witness->first), P_.label(r.witness->second)};
  }

  void add_separation_witness(json& w, const SeparationResult& r) const {
    if (r.witness) {
      w["unseparated_ideal_filter"] = {element_set_json(P_, r.witness->first),
                                       element_set_json(P_, r.witness->second)};
    }
  }

  const Poset& P_;
  const SuiteOptions& opts_;
  SuiteReport report_;
};

}  // namespace

SuiteReport theorem_suite(const Poset& P, const SuiteOptions& options) {
  return SuiteRunner(P, options).run();
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"paper_ref", c.statement}, {"pass", c.pass}, {"witness", c.witness}});
  }
  return {{"poset", r.poset}, {"checks", std::move(checks)}, {"skipped", r.skipped}, {"pass", r.all_pass()}};
}

}  // namespace biclosure
