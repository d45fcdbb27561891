#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "biclosure/dual_space.hpp"
#include "biclosure/poset.hpp"
#include "biclosure/representation.hpp"

namespace biclosure {

enum class Suite { kAll, kGeneral, kOrtho, kDistributive, kBoolean };

/// "all", "general", ... ; throws Error on anything else.
Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

struct SuiteOptions {
  Suite suite = Suite::kAll;
  std::size_t dual_cap = kDefaultDualCap;
  std::size_t s_cap = kDefaultSCap;
  /// Carriers up to this size get the closure equation checked on every subset.
  std::size_t exhaustive_carrier = 12;
};

struct CheckResult {
  std::string name;
  /// The mathematical statement being checked.
  std::string statement;
  bool pass = false;
  nlohmann::json witness;
};

struct SuiteReport {
  nlohmann::json poset;
  std::vector<CheckResult> checks;
  /// Checks whose preconditions P meets but that were skipped for a bound.
  std::vector<std::string> skipped;

  bool all_pass() const;
};

/// apply(C1, X) equals the intersection of UP_A(p) over p in F(X), and
/// apply(C2, X) the intersection of LO_A(p) over p in I(X); an empty index
/// set gives all of A.
bool closure_equation_holds(const Subspace& A, const ClosurePair& closures, const PointSet& X);

/// Extensive, idempotent and monotone on every subset of the carrier.
/// Monotonicity is checked on one-point extensions, which suffices by
/// transitivity. Throws BoundExceeded above `max_carrier` points.
bool closure_axioms_hold(const ClosureOperator& C, std::size_t max_carrier = 16);

/// Runs every check of the selected suite whose preconditions P satisfies.
/// Failures become report entries; only BoundExceeded from the dual space
/// itself propagates.
SuiteReport theorem_suite(const Poset& P, const SuiteOptions& options = {});

nlohmann::json to_json(const SuiteReport& r);

}  // namespace biclosure
