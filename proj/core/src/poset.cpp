#include "biclosure/poset.hpp"

#include <algorithm>
#include <unordered_map>

#include "biclosure/error.hpp"

namespace biclosure {

Poset Poset::from_up_sets(std::vector<std::string> labels, std::vector<ElementSet> up) {
  const std::size_t n = up.size();
  if (n > kMaxElements) {
    throw BoundExceeded("poset has " + std::to_string(n) + " elements; at most " +
                        std::to_string(kMaxElements) + " are supported");
  }
  if (labels.size() != n) throw Error("label count does not match relation size");

  const ElementSet all = full_set(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(up[i], i)) throw CycleError("relation is not reflexive at " + labels[i]);
    if (!is_subset(up[i], all)) throw Error("relation references an element out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for_each_element(up[i], [&](std::size_t j) {
      if (j != i && contains(up[j], i)) {
        throw CycleError("order cycle between " + labels[i] + " and " + labels[j]);
      }
      if (!is_subset(up[j], up[i])) throw Error("relation is not transitive");
    });
  }

  Poset P;
  P.labels_ = std::move(labels);
  P.up_ = std::move(up);
  P.down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_element(P.up_[i], [&](std::size_t j) { P.down_[j] |= element_bit(i); });
  }
  return P;
}

bool Poset::is_up_set(ElementSet s) const { return up_closure(s) == s; }

bool Poset::is_down_set(ElementSet s) const { return down_closure(s) == s; }

ElementSet Poset::up_closure(ElementSet s) const {
  ElementSet r = 0;
  for_each_element(s, [&](std::size_t i) { r |= up_[i]; });
  return r;
}

ElementSet Poset::down_closure(ElementSet s) const {
  ElementSet r = 0;
  for_each_element(s, [&](std::size_t i) { r |= down_[i]; });
  return r;
}

std::optional<std::size_t> Poset::bottom() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i] == carrier()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::top() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i] == carrier()) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < size(); ++p) {
    const ElementSet strictly_above = up_[p] & ~element_bit(p);
    for_each_element(strictly_above, [&](std::size_t q) {
      // q covers p iff the open interval (p, q) is empty.
      const ElementSet between = strictly_above & down_[q] & ~element_bit(q);
      if (between == 0) out.emplace_back(p, q);
    });
  }
  return out;
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = labels.size();
  if (n > kMaxElements) {
    throw BoundExceeded("poset has " + std::to_string(n) + " elements; at most " +
                        std::to_string(kMaxElements) + " are supported");
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second) throw Error("duplicate label: " + labels[i]);
  }
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw UnknownLabel("unknown label: " + l);
    return it->second;
  };

  std::vector<ElementSet> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = element_bit(i);
  for (const auto& [lo, hi] : pairs) up[lookup(lo)] |= element_bit(lookup(hi));

  // Warshall on bit rows: if k is above i, everything above k is above i.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (contains(up[i], k)) up[i] |= up[k];
    }
  }
  return Poset::from_up_sets(labels, std::move(up));
}

std::optional<std::size_t> meet(const Poset& P, std::size_t p, std::size_t q) {
  const ElementSet lower = P.down_set(p) & P.down_set(q);
  std::optional<std::size_t> result;
  for_each_element(lower, [&](std::size_t g) {
    if (!result && is_subset(lower, P.down_set(g))) result = g;
  });
  return result;
}

std::optional<std::size_t> join(const Poset& P, std::size_t p, std::size_t q) {
  const ElementSet upper = P.up_set(p) & P.up_set(q);
  std::optional<std::size_t> result;
  for_each_element(upper, [&](std::size_t g) {
    if (!result && is_subset(upper, P.up_set(g))) result = g;
  });
  return result;
}

bool is_lattice(const Poset& P) {
  if (P.size() == 0) return false;
  for (std::size_t p = 0; p < P.size(); ++p) {
    for (std::size_t q = p + 1; q < P.size(); ++q) {
      if (!meet(P, p, q) || !join(P, p, q)) return false;
    }
  }
  return true;
}

bool is_bounded(const Poset& P) { return P.bottom().has_value() && P.top().has_value(); }

namespace {

struct LatticeTables {
  std::size_t n;
  std::vector<std::size_t> meet;
  std::vector<std::size_t> join;
  std::size_t m(std::size_t a, std::size_t b) const { return meet[a * n + b]; }
  std::size_t j(std::size_t a, std::size_t b) const { return join[a * n + b]; }
};

LatticeTables lattice_tables(const Poset& P) {
  const std::size_t n = P.size();
  LatticeTables t{n, std::vector<std::size_t>(n * n), std::vector<std::size_t>(n * n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.meet[a * n + b] = *meet(P, a, b);
      t.join[a * n + b] = *join(P, a, b);
    }
  }
  return t;
}

}  // namespace

bool is_distributive(const Poset& P) {
  if (!is_lattice(P)) return false;
  const auto t = lattice_tables(P);
  const std::size_t n = P.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t.m(a, t.j(b, c)) != t.j(t.m(a, b), t.m(a, c))) return false;
      }
    }
  }
  return true;
}

bool is_boolean(const Poset& P) {
  if (!is_bounded(P) || !is_distributive(P)) return false;
  const std::size_t bot = *P.bottom();
  const std::size_t top = *P.top();
  const auto t = lattice_tables(P);
  for (std::size_t a = 0; a < P.size(); ++a) {
    bool complemented = false;
    for (std::size_t b = 0; b < P.size() && !complemented; ++b) {
      complemented = t.m(a, b) == bot && t.j(a, b) == top;
    }
    if (!complemented) return false;
  }
  return true;
}

namespace named {

Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<ElementSet> up;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    up.push_back(full_set(n) & ~(element_bit(i) - 1));
  }
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<ElementSet> up;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("a" + std::to_string(i));
    up.push_back(element_bit(i));
  }
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

Poset boolean_lattice(std::size_t k) {
  if (k > 6) throw BoundExceeded("boolean_lattice supports at most 6 atoms");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  std::vector<ElementSet> up(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::string l = "{";
    for (std::size_t b = 0; b < k; ++b) {
      if ((s >> b) & 1U) l += (l.size() > 1 ? "," : "") + std::to_string(b);
    }
    labels.push_back(l + "}");
    for (std::size_t t = 0; t < n; ++t) {
      if ((s & ~t) == 0) up[s] |= element_bit(t);
    }
  }
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

Poset m_lattice(std::size_t k) {
  std::vector<std::string> labels{"0"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string atom(1, static_cast<char>('a' + i));
    labels.push_back(atom);
    pairs.emplace_back("0", atom);
    pairs.emplace_back(atom, "1");
  }
  labels.push_back("1");
  pairs.emplace_back("0", "1");
  return build_poset(labels, pairs);
}

Poset pentagon() {
  return build_poset({"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

Poset v_poset() { return build_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}); }

Poset free_distributive_2() {
  return build_poset({"0", "ab", "a", "b", "a+b", "1"},
                     {{"0", "ab"}, {"ab", "a"}, {"ab", "b"}, {"a", "a+b"}, {"b", "a+b"}, {"a+b", "1"}});
}

}  // namespace named

}  // namespace biclosure
