#include "biclosure/ortho.hpp"

#include <algorithm>
#include <optional>

namespace biclosure {

std::string ortho_violation(const Poset& P, const OrthoMap& f) {
  const std::size_t n = P.size();
  if (f.image.size() != n) return "map size does not match the poset";
  if (!is_bounded(P)) return "poset is not bounded";
  for (std::size_t p = 0; p < n; ++p) {
    if (f(p) >= n) return "image out of range at " + P.label(p);
  }
  const std::size_t bot = *P.bottom();
  const std::size_t top = *P.top();
  for (std::size_t p = 0; p < n; ++p) {
    if (f(f(p)) != p) return "not an involution at " + P.label(p);
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (P.leq(p, q) && !P.leq(f(q), f(p))) {
        return "not anti-isotone at " + P.label(p) + " <= " + P.label(q);
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (join(P, p, f(p)) != std::optional<std::size_t>(top)) {
      return "join with complement is not top at " + P.label(p);
    }
    if (meet(P, p, f(p)) != std::optional<std::size_t>(bot)) {
      return "meet with complement is not bottom at " + P.label(p);
    }
  }
  return {};
}

namespace {

// Backtracking over involutions: the smallest unassigned element is paired
// with an unassigned partner (possibly itself) that is a complement of it.
// Anti-isotonicity is checked on each completed candidate.
class OrthoSearch {
 public:
  explicit OrthoSearch(const Poset& P) : P_(P), n_(P.size()) {
    const std::size_t bot = *P.bottom();
    const std::size_t top = *P.top();
    complement_.assign(n_, 0);
    for (std::size_t p = 0; p < n_; ++p) {
      for (std::size_t q = 0; q < n_; ++q) {
        if (meet(P, p, q) == std::optional<std::size_t>(bot) &&
            join(P, p, q) == std::optional<std::size_t>(top)) {
          complement_[p] |= element_bit(q);
        }
      }
    }
    image_.assign(n_, n_);
  }

  std::vector<OrthoMap> run() {
    extend();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend() {
    std::size_t p = 0;
    while (p < n_ && image_[p] != n_) ++p;
    if (p == n_) {
      OrthoMap f{image_};
      if (is_orthocomplementation(P_, f)) found_.push_back(std::move(f));
      return;
    }
    for_each_element(complement_[p], [&](std::size_t q) {
      if (image_[q] != n_) return;
      image_[p] = q;
      image_[q] = p;
      if (partial_anti_isotone(p) && partial_anti_isotone(q)) extend();
      image_[p] = n_;
      image_[q] = n_;
    });
  }

  bool partial_anti_isotone(std::size_t p) const {
    for (std::size_t q = 0; q < n_; ++q) {
      if (image_[q] == n_) continue;
      if (P_.leq(p, q) && !P_.leq(image_[q], image_[p])) return false;
      if (P_.leq(q, p) && !P_.leq(image_[p], image_[q])) return false;
    }
    return true;
  }

  const Poset& P_;
  std::size_t n_;
  std::vector<ElementSet> complement_;
  std::vector<std::size_t> image_;
  std::vector<OrthoMap> found_;
};

}  // namespace

std::vector<OrthoMap> find_orthocomplementations(const Poset& P) {
  if (!is_bounded(P)) return {};
  return OrthoSearch(P).run();
}

}  // namespace biclosure
