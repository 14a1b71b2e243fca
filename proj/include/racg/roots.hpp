#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "racg/poly.hpp"
#include "racg/rational.hpp"

namespace racg {

/// Closed rational interval; lo == hi denotes an exactly known point.
struct Interval {
  Rat lo;
  Rat hi;

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / Rat(2); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Open interval with optional endpoints; a missing endpoint is ±∞.
struct OpenRange {
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  static OpenRange whole_line() { return {}; }
  static OpenRange between(Rat a, Rat b) { return {std::move(a), std::move(b)}; }
  static OpenRange above(Rat a) { return {std::move(a), std::nullopt}; }
};

/// Sturm chain p, p', −rem(...), ... of a squarefree polynomial, each member
/// scaled by a positive constant.
template <class F>
class SturmSequence {
 public:
  explicit SturmSequence(const Poly<F>& squarefree) {
    if (squarefree.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm sequence of 0");
    chain_.push_back(normalized(squarefree));
    Poly<F> next = squarefree.derivative();
    while (!next.is_zero()) {
      chain_.push_back(normalized(next));
      next = -divmod(chain_[chain_.size() - 2], chain_.back()).second;
    }
  }

  const Poly<F>& base() const { return chain_.front(); }
  std::size_t length() const { return chain_.size(); }

  /// Sign variations at a finite point, zeros skipped.
  int variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(sign_of(p.eval(x)));
    return count_variations(signs);
  }

  /// Sign variations at +∞ (positive) or −∞ (negative).
  int variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) {
      int s = sign_of(p.leading());
      if (!positive && p.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
    return count_variations(signs);
  }

  int variations(const std::optional<Rat>& x, bool at_positive_end) const {
    return x ? variations_at(*x) : variations_at_infinity(at_positive_end);
  }

  /// Distinct roots in the half-open interval (a, b]; valid even when a or b
  /// is a root.
  int count_half_open(const std::optional<Rat>& a, const std::optional<Rat>& b) const {
    return variations(a, false) - variations(b, true);
  }

 private:
  static int count_variations(const std::vector<int>& signs) {
    int last = 0;
    int changes = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  static Poly<F> normalized(const Poly<F>& p) {
    F scale = p.leading();
    if (sign_of(scale) < 0) scale = -scale;
    std::vector<F> v = p.coeffs();
    for (auto& c : v) c = c / scale;
    return Poly<F>(std::move(v));
  }

  std::vector<Poly<F>> chain_;
};

/// Number of distinct real roots of p strictly inside the range.
/// Throws ZeroPolynomial for p = 0 and EndpointIsRoot when a finite
/// endpoint annihilates p.
int sturm_root_count(const RatPoly& p, const OpenRange& range);

/// Distinct roots of p in (0, ∞) and (−∞, 0); p(0) must be nonzero.
template <class F>
int count_positive_roots(const Poly<F>& squarefree) {
  SturmSequence<F> s(squarefree);
  return s.count_half_open(Rat(0), std::nullopt);
}
template <class F>
int count_negative_roots(const Poly<F>& squarefree) {
  SturmSequence<F> s(squarefree);
  return s.count_half_open(std::nullopt, Rat(0));
}

/// One isolated real root. `interval` either is a point equal to the root or
/// an open interval containing exactly one root of `sturm->base()`.
struct RealRoot {
  Interval interval;
  int multiplicity = 1;
  std::shared_ptr<const SturmSequence<Rat>> sturm;

  const RatPoly& factor() const { return sturm->base(); }
  bool is_exact() const { return interval.is_point(); }
};

/// Distinct real roots of p in ascending order, with multiplicities taken
/// from the squarefree decomposition.
std::vector<RealRoot> isolate_real_roots(const RatPoly& p);

/// Halves the isolating interval once (or pins the root exactly).
void bisect(RealRoot& root);

/// Bisects until the interval is a point or narrower than max_width.
RealRoot refine(RealRoot root, const Rat& max_width);

/// Exact floor of the root, refining `root` in place as far as needed.
Integer floor_of_root(RealRoot& root);

}  // namespace racg
