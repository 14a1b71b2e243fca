#include "racg/gram.hpp"

#include <algorithm>

namespace racg {

GramPencil gram_pencil(const CoxeterDiagram& g) {
  const int n = g.size();
  PolyMatrix m(n, n, RatPoly());
  const RatPoly minus_d = rat_poly({0, -1});
  for (int i = 0; i < n; ++i) {
    m(i, i) = RatPoly(Rat(1));
    for (int j = 0; j < n; ++j)
      if (i != j && g.adjacent(i, j)) m(i, j) = minus_d;
  }
  return {n, std::move(m)};
}

RatMatrix evaluate_pencil(const GramPencil& p, const Rat& t) {
  return p.entries.map([&](const RatPoly& e) { return e.eval(t); });
}

QuadMatrix evaluate_pencil(const GramPencil& p, const QuadElem& t) {
  return p.entries.map([&](const RatPoly& e) { return e.is_zero() ? zero_like(t) : e.eval(t); });
}

std::vector<RatPoly> leading_minor_polynomials(const GramPencil& p) {
  return leading_principal_minors(p.entries);
}

namespace {

/// A root of some leading minor together with which side of 0 it sits on.
struct SignedRoot {
  RealRoot root;
  bool negative;

  Rat abs_lo() const { return negative ? -root.interval.hi : root.interval.lo; }
  Rat abs_hi() const { return negative ? -root.interval.lo : root.interval.hi; }
};

}  // namespace

EpsilonThreshold epsilon_threshold(const GramPencil& p) {
  const auto minors = leading_minor_polynomials(p);
  std::vector<SignedRoot> candidates;
  for (const auto& minor : minors) {
    if (minor.eval(Rat(0)) != Rat(1)) throw Error(ErrorKind::VerificationFailed, "leading minor at d = 0 is not 1");
    if (minor.degree() <= 0) continue;
    for (RealRoot r : isolate_real_roots(minor)) {
      while (!r.is_exact() && r.interval.lo.sign() < 0 && r.interval.hi.sign() > 0) bisect(r);
      const bool negative = r.interval.hi.sign() <= 0 && r.interval.lo.sign() < 0;
      candidates.push_back({std::move(r), negative});
    }
  }
  if (candidates.empty()) throw Error(ErrorKind::NoEdges, "M_d is positive-definite for every d");

  Rat lo, hi;
  for (;;) {
    lo = candidates.front().abs_lo();
    hi = candidates.front().abs_hi();
    for (const auto& c : candidates) {
      lo = min(lo, c.abs_lo());
      hi = min(hi, c.abs_hi());
    }
    if (lo.sign() > 0 && hi - lo < lo / Rat(1024)) break;
    for (auto& c : candidates)
      if (!c.root.is_exact() && c.abs_lo() < hi) bisect(c.root);
  }

  // lo == hi only when ρ itself was pinned as an exact rational root.
  Rat epsilon = lo == hi ? lo * Rat(1023, 1024) : lo;
  if (epsilon >= Rat(1)) epsilon = Rat(1023, 1024);

  const bool ok = epsilon.sign() > 0 && epsilon < Rat(1) && epsilon >= lo / Rat(2) &&
                  is_positive_definite(evaluate_pencil(p, epsilon)) &&
                  is_positive_definite(evaluate_pencil(p, -epsilon));
  if (!ok) throw Error(ErrorKind::VerificationFailed, "M at +/-epsilon is not positive-definite");
  return {epsilon, {lo, hi}};
}

DThreshold d_threshold(const GramPencil& p) {
  const RatPoly det = leading_minor_polynomials(p).back();
  auto roots = isolate_real_roots(det);
  DThreshold out;
  if (roots.empty()) {
    out.D = 1;
    out.certified_from = Rat(1, 2);
  } else {
    RealRoot& largest = roots.back();
    const Integer above = floor_of_root(largest) + 1;
    out.D = std::max<std::int64_t>(1, above.get_si());
    const Rat d(out.D);
    while (!largest.is_exact() && !(largest.interval.hi < d)) bisect(largest);
    out.largest_root_interval = largest.interval;
    out.certified_from = (largest.interval.hi + d) / Rat(2);
  }
  if (sturm_root_count(det, OpenRange::above(out.certified_from)) != 0) {
    throw Error(ErrorKind::VerificationFailed, "det M_d has a root above the certified point");
  }
  return out;
}

Signature stable_signature_at(const GramPencil& p, std::int64_t D) {
  const Signature s = signature_of(evaluate_pencil(p, Rat(static_cast<long>(D))));
  if (s.z != 0) throw Error(ErrorKind::DegenerateAtD, "M_D is singular at D = " + std::to_string(D));
  return s;
}

Signature stable_signature(const GramPencil& p) { return stable_signature_at(p, d_threshold(p).D); }

ThresholdReport analyze_thresholds(const GramPencil& p) {
  const auto eps = epsilon_threshold(p);
  const auto dt = d_threshold(p);
  return {eps.epsilon, eps.rho_interval, dt.D, dt.largest_root_interval, stable_signature_at(p, dt.D)};
}

}  // namespace racg
