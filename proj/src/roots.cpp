#include "racg/roots.hpp"

#include <algorithm>

namespace racg {

int sturm_root_count(const RatPoly& p, const OpenRange& range) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  for (const auto* end : {&range.lo, &range.hi}) {
    if (*end && p.eval(**end).is_zero()) {
      throw Error(ErrorKind::EndpointIsRoot, "endpoint " + (*end)->str() + " is a root");
    }
  }
  if (range.lo && range.hi && !(*range.lo < *range.hi)) return 0;
  if (p.degree() == 0) return 0;
  SturmSequence<Rat> s(squarefree_part(p));
  return s.count_half_open(range.lo, range.hi);
}

namespace {

/// Cauchy bound: every root of the monic polynomial has |r| < bound.
Rat cauchy_bound(const RatPoly& monic) {
  Rat m(0);
  for (int i = 0; i < monic.degree(); ++i) m = max(m, monic[i].abs());
  return Rat(1) + m;
}

void isolate_squarefree(const std::shared_ptr<const SturmSequence<Rat>>& s, int multiplicity,
                        std::vector<RealRoot>& out) {
  const RatPoly& f = s->base();
  if (f.degree() <= 0) return;
  const Rat bound = cauchy_bound(f);
  struct Pending {
    Rat lo, hi;
    int count;
  };
  std::vector<Pending> work;
  const int total = s->count_half_open(-bound, bound);
  work.push_back({-bound, bound, total});
  while (!work.empty()) {
    Pending cur = std::move(work.back());
    work.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back({{cur.lo, cur.hi}, multiplicity, s});
      continue;
    }
    const Rat mid = (cur.lo + cur.hi) / Rat(2);
    const int left = s->count_half_open(cur.lo, mid);
    if (f.eval(mid).is_zero()) {
      out.push_back({{mid, mid}, multiplicity, s});
      work.push_back({cur.lo, mid, left - 1});
    } else {
      work.push_back({cur.lo, mid, left});
    }
    work.push_back({mid, cur.hi, cur.count - left});
  }
}

}  // namespace

std::vector<RealRoot> isolate_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root isolation of the zero polynomial");
  std::vector<RealRoot> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    isolate_squarefree(std::make_shared<const SturmSequence<Rat>>(factor), mult, roots);
  }
  // Factors are coprime, so intervals of different factors may still
  // overlap; sort on a point of each interval after separating them.
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(roots.begin(), roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.interval.lo < b.interval.lo; });
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      auto& a = roots[i];
      auto& b = roots[i + 1];
      const bool overlap = a.is_exact() && b.is_exact() ? false : !(a.interval.hi <= b.interval.lo);
      if (overlap) {
        if (!a.is_exact()) bisect(a);
        if (!b.is_exact()) bisect(b);
        changed = true;
      }
    }
  }
  return roots;
}

void bisect(RealRoot& root) {
  if (root.is_exact()) return;
  auto& iv = root.interval;
  const Rat mid = iv.midpoint();
  if (root.factor().eval(mid).is_zero()) {
    iv = {mid, mid};
  } else if (root.sturm->count_half_open(iv.lo, mid) >= 1) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
}

RealRoot refine(RealRoot root, const Rat& max_width) {
  while (!root.is_exact() && !(root.interval.width() < max_width)) bisect(root);
  return root;
}

Integer floor_of_root(RealRoot& root) {
  for (;;) {
    auto& iv = root.interval;
    if (iv.is_point()) return iv.lo.floor();
    const Integer fl = iv.lo.floor();
    if (iv.hi <= Rat(Integer(fl + 1))) return fl;
    if (iv.width() < Rat(1)) {
      // Exactly one integer c lies in (lo, hi); split there.
      const Rat c{Integer(fl + 1)};
      if (root.factor().eval(c).is_zero()) {
        iv = {c, c};
      } else if (root.sturm->count_half_open(iv.lo, c) >= 1) {
        iv.hi = c;
      } else {
        iv.lo = c;
      }
    } else {
      bisect(root);
    }
  }
}

}  // namespace racg
