#include "racg/units.hpp"

#include "racg/error.hpp"

namespace racg {

PellSolution fundamental_pell(std::int64_t m) {
  if (!is_squarefree(m)) {
    throw Error(ErrorKind::NotSquarefree, std::to_string(m) + " is not a squarefree integer >= 2");
  }
  const Integer mm(static_cast<long>(m));
  const Integer a0 = sqrt(mm);
  // Convergents p/q of the continued fraction of √m; the first one with
  // p² − m·q² = ±1 is the fundamental solution.
  Integer p_prev = 1, p = a0;
  Integer q_prev = 0, q = 1;
  Integer shift = 0, denom = 1, a = a0;
  for (;;) {
    const Integer value = p * p - mm * q * q;
    if (value == 1 || value == -1) return {p, q, m, value == 1 ? 1 : -1};
    shift = denom * a - shift;
    denom = (mm - shift * shift) / denom;
    a = (a0 + shift) / denom;
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
}

UnitValue unit_power(const PellSolution& base, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative unit exponent");
  const QuadElem u = base.as_unit();
  QuadElem v = u.lift(Rat(1));
  for (int i = 0; i < k; ++i) v *= u;
  return {v, k, base};
}

UnitValue choose_unit(std::int64_t m, const Rat& bound) {
  if (bound.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "unit bound must be positive");
  const PellSolution base = fundamental_pell(m);
  const QuadElem u = base.as_unit();
  QuadElem v = u;
  int k = 1;
  while (compare(v, bound) < 0) {
    v *= u;
    ++k;
  }
  return {v, k, base};
}

GaloisReport galois_pair_report(const QuadElem& alpha, const Rat& epsilon) {
  GaloisReport r{alpha, alpha.conj(), alpha * alpha.conj(), false, false};
  const QuadElem one = alpha.lift(Rat(1));
  r.product_is_unit = r.product == one || r.product == -one;
  r.conj_bounded = compare(r.conjugate, epsilon) <= 0 && compare(-r.conjugate, epsilon) <= 0;
  return r;
}

GaloisReport galois_pair_check(const UnitValue& u, const Rat& epsilon) {
  GaloisReport r = galois_pair_report(u.value, epsilon);
  if (!r.conj_bounded) {
    throw Error(ErrorKind::InequalityFailed, "|tau(alpha)| = |" + r.conjugate.str() + "| exceeds epsilon " + epsilon.str());
  }
  return r;
}

}  // namespace racg
