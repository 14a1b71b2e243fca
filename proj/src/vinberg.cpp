#include "racg/vinberg.hpp"

namespace racg {

bool generators_integral(const GeneratorSet<QuadElem>& gs) {
  for (const auto& R : gs.generators)
    for (const auto& x : R.data())
      if (!x.in_integer_order()) return false;
  return true;
}

bool generators_integral(const GeneratorSet<Rat>& gs) {
  for (const auto& R : gs.generators)
    for (const auto& x : R.data())
      if (!x.is_integer()) return false;
  return true;
}

RatPoly trace_polynomial(const CoxeterDiagram& g, int i, int j) {
  if (i == j) throw Error(ErrorKind::SameVertex, "trace_polynomial needs two distinct vertices");
  if (i < 0 || j < 0 || i >= g.size() || j >= g.size())
    throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
  const auto pencil = gram_pencil(g);
  return (reflection_matrix(pencil.entries, i) * reflection_matrix(pencil.entries, j)).trace();
}

RatPoly expected_trace_polynomial(const CoxeterDiagram& g, int i, int j) {
  const auto pencil = gram_pencil(g);
  const RatPoly& mij = pencil.entries(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return RatPoly(Rat(g.size() - 4)) + mij * mij * Rat(4);
}

TraceIdentityReport verify_trace_identity(const CoxeterDiagram& g) {
  TraceIdentityReport r;
  const RatPoly edge_form = rat_poly({g.size() - 4, 0, 4});
  const RatPoly non_edge_form = rat_poly({g.size() - 4});
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) {
      const RatPoly tr = trace_polynomial(g, i, j);
      if (!(tr - expected_trace_polynomial(g, i, j)).is_zero()) r.ok = false;
      if (!(tr == (g.adjacent(i, j) ? edge_form : non_edge_form))) r.ok = false;
      ++r.pairs_checked;
    }
  return r;
}

QuadMatrix galois_conjugate(const QuadMatrix& m) {
  return m.map([](const QuadElem& x) { return x.conj(); });
}

CompactConjugateReport compact_conjugate_check(const CoxeterDiagram& g, const UnitValue& u) {
  const auto gs = reflection_generators(g, u.value);
  const QuadElem tau = u.value.conj();
  const QuadMatrix gram_tau = evaluate_pencil(gram_pencil(g), tau);
  CompactConjugateReport r{tau, true, is_positive_definite(gram_tau)};
  for (const auto& R : gs.generators) {
    const QuadMatrix C = galois_conjugate(R);
    if (!(C.transpose() * gram_tau * C == gram_tau)) r.preserves_form = false;
  }
  return r;
}

}  // namespace racg
