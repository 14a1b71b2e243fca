#pragma once

#include <vector>

#include "racg/diagram.hpp"
#include "racg/gram.hpp"
#include "racg/matrix.hpp"
#include "racg/units.hpp"

namespace racg {

/// R_i = I − 2·e_i·m_iᵀ where m_i is column i of the Gram matrix; works for
/// any entry ring with zero_like/one_like (Rat, QuadElem, RatPoly).
template <class T>
Matrix<T> reflection_matrix(const Matrix<T>& gram, int i) {
  const std::size_t n = gram.rows();
  const auto r = static_cast<std::size_t>(i);
  Matrix<T> m = Matrix<T>::identity(n, one_like(gram(0, 0)));
  for (std::size_t j = 0; j < n; ++j) m(r, j) = m(r, j) - gram(j, r) - gram(j, r);
  return m;
}

/// The images σ_t(γ_i) of the Coxeter generators at the point t.
template <class F>
struct GeneratorSet {
  CoxeterDiagram diagram;
  F t;
  Matrix<F> gram;                  // M_t
  std::vector<Matrix<F>> generators;

  int size() const { return diagram.size(); }
  const Matrix<F>& operator[](int i) const { return generators[static_cast<std::size_t>(i)]; }
};

template <class F>
GeneratorSet<F> reflection_generators(const CoxeterDiagram& g, const F& t) {
  GeneratorSet<F> gs{g, t, evaluate_pencil(gram_pencil(g), t), {}};
  for (int i = 0; i < g.size(); ++i) gs.generators.push_back(reflection_matrix(gs.gram, i));
  return gs;
}

struct RelationsReport {
  bool involutions_ok = true;    // R_i² = I
  bool commutations_ok = true;   // (R_iR_j)² = I for non-adjacent i ≠ j
  bool orthogonality_ok = true;  // R_iᵀ M_t R_i = M_t
  int pairs_checked = 0;

  bool ok() const { return involutions_ok && commutations_ok && orthogonality_ok; }
};

template <class F>
RelationsReport verify_relations(const GeneratorSet<F>& gs) {
  RelationsReport r;
  const int n = gs.size();
  const auto id = Matrix<F>::identity(static_cast<std::size_t>(n), one_like(gs.t));
  for (int i = 0; i < n; ++i) {
    const auto& R = gs[i];
    if (!(R * R == id)) r.involutions_ok = false;
    if (!(R.transpose() * gs.gram * R == gs.gram)) r.orthogonality_ok = false;
    for (int j = i + 1; j < n; ++j) {
      if (gs.diagram.adjacent(i, j)) continue;
      const auto P = R * gs[j];
      if (!(P * P == id)) r.commutations_ok = false;
      ++r.pairs_checked;
    }
  }
  return r;
}

/// Every generator entry lies in ℤ[√m] (resp. ℤ for rational t).
bool generators_integral(const GeneratorSet<QuadElem>& gs);
bool generators_integral(const GeneratorSet<Rat>& gs);

/// tr(R_iR_j) as a polynomial in d. Throws SameVertex when i = j.
RatPoly trace_polynomial(const CoxeterDiagram& g, int i, int j);

/// n − 4 + 4·M_ij² evaluated on the pencil: 4d² − 4 + n on edges, n − 4
/// otherwise.
RatPoly expected_trace_polynomial(const CoxeterDiagram& g, int i, int j);

struct TraceIdentityReport {
  bool ok = true;
  int pairs_checked = 0;
};

/// Checks trace_polynomial against the closed form for every pair, as an
/// identity in ℚ[d].
TraceIdentityReport verify_trace_identity(const CoxeterDiagram& g);

struct CompactConjugateReport {
  QuadElem conjugate_point;         // τ(α)
  bool preserves_form = false;      // τ(R_i)ᵀ M_τ(α) τ(R_i) = M_τ(α)
  bool positive_definite = false;   // M_τ(α) ≻ 0

  bool ok() const { return preserves_form && positive_definite; }
};

/// Applies √m ↦ −√m entrywise to the generators at α and checks that they
/// land in the compact group O(M_τ(α)).
CompactConjugateReport compact_conjugate_check(const CoxeterDiagram& g, const UnitValue& u);

QuadMatrix galois_conjugate(const QuadMatrix& m);

}  // namespace racg
