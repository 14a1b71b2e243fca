#pragma once

#include <ostream>

#include "racg/matrix.hpp"
#include "racg/poly.hpp"

namespace racg {

/// Inertia (p, q, z) of a symmetric matrix: positive, negative and zero
/// eigenvalue counts, with multiplicity.
struct Signature {
  int p = 0;
  int q = 0;
  int z = 0;

  int dimension() const { return p + q + z; }
  friend bool operator==(const Signature&, const Signature&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Signature& s) {
    return os << "(" << s.p << ", " << s.q << ", " << s.z << ")";
  }
};

/// det(xI − M) by the Faddeev–LeVerrier recurrence; exact over ℚ and ℚ(√m).
/// Throws MixedRadicands when QuadElem entries disagree on the radicand.
template <class F>
Poly<F> char_poly(const Matrix<F>& m);

/// Exact inertia: z from the multiplicity of the root 0, p from Sturm counts
/// on (0, ∞) of every squarefree factor, q = n − p − z.
template <class F>
Signature signature_of(const Matrix<F>& m);

extern template Poly<Rat> char_poly(const Matrix<Rat>&);
extern template Poly<QuadElem> char_poly(const Matrix<QuadElem>&);
extern template Signature signature_of(const Matrix<Rat>&);
extern template Signature signature_of(const Matrix<QuadElem>&);

}  // namespace racg
