#include "racg/spectral.hpp"

#include "racg/roots.hpp"

namespace racg {

template <class F>
Poly<F> char_poly(const Matrix<F>& m) {
  if (!m.is_square() || m.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "char_poly needs a square matrix");
  require_single_field(m);
  const std::size_t n = m.rows();
  const F one = one_like(m(0, 0));
  const Matrix<F> id = Matrix<F>::identity(n, one);
  std::vector<F> c(n + 1, zero_like(one));
  c[n] = one;
  Matrix<F> mk = id;
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix<F> am = m * mk;
    c[n - k] = -(am.trace() / Rat(static_cast<long>(k)));
    mk = am + id * c[n - k];
  }
  return Poly<F>(std::move(c));
}

template <class F>
Signature signature_of(const Matrix<F>& m) {
  require_single_field(m);
  if (!m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "signature of a non-symmetric matrix");
  const int n = static_cast<int>(m.rows());
  const Poly<F> cp = char_poly(m);
  Signature sig;
  while (racg::is_zero(cp[static_cast<std::size_t>(sig.z)])) ++sig.z;
  const std::vector<F> shifted(cp.coeffs().begin() + sig.z, cp.coeffs().end());
  const Poly<F> rest(shifted);
  int negative = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(rest)) {
    sig.p += mult * count_positive_roots(factor);
    negative += mult * count_negative_roots(factor);
  }
  sig.q = n - sig.p - sig.z;
  if (negative != sig.q) {
    throw Error(ErrorKind::VerificationFailed, "characteristic polynomial has non-real roots");
  }
  return sig;
}

template Poly<Rat> char_poly(const Matrix<Rat>&);
template Poly<QuadElem> char_poly(const Matrix<QuadElem>&);
template Signature signature_of(const Matrix<Rat>&);
template Signature signature_of(const Matrix<QuadElem>&);

}  // namespace racg
