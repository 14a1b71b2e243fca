#pragma once

#include <utility>
#include <vector>

#include "racg/diagram.hpp"
#include "racg/matrix.hpp"
#include "racg/vinberg.hpp"

namespace racg {

/// Rescales a nonzero kernel vector to canonical form: over ℚ primitive
/// integers with the first nonzero entry positive; over ℚ(√m) first nonzero
/// entry equal to 1.
void normalize_generator(std::vector<Rat>& v);
void normalize_generator(std::vector<QuadElem>& v);

/// Checks AᵀM + MA = 0.
template <class F>
bool in_orthogonal_algebra(const Matrix<F>& a, const Matrix<F>& m) {
  const auto s = a.transpose() * m + m * a;
  for (const auto& x : s.data())
    if (!is_zero(x)) return false;
  return true;
}

/// Basis of E_ij, the M-orthogonal complement of ⟨e_i, e_j⟩.
template <class F>
std::vector<std::vector<F>> plane_complement(const Matrix<F>& m, int i, int j,
                                             const std::vector<std::size_t>& column_order = {}) {
  const std::size_t n = m.rows();
  std::vector<std::vector<F>> rows(2);
  for (std::size_t c = 0; c < n; ++c) {
    rows[0].push_back(m(static_cast<std::size_t>(i), c));
    rows[1].push_back(m(static_cast<std::size_t>(j), c));
  }
  return kernel_basis(std::move(rows), n, zero_like(m(0, 0)), column_order);
}

/// X_ij: spans the elements of 𝔬(M) that kill E_ij. `column_order` sets
/// the elimination order used for the basis of E_ij; the result does not
/// depend on it. Throws DegenerateForm, UnexpectedDimension, SameVertex.
template <class F>
Matrix<F> planar_generator(const Matrix<F>& m, int i, int j,
                           const std::vector<std::size_t>& column_order = {}) {
  if (!m.is_square() || !m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "planar_generator needs a symmetric matrix");
  const std::size_t n = m.rows();
  if (i == j) throw Error(ErrorKind::SameVertex, "planar_generator needs two distinct vertices");
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
    throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
  const F zero = zero_like(m(0, 0));
  if (is_zero(determinant(m))) throw Error(ErrorKind::DegenerateForm, "the form is degenerate");

  // A·v = 0 for v in E_ij acts on each row of A separately: every row lies
  // in the 2-dimensional annihilator {w1, w2} of E_ij. Write A = U·[w1 w2]ᵀ
  // and solve AᵀM + MA = 0 for the n×2 unknown U, at index 2a + s.
  const auto e = plane_complement(m, i, j, column_order);
  const auto w = kernel_basis(e, n, zero);
  if (w.size() != 2) throw Error(ErrorKind::UnexpectedDimension, "annihilator of E_ij is not 2-dimensional");
  std::vector<std::vector<F>> eqs;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      std::vector<F> row(2 * n, zero);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < 2; ++s)
          row[2 * r + s] = row[2 * r + s] + w[s][p] * m(r, q) + m(p, r) * w[s][q];
      eqs.push_back(std::move(row));
    }
  auto kernel = kernel_basis(std::move(eqs), 2 * n, zero);
  if (kernel.size() != 1)
    throw Error(ErrorKind::UnexpectedDimension,
                "solution space has dimension " + std::to_string(kernel.size()) + ", expected 1");
  std::vector<F> flat(n * n, zero);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] = kernel.front()[2 * a] * w[0][b] + kernel.front()[2 * a + 1] * w[1][b];
  kernel.front() = std::move(flat);
  normalize_generator(kernel.front());
  Matrix<F> x(n, n, zero);
  for (std::size_t k = 0; k < n * n; ++k) x(k / n, k % n) = kernel.front()[k];
  if (!in_orthogonal_algebra(x, m)) throw Error(ErrorKind::VerificationFailed, "X_ij is not in o(M)");
  for (const auto& v : e)
    for (const auto& y : racg::apply(x, v))
      if (!is_zero(y)) throw Error(ErrorKind::VerificationFailed, "X_ij does not kill E_ij");
  return x;
}

/// Incrementally maintained echelon basis of a span of vectors.
template <class F>
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t length) : length_(length) {}

  std::size_t dimension() const { return rows_.size(); }

  /// Adds v if it is independent of the current span; reports whether it was.
  bool insert(std::vector<F> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < length_ && is_zero(v[p])) ++p;
    if (p == length_) return false;
    const F inv = one_like(v[p]) / v[p];
    for (auto& x : v) x = x * inv;
    rows_.push_back({p, std::move(v)});
    return true;
  }

  bool contains(std::vector<F> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  void reduce(std::vector<F>& v) const {
    for (const auto& [pivot, row] : rows_) {
      if (is_zero(v[pivot])) continue;
      const F f = v[pivot];
      for (std::size_t k = pivot; k < length_; ++k) v[k] = v[k] - f * row[k];
    }
  }

  std::size_t length_;
  std::vector<std::pair<std::size_t, std::vector<F>>> rows_;
};

struct FullBasisReport {
  std::size_t rank = 0;
  std::size_t expected = 0;
  bool ok() const { return rank == expected; }
};

/// Rank of {X_ij : i < j} after flattening; full means n(n−1)/2.
template <class F>
FullBasisReport full_basis_check(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  SpanBasis<F> span(n * n);
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j) span.insert(planar_generator(m, i, j).flatten());
  return {span.dimension(), n * (n - 1) / 2};
}

struct DensityCertificate {
  Rat t;
  std::vector<std::pair<Edge, RatMatrix>> generators;   // every X_ij, i < j
  std::vector<Edge> seeds;                              // edges of the diagram
  std::vector<std::size_t> dimension_trace;             // after each round
  std::size_t final_dimension = 0;
  std::size_t full_dimension = 0;
  bool contains_all_generators = false;
  bool below_threshold = false;   // t was not certified above every root of det M_d

  bool ok() const { return final_dimension == full_dimension && contains_all_generators; }
};

/// Closes the span of {X_e : e an edge} under commutators. Requires a
/// connected diagram (Disconnected) and a point t with no root of det M_d in
/// [t, ∞) (BelowThreshold) unless `allow_below_threshold`; M_t must be
/// nondegenerate either way (DegenerateForm).
DensityCertificate bracket_closure_density(const CoxeterDiagram& g, const Rat& t,
                                           bool allow_below_threshold = false);

enum class PlaneClass { Elliptic, Parabolic, Hyperbolic };
const char* to_string(PlaneClass c);

template <class F>
struct HyperbolicPlaneReport {
  bool fixes_complement = false;   // R_iR_j v = v for v in E_ij
  F block_trace;                   // trace of R_iR_j on ⟨e_i, e_j⟩
  bool trace_matches = false;      // block_trace = 4t² − 2
  PlaneClass kind = PlaneClass::Elliptic;

  bool ok() const { return fixes_complement && trace_matches && kind == PlaneClass::Hyperbolic; }
};

/// Throws NotAnEdge unless {i, j} is an edge.
template <class F>
HyperbolicPlaneReport<F> hyperbolic_plane_check(const GeneratorSet<F>& gs, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= gs.size() || j >= gs.size() || !gs.diagram.adjacent(i, j))
    throw Error(ErrorKind::NotAnEdge, "hyperbolic_plane_check needs an edge");
  const auto p = gs[i] * gs[j];
  const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
  HyperbolicPlaneReport<F> r{true, p(si, si) + p(sj, sj), false, PlaneClass::Elliptic};
  for (const auto& v : plane_complement(gs.gram, i, j))
    if (!(racg::apply(p, v) == v)) r.fixes_complement = false;
  r.trace_matches = r.block_trace == gs.t * gs.t * Rat(4) - one_like(gs.t) * Rat(2);
  const int s = sign_of(r.block_trace - one_like(gs.t) * Rat(2));
  r.kind = s > 0 ? PlaneClass::Hyperbolic : s == 0 ? PlaneClass::Parabolic : PlaneClass::Elliptic;
  return r;
}

}  // namespace racg
