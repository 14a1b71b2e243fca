#include "racg/liealg.hpp"

#include "racg/gram.hpp"
#include "racg/roots.hpp"

namespace racg {

void normalize_generator(std::vector<Rat>& v) {
  Integer lcm_den = 1, gcd_num = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.num().get_mpz_t());
  }
  if (gcd_num == 0) throw Error(ErrorKind::InvalidArgument, "cannot normalize the zero vector");
  Rat scale{lcm_den, gcd_num};
  for (const auto& x : v)
    if (!x.is_zero()) {
      if (x.sign() < 0) scale = -scale;
      break;
    }
  for (auto& x : v) x = x * scale;
}

void normalize_generator(std::vector<QuadElem>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      const QuadElem inv = one_like(x) / x;
      for (auto& y : v) y = y * inv;
      return;
    }
  throw Error(ErrorKind::InvalidArgument, "cannot normalize the zero vector");
}

const char* to_string(PlaneClass c) {
  switch (c) {
    case PlaneClass::Elliptic: return "elliptic";
    case PlaneClass::Parabolic: return "parabolic";
    case PlaneClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

DensityCertificate bracket_closure_density(const CoxeterDiagram& g, const Rat& t, bool allow_below_threshold) {
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "density needs a connected diagram");
  const auto pencil = gram_pencil(g);
  const RatMatrix m = evaluate_pencil(pencil, t);
  const RatPoly det = determinant(pencil.entries);
  if (det.eval(t).is_zero()) throw Error(ErrorKind::DegenerateForm, "M_t is degenerate at t = " + t.str());

  DensityCertificate cert;
  cert.t = t;
  cert.below_threshold = sturm_root_count(det, OpenRange::above(t)) > 0;
  if (cert.below_threshold && !allow_below_threshold)
    throw Error(ErrorKind::BelowThreshold, "det M_d has a root above t = " + t.str());

  const std::size_t n = m.rows();
  cert.full_dimension = n * (n - 1) / 2;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) cert.generators.push_back({Edge{i, j}, planar_generator(m, i, j)});

  SpanBasis<Rat> span(n * n);
  std::vector<RatMatrix> basis;
  for (const auto& [e, x] : cert.generators) {
    if (!g.adjacent(e.a, e.b)) continue;
    cert.seeds.push_back(e);
    if (span.insert(x.flatten())) basis.push_back(x);
  }
  cert.dimension_trace.push_back(span.dimension());

  // Brackets between two members already present in the previous round were
  // computed then, so each round only pairs against the newest members.
  std::size_t done = 0;
  while (span.dimension() < cert.full_dimension) {
    const std::size_t size = basis.size();
    for (std::size_t b = std::max<std::size_t>(done, 1); b < size; ++b)
      for (std::size_t a = 0; a < b; ++a) {
        RatMatrix c = basis[a] * basis[b] - basis[b] * basis[a];
        if (span.insert(c.flatten())) basis.push_back(std::move(c));
      }
    done = size;
    if (basis.size() == size) break;
    cert.dimension_trace.push_back(span.dimension());
  }
  cert.final_dimension = span.dimension();
  cert.contains_all_generators = true;
  for (const auto& [e, x] : cert.generators)
    if (!span.contains(x.flatten())) cert.contains_all_generators = false;
  for (const auto& x : basis)
    if (!in_orthogonal_algebra(x, m)) throw Error(ErrorKind::VerificationFailed, "bracket left o(M_t)");
  return cert;
}

}  // namespace racg
