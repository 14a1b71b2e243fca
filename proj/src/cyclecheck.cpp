#include "racg/cyclecheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "racg/gram.hpp"
#include "racg/roots.hpp"

namespace racg {

namespace {

void require_n(int n) {
  if (n < 5) throw Error(ErrorKind::NTooSmall, "cycle example needs n >= 5, got " + std::to_string(n));
}

/// (1 + d)I + d(J + J^{n−1}) − d·(all-ones), J the cyclic shift.
PolyMatrix circulant_form(int n) {
  const auto sn = static_cast<std::size_t>(n);
  const RatPoly d = rat_poly({0, 1});
  PolyMatrix shift(sn, sn, RatPoly());
  for (std::size_t i = 0; i < sn; ++i) shift(i, (i + 1) % sn) = RatPoly(Rat(1));
  PolyMatrix shift_back = shift.transpose();
  PolyMatrix ones(sn, sn, RatPoly(Rat(1)));
  const auto id = PolyMatrix::identity(sn, RatPoly(Rat(1)));
  return id * (RatPoly(Rat(1)) + d) + (shift + shift_back) * d - ones * d;
}

}  // namespace

std::vector<double> SpectrumPrediction::sorted_values() const {
  std::vector<double> v{special.to_double()};
  for (const auto& f : family) v.push_back(f.value);
  std::sort(v.begin(), v.end());
  return v;
}

SpectrumPrediction predicted_spectrum(int n, const Rat& t) {
  require_n(n);
  SpectrumPrediction s{n, t, Rat(1) - t * Rat(n - 3), {}};
  const double td = t.to_double();
  for (int k = 1; k < n; ++k) {
    const double c = std::cos(2.0 * std::numbers::pi * k / n);
    s.family.push_back({k, n, 1.0 + td * (1.0 + 2.0 * c)});
  }
  return s;
}

Rat cosine_sum(int n) {
  require_n(n);
  const RatPoly roots_of_unity = RatPoly::monomial(Rat(1), n) - RatPoly(Rat(1));
  // sum of all roots = −a_{n−1}/a_n; the root 1 (k = 0) is removed
  const Rat all = -roots_of_unity.coeff_or(static_cast<std::size_t>(n - 1), Rat(0)) / roots_of_unity.leading();
  return all - Rat(1);
}

CycleReport verify_cycle_example(int n) {
  require_n(n);
  const auto g = cycle_complement(n);
  const auto pencil = gram_pencil(g);
  CycleReport r;
  r.n = n;
  r.D = d_threshold(pencil).D;
  const int m3 = n / 3;
  r.expected = {2 * m3, n - 2 * m3, 0};
  r.stable = stable_signature_at(pencil, r.D);
  r.signature_ok = r.stable == r.expected;

  r.circulant_identity_ok = circulant_form(n) == pencil.entries;

  // special + Σ_k (1 + d + 2d·cos_k) as a polynomial in d
  const Rat cos_sum = cosine_sum(n);
  const RatPoly predicted_trace =
      rat_poly({1, 3 - n}) + rat_poly({n - 1, n - 1}) + rat_poly({0, 2}) * RatPoly(cos_sum);
  r.trace_sum_ok = predicted_trace == pencil.entries.trace();

  r.sample_t = Rat(static_cast<long>(r.D + 1));
  const auto prediction = predicted_spectrum(n, r.sample_t);
  const RatMatrix m = evaluate_pencil(pencil, r.sample_t);
  std::vector<double> roots;
  const Rat width(Integer(1), Integer("1000000000000"));
  for (const auto& root : isolate_real_roots(char_poly(m))) {
    const auto fine = refine(root, width);
    for (int k = 0; k < root.multiplicity; ++k) roots.push_back(fine.interval.midpoint().to_double());
  }
  std::sort(roots.begin(), roots.end());
  const auto predicted = prediction.sorted_values();
  r.spectrum_ok = roots.size() == predicted.size();
  for (std::size_t k = 0; r.spectrum_ok && k < roots.size(); ++k)
    r.max_eigenvalue_error = std::max(r.max_eigenvalue_error, std::abs(roots[k] - predicted[k]));
  r.spectrum_ok = r.spectrum_ok && r.max_eigenvalue_error <= 1e-9;

  double product = 1.0;
  for (double v : predicted) product *= v;
  const double det = determinant(m).to_double();
  r.product_relative_error = std::abs(product - det) / std::abs(det);
  r.product_ok = r.product_relative_error <= 1e-6;

  r.predicted_positive = static_cast<int>(std::count_if(predicted.begin(), predicted.end(), [](double v) { return v > 0; }));
  r.positive_count_ok = r.predicted_positive == r.stable.p;
  return r;
}

}  // namespace racg
