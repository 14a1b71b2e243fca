#pragma once

#include <cstdint>
#include <vector>

#include "racg/rational.hpp"
#include "racg/spectral.hpp"

namespace racg {

/// Eigenvalue 1 + t(1 + 2cos(2πk/n)), kept symbolically as (k, n).
struct FamilyEigenvalue {
  int k = 1;
  int n = 5;
  double value = 0.0;   // reporting only
};

struct SpectrumPrediction {
  int n = 5;
  Rat t;
  Rat special;   // 1 − t(n − 3)
  std::vector<FamilyEigenvalue> family;   // k = 1..n−1

  /// All n values as doubles, ascending.
  std::vector<double> sorted_values() const;
};

/// Closed-form spectrum of M_t for the complement of the n-cycle. Throws
/// NTooSmall for n < 5.
SpectrumPrediction predicted_spectrum(int n, const Rat& t);

/// The sum of cos(2πk/n) over k = 1..n−1, obtained exactly from the
/// coefficients of xⁿ − 1 (the n-th roots of unity sum to zero).
Rat cosine_sum(int n);

struct CycleReport {
  int n = 5;
  std::int64_t D = 1;
  Signature expected;
  Signature stable;
  bool signature_ok = false;

  bool circulant_identity_ok = false;   // exact, over ℚ[d]
  bool trace_sum_ok = false;            // exact, over ℚ[d]

  // Numeric checks at t = D + 1 (not exact).
  Rat sample_t;
  double max_eigenvalue_error = 0.0;
  bool spectrum_ok = false;             // within 1e-9
  double product_relative_error = 0.0;
  bool product_ok = false;              // within 1e-6
  int predicted_positive = 0;
  bool positive_count_ok = false;

  bool ok() const {
    return signature_ok && circulant_identity_ok && trace_sum_ok && spectrum_ok && product_ok && positive_count_ok;
  }
};

/// Checks the signature formula (2⌊n/3⌋, n − 2⌊n/3⌋) and the predicted
/// spectrum for cycle_complement(n). Throws NTooSmall.
CycleReport verify_cycle_example(int n);

}  // namespace racg
