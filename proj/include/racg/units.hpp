#pragma once

#include <cstdint>

#include "racg/quad.hpp"
#include "racg/rational.hpp"

namespace racg {

/// x² − m·y² = norm with x, y ≥ 1 and norm = ±1.
struct PellSolution {
  Integer x;
  Integer y;
  std::int64_t m = 2;
  int norm = 1;

  QuadElem as_unit() const { return QuadElem(Rat(x), Rat(y), m); }
};

/// α = (x + y√m)^k.
struct UnitValue {
  QuadElem value;
  int k = 1;
  PellSolution base;
};

/// Minimal solution (smallest y) of x² − m·y² = ±1 from the continued
/// fraction of √m. Throws NotSquarefree.
PellSolution fundamental_pell(std::int64_t m);

/// base^k for any k ≥ 0; k = 0 yields 1, which is not a valid choice of α
/// but is useful for probing the checks.
UnitValue unit_power(const PellSolution& base, int k);

/// Smallest k ≥ 1 with (x + y√m)^k ≥ bound, compared exactly.
UnitValue choose_unit(std::int64_t m, const Rat& bound);

struct GaloisReport {
  QuadElem alpha;
  QuadElem conjugate;   // τ(α)
  QuadElem product;     // α·τ(α)
  bool product_is_unit = false;   // α·τ(α) = ±1
  bool conj_bounded = false;      // |τ(α)| ≤ ε
};

/// Exact checks of α·τ(α) = ±1 and |τ(α)| ≤ ε. Throws InequalityFailed when
/// the bound fails, which means the unit was chosen below 1/ε.
GaloisReport galois_pair_check(const UnitValue& u, const Rat& epsilon);

/// Same checks without throwing, for auditing externally supplied values.
GaloisReport galois_pair_report(const QuadElem& alpha, const Rat& epsilon);

}  // namespace racg
