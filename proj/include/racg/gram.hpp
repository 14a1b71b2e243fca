#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "racg/diagram.hpp"
#include "racg/matrix.hpp"
#include "racg/roots.hpp"
#include "racg/spectral.hpp"

namespace racg {

/// The symmetric pencil M_d over ℚ[d]: 1 on the diagonal, −d on edges,
/// 0 on commuting pairs.
struct GramPencil {
  int n = 0;
  PolyMatrix entries;
};

GramPencil gram_pencil(const CoxeterDiagram& g);

RatMatrix evaluate_pencil(const GramPencil& p, const Rat& t);
QuadMatrix evaluate_pencil(const GramPencil& p, const QuadElem& t);

/// p_1, ..., p_n with p_k = det of the leading k×k block of M_d, computed
/// by fraction-free elimination over ℚ[d].
std::vector<RatPoly> leading_minor_polynomials(const GramPencil& p);

struct EpsilonThreshold {
  Rat epsilon;
  /// Contains ρ, the smallest |d| at which some leading minor vanishes.
  Interval rho_interval;
};

/// Certified rational ε ∈ [ρ_lo/2, ρ) with ε < 1 such that M_d is
/// positive-definite on [−ε, ε]. Throws NoEdges when no minor has a real
/// root and VerificationFailed if the final exact check fails.
EpsilonThreshold epsilon_threshold(const GramPencil& p);

struct DThreshold {
  std::int64_t D = 1;
  /// Isolating interval of the largest real root of det M_d, refined to lie
  /// below D; empty when det M_d has no real root.
  std::optional<Interval> largest_root_interval;
  /// Rational point strictly between the largest root and D where the Sturm
  /// certificate "no root of det M_d in (point, ∞)" was checked.
  Rat certified_from;
};

/// D = max(1, smallest integer strictly above every real root of det M_d).
DThreshold d_threshold(const GramPencil& p);

/// Signature of M_D; throws DegenerateAtD if M_D is singular.
Signature stable_signature(const GramPencil& p);
Signature stable_signature_at(const GramPencil& p, std::int64_t D);

struct ThresholdReport {
  Rat epsilon;
  Interval rho_interval;
  std::int64_t D = 1;
  std::optional<Interval> largest_root_interval;
  Signature stable_signature;
};

ThresholdReport analyze_thresholds(const GramPencil& p);

}  // namespace racg
