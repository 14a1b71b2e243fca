#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "racg/diagram.hpp"
#include "racg/gram.hpp"
#include "racg/units.hpp"

namespace racg {

struct ProbeSummary {
  bool ok = false;
  int L = 0;
  Rat t;
};

/// Everything checked for one (diagram, m): thresholds, the chosen unit α and
/// the verdict of each exact check. Serialization lives in the cli module.
struct EmbeddingCertificate {
  CoxeterDiagram diagram{3, {}};
  std::int64_t m = 2;
  PellSolution pell;
  int k = 1;
  QuadElem alpha{Rat(1), Rat(0), 2};
  Rat epsilon;
  Interval rho_interval;
  std::int64_t D = 1;
  Signature signature;

  bool alpha_bound_ok = false;                 // α ≥ max{1/ε, D}
  bool signature_indefinite = false;           // p ≥ 1 and q ≥ 1
  bool relations_ok = false;                   // at D and at α
  bool orthogonality_ok = false;               // at D and at α
  bool integrality_ok = false;                 // entries at α in ℤ[√m]
  bool galois_product_unit = false;            // α·τ(α) = ±1
  bool galois_conj_bounded = false;            // |τ(α)| ≤ ε
  bool conj_form_positive_definite = false;    // M_τ(α) ≻ 0 and preserved
  bool trace_identity_ok = false;              // as identities in ℚ[d]
  bool density_ok = false;                     // closure and all-pairs rank at D
  std::vector<std::size_t> density_trace;
  ProbeSummary faithfulness;
  std::optional<bool> cycle_example_ok;        // only for cycle complements

  bool all_passed() const;
};

/// Word length used by the faithfulness probe for n generators.
int probe_length(int n);

/// Runs the whole chain for a connected diagram. Throws Disconnected,
/// NotSquarefree and any internal verification error.
EmbeddingCertificate build_embedding_certificate(const CoxeterDiagram& g, std::int64_t m);

}  // namespace racg
