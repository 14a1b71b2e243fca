#include "racg/embedding.hpp"

#include "racg/cyclecheck.hpp"
#include "racg/liealg.hpp"
#include "racg/vinberg.hpp"
#include "racg/words.hpp"

namespace racg {

bool EmbeddingCertificate::all_passed() const {
  return alpha_bound_ok && signature_indefinite && relations_ok && orthogonality_ok && integrality_ok &&
         galois_product_unit && galois_conj_bounded && conj_form_positive_definite && trace_identity_ok &&
         density_ok && faithfulness.ok && cycle_example_ok.value_or(true);
}

int probe_length(int n) {
  if (n <= 5) return 8;
  if (n <= 7) return 6;
  return 4;
}

EmbeddingCertificate build_embedding_certificate(const CoxeterDiagram& g, std::int64_t m) {
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "the diagram is not connected");
  if (!is_squarefree(m)) throw Error(ErrorKind::NotSquarefree, std::to_string(m) + " is not a squarefree integer >= 2");

  EmbeddingCertificate c;
  c.diagram = g;
  c.m = m;
  const auto pencil = gram_pencil(g);
  const auto report = analyze_thresholds(pencil);
  c.epsilon = report.epsilon;
  c.rho_interval = report.rho_interval;
  c.D = report.D;
  c.signature = report.stable_signature;
  c.signature_indefinite = c.signature.p >= 1 && c.signature.q >= 1;

  const Rat D(static_cast<long>(c.D));
  const Rat bound = max(Rat(1) / c.epsilon, D);
  const UnitValue u = choose_unit(m, bound);
  c.pell = u.base;
  c.k = u.k;
  c.alpha = u.value;
  c.alpha_bound_ok = compare(u.value, bound) >= 0;

  const auto galois = galois_pair_check(u, c.epsilon);
  c.galois_product_unit = galois.product_is_unit;
  c.galois_conj_bounded = galois.conj_bounded;

  const auto at_d = verify_relations(reflection_generators(g, D));
  const auto gs_alpha = reflection_generators(g, u.value);
  const auto at_alpha = verify_relations(gs_alpha);
  c.relations_ok = at_d.involutions_ok && at_d.commutations_ok && at_alpha.involutions_ok && at_alpha.commutations_ok;
  c.orthogonality_ok = at_d.orthogonality_ok && at_alpha.orthogonality_ok;
  c.integrality_ok = generators_integral(gs_alpha);
  c.conj_form_positive_definite = compact_conjugate_check(g, u).ok();
  c.trace_identity_ok = verify_trace_identity(g).ok;

  const auto density = bracket_closure_density(g, D);
  c.density_trace = density.dimension_trace;
  SpanBasis<Rat> all_pairs(static_cast<std::size_t>(g.size() * g.size()));
  for (const auto& [e, x] : density.generators) all_pairs.insert(x.flatten());
  c.density_ok = density.ok() && all_pairs.dimension() == density.full_dimension;

  const int L = probe_length(g.size());
  c.faithfulness = {faithfulness_probe(g, D, L).ok, L, D};

  if (g.size() >= 5 && g == cycle_complement(g.size())) c.cycle_example_ok = verify_cycle_example(g.size()).ok();
  return c;
}

}  // namespace racg
