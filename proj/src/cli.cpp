#include "racg/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "racg/cyclecheck.hpp"
#include "racg/liealg.hpp"
#include "racg/words.hpp"

namespace racg {

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

/// Bad input that is not an Error from the library (files, JSON fields).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoxeterDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }

std::string interval_str(const Interval& i) { return "[" + i.lo.str() + ", " + i.hi.str() + "]"; }

std::string join(const std::vector<std::size_t>& v, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

json certificate_to_json(const EmbeddingCertificate& c) {
  json edges = json::array();
  for (const auto& e : c.diagram.edges()) edges.push_back({e.a + 1, e.b + 1});
  json verdicts = {
      {"alpha_bound_ok", c.alpha_bound_ok},
      {"signature_indefinite", c.signature_indefinite},
      {"relations_ok", c.relations_ok},
      {"orthogonality_ok", c.orthogonality_ok},
      {"integrality_ok", c.integrality_ok},
      {"galois_product_unit", c.galois_product_unit},
      {"galois_conj_bounded", c.galois_conj_bounded},
      {"conj_form_positive_definite", c.conj_form_positive_definite},
      {"trace_identity_ok", c.trace_identity_ok},
      {"density_ok", c.density_ok},
      {"faithfulness_probe", {{"ok", c.faithfulness.ok}, {"L", c.faithfulness.L}, {"t", c.faithfulness.t.str()}}},
  };
  if (c.cycle_example_ok) verdicts["cycle_example_ok"] = *c.cycle_example_ok;
  return {
      {"tool_version", kToolVersion},
      {"diagram", {{"n", c.diagram.size()}, {"edges", edges}}},
      {"m", c.m},
      {"pell", {{"x", c.pell.x.get_str()}, {"y", c.pell.y.get_str()}, {"norm", c.pell.norm}}},
      {"k", c.k},
      {"alpha", {{"a", c.alpha.a().str()}, {"b", c.alpha.b().str()}}},
      {"epsilon", c.epsilon.fraction_str()},
      {"rho_interval", {c.rho_interval.lo.fraction_str(), c.rho_interval.hi.fraction_str()}},
      {"D", c.D},
      {"signature", {{"p", c.signature.p}, {"q", c.signature.q}}},
      {"density_trace", c.density_trace},
      {"verdicts", verdicts},
      {"all_passed", c.all_passed()},
      {"notes",
       {{"trace_identity", "checked as an identity in Q[d], which contains the statement for d >= D"},
        {"lattice", "arithmeticity and cocompactness of O(M_alpha; Z[sqrt m]) are cited, not verified"},
        {"faithfulness", "finite probe at t = D up to word length L, not a proof"}}},
  };
}

/// Recomputes the unit conditions from the values stated in a certificate.
bool recheck_stated_unit(const json& cert, const CoxeterDiagram& g, std::ostream& err) {
  const std::int64_t m = cert.at("m").get<std::int64_t>();
  const QuadElem alpha(Rat::parse(cert.at("alpha").at("a").get<std::string>()),
                       Rat::parse(cert.at("alpha").at("b").get<std::string>()), m);
  const Rat eps = Rat::parse(cert.at("epsilon").get<std::string>());
  const Rat D(static_cast<long>(cert.at("D").get<std::int64_t>()));
  if (eps.sign() <= 0) throw InputError("certificate epsilon must be positive");
  const auto r = galois_pair_report(alpha, eps);
  bool ok = true;
  auto require = [&](bool cond, const char* what) {
    if (!cond) {
      err << "stated alpha fails: " << what << "\n";
      ok = false;
    }
  };
  require(alpha.in_integer_order(), "alpha in Z[sqrt m]");
  require(r.product_is_unit, "alpha * tau(alpha) = +-1");
  require(r.conj_bounded, "|tau(alpha)| <= epsilon");
  require(compare(alpha, max(Rat(1) / eps, D)) >= 0, "alpha >= max(1/epsilon, D)");
  require(is_positive_definite(evaluate_pencil(gram_pencil(g), alpha.conj())), "M_tau(alpha) positive-definite");
  return ok;
}

void diff_keys(const json& want, const json& got, const std::string& prefix, std::ostream& err) {
  if (!want.is_object() || !got.is_object()) {
    err << "mismatch at " << (prefix.empty() ? "<root>" : prefix) << "\n";
    return;
  }
  for (const auto& [key, value] : want.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!got.contains(key)) err << "missing key " << path << "\n";
    else if (got.at(key) != value) {
      if (value.is_object()) diff_keys(value, got.at(key), path, err);
      else err << "mismatch at " << path << ": expected " << value.dump() << ", found " << got.at(key).dump() << "\n";
    }
  }
  for (const auto& [key, value] : got.items())
    if (!want.contains(key)) err << "unexpected key " << (prefix.empty() ? key : prefix + "." + key) << "\n";
}

int cmd_analyze(const std::string& path, std::ostream& out) {
  const auto g = load_diagram(path);
  const auto r = analyze_thresholds(gram_pencil(g));
  out << "n: " << g.size() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  out << "epsilon: " << r.epsilon.fraction_str() << "\n";
  out << "rho in: " << interval_str(r.rho_interval) << "\n";
  out << "D: " << r.D << "\n";
  out << "largest root of det M_d in: " << (r.largest_root_interval ? interval_str(*r.largest_root_interval) : "none")
      << "\n";
  out << "stable signature: (" << r.stable_signature.p << ", " << r.stable_signature.q << ")\n";
  return kPass;
}

int cmd_embed(const std::string& path, std::int64_t m, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  const auto g = load_diagram(path);
  const auto start = std::chrono::steady_clock::now();
  const auto cert = build_embedding_certificate(g, m);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string body = certificate_json(cert);
  if (out_path.empty()) {
    out << body;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << body)) throw InputError("cannot write " + out_path);
  }
  err << json{{"timing", {{"seconds", seconds}}}}.dump() << "\n";
  if (!cert.all_passed()) {
    err << "some checks failed\n";
    return kCheckFailed;
  }
  return kPass;
}

int cmd_verify(const std::string& cert_path, const std::string& diagram_path, std::ostream& out, std::ostream& err) {
  json stated;
  try {
    stated = json::parse(read_file(cert_path));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  const auto g = load_diagram(diagram_path);
  std::int64_t m = 0;
  bool unit_ok = false;
  try {
    m = stated.at("m").get<std::int64_t>();
    unit_ok = recheck_stated_unit(stated, g, err);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  const json derived = certificate_to_json(build_embedding_certificate(g, m));
  const bool same = derived == stated;
  if (!same) diff_keys(derived, stated, "", err);
  if (same && unit_ok && derived.at("all_passed").get<bool>()) {
    out << "certificate verified\n";
    return kPass;
  }
  out << "certificate rejected\n";
  return kCheckFailed;
}

int cmd_density(const std::string& path, const std::optional<std::string>& d, bool allow_below, std::ostream& out) {
  const auto g = load_diagram(path);
  const auto pencil = gram_pencil(g);
  const Rat t = d ? Rat::parse(*d) : Rat(static_cast<long>(d_threshold(pencil).D));
  const auto cert = bracket_closure_density(g, t, allow_below);
  out << "t: " << t.str() << (cert.below_threshold ? " (below the largest root of det M_d)" : "") << "\n";
  out << "seeds: " << cert.seeds.size() << "\n";
  out << "dimension trace: " << join(cert.dimension_trace, " -> ") << "\n";
  out << "full dimension: " << cert.full_dimension << "\n";
  out << "contains every X_ij: " << (cert.contains_all_generators ? "yes" : "no") << "\n";
  out << "verdict: " << (cert.ok() ? "pass" : "fail") << "\n";
  return cert.ok() ? kPass : kCheckFailed;
}

int cmd_words(const std::string& path, int max_len, const std::optional<std::string>& at_d, std::ostream& out) {
  const auto g = load_diagram(path);
  if (max_len < 0 || max_len > 12) throw InputError("--max-len must be in 0..12");
  out << "counts: " << join(enumerate_by_length(g, max_len), " ") << "\n";
  if (!at_d) return kPass;
  const auto r = faithfulness_probe(g, Rat::parse(*at_d), max_len);
  out << "images: " << join(r.image_counts, " ") << "\n";
  out << "faithfulness probe at t = " << r.t.str() << ": " << (r.ok ? "pass" : "fail") << "\n";
  return r.ok ? kPass : kCheckFailed;
}

int cmd_cycle(int n, std::ostream& out) {
  const auto r = verify_cycle_example(n);
  auto sig = [](const Signature& s) { return "(" + std::to_string(s.p) + ", " + std::to_string(s.q) + ")"; };
  out << "n: " << n << "\n";
  out << "D: " << r.D << "\n";
  out << "stable signature: " << sig(r.stable) << "\n";
  out << "expected: " << sig(r.expected) << " " << (r.signature_ok ? "pass" : "fail") << "\n";
  out << "circulant identity (exact): " << (r.circulant_identity_ok ? "pass" : "fail") << "\n";
  out << "trace sum (exact): " << (r.trace_sum_ok ? "pass" : "fail") << "\n";
  out << "spectrum at t = " << r.sample_t.str() << " (numeric, tol 1e-9): " << (r.spectrum_ok ? "pass" : "fail")
      << ", max error " << r.max_eigenvalue_error << "\n";
  out << "product vs det (numeric, tol 1e-6): " << (r.product_ok ? "pass" : "fail") << "\n";
  out << "predicted positive count: " << r.predicted_positive << " " << (r.positive_count_ok ? "pass" : "fail")
      << "\n";
  out << "verdict: " << (r.ok() ? "pass" : "fail") << "\n";
  return r.ok() ? kPass : kCheckFailed;
}

}  // namespace

std::string certificate_json(const EmbeddingCertificate& c) { return certificate_to_json(c).dump(2) + "\n"; }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for right-angled Coxeter groups as thin subgroups of orthogonal groups over Z[sqrt m]",
               "racg"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string path, cert_path, out_path;
  std::int64_t m = 2;
  std::optional<std::string> d, at_d;
  bool allow_below = false;
  int max_len = 4, n = 5;

  auto* analyze = app.add_subcommand("analyze", "Print epsilon, D and the stable signature");
  analyze->add_option("diagram", path, "Diagram file")->required();

  auto* embed = app.add_subcommand("embed", "Build and check the embedding certificate");
  embed->add_option("diagram", path, "Diagram file")->required();
  embed->add_option("--m", m, "Squarefree radicand")->capture_default_str();
  embed->add_option("--out", out_path, "Certificate path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Re-derive a certificate and compare");
  verify->add_option("certificate", cert_path, "Certificate file")->required();
  verify->add_option("diagram", path, "Diagram file")->required();

  auto* density = app.add_subcommand("density", "Bracket closure from the edge generators");
  density->add_option("diagram", path, "Diagram file")->required();
  density->add_option("--d", d, "Evaluation point (default: D)");
  density->add_flag("--allow-below-threshold", allow_below, "Accept points below the largest root of det M_d");

  auto* words = app.add_subcommand("words", "Element counts by word length");
  words->add_option("diagram", path, "Diagram file")->required();
  words->add_option("--max-len", max_len, "Largest word length")->capture_default_str();
  words->add_option("--at-d", at_d, "Also run the faithfulness probe at this point (>= 1)");

  auto* cycle = app.add_subcommand("cycle", "Check the cycle-complement example");
  cycle->add_option("--n", n, "Number of vertices (>= 5)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(path, out);
    if (*embed) return cmd_embed(path, m, out_path, out, err);
    if (*verify) return cmd_verify(cert_path, path, out, err);
    if (*density) return cmd_density(path, d, allow_below, out);
    if (*words) return cmd_words(path, max_len, at_d, out);
    if (*cycle) return cmd_cycle(n, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_internal() ? kCheckFailed : kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace racg
