// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracles.hpp"
#include "racg/cli.hpp"
#include "racg/cyclecheck.hpp"
#include "racg/liealg.hpp"
#include "racg/vinberg.hpp"
#include "racg/words.hpp"
#include "suite.hpp"

using namespace racg;

namespace {

const std::vector<std::int64_t> kRadicands{2, 3, 5};

/// Collects failure messages for one criterion.
class Check {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Thresholds {
  Rat epsilon;
  std::int64_t D;
  Signature signature;
};

Thresholds thresholds(const CoxeterDiagram& g) {
  const auto r = analyze_thresholds(gram_pencil(g));
  return {r.epsilon, r.D, r.stable_signature};
}

UnitValue unit_for(const CoxeterDiagram& g, std::int64_t m) {
  const auto th = thresholds(g);
  return choose_unit(m, max(Rat(1) / th.epsilon, Rat(static_cast<long>(th.D))));
}

void relations_and_orthogonality(Check& c) {
  for (const auto& [name, g] : suite::acceptance_suite()) {
    const Rat D(static_cast<long>(thresholds(g).D));
    c.require(verify_relations(reflection_generators(g, D)).ok(), name + " at D");
    for (auto m : kRadicands)
      c.require(verify_relations(reflection_generators(g, unit_for(g, m).value)).ok(),
                name + " at alpha, m = " + std::to_string(m));
  }
}

void trace_identity(Check& c) {
  for (const auto& [name, g] : suite::acceptance_suite()) {
    const int n = g.size();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const RatPoly expect = g.adjacent(i, j) ? rat_poly({n - 4, 0, 4}) : rat_poly({n - 4});
        c.require(trace_polynomial(g, i, j) == expect, name + " pair " + std::to_string(i + 1) + "," + std::to_string(j + 1));
      }
  }
}

void galois_chain(Check& c) {
  for (const auto& [name, g] : suite::acceptance_suite()) {
    const auto th = thresholds(g);
    for (auto m : kRadicands) {
      const std::string tag = name + ", m = " + std::to_string(m);
      const auto u = unit_for(g, m);
      const QuadElem& alpha = u.value;
      const QuadElem tau = alpha.conj();
      c.require(compare(alpha, Rat(1) / th.epsilon) >= 0 && compare(alpha, Rat(static_cast<long>(th.D))) >= 0,
                tag + ": alpha >= max(1/eps, D)");
      const QuadElem prod = alpha * tau;
      c.require(prod.is_rational() && (prod.a() == Rat(1) || prod.a() == Rat(-1)), tag + ": alpha tau(alpha) = +-1");
      c.require(compare(tau, th.epsilon) <= 0 && compare(-tau, th.epsilon) <= 0, tag + ": |tau(alpha)| <= eps");
      const auto gram_tau = evaluate_pencil(gram_pencil(g), tau);
      c.require(is_positive_definite(gram_tau), tag + ": M_tau(alpha) positive-definite");
      c.require(compact_conjugate_check(g, u).ok(), tag + ": conjugate generators preserve M_tau(alpha)");
    }
  }
}

void integrality(Check& c) {
  for (const auto& [name, g] : suite::acceptance_suite())
    for (auto m : kRadicands) {
      const auto gs = reflection_generators(g, unit_for(g, m).value);
      bool ok = true;
      for (const auto& R : gs.generators)
        for (const auto& x : R.data()) ok = ok && x.a().is_integer() && x.b().is_integer();
      c.require(ok, name + ", m = " + std::to_string(m));
    }
}

void indefiniteness(Check& c) {
  for (const auto& [name, g] : suite::acceptance_suite()) {
    const auto s = thresholds(g).signature;
    c.require(s.p >= 1 && s.q >= 1 && s.z == 0, name);
  }
}

void cycle_example(Check& c) {
  for (int n = 5; n <= 12; ++n) {
    const auto r = verify_cycle_example(n);
    const std::string tag = "n = " + std::to_string(n);
    c.require(r.stable == Signature{2 * (n / 3), n - 2 * (n / 3), 0}, tag + ": signature");
    c.require(r.sample_t == Rat(static_cast<long>(r.D + 1)), tag + ": sample point D + 1");
    c.require(r.spectrum_ok && r.max_eigenvalue_error <= 1e-9, tag + ": spectrum within 1e-9");
  }
}

void density(Check& c) {
  for (const auto& [name, g] : suite::acceptance_suite()) {
    const Rat D(static_cast<long>(thresholds(g).D));
    const auto cert = bracket_closure_density(g, D);
    const std::size_t full = static_cast<std::size_t>(g.size() * (g.size() - 1) / 2);
    c.require(cert.final_dimension == full && cert.ok(), name + ": bracket closure");
    c.require(full_basis_check(evaluate_pencil(gram_pencil(g), D)).rank == full, name + ": all-pairs rank");
  }
}

void faithfulness(Check& c) {
  for (const auto& [name, g] : suite::acceptance_suite()) {
    const int L = g.size() <= 5 ? 8 : g.size() <= 7 ? 6 : 4;
    const auto r = faithfulness_probe(g, Rat(static_cast<long>(thresholds(g).D)), L);
    c.require(r.ok, name + ", L = " + std::to_string(L));
    c.require(r.image_counts == enumerate_by_length(g, L), name + ": image counts vs BFS");
  }
  const auto k3 = faithfulness_probe(suite::triangle(), Rat(1), 8);
  for (std::size_t l = 1; l < k3.image_counts.size(); ++l)
    c.require(k3.image_counts[l] == (std::size_t{3} << (l - 1)), "K3 length " + std::to_string(l));
}

void pell_oracle(Check& c) {
  for (std::int64_t m = 2; m <= 50; ++m) {
    if (!is_squarefree(m)) continue;
    const auto s = fundamental_pell(m);
    const auto b = oracle::brute_pell(m, 1'000'000);
    c.require(b && s.x == Integer(static_cast<long>(b->x)) && s.y == Integer(static_cast<long>(b->y)) &&
                  s.norm == b->norm,
              "m = " + std::to_string(m));
  }
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "racg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void determinism(Check& c) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("racg-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::mt19937_64 rng(5);
  const std::vector<std::pair<std::string, CoxeterDiagram>> cases{
      {"K3", suite::triangle()}, {"C5", cycle_complement(5)}, {"random", suite::random_connected(rng, 6)}};
  for (const auto& [name, g] : cases)
    for (auto m : kRadicands) {
      const std::string tag = name + ", m = " + std::to_string(m);
      const auto diagram = dir / (name + ".txt");
      std::ofstream(diagram) << serialize_diagram(g);
      const auto a = dir / "a.json", b = dir / "b.json";
      const auto ms = std::to_string(m);
      c.require(cli({"embed", diagram.string(), "--m", ms, "--out", a.string()}) == 0, tag + ": first embed");
      c.require(cli({"embed", diagram.string(), "--m", ms, "--out", b.string()}) == 0, tag + ": second embed");
      c.require(!slurp(a).empty() && slurp(a) == slurp(b), tag + ": byte-identical");
      c.require(cli({"verify", a.string(), diagram.string()}) == 0, tag + ": verify round-trip");
    }
  fs::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 relations and orthogonality", relations_and_orthogonality},
      {"2 trace identity", trace_identity},
      {"3 Galois chain", galois_chain},
      {"4 integrality", integrality},
      {"5 indefiniteness", indefiniteness},
      {"6 cycle example", cycle_example},
      {"7 density certificates", density},
      {"8 faithfulness probe", faithfulness},
      {"9 Pell oracle", pell_oracle},
      {"10 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(seconds < 60.0, "took longer than 60 s");
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << name << " (" << seconds << " s)\n";
    for (const auto& f : c.failures()) std::cout << "      " << f << "\n";
    if (!c.ok()) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
