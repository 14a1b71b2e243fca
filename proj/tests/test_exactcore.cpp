#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "racg/matrix.hpp"
#include "racg/quad.hpp"
#include "racg/roots.hpp"
#include "racg/spectral.hpp"

using namespace racg;

namespace {

RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t n = rows.size();
  RatMatrix m(n, rows.begin()->size(), Rat(0));
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Rat(v);
    ++i;
  }
  return m;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected racg::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("Rat parsing and normalization") {
  CHECK(Rat::parse("6/4") == Rat(Integer(3), Integer(2)));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat::parse("0/5").is_zero());
  CHECK(Rat::parse("6/4").fraction_str() == "3/2");
  CHECK(Rat(4).fraction_str() == "4/1");
  CHECK(kind_of([] { Rat::parse("1/0"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { Rat::parse("x"); }) == ErrorKind::SyntaxError);
  CHECK(Rat::parse("-7/2").floor() == -4);
  CHECK(Rat::parse("-7/2").ceil() == -3);
}

TEST_CASE("quad_sign examples") {
  CHECK(quad_sign(QuadElem(Rat(1), Rat(-1), 2)) == -1);
  CHECK(quad_sign(QuadElem(Rat(0), Rat(0), 5)) == 0);
  CHECK(quad_sign(QuadElem(Rat(2), Rat(-1), 3)) == 1);
  CHECK(quad_sign(QuadElem(Rat(-3), Rat(2), 2)) == -1);  // 2√2 < 3
  CHECK(quad_sign(QuadElem(Rat(-2), Rat(3, 2), 2)) == 1);  // (3/2)√2 ≈ 2.12 > 2
}

TEST_CASE("QuadElem construction and mixed radicands") {
  CHECK(kind_of([] { QuadElem(Rat(1), Rat(1), 4); }) == ErrorKind::NotSquarefree);
  CHECK(kind_of([] { QuadElem(Rat(1), Rat(1), 1); }) == ErrorKind::NotSquarefree);
  const QuadElem x(Rat(1), Rat(1), 2);
  const QuadElem y(Rat(1), Rat(1), 3);
  CHECK(kind_of([&] { (void)(x + y); }) == ErrorKind::MixedRadicands);
  CHECK(kind_of([&] { (void)(x * y); }) == ErrorKind::MixedRadicands);
  const QuadElem unit = x * x;  // 3 + 2√2
  CHECK(unit == QuadElem(Rat(3), Rat(2), 2));
  CHECK(unit * unit.conj() == unit.lift(Rat(1)));
  CHECK((unit / x) == x);
}

TEST_CASE("quad_sign is multiplicative (randomized)") {
  std::mt19937_64 rng(7);
  for (std::int64_t m : {2, 3, 5, 6, 7, 13}) {
    for (int trial = 0; trial < 200; ++trial) {
      const QuadElem x(oracle::random_rat(rng), oracle::random_rat(rng), m);
      const QuadElem y(oracle::random_rat(rng), oracle::random_rat(rng), m);
      CHECK(quad_sign(x) * quad_sign(y) == quad_sign(x * y));
      CHECK(quad_sign(x) == (x.to_double() > 0 ? 1 : (x.to_double() < 0 ? -1 : 0)));
    }
  }
}

TEST_CASE("polynomial arithmetic and squarefree decomposition") {
  const RatPoly p = rat_poly({1, 0, -3, -2});  // −2d³ − 3d² + 1 = (1 − 2d)(1 + d)²
  const auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].multiplicity == 1);
  CHECK(parts[0].factor == RatPoly(std::vector<Rat>{Rat(-1, 2) * Rat(1), Rat(1)}));
  CHECK(parts[1].multiplicity == 2);
  CHECK(parts[1].factor == rat_poly({1, 1}));
  auto [q, r] = divmod(p, rat_poly({1, 1}));
  CHECK(r.is_zero());
  CHECK(q * rat_poly({1, 1}) == p);
  CHECK(gcd(p, p.derivative()) == rat_poly({1, 1}));
}

TEST_CASE("sturm_root_count examples") {
  CHECK(sturm_root_count(rat_poly({-2, 0, 1}), OpenRange::between(Rat(0), Rat(2))) == 1);
  CHECK(sturm_root_count(rat_poly({1, 0, -3, -2}), OpenRange::whole_line()) == 2);
  CHECK(sturm_root_count(rat_poly({1, 0, 1}), OpenRange::whole_line()) == 0);
  CHECK(sturm_root_count(rat_poly({-2, 0, 1}), OpenRange::above(Rat(0))) == 1);
  CHECK(kind_of([] { sturm_root_count(RatPoly(), OpenRange::whole_line()); }) == ErrorKind::ZeroPolynomial);
  CHECK(kind_of([] { sturm_root_count(rat_poly({-3, 1}), OpenRange::between(Rat(3), Rat(5))); }) ==
        ErrorKind::EndpointIsRoot);
}

TEST_CASE("isolate_real_roots examples") {
  {
    const auto roots = isolate_real_roots(rat_poly({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    const auto neg = refine(roots[0], Rat(1, 2));
    const auto pos = refine(roots[1], Rat(1, 2));
    CHECK(neg.interval.lo >= Rat(-2));
    CHECK(neg.interval.hi <= Rat(-1));
    CHECK(pos.interval.lo >= Rat(1));
    CHECK(pos.interval.hi <= Rat(2));
    CHECK(roots[0].multiplicity == 1);
    const RealRoot fine = refine(roots[1], Rat(1, 1000000));
    CHECK(fine.interval.width() < Rat(1, 1000000));
    CHECK(fine.interval.lo * fine.interval.lo < Rat(2));
    CHECK(fine.interval.hi * fine.interval.hi > Rat(2));
  }
  {
    const auto roots = isolate_real_roots(rat_poly({1, 0, -3, -2}));
    REQUIRE(roots.size() == 2);
    auto near_minus_one = refine(roots[0], Rat(1, 100));
    CHECK(near_minus_one.multiplicity == 2);
    CHECK(near_minus_one.interval.lo <= Rat(-1));
    CHECK(near_minus_one.interval.hi >= Rat(-1));
    auto half = refine(roots[1], Rat(1, 100));
    CHECK(half.multiplicity == 1);
    CHECK(half.interval.lo <= Rat(1, 2));
    CHECK(half.interval.hi >= Rat(1, 2));
  }
  {
    const auto roots = isolate_real_roots(rat_poly({-3, 1}));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].interval.lo <= Rat(3));
    CHECK(roots[0].interval.hi >= Rat(3));
  }
  CHECK(kind_of([] { isolate_real_roots(RatPoly()); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("whole-line Sturm count matches the isolated root list (random, deg <= 8)") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    // Mix planted rational roots (with repeats) with a random cofactor.
    RatPoly p(Rat(1));
    const int planted = deg(rng) / 2;
    for (int i = 0; i < planted; ++i) {
      const Rat r = oracle::random_rat(rng, 4, 3);
      p *= RatPoly(std::vector<Rat>{-r, Rat(1)});
      if (coin(rng) == 0) p *= RatPoly(std::vector<Rat>{-r, Rat(1)});
    }
    std::vector<Rat> rest;
    for (int i = 0, d = deg(rng) - planted; i <= std::max(d, 0); ++i) rest.push_back(oracle::random_rat(rng));
    if (rest.back().is_zero()) rest.back() = Rat(1);
    p *= RatPoly(rest);
    const auto roots = isolate_real_roots(p);
    CHECK(sturm_root_count(p, OpenRange::whole_line()) == static_cast<int>(roots.size()));
    int with_mult = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      with_mult += roots[i].multiplicity;
      if (i + 1 < roots.size()) CHECK(roots[i].interval.hi <= roots[i + 1].interval.lo);
      if (!roots[i].is_exact()) {
        const RealRoot fine = refine(roots[i], Rat(1, 1 << 20));
        CHECK(fine.factor().eval(fine.interval.lo).sign() * fine.factor().eval(fine.interval.hi).sign() <= 0);
      }
    }
    CHECK(with_mult <= p.degree());
  }
}

TEST_CASE("floor_of_root handles integer and irrational roots") {
  auto roots = isolate_real_roots(rat_poly({-4, 0, 1}));  // ±2
  CHECK(floor_of_root(roots[1]) == 2);
  CHECK(floor_of_root(roots[0]) == -2);
  auto golden = isolate_real_roots(rat_poly({-1, -1, 1}));  // (1 ± √5)/2
  CHECK(floor_of_root(golden[1]) == 1);
  CHECK(floor_of_root(golden[0]) == -1);
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(RatMatrix::identity(2, Rat(1))) == rat_poly({1, -2, 1}));
  CHECK(char_poly(from_rows({{1, -1}, {-1, 1}})) == rat_poly({0, -2, 1}));
  const RatMatrix k3_at_one = from_rows({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
  CHECK(char_poly(k3_at_one) == rat_poly({4, 0, -3, 1}));
  QuadMatrix mixed(2, 2, QuadElem::rational(Rat(1), 2));
  mixed(0, 1) = QuadElem::rational(Rat(0), 3);
  CHECK(kind_of([&] { char_poly(mixed); }) == ErrorKind::MixedRadicands);
}

TEST_CASE("signature_of examples") {
  CHECK(signature_of(RatMatrix::identity(3, Rat(1))) == Signature{3, 0, 0});
  CHECK(signature_of(from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}})) == Signature{1, 1, 1});
  CHECK(signature_of(from_rows({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}})) == Signature{2, 1, 0});
  CHECK(kind_of([] { signature_of(from_rows({{1, 2}, {0, 1}})); }) == ErrorKind::NotSymmetric);
}

TEST_CASE("char_poly at 0 equals (-1)^n det, cross-checked by Leibniz and Bareiss") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const RatMatrix m = oracle::random_symmetric(rng, n);
      const Rat det = oracle::leibniz_det(m);
      CHECK(determinant(m) == det);
      const Rat c0 = char_poly(m).coeff_or(0, Rat(0));
      CHECK(c0 == (n % 2 ? -det : det));
      const auto minors = leading_principal_minors(m);
      for (std::size_t k = 1; k <= n; ++k) CHECK(minors[k - 1] == oracle::leibniz_det(m.leading_block(k)));
    }
  }
}

TEST_CASE("signature_of: Sylvester inertia, Descartes oracle, component sum") {
  std::mt19937_64 rng(99);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      RatMatrix m = oracle::random_symmetric(rng, n);
      if (trial % 3 == 0 && n >= 2) {
        // force a kernel: duplicate a row/column
        for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j);
        for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = m(i, 0);
        m(n - 1, n - 1) = m(0, 0);
      }
      const Signature s = signature_of(m);
      CHECK(s.dimension() == static_cast<int>(n));
      const RatPoly cp = char_poly(m);
      int zero_mult = 0;
      while (cp[static_cast<std::size_t>(zero_mult)].is_zero()) ++zero_mult;
      CHECK(s.z == zero_mult);
      CHECK(s.p == oracle::descartes_positive(cp));
      RatMatrix g(n, n, Rat(0));
      do {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) g(i, j) = oracle::random_rat(rng, 3, 2);
      } while (determinant(g).is_zero());
      CHECK(signature_of(g.transpose() * m * g) == s);
    }
  }
}

TEST_CASE("signature_of over Q(sqrt m) agrees with congruence to a rational form") {
  // diag(1 + √2, 1 − √2, −√3-free) style: build M = Gᵀ D G with D diagonal of known signs.
  const std::int64_t m = 2;
  auto q = [&](long a, long b) { return QuadElem(Rat(a), Rat(b), m); };
  QuadMatrix d(3, 3, q(0, 0));
  d(0, 0) = q(1, 1);   // > 0
  d(1, 1) = q(1, -1);  // < 0
  d(2, 2) = q(3, -2);  // 3 − 2√2 > 0
  QuadMatrix g(3, 3, q(0, 0));
  g(0, 0) = q(1, 0); g(0, 1) = q(2, 1); g(0, 2) = q(-1, 0);
  g(1, 1) = q(1, 1); g(1, 2) = q(0, 3);
  g(2, 0) = q(1, 0); g(2, 2) = q(2, 0);
  REQUIRE(!determinant(g).is_zero());
  CHECK(signature_of(g.transpose() * d * g) == Signature{2, 1, 0});
  CHECK(is_positive_definite(g.transpose() * g));
}
