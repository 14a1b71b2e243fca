#pragma once

#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "racg/error.hpp"
#include "racg/quad.hpp"
#include "racg/rational.hpp"

namespace racg {

/// Univariate polynomial over an exact field F (Rat or QuadElem),
/// coefficients stored in ascending degree. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(F constant) : c_{std::move(constant)} { trim(); }

  /// c·x^deg.
  static Poly monomial(const F& c, int deg) {
    std::vector<F> v(static_cast<std::size_t>(deg) + 1, zero_like(c));
    v.back() = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& leading() const { return c_.back(); }
  const F& operator[](std::size_t i) const { return c_[i]; }

  /// Coefficient of x^i, or `zero` beyond the degree.
  F coeff_or(std::size_t i, const F& zero) const { return i < c_.size() ? c_[i] : zero; }

  /// Horner evaluation; the result lives in the field of F·X.
  template <class X>
  auto eval(const X& x) const {
    using R = std::decay_t<decltype(std::declval<F>() * std::declval<X>())>;
    if (c_.empty()) {
      if constexpr (std::is_same_v<R, X>) {
        return zero_like(x);
      } else {
        throw Error(ErrorKind::ZeroPolynomial, "evaluating the zero polynomial");
      }
    }
    R r = [&]() -> R {
      if constexpr (std::is_same_v<R, F>) return c_.back();
      else return zero_like(x) + c_.back();
    }();
    for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * x + c_[i];
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  /// p(−x).
  Poly reflect() const {
    std::vector<F> v = c_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Poly(std::move(v));
  }

  Poly monic() const {
    if (c_.empty()) return Poly();
    std::vector<F> v = c_;
    const F lc = c_.back();
    for (auto& x : v) x = x / lc;
    return Poly(std::move(v));
  }

  Poly operator-() const {
    std::vector<F> v = c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Poly& lo = a.c_.size() < b.c_.size() ? a : b;
    const Poly& hi = a.c_.size() < b.c_.size() ? b : a;
    std::vector<F> v = hi.c_;
    for (std::size_t i = 0; i < lo.c_.size(); ++i) v[i] = v[i] + lo.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (racg::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const F& s) {
    std::vector<F> v = a.c_;
    for (auto& x : v) x = x * s;
    return Poly(std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division a = q·b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<F> r = a.c_;
    std::vector<F> q(a.c_.size() - b.c_.size() + 1, zero_like(b.c_[0]));
    const F& lb = b.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      const F coef = r[k + b.c_.size() - 1] / lb;
      q[k] = coef;
      if (racg::is_zero(coef)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] = r[k + j] - coef * b.c_[j];
    }
    r.resize(b.c_.size() - 1, zero_like(b.c_[0]));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (racg::is_zero(c_[i])) continue;
      std::ostringstream term;
      term << c_[i];
      std::string t = term.str();
      const bool simple = t.find_first_of(" +") == std::string::npos && t.find('-', 1) == std::string::npos;
      if (!simple) t = "(" + t + ")";
      bool neg = simple && t[0] == '-';
      if (neg) t = t.substr(1);
      if (first) os << (neg ? "-" : "");
      else os << (neg ? " - " : " + ");
      if (i == 0) os << t;
      else {
        if (t != "1") os << t;
        os << var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && racg::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

using RatPoly = Poly<Rat>;
using QuadPoly = Poly<QuadElem>;

inline RatPoly rat_poly(std::initializer_list<long> ascending) {
  std::vector<Rat> v;
  for (long c : ascending) v.emplace_back(c);
  return RatPoly(std::move(v));
}

template <class F>
Poly<F> exact_quotient(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::VerificationFailed, "inexact polynomial division");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct SquarefreeFactor {
  Poly<F> factor;  // monic, squarefree, pairwise coprime across the list
  int multiplicity;
};

/// Yun's algorithm: p = lc · Π factor_i^multiplicity_i. Constants are
/// reported as an empty list.
template <class F>
std::vector<SquarefreeFactor<F>> squarefree_decomposition(const Poly<F>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of 0");
  std::vector<SquarefreeFactor<F>> out;
  if (p.degree() == 0) return out;
  const Poly<F> dp = p.derivative();
  const Poly<F> a0 = gcd(p, dp);
  Poly<F> b = exact_quotient(p, a0);
  Poly<F> c = exact_quotient(dp, a0);
  Poly<F> d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly<F> a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a.monic(), i});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  return out;
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of 0");
  if (p.degree() == 0) return Poly<F>(one_like(p.leading()));
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

// Ring helpers so matrices over ℚ[d] reuse the generic matrix code.
template <class F>
Poly<F> zero_like(const Poly<F>&) { return Poly<F>(); }
inline RatPoly one_like(const RatPoly&) { return RatPoly(Rat(1)); }
template <class F>
bool is_zero(const Poly<F>& p) { return p.is_zero(); }

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& p) {
  return os << p.str("d");
}

}  // namespace racg
