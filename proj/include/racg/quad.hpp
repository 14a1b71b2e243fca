#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "racg/rational.hpp"

namespace racg {

/// True iff m ≥ 2 has no repeated prime factor (trial division).
bool is_squarefree(std::int64_t m);

/// The real number a + b·√m with rational a, b and squarefree radicand m ≥ 2.
///
/// Elements with different radicands live in different fields; any binary
/// operation between them throws Error(MixedRadicands).
class QuadElem {
 public:
  /// Throws Error(NotSquarefree) unless m is squarefree and ≥ 2.
  QuadElem(Rat a, Rat b, std::int64_t m);
  static QuadElem rational(Rat a, std::int64_t m) { return QuadElem(std::move(a), Rat(0), m); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  std::int64_t radicand() const { return m_; }

  /// Galois conjugate a − b·√m.
  QuadElem conj() const { return {a_, -b_, m_, Unchecked{}}; }
  /// Field norm a² − m·b².
  Rat norm() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  /// Both coordinates are integers, i.e. the element lies in ℤ[√m].
  bool in_integer_order() const { return a_.is_integer() && b_.is_integer(); }
  /// Same radicand, with the given rational value.
  QuadElem lift(const Rat& r) const { return {r, Rat(0), m_, Unchecked{}}; }

  double to_double() const;
  std::string str() const;

  QuadElem operator-() const { return {-a_, -b_, m_, Unchecked{}}; }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem& operator+=(const Rat& r) { a_ += r; return *this; }
  QuadElem& operator-=(const Rat& r) { a_ -= r; return *this; }
  QuadElem& operator*=(const Rat& r) { a_ *= r; b_ *= r; return *this; }
  QuadElem& operator/=(const Rat& r) { a_ /= r; b_ /= r; return *this; }

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend QuadElem operator+(QuadElem x, const Rat& r) { return x += r; }
  friend QuadElem operator-(QuadElem x, const Rat& r) { return x -= r; }
  friend QuadElem operator*(QuadElem x, const Rat& r) { return x *= r; }
  friend QuadElem operator*(const Rat& r, QuadElem x) { return x *= r; }
  friend QuadElem operator/(QuadElem x, const Rat& r) { return x /= r; }

  /// Structural equality; throws on mixed radicands.
  friend bool operator==(const QuadElem& x, const QuadElem& y);

  friend std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
    return os << x.str();
  }

 private:
  struct Unchecked {};
  QuadElem(Rat a, Rat b, std::int64_t m, Unchecked)
      : a_(std::move(a)), b_(std::move(b)), m_(m) {}
  void require_same_field(const QuadElem& o) const;

  Rat a_;
  Rat b_;
  std::int64_t m_;
};

/// Exact sign of a + b·√m in {-1, 0, +1}.
int quad_sign(const QuadElem& x);

/// Sign of x − r.
int compare(const QuadElem& x, const Rat& r);

inline QuadElem zero_like(const QuadElem& x) { return x.lift(Rat(0)); }
inline QuadElem one_like(const QuadElem& x) { return x.lift(Rat(1)); }
inline bool is_zero(const QuadElem& x) { return x.is_zero(); }
inline int sign_of(const QuadElem& x) { return quad_sign(x); }
inline QuadElem exact_quotient(const QuadElem& a, const QuadElem& b) { return a / b; }

}  // namespace racg
