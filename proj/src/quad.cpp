#include "racg/quad.hpp"

#include <cmath>
#include <sstream>

#include "racg/error.hpp"

namespace racg {

bool is_squarefree(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t p = 2; p <= m / p; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

QuadElem::QuadElem(Rat a, Rat b, std::int64_t m)
    : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (!is_squarefree(m)) {
    throw Error(ErrorKind::NotSquarefree,
                "radicand " + std::to_string(m) + " is not a squarefree integer >= 2");
  }
}

void QuadElem::require_same_field(const QuadElem& o) const {
  if (m_ != o.m_) {
    throw Error(ErrorKind::MixedRadicands,
                "sqrt(" + std::to_string(m_) + ") vs sqrt(" + std::to_string(o.m_) + ")");
  }
}

Rat QuadElem::norm() const { return a_ * a_ - Rat(m_) * b_ * b_; }

double QuadElem::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(m_));
}

std::string QuadElem::str() const {
  std::ostringstream os;
  if (b_.is_zero()) {
    os << a_;
    return os.str();
  }
  if (!a_.is_zero()) os << a_ << (b_.sign() > 0 ? " + " : " - ");
  else if (b_.sign() < 0) os << "-";
  const Rat mag = b_.abs();
  if (mag != Rat(1)) os << mag << "*";
  os << "sqrt(" << m_ << ")";
  return os.str();
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  require_same_field(o);
  Rat a = a_ * o.a_ + Rat(m_) * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  require_same_field(o);
  const Rat n = o.norm();
  if (n.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

bool operator==(const QuadElem& x, const QuadElem& y) {
  x.require_same_field(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

int quad_sign(const QuadElem& x) {
  const int sa = x.a().sign();
  const int sb = x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the term with the larger square wins.
  const Rat a2 = x.a() * x.a();
  const Rat mb2 = Rat(x.radicand()) * x.b() * x.b();
  if (a2 == mb2) return 0;
  return a2 > mb2 ? sa : sb;
}

int compare(const QuadElem& x, const Rat& r) { return quad_sign(x - r); }

}  // namespace racg
