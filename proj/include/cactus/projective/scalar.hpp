#pragma once

#include <string>

#include "cactus/rational.hpp"

namespace cactus::proj {

// Gaussian rational re + im*i. Rational inputs are the elements with im = 0.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}
  Scalar(const Rational& re) : re_(re) { re_.canonicalize(); }
  Scalar(const Rational& re, const Rational& im) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  Scalar conj() const { return Scalar(re_, -im_); }
  // Throws DomainError on zero.
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  // "p/q", "p/q i", "a/b+c/d i" or "a/b-c/d i".
  std::string to_string() const;
  // Accepts the forms above, plus "i", "-i" and "3i"; spaces are ignored.
  static Scalar parse(const std::string& text);

  double real_double() const { return to_double(re_); }
  double imag_double() const { return to_double(im_); }

private:
  Rational re_{0};
  Rational im_{0};
};

// A point (u : v) of the projective line, scaled so that the last nonzero
// coordinate is 1. The finite value x is (x : 1), infinity is (1 : 0).
class ProjPoint {
public:
  ProjPoint() : u_(0), v_(1) {}
  // Throws DomainError for (0 : 0).
  ProjPoint(const Scalar& u, const Scalar& v);

  static ProjPoint finite(const Scalar& x) { return ProjPoint(x, Scalar(1)); }
  static ProjPoint zero() { return finite(Scalar(0)); }
  static ProjPoint one() { return finite(Scalar(1)); }
  static ProjPoint infinity() { return ProjPoint(Scalar(1), Scalar(0)); }

  const Scalar& u() const { return u_; }
  const Scalar& v() const { return v_; }
  bool is_infinite() const { return v_.is_zero(); }
  bool is_zero() const { return u_.is_zero(); }
  bool equals(const Scalar& x) const { return !is_infinite() && u_ == x; }
  // Finite value; throws DomainError at infinity.
  Scalar value() const;
  // x -> 1/x, i.e. the coordinate swap.
  ProjPoint inverse() const { return ProjPoint(v_, u_); }
  ProjPoint conj() const { return ProjPoint(u_.conj(), v_.conj()); }

  std::string to_string() const;  // value, or "inf"

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

private:
  Scalar u_, v_;
};

// Homogeneous arithmetic; each throws DomainError when the result is (0 : 0),
// as for infinity + infinity or 0 * infinity.
ProjPoint add(const ProjPoint& a, const ProjPoint& b);
ProjPoint mul(const ProjPoint& a, const ProjPoint& b);
ProjPoint affine(const ProjPoint& a, const Scalar& scale, const Scalar& shift);  // scale*a + shift
ProjPoint fraction(const Scalar& num, const Scalar& den);

}  // namespace cactus::proj
