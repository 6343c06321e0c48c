#include "cactus/projective/scalar.hpp"

#include <cctype>

#include "cactus/errors.hpp"

namespace cactus::proj {

Scalar Scalar::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (norm == 0) throw DomainError("division by zero");
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string() const {
  if (im_ == 0) return cactus::to_string(re_);
  if (re_ == 0) return cactus::to_string(im_) + " i";
  std::string out = cactus::to_string(re_);
  if (im_ > 0) out += "+";
  return out + cactus::to_string(im_) + " i";
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw DomainError("empty scalar literal");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return Scalar(re, im);
}

ProjPoint::ProjPoint(const Scalar& u, const Scalar& v) {
  if (v.is_zero()) {
    if (u.is_zero()) throw DomainError("(0:0) is not a point of the projective line");
    u_ = Scalar(1);
    v_ = Scalar(0);
  } else {
    u_ = u / v;
    v_ = Scalar(1);
  }
}

Scalar ProjPoint::value() const {
  if (is_infinite()) throw DomainError("value of the point at infinity");
  return u_;
}

std::string ProjPoint::to_string() const { return is_infinite() ? "inf" : u_.to_string(); }

ProjPoint add(const ProjPoint& a, const ProjPoint& b) {
  return ProjPoint(a.u() * b.v() + b.u() * a.v(), a.v() * b.v());
}

ProjPoint mul(const ProjPoint& a, const ProjPoint& b) { return ProjPoint(a.u() * b.u(), a.v() * b.v()); }

ProjPoint affine(const ProjPoint& a, const Scalar& scale, const Scalar& shift) {
  return ProjPoint(scale * a.u() + shift * a.v(), a.v());
}

ProjPoint fraction(const Scalar& num, const Scalar& den) { return ProjPoint(num, den); }

}  // namespace cactus::proj
