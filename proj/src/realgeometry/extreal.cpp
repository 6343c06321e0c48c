#include "cactus/realgeometry/extreal.hpp"

#include <cmath>
#include <limits>

#include "cactus/errors.hpp"

namespace cactus::real {

const Rational& ExtReal::value() const {
  if (!is_finite()) throw DomainError("value of an infinite extended real");
  return value_;
}

double ExtReal::to_double() const {
  switch (kind_) {
    case Kind::PosInf: return std::numeric_limits<double>::infinity();
    case Kind::NegInf: return -std::numeric_limits<double>::infinity();
    case Kind::Finite: break;
  }
  return cactus::to_double(value_);
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    case Kind::Finite: break;
  }
  return ExtReal(Rational(-value_));
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) return ExtReal(Rational(a.value_ + b.value_));
  if (!a.is_finite() && !b.is_finite() && a.kind_ != b.kind_) throw DomainError("inf - inf is undefined");
  return a.is_finite() ? b : a;
}

bool operator<(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ == ExtReal::Kind::NegInf) return b.kind_ != ExtReal::Kind::NegInf;
  if (a.kind_ == ExtReal::Kind::PosInf) return false;
  if (b.kind_ == ExtReal::Kind::PosInf) return true;
  if (b.kind_ == ExtReal::Kind::NegInf) return false;
  return a.value_ < b.value_;
}

proj::ProjPoint ExtReal::to_projective() const {
  if (!is_finite()) return proj::ProjPoint::infinity();
  return proj::ProjPoint::finite(proj::Scalar(value_));
}

std::string ExtReal::to_string() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  return cactus::to_string(value_);
}

ExtReal ExtReal::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtReal(parse_rational(text));
}

ExtReal DefaultDiffeo::operator()(const Rational& t) const {
  if (t > 1 || t < -1) throw DomainError("f is defined on [-1,1], got " + cactus::to_string(t));
  if (t == 1) return ExtReal::pos_inf();
  if (t == -1) return ExtReal::neg_inf();
  return ExtReal(Rational(t / (1 - t * t)));
}

double DefaultDiffeo::eval(double t) const {
  if (t > 1 || t < -1) throw DomainError("f is defined on [-1,1]");
  if (t == 1) return std::numeric_limits<double>::infinity();
  if (t == -1) return -std::numeric_limits<double>::infinity();
  return t / (1 - t * t);
}

std::optional<Rational> DefaultDiffeo::inverse(const ExtReal& y) const {
  if (y.kind() == ExtReal::Kind::PosInf) return Rational(1);
  if (y.kind() == ExtReal::Kind::NegInf) return Rational(-1);
  const Rational& v = y.value();
  if (v == 0) return Rational(0);
  // y t^2 + t - y = 0; the root in (-1,1) is (sqrt(1 + 4y^2) - 1) / (2y).
  Integer p = v.get_num(), q = v.get_den();
  Integer disc = q * q + 4 * p * p;
  if (!mpz_perfect_square_p(disc.get_mpz_t())) return std::nullopt;
  Integer root = sqrt(disc);
  Rational s(root, q);
  s.canonicalize();
  return Rational((s - 1) / (2 * v));
}

double DefaultDiffeo::inverse(double y) const {
  if (std::isinf(y)) return y > 0 ? 1.0 : -1.0;
  if (y == 0) return 0;
  return (std::sqrt(1 + 4 * y * y) - 1) / (2 * y);
}

const RationalDiffeo& default_diffeo() {
  static const DefaultDiffeo f;
  return f;
}

}  // namespace cactus::real
