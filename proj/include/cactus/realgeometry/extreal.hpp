#pragma once

#include <optional>
#include <string>

#include "cactus/projective/scalar.hpp"
#include "cactus/rational.hpp"

namespace cactus::real {

// A rational number or one of the signed infinities.
class ExtReal {
public:
  enum class Kind { Finite, PosInf, NegInf };

  ExtReal() = default;
  ExtReal(long v) : value_(v) {}
  ExtReal(const Rational& v) : value_(v) { value_.canonicalize(); }
  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  // Throws DomainError for infinities.
  const Rational& value() const;
  double to_double() const;

  ExtReal operator-() const;
  // inf + (-inf) throws DomainError.
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }
  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend bool operator<(const ExtReal& a, const ExtReal& b);

  // Both infinities become the single point at infinity of P^1.
  proj::ProjPoint to_projective() const;
  std::string to_string() const;
  static ExtReal parse(const std::string& text);

private:
  explicit ExtReal(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  Rational value_{0};
};

// An odd, increasing homeomorphism [-1,1] -> [-inf,inf] with f(0) = 0.
class RationalDiffeo {
public:
  virtual ~RationalDiffeo() = default;
  // Exact value; throws DomainError outside [-1,1].
  virtual ExtReal operator()(const Rational& t) const = 0;
  virtual double eval(double t) const = 0;
  // Exact inverse when the preimage is rational.
  virtual std::optional<Rational> inverse(const ExtReal& y) const = 0;
  virtual double inverse(double y) const = 0;
  virtual std::string name() const = 0;
};

// f(t) = t / (1 - t^2).
class DefaultDiffeo : public RationalDiffeo {
public:
  ExtReal operator()(const Rational& t) const override;
  double eval(double t) const override;
  std::optional<Rational> inverse(const ExtReal& y) const override;
  double inverse(double y) const override;
  std::string name() const override { return "default"; }
};

const RationalDiffeo& default_diffeo();

}  // namespace cactus::real
