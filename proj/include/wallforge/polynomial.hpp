#pragma once

#include "wallforge/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace wallforge {

/// Dense univariate polynomial over Q; coeffs[k] multiplies x^k.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(Rational c) { return UPoly({std::move(c)}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational> &coeffs() const { return c_; }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational &x) const;
  Surd operator()(const Surd &x) const;

  UPoly monic() const;
  UPoly derivative() const;

  friend UPoly operator+(const UPoly &a, const UPoly &b);
  friend UPoly operator-(const UPoly &a, const UPoly &b);
  friend UPoly operator*(const UPoly &a, const UPoly &b);
  friend UPoly operator*(const Rational &k, const UPoly &a);
  friend bool operator==(const UPoly &, const UPoly &) = default;

  /// Euclidean division; divisor must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b);
  /// Monic gcd (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly b);

private:
  void trim();
  std::vector<Rational> c_;
};

/// Sparse bivariate polynomial sum c_ij beta^i t^j over Q.
class BiPoly {
public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly constant(const Rational &c);
  static BiPoly beta() { return monomial(1, 0, Rational(1)); }
  static BiPoly t() { return monomial(0, 1, Rational(1)); }
  static BiPoly monomial(int i, int j, const Rational &c);
  static BiPoly from_beta(const UPoly &p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Key, Rational> &terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  int degree_beta() const;
  int degree_t() const;

  Rational operator()(const Rational &beta, const Rational &t) const;
  Surd operator()(const Surd &beta, const Surd &t) const;

  /// Coefficient of t^j as a polynomial in beta.
  UPoly t_coefficient(int j) const;
  /// Substitutes t = p(beta).
  UPoly restrict_t(const UPoly &p) const;
  /// Substitutes a fixed beta, giving a polynomial in t.
  UPoly at_beta(const Rational &beta) const;

  /// Positive rational content (gcd of numerators over lcm of denominators).
  Rational content() const;
  BiPoly primitive() const;

  /// Exact division when divisor is linear in t with constant nonzero t-coefficient.
  /// Returns false if the division is not exact.
  bool divide_linear_in_t(const BiPoly &divisor, BiPoly &quotient) const;

  friend BiPoly operator+(const BiPoly &a, const BiPoly &b);
  friend BiPoly operator-(const BiPoly &a, const BiPoly &b);
  friend BiPoly operator*(const BiPoly &a, const BiPoly &b);
  friend BiPoly operator*(const Rational &k, const BiPoly &a);
  BiPoly operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const BiPoly &, const BiPoly &) = default;

private:
  void add_term(const Key &k, const Rational &c);
  std::map<Key, Rational> terms_;
};

} // namespace wallforge
