#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wallforge {

/// Raised when an input violates a mathematical precondition.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised for lattice violations of Chern character components.
class LatticeError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Raised when a textual rational cannot be parsed.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(const mpz_class &v) : q_(v) {}
  Rational(long num, long den);
  Rational(const mpz_class &num, const mpz_class &den);
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "p/q", with optional sign. Whitespace is rejected.
  static Rational parse(std::string_view text);

  const mpq_class &raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  mpz_class floor() const;
  mpz_class ceil() const;
  double to_double() const { return q_.get_d(); }

  /// Lowest-terms text: "-1/2", "3".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational abs(const Rational &r);
Rational pow(const Rational &r, unsigned e);

/// Rational lower/upper bounds on sqrt(q), accurate to 2^-bits.
Rational sqrt_lower(const Rational &q, unsigned bits = 40);
Rational sqrt_upper(const Rational &q, unsigned bits = 40);

/// Exact square root if q is the square of a rational.
bool exact_sqrt(const Rational &q, Rational &root);

/// Greatest integer n with n*n <= q (q >= 0).
mpz_class isqrt_floor(const Rational &q);

/// Slope value that may be +infinity. Infinity compares above every rational;
/// two infinities compare equal.
class Slope {
public:
  Slope() = default;
  Slope(Rational v) : value_(std::move(v)), infinite_(false) {}
  static Slope infinity() { Slope s; s.infinite_ = true; return s; }

  bool is_infinite() const { return infinite_; }
  const Rational &value() const;
  std::string str() const { return infinite_ ? "+inf" : value_.str(); }

  friend bool operator==(const Slope &a, const Slope &b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Slope &a, const Slope &b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

private:
  Rational value_;
  bool infinite_ = false;
};

/// Element p + q*sqrt(d) of a real quadratic field, d >= 0 rational.
/// Used for exact wall-intersection coordinates.
class Surd {
public:
  Surd() = default;
  Surd(Rational p) : p_(std::move(p)) {}
  Surd(Rational p, Rational q, Rational d);

  const Rational &rational_part() const { return p_; }
  const Rational &surd_part() const { return q_; }
  const Rational &radicand() const { return d_; }

  int sign() const;
  bool is_rational() const { return q_.is_zero(); }
  double to_double() const;

  Surd operator-() const { return Surd(-p_, -q_, d_); }
  friend Surd operator+(const Surd &a, const Surd &b);
  friend Surd operator-(const Surd &a, const Surd &b) { return a + (-b); }
  friend Surd operator*(const Surd &a, const Surd &b);
  friend Surd operator*(const Surd &a, const Rational &b) { return Surd(a.p_ * b, a.q_ * b, a.d_); }

  /// Exact sign of a - b; the radicands may differ.
  static int compare(const Surd &a, const Surd &b);

  friend bool operator==(const Surd &a, const Surd &b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Surd &a, const Surd &b) {
    int s = compare(a, b);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  static Rational common_radicand(const Surd &a, const Surd &b);
  void normalize();

  Rational p_;
  Rational q_;
  Rational d_;
};

} // namespace wallforge
