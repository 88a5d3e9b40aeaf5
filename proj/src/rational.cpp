#include "wallforge/rational.hpp"

#include <cmath>
#include <ostream>

namespace wallforge {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class &num, const mpz_class &den) {
  if (den == 0) throw DomainError("division by zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_text(text)) throw ParseError("malformed rational '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  auto n = text.substr(0, slash);
  auto d = text.substr(slash + 1);
  if (!valid_integer_text(n) || !valid_integer_text(d) || d[0] == '-' || d[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class den = parse_integer(d);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(n), den);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const { return q_.get_str(10); }

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational &r, unsigned e) {
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) out *= r;
  return out;
}

mpz_class isqrt_floor(const Rational &q) {
  if (q.sign() < 0) throw DomainError("square root of a negative number");
  // floor(sqrt(n/d)) = floor(sqrt(floor(n/d))) holds for the integer part.
  mpz_class n = q.floor();
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rational sqrt_lower(const Rational &q, unsigned bits) {
  if (q.sign() < 0) throw DomainError("square root of a negative number");
  mpz_class scale = mpz_class(1) << bits;
  Rational scaled = q * Rational(mpz_class(scale * scale));
  mpz_class root;
  mpz_class fl = scaled.floor();
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  return Rational(root, scale);
}

Rational sqrt_upper(const Rational &q, unsigned bits) {
  if (q.sign() < 0) throw DomainError("square root of a negative number");
  mpz_class scale = mpz_class(1) << bits;
  Rational scaled = q * Rational(mpz_class(scale * scale));
  mpz_class root;
  mpz_class cl = scaled.ceil();
  mpz_sqrt(root.get_mpz_t(), cl.get_mpz_t());
  if (root * root < cl) root += 1;
  return Rational(root, scale);
}

bool exact_sqrt(const Rational &q, Rational &root) {
  if (q.sign() < 0) return false;
  mpz_class n = q.num(), d = q.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

const Rational &Slope::value() const {
  if (infinite_) throw DomainError("slope is +infinity");
  return value_;
}

Surd::Surd(Rational p, Rational q, Rational d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (d_.sign() < 0) throw DomainError("negative radicand");
  normalize();
}

void Surd::normalize() {
  Rational r;
  if (q_.is_zero() || d_.is_zero()) {
    q_ = Rational(0);
    d_ = Rational(0);
  } else if (exact_sqrt(d_, r)) {
    p_ += q_ * r;
    q_ = Rational(0);
    d_ = Rational(0);
  }
}

Rational Surd::common_radicand(const Surd &a, const Surd &b) {
  if (a.q_.is_zero()) return b.d_;
  if (b.q_.is_zero()) return a.d_;
  if (a.d_ != b.d_) throw DomainError("surds with different radicands");
  return a.d_;
}

Surd operator+(const Surd &a, const Surd &b) {
  Rational d = Surd::common_radicand(a, b);
  return Surd(a.p_ + b.p_, a.q_ + b.q_, d);
}

Surd operator*(const Surd &a, const Surd &b) {
  Rational d = Surd::common_radicand(a, b);
  return Surd(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d);
}

int Surd::sign() const {
  int sp = p_.sign();
  int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 against q^2 d.
  int c = (p_ * p_ <=> q_ * q_ * d_) < 0 ? -1 : ((p_ * p_ == q_ * q_ * d_) ? 0 : 1);
  return c == 0 ? 0 : (c > 0 ? sp : sq);
}

int Surd::compare(const Surd &a, const Surd &b) {
  if (a.q_.is_zero() || b.q_.is_zero() || a.d_ == b.d_) return (a - b).sign();
  // x + y sqrt(d1) against z sqrt(d2).
  Surd lhs(a.p_ - b.p_, a.q_, a.d_);
  int sl = lhs.sign();
  int sr = b.q_.sign();
  if (sl == 0) return -sr;
  if (sl != sr) return sl;
  Surd gap = lhs * lhs - Surd(b.q_ * b.q_ * b.d_);
  return sl * gap.sign();
}

double Surd::to_double() const {
  return p_.to_double() + q_.to_double() * std::sqrt(d_.to_double());
}

} // namespace wallforge
