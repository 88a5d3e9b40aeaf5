#include "wallforge/polynomial.hpp"

#include <algorithm>

namespace wallforge {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

Rational UPoly::operator()(const Rational &x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Surd UPoly::operator()(const Surd &x) const {
  Surd acc(Rational(0));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Surd(*it);
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = Rational(1) / leading();
  return inv * *this;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * c_[k]);
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly &a, const UPoly &b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(int(k)) + b.coeff(int(k));
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly &a, const UPoly &b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly &a, const UPoly &b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rational &k, const UPoly &a) {
  std::vector<Rational> c = a.c_;
  for (auto &x : c) x *= k;
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly &a, const UPoly &b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quot(std::max(0, a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[k] / b.leading();
    if (f.is_zero()) continue;
    quot[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

BiPoly BiPoly::constant(const Rational &c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int i, int j, const Rational &c) {
  BiPoly p;
  p.add_term({i, j}, c);
  return p;
}

BiPoly BiPoly::from_beta(const UPoly &p) {
  BiPoly out;
  for (int k = 0; k <= p.degree(); ++k) out.add_term({k, 0}, p.coeff(k));
  return out;
}

void BiPoly::add_term(const Key &k, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_beta() const {
  int d = -1;
  for (const auto &[k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto &[k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Rational BiPoly::operator()(const Rational &beta, const Rational &t) const {
  Rational acc(0);
  for (const auto &[k, c] : terms_) acc += c * pow(beta, k.first) * pow(t, k.second);
  return acc;
}

Surd BiPoly::operator()(const Surd &beta, const Surd &t) const {
  Surd acc(Rational(0));
  for (const auto &[k, c] : terms_) {
    Surd term(c);
    for (int i = 0; i < k.first; ++i) term = term * beta;
    for (int j = 0; j < k.second; ++j) term = term * t;
    acc = acc + term;
  }
  return acc;
}

UPoly BiPoly::t_coefficient(int j) const {
  std::vector<Rational> c(std::max(0, degree_beta() + 1));
  for (const auto &[k, v] : terms_)
    if (k.second == j) c[k.first] = v;
  return UPoly(std::move(c));
}

UPoly BiPoly::restrict_t(const UPoly &p) const {
  UPoly out;
  UPoly tpow = UPoly::constant(Rational(1));
  for (int j = 0; j <= degree_t(); ++j) {
    out = out + t_coefficient(j) * tpow;
    tpow = tpow * p;
  }
  return out;
}

UPoly BiPoly::at_beta(const Rational &beta) const {
  std::vector<Rational> c(std::max(0, degree_t() + 1));
  for (const auto &[k, v] : terms_) c[k.second] += v * pow(beta, k.first);
  return UPoly(std::move(c));
}

Rational BiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class g = 0, l = 1;
  for (const auto &[k, c] : terms_) {
    mpz_class n = c.num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_class d = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return Rational(g, l);
}

BiPoly BiPoly::primitive() const {
  if (terms_.empty()) return *this;
  return (Rational(1) / content()) * *this;
}

bool BiPoly::divide_linear_in_t(const BiPoly &divisor, BiPoly &quotient) const {
  // divisor = a(beta) + k t with k a nonzero constant.
  if (divisor.degree_t() != 1 || divisor.t_coefficient(1).degree() != 0) return false;
  const Rational k = divisor.coeff(0, 1);
  const UPoly a = divisor.t_coefficient(0);
  // Synthetic division in t over Q[beta]: this = sum_j p_j t^j.
  int n = degree_t();
  if (n < 1) return is_zero() ? (quotient = BiPoly(), true) : false;
  std::vector<UPoly> p(n + 1);
  for (int j = 0; j <= n; ++j) p[j] = t_coefficient(j);
  std::vector<UPoly> q(n);
  UPoly carry;
  for (int j = n; j >= 1; --j) {
    q[j - 1] = (Rational(1) / k) * (p[j] - carry);
    carry = a * q[j - 1];
  }
  if (!(p[0] - carry).is_zero()) return false;
  BiPoly out;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= q[j].degree(); ++i) out.add_term({i, j}, q[j].coeff(i));
  quotient = std::move(out);
  return true;
}

BiPoly operator+(const BiPoly &a, const BiPoly &b) {
  BiPoly out = a;
  for (const auto &[k, c] : b.terms_) out.add_term(k, c);
  return out;
}

BiPoly operator-(const BiPoly &a, const BiPoly &b) { return a + Rational(-1) * b; }

BiPoly operator*(const BiPoly &a, const BiPoly &b) {
  BiPoly out;
  for (const auto &[ka, ca] : a.terms_)
    for (const auto &[kb, cb] : b.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

BiPoly operator*(const Rational &k, const BiPoly &a) {
  BiPoly out;
  for (const auto &[key, c] : a.terms_) out.add_term(key, k * c);
  return out;
}

} // namespace wallforge
