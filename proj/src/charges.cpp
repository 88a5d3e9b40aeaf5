#include "wallforge/charges.hpp"

namespace wallforge {

namespace {

const Rational kSixth(1, 6);

// (s + 1/6) t ch1^b subtracted from ch3^b: the numerator of lambda.
Rational lambda_numerator(const TwistedChern &tw, const Rational &t, const Rational &s) {
  return tw[3] - (s + kSixth) * t * tw[1];
}

Rational twisted_rho(const TwistedChern &tw, const Rational &t) { return tw[2] - t * tw[0] / 2; }

} // namespace

Rational cross(const ComplexExact &a, const ComplexExact &b) { return a.re * b.im - a.im * b.re; }

Rational dot(const ComplexExact &a, const ComplexExact &b) { return a.re * b.re + a.im * b.im; }

TiltSlope nu(const ChernCharacter &v, const PlanePoint &p) {
  if (p.t.sign() <= 0) throw DomainError("nu requires t > 0");
  TwistedChern tw = twist(v, p.beta);
  if (tw[1].is_zero()) return {Slope::infinity(), true};
  return {Slope(twisted_rho(tw, p.t) / tw[1]), true};
}

Rational rho(const ChernCharacter &v, const PlanePoint &p) { return twisted_rho(twist(v, p.beta), p.t); }

ComplexExact central_charge(const ChernCharacter &v, const PlanePoint &p, const Rational &s) {
  TwistedChern tw = twist(v, p.beta);
  return {-lambda_numerator(tw, p.t, s), twisted_rho(tw, p.t)};
}

ComplexExact zhat(const ChernCharacter &v, const PlanePoint &p, const Rational &s) {
  TwistedChern tw = twist(v, p.beta);
  return {twisted_rho(tw, p.t), lambda_numerator(tw, p.t, s)};
}

Slope lambda(const ChernCharacter &v, const PlanePoint &p, const Rational &s) {
  TwistedChern tw = twist(v, p.beta);
  Rational den = twisted_rho(tw, p.t);
  if (den.is_zero()) return Slope::infinity();
  return Slope(lambda_numerator(tw, p.t, s) / den);
}

std::array<std::array<Rational, 4>, 4> q_matrix(const Rational &t, const Rational &K) {
  const Rational kt = K * t;
  std::array<std::array<Rational, 4>, 4> m{};
  m[0][2] = -kt;
  m[2][0] = -kt;
  m[1][1] = kt;
  m[1][3] = Rational(-3);
  m[3][1] = Rational(-3);
  m[2][2] = Rational(4);
  return m;
}

Rational q_pairing(const ChernCharacter &f, const ChernCharacter &a, const PlanePoint &p,
                   const Rational &K) {
  TwistedChern x = twist(f, p.beta);
  TwistedChern y = twist(a, p.beta);
  auto m = q_matrix(p.t, K);
  Rational acc(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!m[i][j].is_zero()) acc += x[i] * m[i][j] * y[j];
  return acc;
}

Rational q_form(const ChernCharacter &v, const PlanePoint &p, const Rational &K) {
  return q_pairing(v, v, p, K);
}

bool is_supported_range(const Rational &K, const Rational &s) {
  return K >= Rational(1) && K < Rational(6) * s + Rational(1);
}

Rational c_const(const ChernCharacter &v, const Rational &beta, const Rational &s) {
  if (v[0].is_zero()) throw DomainError("C undefined for v0=0");
  const Rational m = v[1] / v[0];
  return (Rational(6) * s + Rational(1)) / 3 * (m - beta) + beta;
}

Rational d_pairing(const ChernCharacter &f, const ChernCharacter &a, const Rational &beta,
                   const Rational &s) {
  if (a[0].is_zero()) throw DomainError("D undefined for rank-zero A");
  TwistedChern tf = twist(f, beta);
  TwistedChern ta = twist(a, beta);
  const Rational m = a[1] / a[0];
  return (s + kSixth) * (m - beta) * delta(tf, ta, 2, 0) - delta(tf, ta, 3, 0) / 2;
}

std::array<Rational, 3> d_pairing_expansion(const ChernCharacter &f, const ChernCharacter &a,
                                            const Rational &s) {
  if (a[0].is_zero()) throw DomainError("D undefined for rank-zero A");
  const Rational m = a[1] / a[0];
  const Rational d10 = delta(f, a, 1, 0);
  const Rational d20 = delta(f, a, 2, 0);
  const Rational d30 = delta(f, a, 3, 0);
  const Rational sp = s + kSixth;
  return {sp * m * d20 - d30 / 2,
          -(s - Rational(1, 3)) * d20 - sp * m * d10,
          (s - Rational(1, 12)) * d10};
}

Rational beta0_prime(const ChernCharacter &c, const ChernCharacter &b, const Rational &ch3_h0a,
                     const Rational &s) {
  const Rational d20 = delta(c, b, 2, 0);
  const Rational slope_gap = s - Rational(1, 3);
  if (slope_gap.is_zero() || d20.is_zero()) throw DomainError("threshold undefined (degenerate slope)");
  if (b[0].is_zero()) throw DomainError("threshold undefined (rank-zero B)");
  const Rational mu_a = b[1] / b[0];
  const Rational bracket = delta(c, b, 3, 0) / 2 - ch3_h0a * c[0] - (s + kSixth) * mu_a;
  return Rational(-1) / (slope_gap * d20) * bracket;
}

Rational epsilon_bound(const ChernCharacter &v, const PlanePoint &p) {
  if (v[0].sign() <= 0) throw DomainError("epsilon bound requires v0 > 0");
  const Rational &b = p.beta;
  const Rational b2 = b * b;
  return p.t / 6 * (v[1] - b * v[0]) + b * v[2] - b2 / 2 * v[1] + b2 * b / 6 * v[0];
}

} // namespace wallforge
