#pragma once

#include "wallforge/destabilizers.hpp"
#include "wallforge/polystab.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace testkit {

using namespace wallforge;

inline std::mt19937_64 &rng() {
  static std::mt19937_64 g(0x5eed2024ULL);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// p/q with |p| <= num_bound, 1 <= q <= den_bound.
inline Rational random_rational(long num_bound = 12, long den_bound = 6) {
  return Rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
}

inline Rational random_positive(long num_bound = 12, long den_bound = 6) {
  return Rational(uniform(1, num_bound), uniform(1, den_bound));
}

/// Random lattice class with entries in a small box.
inline ChernCharacter random_lattice(long bound = 4) {
  return ChernCharacter(Rational(uniform(-bound, bound)), Rational(uniform(-bound, bound)),
                        Rational(uniform(-2 * bound, 2 * bound), 2), Rational(uniform(-6 * bound, 6 * bound), 6));
}

// ---- independent oracles ---------------------------------------------------

/// exp(-beta H) ch as a truncated series product, not the closed formulas.
inline std::array<Rational, 4> twist_series(const ChernCharacter &v, const Rational &beta) {
  std::array<Rational, 4> e{Rational(1), -beta, beta * beta / 2, -beta * beta * beta / 6};
  std::array<Rational, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) out[i + j] += e[i] * v[j];
  return out;
}

/// K t Delta + 4 (ch2^b)^2 - 6 ch1^b ch3^b from the series twist.
inline Rational q_form_expanded(const ChernCharacter &v, const PlanePoint &p, const Rational &K) {
  auto c = twist_series(v, p.beta);
  Rational disc = c[1] * c[1] - Rational(2) * c[0] * c[2];
  return K * p.t * disc + Rational(4) * c[2] * c[2] - Rational(6) * c[1] * c[3];
}

/// Slope-equality check straight from the definitions (cross-multiplied).
inline bool nu_equal_direct(const ChernCharacter &u, const ChernCharacter &v, const PlanePoint &p) {
  auto a = twist_series(u, p.beta), b = twist_series(v, p.beta);
  Rational ru = a[2] - p.t * a[0] / 2, rv = b[2] - p.t * b[0] / 2;
  return ru * b[1] == rv * a[1];
}

/// ch1^b = 0 and ch2^b - t ch0 / 2 = 0: the tilt charge vanishes and nu is undefined.
inline bool tilt_charge_zero(const ChernCharacter &v, const PlanePoint &p) {
  auto c = twist_series(v, p.beta);
  return c[1].is_zero() && (c[2] - p.t * c[0] / 2).is_zero();
}

/// Float phase in (cut, cut + 2] (units of pi).
inline double phase_in_branch(std::complex<double> z, double cut) {
  double ph = std::atan2(z.imag(), z.real()) / M_PI;
  while (ph <= cut) ph += 2;
  while (ph > cut + 2) ph -= 2;
  return ph;
}

inline std::complex<double> eval_float(const PolyCharge &z, double m) {
  std::complex<double> acc = 0;
  for (int k = 3; k >= 0; --k) acc = acc * m + std::complex<double>(z.coeff[k].re.to_double(), z.coeff[k].im.to_double());
  return acc;
}

/// Constraints (a)-(d) evaluated at the chord endpoints c +/- sqrt(r^2 - t_min) as surds.
inline bool constraints_oracle(const ChernCharacter &v, const ChernCharacter &u, const Rational &t_min) {
  auto d = [&](int i, int j) { return u[i] * v[j] - u[j] * v[i]; };
  if (d(1, 0).is_zero()) return false;
  Rational c = d(2, 0) / d(1, 0);
  Rational r2 = c * c - Rational(2) * d(2, 1) / d(1, 0);
  if (!(r2 > t_min)) return false;
  const ChernCharacter w = ChernCharacter::relaxed(v[0] - u[0], v[1] - u[1], v[2] - u[2], Rational(0));
  auto disc = [](const ChernCharacter &x) { return x[1] * x[1] - Rational(2) * x[0] * x[2]; };
  if (disc(u).sign() < 0 || disc(w).sign() < 0) return false;
  for (int sg : {-1, 1}) {
    Surd beta(c, Rational(sg), r2 - t_min);
    for (const ChernCharacter *x : {&u, &w}) {
      Surd ch1 = Surd((*x)[1]) - beta * (*x)[0];
      if (ch1.sign() < 0) return false;
    }
  }
  bool prop = d(1, 0).is_zero() && d(2, 0).is_zero() && d(2, 1).is_zero();
  return !prop;
}

/// Float screen for the brute force: true only when the constraints fail by a wide margin,
/// so anything near a boundary still goes to the exact oracle.
inline bool clearly_fails(const ChernCharacter &v, const ChernCharacter &u, double t_min) {
  const double u0 = u[0].to_double(), u1 = u[1].to_double(), u2 = u[2].to_double();
  const double v0 = v[0].to_double(), v1 = v[1].to_double(), v2 = v[2].to_double();
  const double w0 = v0 - u0, w1 = v1 - u1, w2 = v2 - u2;
  const double eps = 1e-6;
  const double d10 = u1 * v0 - u0 * v1, d20 = u2 * v0 - u0 * v2, d21 = u2 * v1 - u1 * v2;
  if (d10 == 0) return false;
  if (u1 * u1 - 2 * u0 * u2 < -eps || w1 * w1 - 2 * w0 * w2 < -eps) return true;
  const double c = d20 / d10, gap = c * c - 2 * d21 / d10 - t_min;
  if (gap < -eps) return true;
  if (gap <= eps) return false;
  const double h = std::sqrt(gap);
  for (double beta : {c - h, c + h})
    if (u1 - beta * u0 < -eps || w1 - beta * w0 < -eps) return true;
  return false;
}

/// Padded brute force over a box that contains the derived bounds with margin.
inline std::vector<ChernCharacter> brute_force(const ChernCharacter &v, const Rational &t_min, long u0_lo,
                                               long u0_hi, long u1_lo, long u1_hi, long h2_lo, long h2_hi) {
  std::vector<ChernCharacter> out;
  for (long u0 = u0_lo; u0 <= u0_hi; ++u0)
    for (long u1 = u1_lo; u1 <= u1_hi; ++u1)
      for (long h = h2_lo; h <= h2_hi; ++h) {
        ChernCharacter u(Rational(u0), Rational(u1), Rational(h, 2), Rational(0));
        if (constraints_oracle(v, u, t_min)) out.push_back(u);
      }
  return out;
}

} // namespace testkit
