#pragma once

#include "wallforge/chern.hpp"

#include <array>

namespace wallforge {

/// A point of the (beta, alpha) upper half-plane, stored with t = alpha^2.
struct PlanePoint {
  Rational beta;
  Rational t;
};

struct ComplexExact {
  Rational re;
  Rational im;

  friend bool operator==(const ComplexExact &, const ComplexExact &) = default;
  ComplexExact operator-() const { return {-re, -im}; }
};

/// re(a) im(b) - im(a) re(b): positive iff b is counter-clockwise from a.
Rational cross(const ComplexExact &a, const ComplexExact &b);
Rational dot(const ComplexExact &a, const ComplexExact &b);

/// Tilt slope nu = (ch2^b - t ch0 / 2) / (alpha ch1^b). Returned as its rational
/// part q with nu = q / alpha; since alpha > 0 comparisons of q are order-exact.
struct TiltSlope {
  Slope rational_part;
  bool divide_by_alpha = true;
};

TiltSlope nu(const ChernCharacter &v, const PlanePoint &p);

/// rho_{beta,alpha} = ch2^beta - t ch0 / 2.
Rational rho(const ChernCharacter &v, const PlanePoint &p);

ComplexExact central_charge(const ChernCharacter &v, const PlanePoint &p, const Rational &s);
/// Quarter rotation of the central charge: Zhat = -i Z.
ComplexExact zhat(const ChernCharacter &v, const PlanePoint &p, const Rational &s);

/// Bridgeland slope (ch3^b - (s + 1/6) t ch1^b) / rho; +inf when rho = 0.
Slope lambda(const ChernCharacter &v, const PlanePoint &p, const Rational &s);

/// The 4x4 symmetric matrix of the support-property form at (t, K).
std::array<std::array<Rational, 4>, 4> q_matrix(const Rational &t, const Rational &K);
Rational q_form(const ChernCharacter &v, const PlanePoint &p, const Rational &K);
Rational q_pairing(const ChernCharacter &f, const ChernCharacter &a, const PlanePoint &p,
                   const Rational &K);
/// Advisory check for the admissible window 1 <= K < 6s + 1.
bool is_supported_range(const Rational &K, const Rational &s);

/// (6s+1)/3 (mu(v) - beta) + beta. Throws DomainError for rank zero.
Rational c_const(const ChernCharacter &v, const Rational &beta, const Rational &s);

/// D_{beta,s}(F, A) = (s + 1/6)(mu(A) - beta) delta20^beta(F, A) - delta30^beta(F, A) / 2.
Rational d_pairing(const ChernCharacter &f, const ChernCharacter &a, const Rational &beta,
                   const Rational &s);

/// D as a polynomial in beta: coeffs[k] multiplies beta^k (degree <= 2; affine when
/// delta10(F, A) = 0).
std::array<Rational, 3> d_pairing_expansion(const ChernCharacter &f, const ChernCharacter &a,
                                            const Rational &s);

/// Threshold beta0' for the destabilizing subsheaf C of B = H^{-1}(A); mu(A) is read as mu(B).
Rational beta0_prime(const ChernCharacter &c, const ChernCharacter &b, const Rational &ch3_h0a,
                     const Rational &s);

/// Upper bound on ch3 of 2-Gieseker semistable sheaves with ch_{<=2} = v, evaluated at
/// a point of Theta_v^- that the caller certifies to be left of every tilt wall.
Rational epsilon_bound(const ChernCharacter &v, const PlanePoint &p);

} // namespace wallforge
