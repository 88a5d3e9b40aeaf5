#pragma once

#include "wallforge/rational.hpp"

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wallforge {

/// Chern character (ch0, ch1, ch2, ch3) with polarization powers folded in,
/// living on the lattice Z x Z x (1/2)Z x (1/6)Z.
class ChernCharacter {
public:
  ChernCharacter() = default;
  /// Checked constructor: throws LatticeError off the lattice.
  ChernCharacter(Rational v0, Rational v1, Rational v2, Rational v3);

  /// Skips the lattice check (for twisted or test-generated classes).
  static ChernCharacter relaxed(Rational v0, Rational v1, Rational v2, Rational v3);

  static bool on_lattice(const Rational &v0, const Rational &v1, const Rational &v2,
                         const Rational &v3);

  const Rational &operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 4> &components() const { return c_; }
  bool is_lattice() const { return on_lattice(c_[0], c_[1], c_[2], c_[3]); }

  friend ChernCharacter operator+(const ChernCharacter &a, const ChernCharacter &b);
  friend ChernCharacter operator-(const ChernCharacter &a, const ChernCharacter &b);
  friend ChernCharacter operator*(const Rational &k, const ChernCharacter &a);
  friend bool operator==(const ChernCharacter &, const ChernCharacter &) = default;

  std::string str() const;

private:
  std::array<Rational, 4> c_;
};

/// ch^beta = exp(-beta H) ch, evaluated at a rational beta. No lattice check.
struct TwistedChern {
  std::array<Rational, 4> c;
  Rational beta;

  const Rational &operator[](std::size_t i) const { return c[i]; }
};

TwistedChern twist(const ChernCharacter &v, const Rational &beta);
/// Inverse of twist: multiplies by exp(beta H).
ChernCharacter untwist(const TwistedChern &tw);

/// delta_ij(F, A) = ch_i(F) ch_j(A) - ch_j(F) ch_i(A).
Rational delta(const ChernCharacter &f, const ChernCharacter &a, int i, int j);
Rational delta(const TwistedChern &f, const TwistedChern &a, int i, int j);

/// Bogomolov discriminant v1^2 - 2 v0 v2.
Rational discriminant(const ChernCharacter &v);
Rational discriminant(const TwistedChern &v);

Slope mu(const ChernCharacter &v);
Slope hat_mu(const ChernCharacter &v);

ChernCharacter dual(const ChernCharacter &v);
ChernCharacter negate(const ChernCharacter &v);

/// ch(O(t)) = (1, t, t^2/2, t^3/6); assumes H^3 = 1.
ChernCharacter line_bundle(long degree);

struct TwistTerm {
  long multiplicity;
  long degree;
};

/// Sum of multiplicity * ch(O(degree)); alternating sums of resolutions allowed.
ChernCharacter from_twists(std::span<const TwistTerm> terms);

/// Parses "2,-1,-1/2,-1/6". Throws ParseError, or LatticeError when checked.
ChernCharacter parse_chern(const std::string &text, bool check_lattice = true);

} // namespace wallforge
