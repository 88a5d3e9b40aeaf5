#pragma once

#include "wallforge/charges.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wallforge {

/// rho_0..rho_3 of the polynomial central charge for B = b m omega.
struct StabCoeffs {
  std::array<ComplexExact, 4> rho;
  Rational b;

  const ComplexExact &operator[](std::size_t i) const { return rho[i]; }
};

StabCoeffs rho_coeffs(const Rational &b);

enum class LimitType { DT, PT, LargeVolume, DualPT, DualDT };

const char *to_string(LimitType t);
LimitType parse_limit_type(const std::string &s);

/// Interval rule: sign of b and exact comparison of b^2 with 1/3.
LimitType classify_limit_type(const Rational &b);

struct InequalityCheck {
  std::string name;
  Rational value;
  bool holds = false;
};

struct OrderingCheck {
  LimitType type = LimitType::PT;
  bool holds = false;
  std::vector<InequalityCheck> breakdown;
  /// Boundary direction d: every vector has phase in (phase(d), phase(d) + 1).
  std::optional<ComplexExact> witness;
};

/// The PT configuration phi(rho1) < phi(-rho3) < phi(rho0) < phi(-rho2) in a common half-plane.
OrderingCheck pt_config_check(const StabCoeffs &c);
OrderingCheck ordering_check(const StabCoeffs &c, LimitType type);
/// Types whose configuration holds at c.
std::vector<LimitType> holding_configurations(const StabCoeffs &c);

/// Coefficients of m^0..m^3.
struct PolyCharge {
  std::array<ComplexExact, 4> coeff;

  ComplexExact operator()(const Rational &m) const;
  bool is_zero() const;
  friend bool operator==(const PolyCharge &, const PolyCharge &) = default;
};

PolyCharge scale(const PolyCharge &z, const Rational &k);

/// coeff[k] = rho_k(b) v_{3-k}.
PolyCharge poly_charge_rho(const ChernCharacter &v, const Rational &b);
/// -ch3^B + f2 m^2 ch1^B / 2 + i (m ch2^B - g2 m^3 ch0^B / 6), B = beta.
PolyCharge poly_charge_general(const ChernCharacter &v, const Rational &f2, const Rational &g2,
                               const Rational &beta);

enum class PhaseOrder { Precedes, Equal, Succeeds };
const char *to_string(PhaseOrder o);

/// Order of phi(F)(m) and phi(E)(m) for m >> 0, phases taken in (phase(cut), phase(cut) + 2].
PhaseOrder compare_poly_phase(const PolyCharge &f, const PolyCharge &e,
                              const ComplexExact &cut = {Rational(1), Rational(1)});

bool check_3f2_minus_g2(const Rational &f2, const Rational &g2);

} // namespace wallforge
