#pragma once

#include "wallforge/charges.hpp"
#include "wallforge/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallforge {

enum class CurveKind { Theta, Gamma, TiltWall, LambdaWall };

const char *to_string(CurveKind kind);

struct Provenance {
  std::vector<ChernCharacter> classes;
  std::optional<Rational> s;
  std::vector<std::string> notes;
};

/// Implicit curve sum c_ij beta^i t^j = 0 in the (beta, t = alpha^2) plane.
struct WallCurve {
  BiPoly poly;
  CurveKind kind = CurveKind::Theta;
  Provenance provenance;
  /// Nonzero constant polynomial: the curve has no points.
  bool empty = false;

  Rational operator()(const PlanePoint &p) const { return poly(p.beta, p.t); }
};

/// Semicircular tilt wall (beta - c)^2 + t = r^2 for the pair (u, v).
struct CircleWall {
  Rational center_beta;
  Rational radius_sq;
  ChernCharacter u;
  ChernCharacter v;
  /// delta10(u, v); the implicit curve is (delta10 / 2)(beta^2 + t) - delta20 beta + delta21.
  Rational delta10;

  /// (beta - c)^2 + t - r^2.
  BiPoly normalized() const;
  WallCurve curve() const;
};

/// The root (-b -/+ sqrt(b^2 - 4ac)) / 2a of a rational quadratic, with an isolating
/// interval containing no other root. a = 0 encodes the linear root -c / b.
class QuadraticRoot {
public:
  enum class Which { Minus, Plus };

  QuadraticRoot(Rational a, Rational b, Rational c, Which which);

  const Rational &a() const { return a_; }
  const Rational &b() const { return b_; }
  const Rational &c() const { return c_; }
  Which which() const { return which_; }
  Rational discriminant() const { return b_ * b_ - Rational(4) * a_ * c_; }

  const Rational &lower() const { return lo_; }
  const Rational &upper() const { return hi_; }
  /// Halves the isolating interval.
  void refine();
  Surd value() const;
  double to_double() const { return value().to_double(); }

  friend std::strong_ordering operator<=>(const QuadraticRoot &x, const QuadraticRoot &y) {
    return x.value() <=> y.value();
  }
  friend bool operator==(const QuadraticRoot &x, const QuadraticRoot &y) { return x.value() == y.value(); }

private:
  Rational eval(const Rational &x) const { return (a_ * x + b_) * x + c_; }

  Rational a_, b_, c_;
  Which which_;
  Rational lo_, hi_;
};

/// Real roots of a quadratic (or linear) polynomial, ascending; a double root appears once.
std::vector<QuadraticRoot> real_roots(const Rational &a, const Rational &b, const Rational &c);

/// ch^beta(v) as polynomials in beta.
std::array<UPoly, 4> twisted_polys(const ChernCharacter &v);

WallCurve theta_curve(const ChernCharacter &v);
/// Re Z = 0: 6 ch3^b - (6s + 1) t ch1^b. With flat_display the t factor is dropped.
WallCurve gamma_curve(const ChernCharacter &v, const Rational &s, bool flat_display = false);
CircleWall tilt_wall(const ChernCharacter &u, const ChernCharacter &v);
/// Linear locus -delta20 beta + delta21 = 0 for delta10 = 0.
WallCurve vertical_wall(const ChernCharacter &u, const ChernCharacter &v);
/// Re Z(u) Im Z(v) - Re Z(v) Im Z(u), divided by its positive rational content.
WallCurve lambda_wall(const ChernCharacter &u, const ChernCharacter &v, const Rational &s);

/// Theta_v as t = theta(beta) for v0 != 0.
UPoly theta_height(const ChernCharacter &v);

struct ThetaIntersection {
  QuadraticRoot beta;
  Surd t;
  int multiplicity = 1;
};

/// Points of Theta_v on the circle with t > 0, ascending in beta.
std::vector<ThetaIntersection> intersect_theta_tilt(const ChernCharacter &v, const CircleWall &wall);

enum class Region { RMinus, RZero, RPlus, OnTheta, OnMuLine };
const char *to_string(Region r);
Region region_classify(const ChernCharacter &v, const PlanePoint &p);

struct CurveSample {
  double beta = 0;
  double alpha = 0;
  int branch = 0;
  bool boundary = false;
  int grid_index = 0;
};

/// Uniform beta grid; emits (beta, sqrt t) for each real root t >= 0 of the curve
/// at that beta. Vertical components (beta constant) are reported separately.
std::vector<CurveSample> sample_curve(const WallCurve &curve, const Rational &beta_lo,
                                      const Rational &beta_hi, int n_samples);
/// Rational beta values of vertical line components of the curve.
std::vector<Rational> vertical_components(const WallCurve &curve);

} // namespace wallforge
