#include "wallforge/walls.hpp"

#include <algorithm>
#include <cmath>

namespace wallforge {

namespace {

const Rational kSixth(1, 6);

WallCurve make_curve(BiPoly poly, CurveKind kind, Provenance prov) {
  if (poly.is_zero()) throw DomainError("curve is identically zero");
  WallCurve c;
  c.empty = poly.is_constant();
  c.poly = std::move(poly);
  c.kind = kind;
  c.provenance = std::move(prov);
  return c;
}

// Im Z = ch2^b - t ch0 / 2 as a polynomial in (beta, t).
BiPoly im_z_poly(const ChernCharacter &v) {
  auto c = twisted_polys(v);
  return BiPoly::from_beta(c[2]) - BiPoly::monomial(0, 1, v[0] / 2);
}

// Re Z = -(ch3^b - (s + 1/6) t ch1^b).
BiPoly re_z_poly(const ChernCharacter &v, const Rational &s) {
  auto c = twisted_polys(v);
  return (s + kSixth) * BiPoly::t() * BiPoly::from_beta(c[1]) - BiPoly::from_beta(c[3]);
}

bool proportional(const ChernCharacter &u, const ChernCharacter &v) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!delta(u, v, i, j).is_zero()) return false;
  return true;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(Rational(n)).num();
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

} // namespace

const char *to_string(CurveKind kind) {
  switch (kind) {
  case CurveKind::Theta: return "Theta";
  case CurveKind::Gamma: return "Gamma";
  case CurveKind::TiltWall: return "TiltWall";
  case CurveKind::LambdaWall: return "LambdaWall";
  }
  return "?";
}

const char *to_string(Region r) {
  switch (r) {
  case Region::RMinus: return "R_minus";
  case Region::RZero: return "R_zero";
  case Region::RPlus: return "R_plus";
  case Region::OnTheta: return "OnTheta";
  case Region::OnMuLine: return "OnMuLine";
  }
  return "?";
}

BiPoly CircleWall::normalized() const {
  BiPoly b = BiPoly::beta();
  BiPoly shifted = b - BiPoly::constant(center_beta);
  return shifted * shifted + BiPoly::t() - BiPoly::constant(radius_sq);
}

WallCurve CircleWall::curve() const {
  const Rational d20 = delta(u, v, 2, 0);
  const Rational d21 = delta(u, v, 2, 1);
  BiPoly p = (delta10 / 2) * (BiPoly::monomial(2, 0, Rational(1)) + BiPoly::t()) -
             d20 * BiPoly::beta() + BiPoly::constant(d21);
  return make_curve(std::move(p), CurveKind::TiltWall, {{u, v}, std::nullopt, {}});
}

QuadraticRoot::QuadraticRoot(Rational a, Rational b, Rational c, Which which)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), which_(which) {
  if (a_.is_zero()) {
    if (b_.is_zero()) throw DomainError("constant polynomial has no root");
    lo_ = hi_ = -c_ / b_;
    return;
  }
  const Rational disc = discriminant();
  if (disc.sign() < 0) throw DomainError("quadratic has no real root");
  Rational exact;
  if (exact_sqrt(disc, exact)) {
    Rational sgn = which_ == Which::Plus ? Rational(1) : Rational(-1);
    lo_ = hi_ = (-b_ + sgn * exact) / (Rational(2) * a_);
    return;
  }
  // Widen the precision until the enclosure of sqrt(disc) is narrower than the root gap.
  for (unsigned bits = 40;; bits *= 2) {
    Rational sl = sqrt_lower(disc, bits), su = sqrt_upper(disc, bits);
    if (su - sl >= sl) continue;
    Rational n1, n2;
    if (which_ == Which::Plus) {
      n1 = -b_ + sl;
      n2 = -b_ + su;
    } else {
      n1 = -b_ - su;
      n2 = -b_ - sl;
    }
    Rational x1 = n1 / (Rational(2) * a_), x2 = n2 / (Rational(2) * a_);
    lo_ = std::min(x1, x2);
    hi_ = std::max(x1, x2);
    return;
  }
}

void QuadraticRoot::refine() {
  if (lo_ == hi_) return;
  Rational mid = (lo_ + hi_) / 2;
  int sm = eval(mid).sign();
  if (sm == 0) {
    lo_ = hi_ = mid;
    return;
  }
  if (eval(lo_).sign() * sm < 0) hi_ = mid;
  else lo_ = mid;
}

Surd QuadraticRoot::value() const {
  if (a_.is_zero() || lo_ == hi_) return Surd(lo_);
  Rational two_a = Rational(2) * a_;
  Rational sgn = which_ == Which::Plus ? Rational(1) : Rational(-1);
  return Surd(-b_ / two_a, sgn / two_a, discriminant());
}

std::vector<QuadraticRoot> real_roots(const Rational &a, const Rational &b, const Rational &c) {
  std::vector<QuadraticRoot> out;
  if (a.is_zero()) {
    if (!b.is_zero()) out.emplace_back(a, b, c, QuadraticRoot::Which::Plus);
    return out;
  }
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return out;
  out.emplace_back(a, b, c, QuadraticRoot::Which::Minus);
  if (disc.sign() > 0) out.emplace_back(a, b, c, QuadraticRoot::Which::Plus);
  std::sort(out.begin(), out.end());
  return out;
}

std::array<UPoly, 4> twisted_polys(const ChernCharacter &v) {
  const Rational &v0 = v[0], &v1 = v[1], &v2 = v[2], &v3 = v[3];
  return {UPoly::constant(v0), UPoly({v1, -v0}), UPoly({v2, -v1, v0 / 2}),
          UPoly({v3, -v2, v1 / 2, -v0 / 6})};
}

WallCurve theta_curve(const ChernCharacter &v) {
  if (v[0].is_zero()) throw DomainError("Theta undefined for rank 0");
  auto c = twisted_polys(v);
  BiPoly p = Rational(2) * BiPoly::from_beta(c[2]) - BiPoly::monomial(0, 1, v[0]);
  return make_curve(std::move(p), CurveKind::Theta, {{v}, std::nullopt, {}});
}

UPoly theta_height(const ChernCharacter &v) {
  if (v[0].is_zero()) throw DomainError("Theta undefined for rank 0");
  return (Rational(2) / v[0]) * twisted_polys(v)[2];
}

WallCurve gamma_curve(const ChernCharacter &v, const Rational &s, bool flat_display) {
  if (s.sign() <= 0) throw DomainError("s must be positive");
  auto c = twisted_polys(v);
  BiPoly ch1 = BiPoly::from_beta(c[1]);
  BiPoly scaled = flat_display ? ch1 : BiPoly::t() * ch1;
  BiPoly p = Rational(6) * BiPoly::from_beta(c[3]) - (Rational(6) * s + Rational(1)) * scaled;
  Provenance prov{{v}, s, {}};
  if (flat_display) prov.notes.push_back("flat display (t factor dropped)");
  return make_curve(std::move(p), CurveKind::Gamma, std::move(prov));
}

CircleWall tilt_wall(const ChernCharacter &u, const ChernCharacter &v) {
  const Rational d10 = delta(u, v, 1, 0);
  const Rational d20 = delta(u, v, 2, 0);
  const Rational d21 = delta(u, v, 2, 1);
  if (d10.is_zero() && d20.is_zero() && d21.is_zero())
    throw DomainError("degenerate wall (delta identically zero)");
  if (d10.is_zero()) throw DomainError("wall is a vertical line or degenerate");
  CircleWall w;
  w.center_beta = d20 / d10;
  w.radius_sq = w.center_beta * w.center_beta - Rational(2) * d21 / d10;
  if (w.radius_sq.sign() <= 0) throw DomainError("empty wall");
  w.u = u;
  w.v = v;
  w.delta10 = d10;
  return w;
}

WallCurve vertical_wall(const ChernCharacter &u, const ChernCharacter &v) {
  const Rational d10 = delta(u, v, 1, 0);
  const Rational d20 = delta(u, v, 2, 0);
  const Rational d21 = delta(u, v, 2, 1);
  if (!d10.is_zero()) throw DomainError("wall is a semicircle; use tilt_wall");
  if (d20.is_zero()) throw DomainError("degenerate wall (delta identically zero)");
  BiPoly p = -d20 * BiPoly::beta() + BiPoly::constant(d21);
  return make_curve(std::move(p), CurveKind::TiltWall, {{u, v}, std::nullopt, {"vertical"}});
}

WallCurve lambda_wall(const ChernCharacter &u, const ChernCharacter &v, const Rational &s) {
  if (s.sign() <= 0) throw DomainError("s must be positive");
  if (proportional(u, v)) throw DomainError("degenerate λ-wall (identically zero)");
  BiPoly p = re_z_poly(u, s) * im_z_poly(v) - re_z_poly(v, s) * im_z_poly(u);
  if (p.is_zero()) throw DomainError("degenerate λ-wall (identically zero)");
  p = p.primitive();
  Provenance prov{{u, v}, s, {}};
  prov.notes.push_back("degree_beta=" + std::to_string(p.degree_beta()));
  prov.notes.push_back("degree_t=" + std::to_string(p.degree_t()));
  BiPoly q;
  if (!u[0].is_zero() && p.divide_linear_in_t(theta_curve(u).poly, q))
    prov.notes.push_back("divisible by Theta(u)");
  if (!v[0].is_zero() && p.divide_linear_in_t(theta_curve(v).poly, q))
    prov.notes.push_back("divisible by Theta(v)");
  return make_curve(std::move(p), CurveKind::LambdaWall, std::move(prov));
}

std::vector<ThetaIntersection> intersect_theta_tilt(const ChernCharacter &v, const CircleWall &wall) {
  const UPoly theta = theta_height(v);
  // (beta - c)^2 + theta(beta) - r^2 = 0.
  const Rational &c = wall.center_beta;
  const Rational a2 = Rational(1) + theta.coeff(2);
  const Rational a1 = Rational(-2) * c + theta.coeff(1);
  const Rational a0 = c * c - wall.radius_sq + theta.coeff(0);
  std::vector<ThetaIntersection> out;
  auto roots = real_roots(a2, a1, a0);
  const int mult = (roots.size() == 1 && !a2.is_zero()) ? 2 : 1;
  for (auto &r : roots) {
    Surd t = theta(r.value());
    if (t.sign() <= 0) continue;
    out.push_back({r, t, mult});
  }
  return out;
}

Region region_classify(const ChernCharacter &v, const PlanePoint &p) {
  if (v[0].sign() <= 0) throw DomainError("region_classify requires v0 > 0");
  if (p.t.sign() <= 0) throw DomainError("region_classify requires t > 0");
  const int r = rho(v, p).sign();
  if (r < 0) return Region::RZero;
  if (r == 0) return Region::OnTheta;
  const Rational m = v[1] / v[0];
  if (p.beta < m) return Region::RMinus;
  if (p.beta > m) return Region::RPlus;
  return Region::OnMuLine;
}

std::vector<CurveSample> sample_curve(const WallCurve &curve, const Rational &beta_lo,
                                      const Rational &beta_hi, int n_samples) {
  if (n_samples < 2) throw DomainError("n_samples must be at least 2");
  if (curve.poly.degree_t() > 2) throw DomainError("sampling supports degree <= 2 in t");
  std::vector<CurveSample> out;
  const Rational step = (beta_hi - beta_lo) / Rational(n_samples - 1);
  for (int k = 0; k < n_samples; ++k) {
    const Rational beta = beta_lo + step * Rational(k);
    const UPoly q = curve.poly.at_beta(beta);
    if (q.degree() < 1) continue;
    auto roots = real_roots(q.coeff(2), q.coeff(1), q.coeff(0));
    int branch = 0;
    for (const auto &r : roots) {
      Surd t = r.value();
      int sg = t.sign();
      if (sg < 0) continue;
      CurveSample s;
      s.beta = beta.to_double();
      s.alpha = sg == 0 ? 0.0 : std::sqrt(t.to_double());
      s.branch = branch++;
      s.boundary = sg == 0;
      s.grid_index = k;
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Rational> vertical_components(const WallCurve &curve) {
  UPoly g;
  for (int j = 0; j <= curve.poly.degree_t(); ++j) g = UPoly::gcd(g, curve.poly.t_coefficient(j));
  std::vector<Rational> out;
  if (g.degree() < 1) return out;
  if (g.degree() <= 2) {
    for (const auto &r : real_roots(g.coeff(2), g.coeff(1), g.coeff(0)))
      if (r.value().is_rational()) out.push_back(r.value().rational_part());
    return out;
  }
  // Rational root theorem on the integer-scaled polynomial.
  mpz_class l = 1;
  for (const auto &c : g.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Rational> ints;
  for (const auto &c : g.coeffs()) ints.push_back(c * Rational(l));
  int low = 0;
  while (ints[low].is_zero()) ++low;
  if (low > 0) out.push_back(Rational(0));
  const mpz_class a0 = ints[low].num(), an = ints.back().num();
  const mpz_class cap = 1000000;
  if (abs(Rational(a0)) > Rational(cap) || abs(Rational(an)) > Rational(cap)) return out;
  for (const auto &p : divisors(a0))
    for (const auto &q : divisors(an))
      for (int sg : {-1, 1}) {
        Rational cand(mpz_class(sg * p), q);
        if (g(cand).is_zero() && std::find(out.begin(), out.end(), cand) == out.end())
          out.push_back(cand);
      }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace wallforge
