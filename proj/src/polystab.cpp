#include "wallforge/polystab.hpp"

namespace wallforge {

namespace {

ComplexExact times(const ComplexExact &z, const Rational &k) { return {z.re * k, z.im * k}; }

struct Named {
  std::string name;
  ComplexExact z;
};

// Sign of a polynomial for large m; coefficients indexed by degree.
template <std::size_t N>
int eventual_sign(const std::array<Rational, N> &p) {
  for (std::size_t k = N; k-- > 0;)
    if (!p[k].is_zero()) return p[k].sign();
  return 0;
}

OrderingCheck chain_check(LimitType type, const std::vector<Named> &order) {
  OrderingCheck out;
  out.type = type;
  out.holds = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      Rational val = cross(order[i].z, order[j].z);
      bool ok = val.sign() > 0;
      out.breakdown.push_back({"cross(" + order[i].name + "," + order[j].name + ")", val, ok});
      out.holds = out.holds && ok;
    }
  if (out.holds) {
    const ComplexExact &lo = order.front().z, &hi = order.back().z;
    out.witness = ComplexExact{lo.re - hi.re, lo.im - hi.im};
  }
  return out;
}

void add_pt_determinants(const StabCoeffs &c, OrderingCheck &out) {
  const ComplexExact m2 = -c[2], m3 = -c[3];
  out.breakdown.push_back({"det(rho1,-rho3)", cross(c[1], m3), cross(c[1], m3).sign() > 0});
  out.breakdown.push_back({"det(rho1,-rho2)", cross(c[1], m2), cross(c[1], m2).sign() > 0});
  out.breakdown.push_back({"det(-rho3,-rho2)", cross(m3, m2), cross(m3, m2).sign() > 0});
  out.breakdown.push_back({"Im(-rho2)", m2.im, m2.im.sign() > 0});
  out.breakdown.push_back({"Im(-rho3)", m3.im, m3.im.sign() > 0});
}

} // namespace

StabCoeffs rho_coeffs(const Rational &b) {
  const Rational b2 = b * b, b3 = b2 * b;
  StabCoeffs c;
  c.b = b;
  c.rho[0] = {Rational(-1), Rational(0)};
  c.rho[1] = {b, Rational(1)};
  c.rho[2] = {Rational(1, 2) - b2 / 2, -b};
  c.rho[3] = {-b / 2 + b3 / 6, Rational(-1, 6) + b2 / 2};
  return c;
}

const char *to_string(LimitType t) {
  switch (t) {
  case LimitType::DT: return "DT";
  case LimitType::PT: return "PT";
  case LimitType::LargeVolume: return "LargeVolume";
  case LimitType::DualPT: return "DualPT";
  case LimitType::DualDT: return "DualDT";
  }
  return "?";
}

LimitType parse_limit_type(const std::string &s) {
  for (auto t : {LimitType::DT, LimitType::PT, LimitType::LargeVolume, LimitType::DualPT, LimitType::DualDT})
    if (s == to_string(t)) return t;
  throw ParseError("unknown limit type: " + s);
}

LimitType classify_limit_type(const Rational &b) {
  if (b.is_zero()) return LimitType::LargeVolume;
  const bool steep = b * b > Rational(1, 3);
  if (b.sign() < 0) return steep ? LimitType::DT : LimitType::PT;
  return steep ? LimitType::DualDT : LimitType::DualPT;
}

OrderingCheck ordering_check(const StabCoeffs &c, LimitType type) {
  const ComplexExact &r0 = c[0], &r1 = c[1], &r2 = c[2], &r3 = c[3];
  switch (type) {
  case LimitType::PT: {
    auto out = chain_check(type, {{"rho1", r1}, {"-rho3", -r3}, {"rho0", r0}, {"-rho2", -r2}});
    add_pt_determinants(c, out);
    return out;
  }
  case LimitType::DT:
    return chain_check(type, {{"rho1", r1}, {"rho0", r0}, {"-rho3", -r3}, {"-rho2", -r2}});
  case LimitType::DualPT:
    return chain_check(type, {{"-rho3", -r3}, {"rho1", r1}, {"-rho2", -r2}, {"rho0", r0}});
  case LimitType::DualDT: {
    auto out = chain_check(type, {{"-rho2", -r2}, {"rho3", r3}, {"rho0", r0}, {"-rho1", -r1}});
    for (int i = 0; i < 3; ++i) {
      Rational val = cross(c[i + 1], c[i]);
      bool ok = val.sign() > 0;
      out.breakdown.push_back({"cross(rho" + std::to_string(i + 1) + ",rho" + std::to_string(i) + ")", val, ok});
      out.holds = out.holds && ok;
    }
    if (!out.holds) out.witness.reset();
    return out;
  }
  case LimitType::LargeVolume: {
    OrderingCheck out;
    out.type = type;
    const ComplexExact m2 = -r2, m3 = -r3;
    auto add = [&](std::string name, Rational val, bool ok) {
      out.breakdown.push_back({std::move(name), std::move(val), ok});
    };
    add("cross(rho0,-rho2)", cross(r0, m2), cross(r0, m2).is_zero());
    add("dot(rho0,-rho2)", dot(r0, m2), dot(r0, m2).sign() > 0);
    add("cross(rho1,-rho3)", cross(r1, m3), cross(r1, m3).is_zero());
    add("dot(rho1,-rho3)", dot(r1, m3), dot(r1, m3).sign() > 0);
    add("cross(rho1,rho0)", cross(r1, r0), cross(r1, r0).sign() > 0);
    out.holds = true;
    for (const auto &b : out.breakdown) out.holds = out.holds && b.holds;
    if (out.holds) out.witness = ComplexExact{r1.re - r0.re, r1.im - r0.im};
    return out;
  }
  }
  return {};
}

OrderingCheck pt_config_check(const StabCoeffs &c) { return ordering_check(c, LimitType::PT); }

std::vector<LimitType> holding_configurations(const StabCoeffs &c) {
  std::vector<LimitType> out;
  for (auto t : {LimitType::DT, LimitType::PT, LimitType::LargeVolume, LimitType::DualPT, LimitType::DualDT})
    if (ordering_check(c, t).holds) out.push_back(t);
  return out;
}

ComplexExact PolyCharge::operator()(const Rational &m) const {
  ComplexExact acc{Rational(0), Rational(0)};
  for (int k = 3; k >= 0; --k) acc = {acc.re * m + coeff[k].re, acc.im * m + coeff[k].im};
  return acc;
}

bool PolyCharge::is_zero() const {
  for (const auto &c : coeff)
    if (!c.re.is_zero() || !c.im.is_zero()) return false;
  return true;
}

PolyCharge scale(const PolyCharge &z, const Rational &k) {
  PolyCharge out;
  for (int i = 0; i < 4; ++i) out.coeff[i] = times(z.coeff[i], k);
  return out;
}

PolyCharge poly_charge_rho(const ChernCharacter &v, const Rational &b) {
  const StabCoeffs c = rho_coeffs(b);
  PolyCharge z;
  for (int k = 0; k < 4; ++k) z.coeff[k] = times(c[k], v[3 - k]);
  return z;
}

PolyCharge poly_charge_general(const ChernCharacter &v, const Rational &f2, const Rational &g2,
                               const Rational &beta) {
  if (f2.sign() <= 0 || g2.sign() <= 0) throw DomainError("f2 and g2 must be positive");
  const TwistedChern c = twist(v, beta);
  PolyCharge z;
  z.coeff[0] = {-c[3], Rational(0)};
  z.coeff[1] = {Rational(0), c[2]};
  z.coeff[2] = {f2 / 2 * c[1], Rational(0)};
  z.coeff[3] = {Rational(0), -(g2 / 6) * c[0]};
  return z;
}

const char *to_string(PhaseOrder o) {
  switch (o) {
  case PhaseOrder::Precedes: return "precedes";
  case PhaseOrder::Equal: return "equal";
  case PhaseOrder::Succeeds: return "succeeds";
  }
  return "?";
}

namespace {

// 0: phase in (a, a + 1]; 1: phase in (a + 1, a + 2], where a = phase(cut).
int branch_class(const PolyCharge &z, const ComplexExact &cut) {
  std::array<Rational, 4> cr, dt;
  for (int k = 0; k < 4; ++k) {
    cr[k] = cross(cut, z.coeff[k]);
    dt[k] = dot(cut, z.coeff[k]);
  }
  int sc = eventual_sign(cr);
  if (sc > 0) return 0;
  if (sc < 0) return 1;
  return eventual_sign(dt) < 0 ? 0 : 1;
}

} // namespace

PhaseOrder compare_poly_phase(const PolyCharge &f, const PolyCharge &e, const ComplexExact &cut) {
  if (f.is_zero() || e.is_zero()) throw DomainError("phase comparison requires nonzero charges");
  if (cut.re.is_zero() && cut.im.is_zero()) throw DomainError("cut direction must be nonzero");
  const int cf = branch_class(f, cut), ce = branch_class(e, cut);
  if (cf != ce) return cf < ce ? PhaseOrder::Precedes : PhaseOrder::Succeeds;
  std::array<Rational, 7> cr;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) cr[i + j] += cross(f.coeff[i], e.coeff[j]);
  const int s = eventual_sign(cr);
  if (s > 0) return PhaseOrder::Precedes;
  if (s < 0) return PhaseOrder::Succeeds;
  return PhaseOrder::Equal;
}

bool check_3f2_minus_g2(const Rational &f2, const Rational &g2) {
  return (Rational(3) * f2 - g2).sign() > 0;
}

} // namespace wallforge
