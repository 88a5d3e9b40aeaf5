#include "wallforge/serialize.hpp"

#include <charconv>

namespace wallforge {

std::string format_fixed(double x) {
  if (x == 0) x = 0; // drop negative zero
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 6);
  std::string s(buf, res.ptr);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

json to_json(const Rational &q) { return q.str(); }

Rational rational_from_json(const json &j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected an exact rational string");
}

json to_json(const Slope &s) { return s.str(); }

json to_json(const ChernCharacter &v) {
  json a = json::array();
  for (const auto &c : v.components()) a.push_back(c.str());
  return a;
}

ChernCharacter chern_from_json(const json &j, bool check_lattice) {
  if (!j.is_array() || j.size() < 3 || j.size() > 4) throw ParseError("Chern character needs 3 or 4 entries");
  Rational c[4];
  for (std::size_t i = 0; i < j.size(); ++i) c[i] = rational_from_json(j[i]);
  if (check_lattice) return ChernCharacter(c[0], c[1], c[2], c[3]);
  return ChernCharacter::relaxed(c[0], c[1], c[2], c[3]);
}

json to_json(const ComplexExact &z) { return {{"re", z.re.str()}, {"im", z.im.str()}}; }

ComplexExact complex_from_json(const json &j) {
  return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
}

json to_json(const Surd &s) {
  return {{"p", s.rational_part().str()}, {"q", s.surd_part().str()}, {"d", s.radicand().str()},
          {"approx", format_fixed(s.to_double())}};
}

Surd surd_from_json(const json &j) {
  return Surd(rational_from_json(j.at("p")), rational_from_json(j.at("q")), rational_from_json(j.at("d")));
}

json to_json(const QuadraticRoot &r) {
  return {{"a", r.a().str()},
          {"b", r.b().str()},
          {"c", r.c().str()},
          {"which", r.which() == QuadraticRoot::Which::Plus ? "plus" : "minus"},
          {"interval", {r.lower().str(), r.upper().str()}},
          {"value", to_json(r.value())}};
}

QuadraticRoot root_from_json(const json &j) {
  const std::string w = j.at("which").get<std::string>();
  if (w != "plus" && w != "minus") throw ParseError("root branch must be plus or minus");
  return QuadraticRoot(rational_from_json(j.at("a")), rational_from_json(j.at("b")), rational_from_json(j.at("c")),
                       w == "plus" ? QuadraticRoot::Which::Plus : QuadraticRoot::Which::Minus);
}

namespace {

json provenance_json(const Provenance &p) {
  json classes = json::array();
  for (const auto &v : p.classes) classes.push_back(to_json(v));
  json out{{"classes", classes}, {"notes", p.notes}};
  out["s"] = p.s ? json(p.s->str()) : json(nullptr);
  return out;
}

Provenance provenance_from_json(const json &j) {
  Provenance p;
  for (const auto &c : j.at("classes")) p.classes.push_back(chern_from_json(c, false));
  if (!j.at("s").is_null()) p.s = rational_from_json(j.at("s"));
  p.notes = j.at("notes").get<std::vector<std::string>>();
  return p;
}

CurveKind kind_from_string(const std::string &s) {
  for (auto k : {CurveKind::Theta, CurveKind::Gamma, CurveKind::TiltWall, CurveKind::LambdaWall})
    if (s == to_string(k)) return k;
  throw ParseError("unknown curve kind: " + s);
}

} // namespace

json to_json(const WallCurve &c) {
  json coeffs = json::array();
  for (const auto &[k, v] : c.poly.terms()) coeffs.push_back({k.first, k.second, v.str()});
  return {{"kind", to_string(c.kind)},
          {"coefficients", coeffs},
          {"provenance", provenance_json(c.provenance)},
          {"empty", c.empty}};
}

WallCurve curve_from_json(const json &j) {
  WallCurve c;
  c.kind = kind_from_string(j.at("kind").get<std::string>());
  for (const auto &t : j.at("coefficients")) {
    if (!t.is_array() || t.size() != 3) throw ParseError("coefficient entries are [i, j, value]");
    c.poly = c.poly + BiPoly::monomial(t[0].get<int>(), t[1].get<int>(), rational_from_json(t[2]));
  }
  if (c.poly.is_zero()) throw DomainError("curve is identically zero");
  c.provenance = provenance_from_json(j.at("provenance"));
  c.empty = c.poly.is_constant();
  return c;
}

json to_json(const CircleWall &w) {
  return {{"center_beta", w.center_beta.str()},
          {"radius_sq", w.radius_sq.str()},
          {"pair", {to_json(w.u), to_json(w.v)}},
          {"delta10", w.delta10.str()}};
}

CircleWall circle_from_json(const json &j) {
  CircleWall w;
  w.center_beta = rational_from_json(j.at("center_beta"));
  w.radius_sq = rational_from_json(j.at("radius_sq"));
  w.u = chern_from_json(j.at("pair").at(0), false);
  w.v = chern_from_json(j.at("pair").at(1), false);
  w.delta10 = rational_from_json(j.at("delta10"));
  return w;
}

json to_json(const EnumerationReport &r) {
  json cands = json::array();
  for (const auto &c : r.candidates)
    cands.push_back({{"u", to_json(c.u)},
                     {"center_beta", c.wall.center_beta.str()},
                     {"radius_sq", c.wall.radius_sq.str()},
                     {"delta_u", c.delta_u.str()},
                     {"delta_quot", c.delta_quot.str()}});
  json walls = json::array();
  for (const auto &g : r.walls) {
    json classes = json::array();
    for (const auto &u : g.classes) classes.push_back(to_json(u));
    walls.push_back({{"wall", to_json(g.wall)}, {"classes", classes}});
  }
  json u1 = json::array();
  for (const auto &x : r.search_bounds.u1) u1.push_back({x.u0, x.lo.get_str(), x.hi.get_str()});
  return {{"v", to_json(r.v)},
          {"t_min", r.t_min.str()},
          {"candidates", cands},
          {"walls", walls},
          {"wall_count", r.wall_count},
          {"truncated", r.truncated},
          {"assumptions", r.assumptions},
          {"search_bounds",
           {{"u0", {r.search_bounds.u0_lo.str(), r.search_bounds.u0_hi.str()}},
            {"u1", u1},
            {"classes_tested", r.search_bounds.classes_tested}}}};
}

std::string to_csv(const EnumerationReport &r) {
  std::string out = "u0,u1,u2,center,radius_sq\n";
  for (const auto &c : r.candidates)
    out += c.u[0].str() + "," + c.u[1].str() + "," + c.u[2].str() + "," + c.wall.center_beta.str() + "," +
           c.wall.radius_sq.str() + "\n";
  return out;
}

json to_json(const FinitenessReport &r) {
  return {{"tilt_wall_count", r.tilt_wall_count},
          {"candidate_count", r.candidate_count},
          {"max_radius_sq", r.max_radius_sq ? json(r.max_radius_sq->str()) : json(nullptr)},
          {"lambda_walls", r.lambda_walls},
          {"theta_crossing", r.theta_crossing},
          {"coincident", r.coincident},
          {"contains_theta", r.contains_theta},
          {"consistent", r.consistent},
          {"assumptions", r.assumptions}};
}

json to_json(const OrderingCheck &c) {
  json br = json::array();
  for (const auto &b : c.breakdown) br.push_back({{"name", b.name}, {"value", b.value.str()}, {"holds", b.holds}});
  json out{{"type", to_string(c.type)}, {"holds", c.holds}, {"breakdown", br}};
  out["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  return out;
}

json classification_json(const Rational &b) {
  const LimitType t = classify_limit_type(b);
  const StabCoeffs c = rho_coeffs(b);
  const OrderingCheck chk = ordering_check(c, t);
  json held = json::array();
  for (auto h : holding_configurations(c)) held.push_back(to_string(h));
  json witness = json(nullptr);
  if (chk.witness) {
    const ComplexExact &d = *chk.witness;
    witness = json::array({json::array({d.re.str(), d.im.str()}), json::array({(-d.re).str(), (-d.im).str()})});
  }
  return {{"b", b.str()},
          {"type", to_string(t)},
          {"witness_interval", witness},
          {"configurations", held},
          {"consistent", held.size() == 1 && held[0] == to_string(t)},
          {"check", to_json(chk)}};
}

json to_json(const PolyCharge &z) {
  json a = json::array();
  for (const auto &c : z.coeff) a.push_back(to_json(c));
  return a;
}

} // namespace wallforge
