#include "wallforge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace wallforge::cli {

namespace {

Rational flag_rational(const std::string &flag, const std::string &text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError &e) {
    throw ParseError(flag + ": " + e.what());
  }
}

ChernCharacter flag_chern(const std::string &text) {
  try {
    return parse_chern(text, true);
  } catch (const ParseError &e) {
    throw ParseError(std::string("--v: ") + e.what());
  }
}

std::pair<Rational, Rational> flag_range(const std::string &flag, const std::string &text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError(flag + ": expected a:b");
  Rational a = flag_rational(flag, text.substr(0, colon));
  Rational b = flag_rational(flag, text.substr(colon + 1));
  if (!(a < b)) throw ParseError(flag + ": empty range");
  return {a, b};
}

void emit(std::ostream &out, const std::optional<std::string> &path, const std::string &text) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw IoError("cannot open " + *path);
  f << text;
  f.close();
  if (!f) throw IoError("cannot write " + *path);
}

// ---- wall plot data --------------------------------------------------------

struct PlotCurve {
  std::string id;
  std::string role; // theta, gamma, largest, wall
  WallCurve curve;
};

struct PlotData {
  EnumerationReport enumeration;
  std::optional<LastWallPoint> last;
  std::vector<PlotCurve> curves;
  Rational beta_lo, beta_hi;
  double alpha_max = 2;
};

PlotData build_plot(const WallsRequest &req) {
  PlotData d;
  d.enumeration = enumerate_tilt_destabilizers(req.v, req.t_min);
  d.last = last_wall_on_theta(req.v);
  d.curves.push_back({"theta", "theta", theta_curve(req.v)});
  d.curves.push_back({"gamma", "gamma", gamma_curve(req.v, req.s)});
  double rmax = 0;
  for (std::size_t k = 0; k < d.enumeration.walls.size(); ++k) {
    char id[32];
    std::snprintf(id, sizeof id, "wall_%03zu", k);
    const auto &w = d.enumeration.walls[k].wall;
    d.curves.push_back({id, k == 0 ? "largest" : "wall", w.curve()});
    rmax = std::max(rmax, std::sqrt(w.radius_sq.to_double()));
  }
  const Rational mu_v = req.v[1] / req.v[0];
  if (req.beta_range) {
    d.beta_lo = req.beta_range->first;
    d.beta_hi = req.beta_range->second;
  } else {
    d.beta_lo = mu_v - Rational(4);
    d.beta_hi = mu_v + Rational(2);
    for (const auto &g : d.enumeration.walls) {
      Rational left = g.wall.center_beta - sqrt_upper(g.wall.radius_sq) - Rational(1);
      if (left < d.beta_lo) d.beta_lo = Rational(left.floor());
    }
  }
  d.alpha_max = std::max(2.0, 1.25 * rmax);
  return d;
}

struct Row {
  std::string id;
  std::string kind;
  double beta;
  double alpha;
  int branch;
};

std::vector<Row> plot_rows(const PlotData &d, int samples) {
  std::vector<Row> rows;
  for (const auto &c : d.curves) {
    for (const auto &s : sample_curve(c.curve, d.beta_lo, d.beta_hi, samples))
      rows.push_back({c.id, to_string(c.curve.kind), s.beta, s.alpha, s.branch});
    for (const auto &b : vertical_components(c.curve)) {
      if (b < d.beta_lo || b > d.beta_hi) continue;
      rows.push_back({c.id, to_string(c.curve.kind), b.to_double(), 0.0, -1});
      rows.push_back({c.id, to_string(c.curve.kind), b.to_double(), d.alpha_max, -1});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
    return std::tie(a.id, a.beta, a.branch, a.alpha) < std::tie(b.id, b.beta, b.branch, b.alpha);
  });
  return rows;
}

json last_point_json(const std::optional<LastWallPoint> &last) {
  if (!last) return nullptr;
  json walls = json::array();
  for (const auto &w : last->walls) walls.push_back(to_json(w));
  return {{"beta", to_json(last->beta)},
          {"t", to_json(last->t)},
          {"alpha_approx", format_fixed(std::sqrt(last->t.to_double()))},
          {"walls", walls}};
}

// ---- SVG -------------------------------------------------------------------

constexpr int kWidth = 800, kHeight = 600;
constexpr double kLeft = 60, kRight = 20, kTop = 20, kBottom = 40;

struct Frame {
  double b0, b1, amax;
  double x(double beta) const { return kLeft + (beta - b0) / (b1 - b0) * (kWidth - kLeft - kRight); }
  double y(double alpha) const { return kHeight - kBottom - alpha / amax * (kHeight - kTop - kBottom); }
};

std::string pt(const Frame &f, double beta, double alpha) {
  return format_fixed(f.x(beta)) + " " + format_fixed(f.y(alpha));
}

std::string curve_path(const PlotData &d, const PlotCurve &c, const Frame &f, int samples) {
  auto pts = sample_curve(c.curve, d.beta_lo, d.beta_hi, samples);
  std::string path;
  for (int branch = 0; branch <= 1; ++branch) {
    int prev = -2;
    for (const auto &s : pts) {
      if (s.branch != branch) continue;
      if (s.alpha > f.amax) {
        prev = -2;
        continue;
      }
      path += (s.grid_index == prev + 1 ? " L " : " M ") + pt(f, s.beta, s.alpha);
      prev = s.grid_index;
    }
  }
  for (const auto &b : vertical_components(c.curve)) {
    if (b < d.beta_lo || b > d.beta_hi) continue;
    path += " M " + pt(f, b.to_double(), 0) + " L " + pt(f, b.to_double(), f.amax);
  }
  if (!path.empty()) path.erase(0, 1);
  return path;
}

std::string svg_text(const PlotData &d, const WallsRequest &req) {
  const Frame f{d.beta_lo.to_double(), d.beta_hi.to_double(), d.alpha_max};
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  const double axis_x = (f.b0 <= 0 && 0 <= f.b1) ? f.x(0) : kLeft;
  o << "<line x1=\"" << format_fixed(kLeft) << "\" y1=\"" << format_fixed(f.y(0)) << "\" x2=\""
    << format_fixed(kWidth - kRight) << "\" y2=\"" << format_fixed(f.y(0)) << "\" stroke=\"#444\"/>\n";
  o << "<line x1=\"" << format_fixed(axis_x) << "\" y1=\"" << format_fixed(f.y(0)) << "\" x2=\""
    << format_fixed(axis_x) << "\" y2=\"" << format_fixed(kTop) << "\" stroke=\"#444\"/>\n";
  for (long k = d.beta_lo.ceil().get_si(); Rational(k) <= d.beta_hi; ++k)
    o << "<text x=\"" << format_fixed(f.x(double(k))) << "\" y=\"" << format_fixed(f.y(0) + 16)
      << "\" font-size=\"11\" text-anchor=\"middle\">" << k << "</text>\n";
  o << "<text x=\"" << format_fixed(kWidth - kRight) << "\" y=\"" << format_fixed(f.y(0) + 32)
    << "\" font-size=\"12\" text-anchor=\"end\">beta</text>\n";
  o << "<text x=\"" << format_fixed(axis_x + 4) << "\" y=\"" << format_fixed(kTop + 10)
    << "\" font-size=\"12\">alpha</text>\n";
  // Curves.
  for (const auto &c : d.curves) {
    std::string stroke = "black", extra;
    if (c.role == "theta") stroke = "blue";
    else if (c.role == "largest") stroke = "red";
    else if (c.role == "gamma") {
      stroke = "#2a9d2a";
      extra = " stroke-dasharray=\"6 4\"";
    }
    o << "<path id=\"" << c.id << "\" d=\"" << curve_path(d, c, f, req.samples) << "\" fill=\"none\" stroke=\""
      << stroke << "\" stroke-width=\"1.5\"" << extra << "/>\n";
  }
  if (d.last) {
    const double a = std::sqrt(d.last->t.to_double());
    o << "<circle cx=\"" << format_fixed(f.x(d.last->beta.to_double())) << "\" cy=\"" << format_fixed(f.y(a))
      << "\" r=\"4\" fill=\"red\" stroke=\"black\"/>\n";
  }
  // Legend.
  const char *labels[][2] = {{"blue", "Theta_v"},
                             {"#2a9d2a", "Gamma_v,s"},
                             {"red", "largest tilt wall"},
                             {"black", "other tilt walls"}};
  double ly = kTop + 14;
  for (const auto &l : labels) {
    o << "<text x=\"" << format_fixed(kWidth - kRight - 150) << "\" y=\"" << format_fixed(ly)
      << "\" font-size=\"12\" fill=\"" << l[0] << "\">" << l[1] << "</text>\n";
    ly += 16;
  }
  o << "</svg>\n";
  return o.str();
}

// ---- scenarios -------------------------------------------------------------

struct Report {
  json computed = json::object();
  json verdicts = json::array();
  json cited = json::array();

  void value(const std::string &name, json v, const std::string &op) {
    computed[name] = {{"value", std::move(v)}, {"op", op}};
  }
  void verdict(const std::string &claim, bool pass) {
    verdicts.push_back({{"claim", claim}, {"status", pass ? "pass" : "fail"}, {"basis", "computed"}});
  }
  void cite(const std::string &claim) { cited.push_back({{"claim", claim}, {"basis", "cited"}}); }
};

json finish(const std::string &name, json inputs, Report &r) {
  return {{"name", name}, {"inputs", std::move(inputs)}, {"computed", r.computed}, {"verdicts", r.verdicts},
          {"cited", r.cited}};
}

json scenario_collapsing() {
  Report r;
  json inputs = json::array();
  for (auto [rank, n] : {std::pair<long, long>{1, 2}, {2, 3}}) {
    const ChernCharacter v(Rational(rank), Rational(0), Rational(0), Rational(-n));
    const std::string tag = "v_" + std::to_string(rank) + "_" + std::to_string(n);
    inputs.push_back({{"r", rank}, {"n", n}, {"v", to_json(v)}});
    const Rational d = discriminant(v);
    r.value(tag + ".discriminant", d.str(), "discriminant");
    r.verdict("discriminant of " + tag + " is 0", d.is_zero());
    r.value(tag + ".theta", to_json(theta_curve(v)), "theta_curve");
    // Theta_v is t = beta^2; beta = -1 gives t = 1.
    const PlanePoint p{Rational(-1), Rational(1)};
    r.verdict(tag + ": (-1, 1) lies on Theta_v", region_classify(v, p) == Region::OnTheta);
    const Rational bound = epsilon_bound(v, p);
    r.value(tag + ".epsilon_bound", bound.str(), "epsilon_bound at (-1, 1)");
    r.verdict(tag + ": ch3 = -n is below the ch3 bound", v[3] <= bound);
    r.verdict(tag + ": no numerical tilt wall", !largest_tilt_wall(v).has_value());
  }
  r.cite("the PT side of the wall is empty for v_{r,n}");
  return finish("collapsing", inputs, r);
}

mpz_class floor_surd(const Surd &x) {
  mpz_class n = Rational(mpz_class(std::floor(x.to_double()))).num();
  while (Surd(Rational(n)) > x) --n;
  while (Surd(Rational(mpz_class(n + 1))) <= x) ++n;
  return n;
}

json scenario_fake(const std::optional<Rational> &user_beta) {
  Report r;
  const ChernCharacter w(Rational(2), Rational(-1), Rational(-1, 2), Rational(0));
  json inputs{{"w", json::array({"2", "-1", "-1/2"})}};
  const auto last = last_wall_on_theta(w);
  r.value("last_wall", last_point_json(last), "last_wall_on_theta");
  Rational beta0;
  if (user_beta) {
    beta0 = *user_beta;
    inputs["beta"] = beta0.str();
  } else if (last) {
    // Largest integer strictly below beta_w.
    mpz_class n = floor_surd(last->beta.value());
    if (Surd(Rational(n)) == last->beta.value()) n -= 1;
    beta0 = Rational(n);
  } else {
    const Surd edge(w[1] / w[0], Rational(-1) / w[0], discriminant(w));
    beta0 = Rational(mpz_class(floor_surd(edge) - 1));
  }
  const Rational t0 = theta_height(w)(beta0);
  const PlanePoint p{beta0, t0};
  r.value("point", {{"beta", beta0.str()}, {"t", t0.str()}}, user_beta ? "user" : "auto-selected");
  const bool on_theta_minus = t0.sign() > 0 && beta0 < w[1] / w[0];
  r.verdict("point lies on Theta_w^-", on_theta_minus);
  bool outside = true;
  for (const auto &g : enumerate_tilt_destabilizers(w, Rational(1, 4096)).walls) {
    const Rational gap = (beta0 - g.wall.center_beta) * (beta0 - g.wall.center_beta) + t0 - g.wall.radius_sq;
    if (gap.sign() <= 0) outside = false;
  }
  r.verdict("point is outside every numerical tilt wall with radius^2 > 1/4096", outside);
  if (on_theta_minus) {
    const Rational bound = epsilon_bound(w, p);
    r.value("epsilon_bound", bound.str(), "epsilon_bound");
    r.verdict("bound >= 5/6", bound >= Rational(5, 6));
  }
  r.cite("ch3 = epsilon makes the wall transparent (fake wall)");
  return finish("fake", inputs, r);
}

json scenario_honest() {
  Report r;
  const std::vector<TwistTerm> terms{{3, -1}, {-1, -2}};
  const ChernCharacter b = from_twists(terms);
  const ChernCharacter v(Rational(2), Rational(-1), Rational(-1, 2), Rational(-1, 6));
  json inputs{{"resolution", json::array({json::array({3, -1}), json::array({-1, -2})})}, {"v", to_json(v)}};
  r.value("ch_B", to_json(b), "from_twists");
  r.verdict("ch(B) = (2,-1,-1/2,5/6)",
            b == ChernCharacter(Rational(2), Rational(-1), Rational(-1, 2), Rational(5, 6)));
  r.value("discriminant", discriminant(v).str(), "discriminant");
  r.verdict("discriminant(v) = 3", discriminant(v) == Rational(3));
  r.value("dual_v", to_json(dual(v)), "dual");
  r.verdict("dual(v) = (2,1,-1/2,1/6)",
            dual(v) == ChernCharacter(Rational(2), Rational(1), Rational(-1, 2), Rational(1, 6)));
  r.value("minus_v", to_json(negate(v)), "negate");
  r.verdict("-v = (-2,1,1/2,1/6)",
            negate(v) == ChernCharacter(Rational(-2), Rational(1), Rational(1, 2), Rational(1, 6)));
  r.value("theta", to_json(theta_curve(v)), "theta_curve");
  const auto largest = largest_tilt_wall(v);
  r.value("largest_wall", largest ? to_json(*largest) : json(nullptr), "largest_tilt_wall");
  const auto last = last_wall_on_theta(v);
  r.value("last_wall", last_point_json(last), "last_wall_on_theta");
  if (last) {
    const Surd t = last->t;
    const Surd beta = last->beta.value();
    r.verdict("last wall point lies on Theta_v", theta_curve(v).poly(beta, t).sign() == 0);
    r.verdict("last wall point lies on its wall", last->walls.front().normalized()(beta, t).sign() == 0);
  }
  r.cite("B is a reflexive sheaf destabilizing along the honest wall");
  return finish("honest", inputs, r);
}

} // namespace

json walls_json(const WallsRequest &req) {
  const PlotData d = build_plot(req);
  json walls = json::array();
  for (const auto &g : d.enumeration.walls) {
    json classes = json::array();
    for (const auto &u : g.classes) classes.push_back(to_json(u));
    walls.push_back({{"wall", to_json(g.wall)}, {"classes", classes}});
  }
  return {{"v", to_json(req.v)},
          {"s", req.s.str()},
          {"t_min", req.t_min.str()},
          {"theta", to_json(d.curves[0].curve)},
          {"gamma", to_json(d.curves[1].curve)},
          {"walls", walls},
          {"largest_wall", d.enumeration.walls.empty() ? json(nullptr) : to_json(d.enumeration.walls.front().wall)},
          {"last_wall", last_point_json(d.last)},
          {"beta_range", {d.beta_lo.str(), d.beta_hi.str()}}};
}

std::string walls_csv(const WallsRequest &req) {
  const PlotData d = build_plot(req);
  std::string out = "curve_id,kind,beta,alpha,branch\n";
  for (const auto &r : plot_rows(d, req.samples))
    out += r.id + "," + r.kind + "," + format_fixed(r.beta) + "," + format_fixed(r.alpha) + "," +
           std::to_string(r.branch) + "\n";
  return out;
}

std::string walls_svg(const WallsRequest &req) { return svg_text(build_plot(req), req); }

json scenario_report(const std::string &name, const std::optional<Rational> &fake_beta) {
  if (name == "collapsing") return scenario_collapsing();
  if (name == "fake") return scenario_fake(fake_beta);
  if (name == "honest") return scenario_honest();
  throw ParseError("unknown scenario: " + name);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"wallforge: exact wall-and-chamber numerics"};
  app.require_subcommand(1);

  std::string v_text, beta_text, t_text, s_text = "1/3", k_text, b_text, grid_text, tmin_text = "1/16";
  std::string format = "json", range_text, name;
  std::optional<std::string> out_path;
  bool strengthened = false;

  auto *twist_cmd = app.add_subcommand("twist", "twisted Chern character");
  twist_cmd->add_option("--v", v_text, "Chern character")->required();
  twist_cmd->add_option("--beta", beta_text, "twist parameter")->required();

  auto *slopes_cmd = app.add_subcommand("slopes", "nu, lambda and rho at a point");
  auto *charge_cmd = app.add_subcommand("charge", "central charge at a point");
  for (auto *c : {slopes_cmd, charge_cmd}) {
    c->add_option("--v", v_text)->required();
    c->add_option("--beta", beta_text)->required();
    c->add_option("--t", t_text, "alpha^2")->required();
    c->add_option("--s", s_text);
  }
  charge_cmd->add_option("--K", k_text, "support-property constant");

  auto *walls_cmd = app.add_subcommand("walls", "Theta, Gamma and tilt walls");
  walls_cmd->add_option("--v", v_text)->required();
  walls_cmd->add_option("--s", s_text);
  walls_cmd->add_option("--t-min", tmin_text);
  walls_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "svg"}));
  walls_cmd->add_option("--beta-range", range_text, "a:b");
  walls_cmd->add_option("--out", out_path);

  auto *enum_cmd = app.add_subcommand("enumerate", "tilt-wall destabilizer candidates");
  enum_cmd->add_option("--v", v_text)->required();
  enum_cmd->add_option("--t-min", tmin_text);
  enum_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  enum_cmd->add_flag("--strengthened", strengthened);
  enum_cmd->add_option("--out", out_path);

  auto *probe_cmd = app.add_subcommand("probe", "finiteness probe");
  probe_cmd->add_option("--v", v_text)->required();
  probe_cmd->add_option("--t-min", tmin_text);
  probe_cmd->add_option("--s", s_text);

  auto *scen_cmd = app.add_subcommand("scenario", "worked examples");
  scen_cmd->add_option("name", name, "collapsing | fake | honest")->required();
  scen_cmd->add_option("--beta", beta_text, "point for the fake scenario");

  auto *poly_cmd = app.add_subcommand("polystab", "polynomial stability classification");
  auto *b_opt = poly_cmd->add_option("--b", b_text);
  auto *grid_opt = poly_cmd->add_option("--grid", grid_text, "a:b:step");
  b_opt->excludes(grid_opt);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (twist_cmd->parsed()) {
      const ChernCharacter v = flag_chern(v_text);
      const TwistedChern tw = twist(v, flag_rational("--beta", beta_text));
      json c = json::array();
      for (const auto &x : tw.c) c.push_back(x.str());
      out << json{{"c", c}}.dump() << "\n";
    } else if (slopes_cmd->parsed() || charge_cmd->parsed()) {
      const ChernCharacter v = flag_chern(v_text);
      const PlanePoint p{flag_rational("--beta", beta_text), flag_rational("--t", t_text)};
      const Rational s = flag_rational("--s", s_text);
      if (p.t.sign() <= 0) throw DomainError("--t: t must be positive");
      if (slopes_cmd->parsed()) {
        out << json{{"nu_rational", to_json(nu(v, p).rational_part)},
                    {"lambda", to_json(lambda(v, p, s))},
                    {"rho", rho(v, p).str()},
                    {"mu", to_json(mu(v))}}
                   .dump()
            << "\n";
      } else {
        json j{{"Z", to_json(central_charge(v, p, s))}, {"Zhat", to_json(zhat(v, p, s))}};
        if (!k_text.empty()) {
          const Rational K = flag_rational("--K", k_text);
          if (K.sign() <= 0) throw DomainError("--K: K must be positive");
          j["q_form"] = q_form(v, p, K).str();
          j["K_supported"] = is_supported_range(K, s);
        }
        out << j.dump() << "\n";
      }
    } else if (walls_cmd->parsed()) {
      WallsRequest req;
      req.v = flag_chern(v_text);
      req.s = flag_rational("--s", s_text);
      req.t_min = flag_rational("--t-min", tmin_text);
      if (!range_text.empty()) req.beta_range = flag_range("--beta-range", range_text);
      std::string text;
      if (format == "json") text = walls_json(req).dump(2) + "\n";
      else if (format == "csv") text = walls_csv(req);
      else text = walls_svg(req);
      emit(out, out_path, text);
    } else if (enum_cmd->parsed()) {
      EnumerationOptions opts;
      opts.strengthened = strengthened;
      auto rep = enumerate_tilt_destabilizers(flag_chern(v_text), flag_rational("--t-min", tmin_text), opts);
      emit(out, out_path, format == "csv" ? to_csv(rep) : to_json(rep).dump(2) + "\n");
    } else if (probe_cmd->parsed()) {
      auto rep = finiteness_probe(flag_chern(v_text), flag_rational("--t-min", tmin_text),
                                  flag_rational("--s", s_text));
      out << to_json(rep).dump(2) << "\n";
    } else if (scen_cmd->parsed()) {
      std::optional<Rational> beta;
      if (!beta_text.empty()) beta = flag_rational("--beta", beta_text);
      out << scenario_report(name, beta).dump(2) << "\n";
    } else if (poly_cmd->parsed()) {
      if (!b_text.empty()) {
        out << classification_json(flag_rational("--b", b_text)).dump(2) << "\n";
      } else if (!grid_text.empty()) {
        auto c1 = grid_text.find(':');
        auto c2 = c1 == std::string::npos ? c1 : grid_text.find(':', c1 + 1);
        if (c2 == std::string::npos) throw ParseError("--grid: expected a:b:step");
        const Rational a = flag_rational("--grid", grid_text.substr(0, c1));
        const Rational b = flag_rational("--grid", grid_text.substr(c1 + 1, c2 - c1 - 1));
        const Rational step = flag_rational("--grid", grid_text.substr(c2 + 1));
        if (step.sign() <= 0 || b < a) throw ParseError("--grid: need a <= b and step > 0");
        json items = json::array();
        bool consistent = true;
        for (Rational x = a; x <= b; x += step) {
          json c = classification_json(x);
          consistent = consistent && c["consistent"].get<bool>();
          items.push_back(std::move(c));
        }
        out << json{{"grid", {a.str(), b.str(), step.str()}},
                    {"count", items.size()},
                    {"consistent", consistent},
                    {"classifications", items}}
                   .dump(2)
            << "\n";
      } else {
        throw ParseError("polystab: give --b or --grid");
      }
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}

} // namespace wallforge::cli
