#include "wallforge/destabilizers.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

namespace wallforge {

namespace {

void check_input(const ChernCharacter &v) {
  if (v[0].sign() <= 0) throw DomainError("enumeration requires v0 > 0");
  if (discriminant(v).sign() < 0) throw DomainError("no bounded wall theory below Bogomolov");
}

Rational half_floor(const Rational &x) { return Rational((x * Rational(2)).floor(), mpz_class(2)); }
Rational half_ceil(const Rational &x) { return Rational((x * Rational(2)).ceil(), mpz_class(2)); }

// Exact constraints (a)-(d) for u = (u0, u1, u2, 0); fills the candidate on success.
bool check_class(const ChernCharacter &v, const ChernCharacter &u, const Rational &t_min,
                 bool strengthened, DestabilizerCandidate *out) {
  const Rational d10 = delta(u, v, 1, 0);
  if (d10.is_zero()) return false;
  const Rational d20 = delta(u, v, 2, 0);
  const Rational d21 = delta(u, v, 2, 1);
  const Rational c = d20 / d10;
  const Rational r2 = c * c - Rational(2) * d21 / d10;
  if (r2 <= t_min) return false;
  const ChernCharacter w = v - u;
  const Rational du = discriminant(u), dw = discriminant(w);
  if (du.sign() < 0 || dw.sign() < 0) return false;
  if (strengthened && du + dw > discriminant(v)) return false;
  const Rational chord = r2 - t_min;
  for (const ChernCharacter *x : {&u, &w}) {
    const Rational a = (*x)[1] - c * (*x)[0];
    if (a.sign() < 0) return false;
    if (a * a < chord * (*x)[0] * (*x)[0]) return false;
  }
  if (out) {
    out->u = u;
    out->wall.center_beta = c;
    out->wall.radius_sq = r2;
    out->wall.u = u;
    out->wall.v = v;
    out->wall.delta10 = d10;
    out->delta_u = du;
    out->delta_quot = dw;
  }
  return true;
}

struct Frame {
  Rational mu, delta_v, cmin_lo, cmin_hi, sqrt_t_lo, sqrt_t_hi, b_hi;
};

Frame make_frame(const ChernCharacter &v, const Rational &t_min) {
  Frame f;
  f.mu = v[1] / v[0];
  f.delta_v = discriminant(v);
  const Rational k = t_min + f.delta_v / (v[0] * v[0]);
  // c_min = mu - sqrt(k), enclosed outward.
  f.cmin_lo = f.mu - sqrt_upper(k);
  f.cmin_hi = f.mu - sqrt_lower(k);
  f.sqrt_t_lo = sqrt_lower(t_min);
  f.sqrt_t_hi = sqrt_upper(t_min);
  f.b_hi = sqrt_upper(v[0] * v[0] + f.delta_v / t_min);
  return f;
}

// Lower bound on u1 from ch1 of a sub/quotient class with rank x0 at every admissible wall.
Rational ch1_floor(const Frame &f, long x0) {
  if (x0 > 0) return Rational(x0) * (f.cmin_lo + f.sqrt_t_lo);
  if (x0 < 0) return Rational(-x0) * (f.sqrt_t_lo - f.cmin_hi);
  return Rational(0);
}

struct U0Result {
  std::vector<DestabilizerCandidate> found;
  U1Range range;
  std::size_t tested = 0;
};

U0Result scan_u0(const ChernCharacter &v, const Rational &t_min, const Frame &f, long u0,
                 bool strengthened) {
  U0Result res;
  const long w0 = static_cast<long>(v[0].num().get_si()) - u0;
  const mpz_class lo = ch1_floor(f, u0).ceil();
  const mpz_class hi = (v[1] - ch1_floor(f, w0)).floor();
  res.range = {u0, lo, hi};
  for (mpz_class u1 = lo; u1 <= hi; ++u1) {
    const Rational r1(u1);
    Rational u2_lo, u2_hi;
    if (u0 != 0) {
      // 0 <= u1^2 - 2 u0 u2 <= delta(v).
      const Rational two_u0(2 * u0);
      Rational a = r1 * r1 / two_u0, b = (r1 * r1 - f.delta_v) / two_u0;
      u2_lo = std::min(a, b);
      u2_hi = std::max(a, b);
    } else {
      // Quotient rank is v0: 0 <= w1^2 - 2 v0 w2 <= delta(v).
      const Rational w1 = v[1] - r1;
      const Rational two_w0 = Rational(2) * v[0];
      const Rational w2_hi = w1 * w1 / two_w0, w2_lo = (w1 * w1 - f.delta_v) / two_w0;
      u2_lo = v[2] - w2_hi;
      u2_hi = v[2] - w2_lo;
    }
    for (Rational u2 = half_ceil(u2_lo); u2 <= half_floor(u2_hi); u2 += Rational(1, 2)) {
      ++res.tested;
      ChernCharacter u = ChernCharacter::relaxed(Rational(u0), r1, u2, Rational(0));
      DestabilizerCandidate cand;
      if (check_class(v, u, t_min, strengthened, &cand)) res.found.push_back(std::move(cand));
    }
  }
  return res;
}

} // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("WALLFORGE_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

bool satisfies_constraints(const ChernCharacter &v, const ChernCharacter &u, const Rational &t_min) {
  if (!ChernCharacter::on_lattice(u[0], u[1], u[2], Rational(0))) return false;
  return check_class(v, ChernCharacter::relaxed(u[0], u[1], u[2], Rational(0)), t_min, false, nullptr);
}

EnumerationReport enumerate_tilt_destabilizers(const ChernCharacter &v, const Rational &t_min,
                                               const EnumerationOptions &opts) {
  check_input(v);
  if (t_min.sign() <= 0) throw DomainError("t_min must be positive");
  if (!v[0].is_integer()) throw LatticeError("v0 must be an integer");
  const Frame f = make_frame(v, t_min);

  EnumerationReport rep;
  rep.v = v;
  rep.t_min = t_min;
  rep.assumptions.push_back("u3 set to 0 (tilt walls depend on ch<=2 only)");
  if (opts.strengthened) rep.assumptions.push_back("strengthened filter delta(u)+delta(v-u)<=delta(v)");
  // |u0| + |v0 - u0| <= sqrt(v0^2 + delta(v) / t_min).
  rep.search_bounds.u0_lo = (v[0] - f.b_hi) / 2;
  rep.search_bounds.u0_hi = (v[0] + f.b_hi) / 2;
  const long lo = rep.search_bounds.u0_lo.ceil().get_si();
  const long hi = rep.search_bounds.u0_hi.floor().get_si();

  std::vector<long> u0s;
  for (long u0 = lo; u0 <= hi; ++u0) u0s.push_back(u0);
  std::vector<U0Result> results(u0s.size());
  const unsigned nthreads = std::min<unsigned>(resolve_threads(opts.threads),
                                               std::max<std::size_t>(1, u0s.size()));
  auto work = [&](unsigned id) {
    for (std::size_t k = id; k < u0s.size(); k += nthreads)
      results[k] = scan_u0(v, t_min, f, u0s[k], opts.strengthened);
  };
  if (nthreads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < nthreads; ++id) pool.emplace_back(work, id);
    for (auto &th : pool) th.join();
  }

  std::map<std::pair<Rational, Rational>, std::size_t> index;
  for (auto &r : results) {
    rep.search_bounds.u1.push_back(r.range);
    rep.search_bounds.classes_tested += r.tested;
    for (auto &cand : r.found) {
      auto key = std::make_pair(cand.wall.center_beta, cand.wall.radius_sq);
      auto it = index.find(key);
      if (it == index.end()) {
        index.emplace(key, 0);
      }
      rep.candidates.push_back(std::move(cand));
    }
  }
  for (auto &[key, slot] : index) {
    slot = rep.walls.size();
    rep.walls.push_back({});
  }
  for (const auto &cand : rep.candidates) {
    auto &g = rep.walls[index.at({cand.wall.center_beta, cand.wall.radius_sq})];
    if (g.classes.empty()) g.wall = cand.wall;
    g.classes.push_back(cand.u);
  }
  rep.wall_count = rep.walls.size();
  return rep;
}

std::optional<CircleWall> largest_tilt_wall(const ChernCharacter &v, const LargestWallOptions &opts) {
  check_input(v);
  // Delta(v) = 0 forces Delta(u) = Delta(v - u) = 0 and mu(u) = mu(v) at any wall apex.
  if (discriminant(v).is_zero()) return std::nullopt;
  for (Rational t(1); t >= opts.t_floor; t /= Rational(2)) {
    auto rep = enumerate_tilt_destabilizers(v, t, opts.enumeration);
    if (!rep.walls.empty()) return rep.walls.front().wall;
  }
  return std::nullopt;
}

std::optional<LastWallPoint> last_wall_on_theta(const ChernCharacter &v, const LargestWallOptions &opts) {
  check_input(v);
  if (discriminant(v).is_zero()) return std::nullopt;
  for (Rational t(1); t >= opts.t_floor; t /= Rational(2)) {
    auto rep = enumerate_tilt_destabilizers(v, t, opts.enumeration);
    if (rep.walls.empty()) continue;
    const Rational mu_v = v[1] / v[0];
    std::optional<LastWallPoint> best;
    for (const auto &g : rep.walls) {
      for (auto &x : intersect_theta_tilt(v, g.wall)) {
        if (x.beta.value() >= Surd(mu_v)) continue;
        if (!best || x.t > best->t) {
          best = LastWallPoint{x.beta, x.t, {g.wall}};
        } else if (x.t == best->t) {
          best->walls.push_back(g.wall);
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::size_t count_roots_below(const UPoly &p, const Surd &upper) {
  if (p.degree() < 1) return 0;
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  auto changes = [](const std::vector<int> &signs) {
    std::size_t n = 0;
    int prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++n;
      prev = s;
    }
    return n;
  };
  std::vector<int> at_minus_inf, at_upper;
  for (const auto &q : seq) {
    int lead = q.leading().sign();
    at_minus_inf.push_back(q.degree() % 2 == 0 ? lead : -lead);
    at_upper.push_back(q(upper).sign());
  }
  // Sturm counts distinct roots in (-inf, upper]; drop a root sitting at upper.
  std::size_t n = changes(at_minus_inf) - changes(at_upper);
  if (p(upper).sign() == 0 && n > 0) --n;
  return n;
}

namespace {

UPoly strip_common(UPoly p, const UPoly &q) {
  if (q.is_zero()) return p;
  for (;;) {
    UPoly g = UPoly::gcd(p, q);
    if (g.degree() < 1) return p;
    p = UPoly::divmod(p, g).first;
  }
}

} // namespace

FinitenessReport finiteness_probe(const ChernCharacter &v, const Rational &t_min, const Rational &s,
                                  const FinitenessOptions &opts) {
  check_input(v);
  if (s.sign() <= 0) throw DomainError("s must be positive");
  FinitenessReport rep;
  auto en = enumerate_tilt_destabilizers(v, t_min, opts.enumeration);
  rep.tilt_wall_count = en.wall_count;
  rep.candidate_count = en.candidates.size();
  if (!en.walls.empty()) rep.max_radius_sq = en.walls.front().wall.radius_sq;
  rep.assumptions = en.assumptions;
  rep.assumptions.push_back(opts.epsilon_u3 ? "u3 grid: sixths in [-1, ch3 bound at the wall apex]"
                                            : "u3 grid: sixths in [-1, 1]");

  const UPoly theta = theta_height(v);
  const UPoly gamma_on_theta = gamma_curve(v, s).poly.restrict_t(theta);
  // Theta_v^- with t > 0 is beta < mu - sqrt(delta) / v0.
  const Surd edge(v[1] / v[0], Rational(-1) / v[0], discriminant(v));

  for (const auto &cand : en.candidates) {
    const ChernCharacter &u = cand.u;
    const UPoly tilt_on_theta = cand.wall.curve().poly.restrict_t(theta);
    Rational top(1);
    if (opts.epsilon_u3 && u[0].sign() > 0) {
      PlanePoint apex{cand.wall.center_beta, cand.wall.radius_sq};
      top = Rational((epsilon_bound(u, apex) * Rational(6)).floor(), mpz_class(6));
    }
    for (Rational u3(-1); u3 <= top; u3 += Rational(1, 6)) {
      ChernCharacter ux = ChernCharacter::relaxed(u[0], u[1], u[2], u3);
      WallCurve lw;
      try {
        lw = lambda_wall(ux, v, s);
      } catch (const DomainError &) {
        continue;
      }
      ++rep.lambda_walls;
      UPoly on_theta = lw.poly.restrict_t(theta);
      if (on_theta.is_zero()) {
        ++rep.contains_theta;
        continue;
      }
      UPoly rest = strip_common(on_theta, gamma_on_theta);
      if (count_roots_below(rest, edge) == 0) continue;
      ++rep.theta_crossing;
      UPoly stray = strip_common(rest, tilt_on_theta);
      if (count_roots_below(stray, edge) == 0) ++rep.coincident;
    }
  }
  rep.consistent = rep.coincident == rep.theta_crossing;
  return rep;
}

} // namespace wallforge
