#include "wallforge/chern.hpp"

#include <sstream>

namespace wallforge {

ChernCharacter::ChernCharacter(Rational v0, Rational v1, Rational v2, Rational v3)
    : c_{std::move(v0), std::move(v1), std::move(v2), std::move(v3)} {
  if (!is_lattice())
    throw LatticeError("Chern character " + str() + " is not in Z x Z x (1/2)Z x (1/6)Z");
}

ChernCharacter ChernCharacter::relaxed(Rational v0, Rational v1, Rational v2, Rational v3) {
  ChernCharacter v;
  v.c_ = {std::move(v0), std::move(v1), std::move(v2), std::move(v3)};
  return v;
}

bool ChernCharacter::on_lattice(const Rational &v0, const Rational &v1, const Rational &v2,
                                const Rational &v3) {
  return v0.is_integer() && v1.is_integer() && (Rational(2) * v2).is_integer() &&
         (Rational(6) * v3).is_integer();
}

ChernCharacter operator+(const ChernCharacter &a, const ChernCharacter &b) {
  return ChernCharacter::relaxed(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]);
}

ChernCharacter operator-(const ChernCharacter &a, const ChernCharacter &b) {
  return ChernCharacter::relaxed(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]);
}

ChernCharacter operator*(const Rational &k, const ChernCharacter &a) {
  return ChernCharacter::relaxed(k * a[0], k * a[1], k * a[2], k * a[3]);
}

std::string ChernCharacter::str() const {
  std::ostringstream os;
  os << '(' << c_[0] << ',' << c_[1] << ',' << c_[2] << ',' << c_[3] << ')';
  return os.str();
}

TwistedChern twist(const ChernCharacter &v, const Rational &beta) {
  const Rational b2 = beta * beta;
  const Rational b3 = b2 * beta;
  TwistedChern tw;
  tw.beta = beta;
  tw.c[0] = v[0];
  tw.c[1] = v[1] - beta * v[0];
  tw.c[2] = v[2] - beta * v[1] + b2 * v[0] / 2;
  tw.c[3] = v[3] - beta * v[2] + b2 * v[1] / 2 - b3 * v[0] / 6;
  return tw;
}

ChernCharacter untwist(const TwistedChern &tw) {
  const Rational &b = tw.beta;
  const Rational b2 = b * b;
  const Rational b3 = b2 * b;
  const auto &c = tw.c;
  return ChernCharacter::relaxed(c[0], c[1] + b * c[0], c[2] + b * c[1] + b2 * c[0] / 2,
                                 c[3] + b * c[2] + b2 * c[1] / 2 + b3 * c[0] / 6);
}

namespace {
void check_index(int i) {
  if (i < 0 || i > 3) throw DomainError("Chern index out of range");
}
} // namespace

Rational delta(const ChernCharacter &f, const ChernCharacter &a, int i, int j) {
  check_index(i);
  check_index(j);
  return f[i] * a[j] - f[j] * a[i];
}

Rational delta(const TwistedChern &f, const TwistedChern &a, int i, int j) {
  check_index(i);
  check_index(j);
  return f[i] * a[j] - f[j] * a[i];
}

Rational discriminant(const ChernCharacter &v) { return v[1] * v[1] - Rational(2) * v[0] * v[2]; }

Rational discriminant(const TwistedChern &v) { return v[1] * v[1] - Rational(2) * v[0] * v[2]; }

Slope mu(const ChernCharacter &v) {
  if (v[0].is_zero()) return Slope::infinity();
  return v[1] / v[0];
}

Slope hat_mu(const ChernCharacter &v) {
  if (v[2].is_zero()) return Slope::infinity();
  return v[3] / v[2];
}

ChernCharacter dual(const ChernCharacter &v) {
  return ChernCharacter::relaxed(v[0], -v[1], v[2], -v[3]);
}

ChernCharacter negate(const ChernCharacter &v) {
  return ChernCharacter::relaxed(-v[0], -v[1], -v[2], -v[3]);
}

ChernCharacter line_bundle(long degree) {
  Rational t(degree);
  return ChernCharacter(Rational(1), t, t * t / 2, t * t * t / 6);
}

ChernCharacter from_twists(std::span<const TwistTerm> terms) {
  ChernCharacter sum(0, 0, 0, 0);
  for (const auto &term : terms) {
    if (term.multiplicity == 0) continue;
    sum = sum + Rational(term.multiplicity) * line_bundle(term.degree);
  }
  return sum;
}

ChernCharacter parse_chern(const std::string &text, bool check_lattice) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(Rational::parse(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() == 3) parts.emplace_back(0);
  if (parts.size() != 4)
    throw ParseError("expected 3 or 4 comma-separated components, got " + std::to_string(parts.size()));
  if (check_lattice) return ChernCharacter(parts[0], parts[1], parts[2], parts[3]);
  return ChernCharacter::relaxed(parts[0], parts[1], parts[2], parts[3]);
}

} // namespace wallforge
