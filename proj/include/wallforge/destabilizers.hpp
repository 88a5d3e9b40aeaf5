#pragma once

#include "wallforge/walls.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallforge {

struct DestabilizerCandidate {
  ChernCharacter u; // u3 = 0
  CircleWall wall;
  Rational delta_u;
  Rational delta_quot;
};

/// Classes sharing one numerical wall.
struct WallGroup {
  CircleWall wall;
  std::vector<ChernCharacter> classes;
};

struct U1Range {
  long u0;
  mpz_class lo;
  mpz_class hi;
};

struct SearchBounds {
  Rational u0_lo;
  Rational u0_hi;
  std::vector<U1Range> u1;
  std::size_t classes_tested = 0;
};

struct EnumerationReport {
  ChernCharacter v;
  Rational t_min;
  std::vector<DestabilizerCandidate> candidates; // (u0, u1, u2) lexicographic
  std::vector<WallGroup> walls;                  // ascending center, i.e. descending radius
  SearchBounds search_bounds;
  std::size_t wall_count = 0;
  bool truncated = false;
  std::vector<std::string> assumptions;
};

struct EnumerationOptions {
  /// Also require delta(u) + delta(v - u) <= delta(v).
  bool strengthened = false;
  /// 0 reads WALLFORGE_THREADS, falling back to the hardware count.
  unsigned threads = 0;
};

unsigned resolve_threads(unsigned requested);

EnumerationReport enumerate_tilt_destabilizers(const ChernCharacter &v, const Rational &t_min,
                                               const EnumerationOptions &opts = {});

/// Direct re-check of the candidate constraints for one class, independent of the bounds.
bool satisfies_constraints(const ChernCharacter &v, const ChernCharacter &u, const Rational &t_min);

struct LargestWallOptions {
  Rational t_floor = Rational(1, 4096);
  EnumerationOptions enumeration;
};

std::optional<CircleWall> largest_tilt_wall(const ChernCharacter &v, const LargestWallOptions &opts = {});

struct LastWallPoint {
  QuadraticRoot beta;
  Surd t;
  std::vector<CircleWall> walls; // every maximizer
};

std::optional<LastWallPoint> last_wall_on_theta(const ChernCharacter &v, const LargestWallOptions &opts = {});

struct FinitenessOptions {
  /// Cap u3 above by the ch3 bound at the wall apex instead of the fixed grid top.
  bool epsilon_u3 = false;
  EnumerationOptions enumeration;
};

struct FinitenessReport {
  std::size_t tilt_wall_count = 0;
  std::size_t candidate_count = 0;
  std::optional<Rational> max_radius_sq;
  std::size_t lambda_walls = 0;
  std::size_t theta_crossing = 0;
  std::size_t coincident = 0;
  std::size_t contains_theta = 0;
  bool consistent = true;
  std::vector<std::string> assumptions;
};

FinitenessReport finiteness_probe(const ChernCharacter &v, const Rational &t_min, const Rational &s,
                                  const FinitenessOptions &opts = {});

/// Number of distinct real roots of p in (-inf, upper) (upper excluded).
std::size_t count_roots_below(const UPoly &p, const Surd &upper);

} // namespace wallforge
