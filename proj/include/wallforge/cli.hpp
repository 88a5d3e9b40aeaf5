#pragma once

#include "wallforge/serialize.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wallforge::cli {

enum ExitCode { kOk = 0, kUsage = 2, kDomain = 3, kIo = 4 };

/// Output file could not be written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

struct WallsRequest {
  ChernCharacter v;
  Rational s = Rational(1, 3);
  Rational t_min = Rational(1, 16);
  std::optional<std::pair<Rational, Rational>> beta_range;
  int samples = 241;
};

json walls_json(const WallsRequest &req);
std::string walls_csv(const WallsRequest &req);
std::string walls_svg(const WallsRequest &req);

/// collapsing, fake or honest. fake_beta overrides the auto-selected point.
json scenario_report(const std::string &name, const std::optional<Rational> &fake_beta = std::nullopt);

} // namespace wallforge::cli
