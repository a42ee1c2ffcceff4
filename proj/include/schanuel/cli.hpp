#pragma once

// Command-line front end. Every subcommand validates its inputs first (usage
// errors exit 2), then computes (computation errors exit 1), and writes one
// table as CSV or JSON. Errors are one line: "error: <Kind>: <message>".

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace schanuel {

struct RunConfig {
  std::string subcommand;
  std::string field = "Q";
  std::string invariants_file;
  int n = 1;
  int m = 1;
  int e = 2;
  int s = 2;
  /// Exact rationals as given ("p/q" or integers).
  std::vector<std::string> grid;
  std::string cap;
  std::string system = "standard";
  double tol = 1e-20;
  int workers = 1;
  std::string partition = "block";
  std::uint64_t seed = 1;
  std::int64_t disc_max = 1000;
  std::int64_t scan = 0;
  double epsilon = 0.1;
  bool zeta_bracket = false;
  bool dry_run = false;
  std::string output;
  std::string format = "csv";

  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "SCHANUEL_OUTPUT_DIR";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schanuel
