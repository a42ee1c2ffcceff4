#pragma once

// Tabular report emission: CSV with `# key=value` metadata lines, and a JSON
// mirror carrying the same columns.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schanuel/census.hpp"
#include "schanuel/nfq.hpp"
#include "schanuel/real.hpp"

namespace schanuel {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
  /// Execution details (worker count, partition); JSON only, so CSV bytes stay schedule-independent.
  std::vector<std::pair<std::string, std::string>> run;

  void add(std::vector<std::string> row);
  std::string csv() const;
  std::string json() const;
};

/// Shortest round-trip rendering of a double ("nan", "inf", "-inf" for the rest).
std::string format_number(double x);

/// Columns quantity, value_mid, value_rad, tail_bound, provenance.
Table invariant_table();
void add_invariant(Table& t, const std::string& quantity, const Real& value,
                   std::optional<Real> tail = std::nullopt, Provenance provenance = Provenance::Computed);
void add_exact(Table& t, const std::string& quantity, const Rational& value,
               Provenance provenance = Provenance::Computed);

/// Columns X, count, main_mid, main_rad, residual, flag.
Table count_table(const CountReport& report);

}  // namespace schanuel
