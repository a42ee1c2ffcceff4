#include "schanuel/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace schanuel {

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw Error(ErrorKind::InvalidArgument, "row width differs from the header");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Cells that parse completely as finite numbers become JSON numbers.
nlohmann::json json_cell(const std::string& s) {
  double v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (!s.empty() && ec == std::errc() && ptr == end && std::isfinite(v)) {
    const auto parsed = nlohmann::json::parse(s, nullptr, false);
    if (!parsed.is_discarded()) return parsed;
  }
  return s;
}

}  // namespace

std::string Table::csv() const {
  std::ostringstream out;
  for (const auto& [k, v] : metadata) out << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_cell(columns[i]);
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_cell(r[i]);
    out << "\n";
  }
  return out.str();
}

std::string Table::json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) meta[k] = v;
  j["metadata"] = meta;
  if (!run.empty()) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (const auto& [k, v] : run) r[k] = v;
    j["run"] = r;
  }
  j["columns"] = columns;
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < r.size(); ++i) o[columns[i]] = json_cell(r[i]);
    rs.push_back(o);
  }
  j["rows"] = rs;
  return j.dump(2) + "\n";
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

Table invariant_table() {
  Table t;
  t.columns = {"quantity", "value_mid", "value_rad", "tail_bound", "provenance"};
  return t;
}

void add_invariant(Table& t, const std::string& quantity, const Real& value, std::optional<Real> tail,
                   Provenance provenance) {
  t.add({quantity, format_number(value.mid()), format_number(value.rad()),
         tail ? format_number(tail->upper()) : std::string(), to_string(provenance)});
}

void add_exact(Table& t, const std::string& quantity, const Rational& value, Provenance provenance) {
  add_invariant(t, quantity, Real(value), std::nullopt, provenance);
}

Table count_table(const CountReport& report) {
  Table t;
  t.columns = {"X", "count", "main_mid", "main_rad", "residual", "flag"};
  t.metadata.emplace_back("description", report.description);
  for (const auto& kv : report.metadata) t.metadata.push_back(kv);
  t.metadata.emplace_back("main_exponent", std::to_string(report.main_exponent));
  t.metadata.emplace_back("error_exponent", std::to_string(report.error_exponent));
  t.metadata.emplace_back("fitted_error_exponent", format_number(report.fitted_error_exponent));
  t.run = {{"workers", std::to_string(report.schedule.workers)}, {"partition", to_string(report.schedule.partition)}};
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    t.add({arith::to_string(report.grid[i]), report.counts[i].get_str(), format_number(report.prediction[i].mid()),
           format_number(report.prediction[i].rad()), format_number(report.residuals[i]), report.flag ? "1" : "0"});
  }
  return t;
}

}  // namespace schanuel
