#include "schanuel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "schanuel/als.hpp"
#include "schanuel/census.hpp"
#include "schanuel/heights.hpp"
#include "schanuel/invariants.hpp"
#include "schanuel/nfq.hpp"
#include "schanuel/report.hpp"

namespace schanuel {

std::string RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  j["field"] = field;
  j["invariants_file"] = invariants_file;
  j["n"] = n;
  j["m"] = m;
  j["e"] = e;
  j["s"] = s;
  j["grid"] = grid;
  j["cap"] = cap;
  j["system"] = system;
  j["tol"] = tol;
  j["workers"] = workers;
  j["partition"] = partition;
  j["seed"] = seed;
  j["disc_max"] = disc_max;
  j["scan"] = scan;
  j["epsilon"] = epsilon;
  j["zeta_bracket"] = zeta_bracket;
  j["dry_run"] = dry_run;
  j["output"] = output;
  j["format"] = format;
  return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw Error(ErrorKind::ParseError, "config is not a JSON object");
  RunConfig c;
  try {
    c.subcommand = j.value("subcommand", c.subcommand);
    c.field = j.value("field", c.field);
    c.invariants_file = j.value("invariants_file", c.invariants_file);
    c.n = j.value("n", c.n);
    c.m = j.value("m", c.m);
    c.e = j.value("e", c.e);
    c.s = j.value("s", c.s);
    c.grid = j.value("grid", c.grid);
    c.cap = j.value("cap", c.cap);
    c.system = j.value("system", c.system);
    c.tol = j.value("tol", c.tol);
    c.workers = j.value("workers", c.workers);
    c.partition = j.value("partition", c.partition);
    c.seed = j.value("seed", c.seed);
    c.disc_max = j.value("disc_max", c.disc_max);
    c.scan = j.value("scan", c.scan);
    c.epsilon = j.value("epsilon", c.epsilon);
    c.zeta_bracket = j.value("zeta_bracket", c.zeta_bracket);
    c.dry_run = j.value("dry_run", c.dry_run);
    c.output = j.value("output", c.output);
    c.format = j.value("format", c.format);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return c;
}

namespace {

// Inputs resolved before any computation; failures here are usage errors.
struct Resolved {
  std::optional<Field> field;
  std::optional<FieldInvariants> supplied;
  std::vector<Rational> grid;
  std::optional<Rational> cap;
  Schedule schedule;
  std::function<AdelicLipschitzSystem()> system;
};

std::optional<long> parse_long(const std::string& s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string fmt(const Rational& q) { return arith::to_string(q); }

Resolved resolve(const RunConfig& c) {
  Resolved r;
  if (c.workers < 1) throw Error(ErrorKind::InvalidArgument, "--workers must be at least 1");
  if (c.partition != "block" && c.partition != "stride") {
    throw Error(ErrorKind::InvalidArgument, "--partition must be block or stride");
  }
  if (c.format != "csv" && c.format != "json") throw Error(ErrorKind::InvalidArgument, "--format must be csv or json");
  if (!(c.tol > 0)) throw Error(ErrorKind::InvalidArgument, "--tol must be positive");
  if (c.n < 0) throw Error(ErrorKind::InvalidArgument, "--n must be positive");
  r.schedule = Schedule{c.workers, c.partition == "block" ? Partition::Block : Partition::Stride};

  if (c.field == "Q" || c.field == "1") {
    r.field = Field::rationals();
  } else if (const auto d = parse_long(c.field)) {
    r.field = make_quadratic_field(*d);
  } else {
    if (c.invariants_file.empty()) {
      throw Error(ErrorKind::InvalidArgument, "field '" + c.field + "' needs --invariants to resolve its label");
    }
    for (const auto& inv : load_invariants_file(c.invariants_file)) {
      if (inv.label == c.field) r.supplied = inv;
    }
    if (!r.supplied) throw Error(ErrorKind::InvalidArgument, "no field labelled '" + c.field + "' in " + c.invariants_file);
  }
  for (const auto& g : c.grid) r.grid.push_back(arith::parse_rational(g));
  if (!c.cap.empty()) r.cap = arith::parse_rational(c.cap);

  const int n = c.n;
  if (c.system == "standard" || c.system == "l2") {
    if (r.field) {
      const Field K = *r.field;
      const bool l2 = c.system == "l2";
      r.system = [K, n, l2] { return l2 ? l2_system(K, n) : standard_system(K, n); };
    }
  } else {
    const AdelicLipschitzSystem sys = load_system_file(c.system);
    r.field = sys.field();
    r.system = [sys] { return sys; };
  }
  return r;
}

FieldInvariants invariants_of(const Resolved& r) {
  return r.field ? compute_invariants(*r.field) : *r.supplied;
}

std::optional<Field> quadratic_of(const FieldInvariants& inv) {
  if (inv.field) return inv.field;
  if (inv.degree == 1) return Field::rationals();
  if (inv.degree == 2) return field_from_discriminant(inv.disc.get_si());
  return std::nullopt;
}

Real zeta_for(const RunConfig& c, const FieldInvariants& inv, long s) {
  if (c.zeta_bracket) return dedekind_zeta_bracket(inv.degree, s, c.tol);
  const auto K = quadratic_of(inv);
  if (!K) return dedekind_zeta(inv, s, c.tol);
  return dedekind_zeta(*K, s, c.tol);
}

SchanuelInput input_for(const RunConfig& c, const Resolved& r) {
  SchanuelInput in;
  in.invariants = invariants_of(r);
  in.n = c.n;
  const auto K = quadratic_of(in.invariants);
  if (K || c.zeta_bracket) in.zeta_value = zeta_for(c, in.invariants, c.n + 1);
  return in;
}

Field require_field(const Resolved& r) {
  if (!r.field) throw Error(ErrorKind::UnsupportedDegree, "this subcommand needs Q or a quadratic field");
  return *r.field;
}

void require_grid(const Resolved& r) {
  if (r.grid.empty()) throw Error(ErrorKind::InvalidArgument, "--grid is required");
}

using Handler = std::function<Table(const RunConfig&, const Resolved&)>;

Table field_info(const RunConfig&, const Resolved& r) {
  const FieldInvariants inv = invariants_of(r);
  Table t = invariant_table();
  t.metadata = {{"label", inv.label}};
  add_exact(t, "degree", inv.degree, inv.provenance);
  add_exact(t, "disc", Rational(inv.disc), inv.provenance);
  add_exact(t, "r", inv.r, inv.provenance);
  add_exact(t, "s", inv.s, inv.provenance);
  add_exact(t, "h", Rational(inv.h), inv.provenance);
  add_invariant(t, "R", inv.R, std::nullopt, inv.provenance);
  add_exact(t, "w", inv.w, inv.provenance);
  if (r.field && r.field->is_real_quadratic()) {
    const UnitData u = fundamental_unit(*r.field);
    t.metadata.emplace_back("fundamental_unit", u.epsilon.to_string());
    add_exact(t, "h_plus", Rational(Integer(static_cast<long>(narrow_class_number(*r.field)))));
  }
  return t;
}

Table zeta(const RunConfig& c, const Resolved& r) {
  const FieldInvariants inv = invariants_of(r);
  Table t = invariant_table();
  t.metadata = {{"label", inv.label}, {"s", std::to_string(c.s)}, {"tol", format_number(c.tol)}};
  const Provenance p = c.zeta_bracket ? Provenance::Supplied : Provenance::Computed;
  add_invariant(t, "zeta_K(" + std::to_string(c.s) + ")", zeta_for(c, inv, c.s), std::nullopt, p);
  const auto K = quadratic_of(inv);
  if (K && !K->is_rational() && !c.zeta_bracket) {
    const LValue L = dirichlet_l_value(K->disc, c.s, c.tol);
    add_invariant(t, "L(" + std::to_string(c.s) + ",chi_" + std::to_string(K->disc) + ")", L.value,
                  Real(Rational(L.tail)));
    add_invariant(t, "zeta(" + std::to_string(c.s) + ")", riemann_zeta(c.s, c.tol));
  }
  return t;
}

Table schanuel(const RunConfig& c, const Resolved& r) {
  const SchanuelInput in = input_for(c, r);
  Table t = invariant_table();
  t.metadata = {{"label", in.invariants.label}, {"n", std::to_string(c.n)}};
  const Provenance p = in.invariants.provenance == Provenance::Computed && !c.zeta_bracket ? Provenance::Computed
                                                                                             : Provenance::Supplied;
  add_invariant(t, "S_K(" + std::to_string(c.n) + ")", schanuel_constant(in), std::nullopt, p);
  return t;
}

Table main_term(const RunConfig& c, const Resolved& r) {
  const AdelicLipschitzSystem sys = r.system ? r.system() : throw Error(ErrorKind::UnsupportedDegree, "no system");
  const SchanuelInput in = schanuel_input(sys.field(), sys.n(), c.tol);
  const Volumes v = volumes(sys, c.workers);
  Table t = invariant_table();
  t.metadata = {{"label", sys.field().label()}, {"n", std::to_string(sys.n())}, {"system", sys.name()}};
  const Provenance vp = v.V.exact ? Provenance::Computed : Provenance::MeasuredEnvelope;
  add_invariant(t, "main_term", main_term_constant(sys, in, c.workers), std::nullopt, vp);
  add_invariant(t, "S_K(" + std::to_string(sys.n()) + ")", schanuel_constant(in));
  add_invariant(t, "V", v.V.enclosure, std::nullopt, vp);
  return t;
}

Table ce_sum(const RunConfig& c, const Resolved&) {
  const PartialSum ps = ce_partial_sum(c.n, c.disc_max, c.tol, c.workers);
  Table t = invariant_table();
  t.metadata = {{"n", std::to_string(c.n)}, {"disc_max", std::to_string(c.disc_max)},
                {"fields", std::to_string(ps.terms.size())}, {"c0", fmt(ps.c0)}};
  add_invariant(t, "partial_sum", ps.sum, ps.tail, Provenance::Computed);
  add_invariant(t, "tail_bound", ps.tail, std::nullopt, ps.tail_provenance);
  add_exact(t, "c0", ps.c0, Provenance::MeasuredEnvelope);
  t.add({"decay_slope", format_number(ps.decay_slope), "0", "", to_string(Provenance::MeasuredEnvelope)});
  return t;
}

Table count_rational_cmd(const RunConfig& c, const Resolved& r) {
  require_grid(r);
  return count_table(rational_report(c.n, r.grid, r.schedule, c.tol));
}

Table count_field_cmd(const RunConfig& c, const Resolved& r) {
  require_grid(r);
  return count_table(field_report(require_field(r), c.n, r.grid, r.schedule, c.tol));
}

Table count_primitive_cmd(const RunConfig& c, const Resolved& r) {
  require_grid(r);
  return count_table(primitive_report(require_field(r), c.n, r.grid, r.schedule, c.tol));
}

Table count_p1_cmd(const RunConfig& c, const Resolved& r) {
  require_grid(r);
  return count_table(quadratic_p1_report(r.grid, r.schedule, c.tol));
}

Table delta_cmd(const RunConfig&, const Resolved& r) {
  const Field K = require_field(r);
  const FieldCensusEntry e = r.cap ? delta_of_field(K, *r.cap) : delta_of_field(K);
  const DiscriminantBounds b = discriminant_bounds(K);
  Table t = invariant_table();
  t.metadata = {{"label", K.label()},
                {"witness", e.witness.to_string()},
                {"minimal_polynomial", std::to_string(e.a) + "," + std::to_string(e.b) + "," + std::to_string(e.c)},
                {"delta_squared", e.delta.exact->value.to_string()}};
  add_invariant(t, "delta", e.delta.enclosure);
  add_invariant(t, "silverman_lower", b.delta_lower);
  add_invariant(t, "H(1,w)", b.delta_upper);
  return t;
}

Table n_delta_cmd(const RunConfig& c, const Resolved& r) {
  require_grid(r);
  Table t;
  t.columns = {"T", "count", "certified_bound", "scan", "max_disc_seen"};
  for (const auto& T : r.grid) {
    const NDeltaResult res = c.scan > 0 ? n_delta(T, c.scan) : n_delta(T);
    t.add({fmt(T), res.count.get_str(), fmt(res.certified_bound), std::to_string(res.scan),
           std::to_string(res.max_disc_seen)});
  }
  return t;
}

Table n_disc_cmd(const RunConfig&, const Resolved& r) {
  require_grid(r);
  Table t;
  t.columns = {"T", "count"};
  for (const auto& T : r.grid) t.add({fmt(T), n_disc(T).get_str()});
  return t;
}

Table lemma_cmd(const RunConfig& c, const Resolved&) {
  const Lemma44Report rep = c.n > 0 ? lemma44_check(c.m, c.e, c.n) : lemma44_check(c.m, c.e);
  Table t;
  t.columns = {"g", "gamma_g", "beta", "mu_g", "gamma_g+beta-mu_g", "holds"};
  t.metadata = {{"m", std::to_string(rep.m)},
                {"e", std::to_string(rep.e)},
                {"n", std::to_string(rep.n)},
                {"threshold", fmt(rep.threshold)},
                {"integrality_step", rep.integrality_step ? "pass" : "fail"},
                {"result", rep.passed ? "pass" : "fail"}};
  for (const auto& row : rep.rows) {
    const ExponentContext x = exponent_context(rep.m, rep.e, rep.n, row.g);
    t.add({std::to_string(row.g), fmt(x.gamma_g), fmt(x.beta), fmt(x.mu_g), fmt(row.value), row.holds ? "1" : "0"});
  }
  return t;
}

Table bounds_cmd(const RunConfig& c, const Resolved& r) {
  Table t = invariant_table();
  if (r.field && !r.field->is_rational()) {
    const DiscriminantBounds b = discriminant_bounds(*r.field);
    t.metadata.emplace_back("label", r.field->label());
    t.metadata.emplace_back("tower_formula", b.tower_formula ? "pass" : "fail");
    add_invariant(t, "silverman_constant", b.silverman_constant);
    add_invariant(t, "delta_lower", b.delta_lower);
    add_invariant(t, "delta_upper", b.delta_upper);
    add_invariant(t, "upper_envelope", b.upper_envelope, std::nullopt, Provenance::MeasuredEnvelope);
  }
  std::vector<FieldInvariants> fields;
  for (const auto d : arith::fundamental_discriminants(c.disc_max)) {
    fields.push_back(compute_invariants(field_from_discriminant(d)));
  }
  if (!fields.empty()) {
    const SiegelBrauerReport sb = siegel_brauer_scan(fields, c.epsilon);
    t.metadata.emplace_back("siegel_brauer_fields", std::to_string(sb.fields));
    t.metadata.emplace_back("siegel_brauer_argmax", std::to_string(sb.argmax));
    t.metadata.emplace_back("siegel_brauer_trend", sb.bounded_trend ? "pass" : "fail");
    add_invariant(t, "hR/|disc|^(1/2+eps) max", sb.max_ratio, std::nullopt, Provenance::MeasuredEnvelope);
    t.add({"log(hR)/log|disc| slope", format_number(sb.slope), "0", "", to_string(Provenance::MeasuredEnvelope)});
  }
  if (!r.grid.empty()) {
    const long expo = schmidt_upper_exponent(1, 2, 1);
    const Integer upper = arith::pow(Integer(2), static_cast<unsigned long>(expo));
    bool holds = true;
    for (const auto& X : r.grid) {
      const Integer Z = count_quadratic_points_p1(X, r.schedule).points;
      holds = holds && Rational(Z) <= Rational(upper) * arith::pow(X, 6);
      add_invariant(t, "Z(P1(Q;2)," + fmt(X) + ")/X^6", X > 0 ? Real(Rational(Z) / arith::pow(X, 6)) : Real(0));
    }
    t.metadata.emplace_back("schmidt_upper", "2^" + std::to_string(expo));
    t.metadata.emplace_back("schmidt_upper_holds", holds ? "pass" : "fail");
  }
  return t;
}

Table volumes_cmd(const RunConfig& c, const Resolved& r) {
  const AdelicLipschitzSystem sys = r.system ? r.system() : throw Error(ErrorKind::UnsupportedDegree, "no system");
  const Volumes v = volumes(sys, c.workers);
  Table t = invariant_table();
  t.metadata = {{"label", sys.field().label()}, {"n", std::to_string(sys.n())}, {"system", sys.name()}};
  if (v.V.exact) t.metadata.emplace_back("V_exact", v.V.exact->to_string());
  const Provenance vp = v.V.exact ? Provenance::Computed : Provenance::MeasuredEnvelope;
  add_exact(t, "V_fin", v.V_fin);
  add_invariant(t, "V_inf", v.V_inf.enclosure, std::nullopt, vp);
  add_invariant(t, "V", v.V.enclosure, std::nullopt, vp);
  add_invariant(t, "C_fin", sys.C_fin());
  add_invariant(t, "C_inf", sys.C_inf());
  add_invariant(t, "C", sys.C());
  add_exact(t, "M", Rational(sys.M()));
  add_invariant(t, "L", sys.L());
  int i = 0;
  for (const auto& D : class_representatives(sys.field())) {
    const SqrtMonomial inv = class_invariant(sys, D);
    t.metadata.emplace_back("Delta_N[" + std::to_string(i) + "]", inv.to_string());
    add_invariant(t, "Delta_N(" + D.to_string() + ")", inv.to_real());
    ++i;
  }
  return t;
}

Table example_d_cmd(const RunConfig& c, const Resolved&) {
  if (c.invariants_file.empty()) throw Error(ErrorKind::InvalidArgument, "--invariants is required");
  const ExampleD d = example_d(load_invariants_file(c.invariants_file), c.tol);
  Table t = invariant_table();
  t.metadata = {{"coefficient", d.coefficient.to_string()}, {"fields", std::to_string(d.terms.size())},
                {"tail", "not bounded"}};
  for (const auto& s : d.skipped) t.metadata.emplace_back("skipped", s);
  add_invariant(t, "coefficient", d.coefficient.to_real());
  for (const auto& term : d.terms) add_invariant(t, "term(" + term.label + ")", term.value, std::nullopt, Provenance::Supplied);
  add_invariant(t, "sum", d.sum, std::nullopt, Provenance::Supplied);
  add_invariant(t, "D_partial", d.D_partial, std::nullopt, Provenance::Supplied);
  return t;
}

const std::map<std::string, std::pair<std::string, Handler>>& handlers() {
  static const std::map<std::string, std::pair<std::string, Handler>> table = {
      {"field-info", {"invariants of Q, a quadratic field or a supplied field", field_info}},
      {"zeta", {"zeta_K(s), and L(s, chi) for quadratic fields", zeta}},
      {"schanuel", {"Schanuel constant S_K(n)", schanuel}},
      {"main-term", {"main-term constant of an adelic-Lipschitz system", main_term}},
      {"ce-sum", {"partial sum of S_K(n) over quadratic fields with tail bound", ce_sum}},
      {"count-rational", {"points of P^n(Q) of bounded height", count_rational_cmd}},
      {"count-field", {"points of P^n(K) of bounded height, K imaginary quadratic", count_field_cmd}},
      {"count-primitive", {"points of P^n(K/Q) of bounded height", count_primitive_cmd}},
      {"count-quadratic-p1", {"quadratic points of P^1 of bounded height", count_p1_cmd}},
      {"delta", {"delta(K/Q) with a witness generator", delta_cmd}},
      {"n-delta", {"number of quadratic fields with delta <= T", n_delta_cmd}},
      {"n-disc", {"number of quadratic fields with |disc| <= T", n_disc_cmd}},
      {"lemma-check", {"exponent inequality gamma_g + beta - mu_g <= -1/8", lemma_cmd}},
      {"bounds-check", {"discriminant brackets, hR growth and Schmidt's upper bound", bounds_cmd}},
      {"volumes", {"volumes, constants and class invariants of a system", volumes_cmd}},
      {"example-d", {"partial sum of the quartic constant D from supplied invariants", example_d_cmd}},
  };
  return table;
}

std::string error_line(const std::string& kind, const std::string& message) {
  std::string m = message;
  for (auto& ch : m) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return "error: " + kind + ": " + m + "\n";
}

void emit(const RunConfig& c, const Table& t, std::ostream& out) {
  const std::string body = c.format == "json" ? t.json() : t.csv();
  std::filesystem::path path = c.output;
  const char* dir = std::getenv(kOutputDirEnv);
  if (path.empty() && dir && *dir) path = c.subcommand + "." + c.format;
  if (path.empty()) {
    out << body;
    return;
  }
  if (path.is_relative() && dir && *dir) path = std::filesystem::path(dir) / path;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  f << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string grid;
  CLI::App app{"Heights, point counts and Schanuel constants over Q and quadratic fields", "schanuel"};
  app.require_subcommand(1);
  std::map<CLI::App*, std::string> names;
  for (const auto& [name, entry] : handlers()) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    names[sub] = name;
    sub->add_option("--field", c.field, "Q, a squarefree d for Q(sqrt(d)), or a label from --invariants");
    sub->add_option("--invariants", c.invariants_file, "invariants file (label, degree, disc, r, s, h, R, w)");
    sub->add_option("--n", c.n, "projective dimension");
    sub->add_option("--m", c.m, "degree of the base field");
    sub->add_option("--e", c.e, "relative degree");
    sub->add_option("--s", c.s, "argument of zeta");
    sub->add_option("--grid", grid, "comma-separated exact values of X or T (p/q)");
    sub->add_option("--cap", c.cap, "height cap for delta (p/q)");
    sub->add_option("--system", c.system, "standard, l2, or a JSON system file");
    sub->add_option("--tol", c.tol, "absolute tolerance of enclosures");
    sub->add_option("--workers", c.workers, "worker threads");
    sub->add_option("--partition", c.partition, "block or stride");
    sub->add_option("--seed", c.seed, "seed for sampled volumes");
    sub->add_option("--disc-max", c.disc_max, "largest |disc| in field scans");
    sub->add_option("--scan", c.scan, "discriminant scan range for n-delta");
    sub->add_option("--epsilon", c.epsilon, "exponent slack for hR growth");
    sub->add_flag("--zeta-bracket", c.zeta_bracket, "use [1, zeta(s)^degree] for zeta_K(s)");
    sub->add_flag("--dry-run", c.dry_run, "print the resolved configuration and stop");
    sub->add_option("--output", c.output, "output file (relative to $SCHANUEL_OUTPUT_DIR when set)");
    sub->add_option("--format", c.format, "csv or json");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_line("ParseError", e.what());
    return 2;
  }
  for (const auto& [sub, name] : names) {
    if (sub->parsed()) {
      c.subcommand = name;
      if (name == "lemma-check" && sub->count("--n") == 0) c.n = 0;
    }
  }
  c.grid = split(grid);

  Resolved r;
  try {
    r = resolve(c);
  } catch (const Error& e) {
    err << error_line(std::string(to_string(e.kind())), e.what());
    return 2;
  }
  if (c.dry_run) {
    out << c.to_json() << "\n";
    return 0;
  }
  try {
    emit(c, handlers().at(c.subcommand).second(c, r), out);
  } catch (const Error& e) {
    err << error_line(std::string(to_string(e.kind())), e.what());
    return 1;
  } catch (const std::exception& e) {
    err << error_line("Internal", e.what());
    return 1;
  }
  return 0;
}

}  // namespace schanuel
