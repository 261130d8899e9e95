#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "landau/errors.hpp"
#include "landau/euclidean.hpp"
#include "landau/fuchsian.hpp"
#include "landau/gabor.hpp"
#include "landau/hyperbolic.hpp"

namespace landau::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int nodes = kDefaultNodes;
  std::map<std::string, double> tolerances{{"prop1", 1e-5}, {"witness", 1e-8}};
  std::optional<std::string> format;
  std::optional<std::string> out;

  double tol(const std::string& name) const { return tolerances.at(name); }
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Cell = std::variant<std::string, double, std::int64_t>;

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) return num(*d);
  return std::to_string(std::get<std::int64_t>(c));
}

json cell_json(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(num(*d));
  return std::get<std::int64_t>(c);
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

// Collected output of one command, rendered once at the end.
struct Emission {
  std::string command;
  std::vector<std::pair<std::string, std::string>> echo;  // extra config lines
  std::optional<Table> table;
  std::optional<json> report;
};

std::vector<std::string> config_lines(const RunConfig& cfg, const Emission& e) {
  std::vector<std::string> lines{"command=" + e.command, "nodes=" + std::to_string(cfg.nodes)};
  for (const auto& [k, v] : cfg.tolerances) lines.push_back("tol." + k + "=" + num(v));
  for (const auto& [k, v] : e.echo) lines.push_back(k + "=" + v);
  return lines;
}

json config_json(const RunConfig& cfg, const Emission& e) {
  json c;
  c["command"] = e.command;
  c["nodes"] = cfg.nodes;
  json tol = json::object();
  for (const auto& [k, v] : cfg.tolerances) tol[k] = v;
  c["tolerances"] = tol;
  for (const auto& [k, v] : e.echo) c[k] = v;
  return c;
}

void flatten(const json& j, const std::string& prefix, Table& t) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), t);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", t);
  } else if (j.is_number_float()) {
    t.rows.push_back({prefix, j.get<double>()});
  } else if (j.is_number_integer()) {
    t.rows.push_back({prefix, j.get<std::int64_t>()});
  } else if (j.is_boolean()) {
    t.rows.push_back({prefix, std::string(j.get<bool>() ? "true" : "false")});
  } else if (j.is_string()) {
    t.rows.push_back({prefix, j.get<std::string>()});
  } else {
    t.rows.push_back({prefix, std::string("null")});
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const RunConfig& cfg, const Emission& e, const std::string& default_format) {
  const std::string format = cfg.format.value_or(default_format);
  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["config"] = config_json(cfg, e);
    if (e.table) {
      json rows = json::array();
      for (const auto& r : e.table->rows) {
        json row;
        for (std::size_t i = 0; i < r.size(); ++i) row[e.table->header[i]] = cell_json(r[i]);
        rows.push_back(row);
      }
      doc["rows"] = rows;
    }
    if (e.report) doc["report"] = *e.report;
    os << doc.dump(2) << "\n";
    return os.str();
  }
  Table t;
  if (e.table) {
    t = *e.table;
  } else {
    t.header = {"field", "value"};
    flatten(*e.report, "", t);
  }
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << "\n";
  for (const std::string& line : config_lines(cfg, e)) os << "# " << line << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(r[i]));
    os << "\n";
  }
  return os.str();
}

std::vector<double> parse_doubles(const std::string& text, char sep, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse " + what + " '" + text + "'");
    }
  }
  return out;
}

// from:to:steps
std::vector<double> parse_range(const std::string& text, const std::string& what) {
  const std::vector<double> v = parse_doubles(text, ':', what);
  if (v.size() != 3) throw UsageError(what + " must be from:to:steps");
  const double steps = v[2];
  if (steps < 1 || steps != std::floor(steps)) throw UsageError(what + ": steps must be a positive integer");
  const int count = static_cast<int>(steps);
  if (count == 1 && v[0] != v[1]) throw UsageError(what + ": one step needs from == to");
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(count == 1 ? v[0] : v[0] + (v[1] - v[0]) * i / (count - 1));
  return out;
}

Complex parse_point(const std::string& text) {
  if (text == "rho") return {0.5, std::sqrt(3.0) / 2.0};
  if (text == "i") return {0.0, 1.0};
  const std::vector<double> v = parse_doubles(text, ',', "point");
  if (v.size() != 2) throw UsageError("point must be 'rho', 'i' or x,y");
  return {v[0], v[1]};
}

RadialFunction named_test_function(const std::string& name) {
  if (name == "exp") return RadialFunction::monomial_exp(0.0, 1.0);
  if (name == "texp") return RadialFunction::monomial_exp(1.0, 1.0);
  if (name == "poly") return {0.5, 0.7, [](Complex t) { return 1.0 + t * t; }};
  throw UsageError("unknown test function '" + name + "' (expected exp, texp or poly)");
}

void load_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("config file must hold a JSON object");
  try {
    if (j.contains("nodes")) cfg.nodes = j.at("nodes").get<int>();
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("tolerances")) {
      for (const auto& [k, v] : j.at("tolerances").items()) cfg.tolerances[k] = v.get<double>();
    }
  } catch (const json::exception& e) {
    throw InputError("config file " + path + ": " + e.what());
  }
}

void validate_config(const RunConfig& cfg) {
  if (cfg.nodes < 16) throw UsageError("--nodes must be at least 16");
  if (cfg.format && *cfg.format != "csv" && *cfg.format != "json") throw UsageError("--format must be csv or json");
  for (const auto& [k, v] : cfg.tolerances) {
    if (!(v > 0.0)) throw UsageError("tolerance " + k + " must be positive");
  }
}

json bound_json(const BoundReport& r) {
  json j;
  j["check"] = r.check;
  j["m0"] = r.m0;
  j["threshold"] = r.threshold;
  j["satisfied"] = r.satisfied;
  j["verdict"] = to_string(r.verdict);
  if (r.check == "covolume") {
    j["area"] = r.area;
    j["area_exact"] = r.area_exact;
    j["area_bound"] = r.area_bound;
  }
  j["notes"] = r.notes;
  return j;
}

json witness_json(const WitnessReport& w, const std::string& form, int words) {
  json j;
  j["B"] = w.B;
  j["n"] = w.n;
  j["form"] = form;
  j["m0"] = w.m0;
  j["alpha"] = w.alpha;
  j["epsilon"] = w.epsilon;
  j["zeta0"] = {{"x", w.zeta0.real()}, {"y", w.zeta0.imag()}};
  j["form_at_zeta0"] = w.form_at_zeta0;
  j["value_at_zeta0"] = w.value_at_zeta0;
  j["orbit_word_length"] = words;
  j["orbit_size"] = w.orbit_size;
  j["max_orbit_residual"] = w.max_orbit_residual;
  j["orbit_vanishing"] = w.orbit_vanishing;
  json disc = json::array();
  for (const DiscNormSample& s : w.disc_norm) disc.push_back({{"radius", s.radius}, {"value", s.value}});
  j["disc_norm"] = disc;
  j["tail_constant"] = w.tail_constant;
  j["tail_bound"] = w.tail_bound;
  j["disc_norm_cauchy"] = w.disc_norm_cauchy;
  j["sup_grid_points"] = w.sup_grid_points;
  j["sup_domain"] = w.sup_domain;
  j["sup_grid"] = w.sup_grid;
  j["invariance_error"] = w.invariance_error;
  j["bounded"] = w.bounded;
  j["ok"] = w.ok();
  j["notes"] = w.notes;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Landau-level coherent states, Gabor-Hermite frames and Fuchsian bounds", "landau"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  int nodes_flag = 0;
  std::string format_flag;
  std::string out_flag;
  std::vector<std::string> tol_flags;
  app.add_option("--config", config_path, "JSON config file; flags override it");
  app.add_option("--nodes", nodes_flag, "Quadrature nodes (>= 16)");
  app.add_option("--format", format_flag, "csv or json");
  app.add_option("--out", out_flag, "Write output to this path instead of stdout");
  app.add_option("--tol", tol_flags, "Tolerance override name=value (prop1, witness)");

  // levels
  auto* levels = app.add_subcommand("levels", "Landau level tables");
  levels->require_subcommand(1);
  double lev_B = 0.0;
  int lev_nmax = 0;
  auto* lev_euclid = levels->add_subcommand("euclid", "(n + 1/2) B for n = 0..nmax");
  lev_euclid->add_option("--B", lev_B, "Field strength")->required();
  lev_euclid->add_option("--nmax", lev_nmax, "Largest level index")->required();
  auto* lev_hyper = levels->add_subcommand("hyper", "Hyperbolic discrete levels");
  lev_hyper->add_option("--B", lev_B, "Field strength")->required();

  // gabor scan
  auto* gabor = app.add_subcommand("gabor", "Gabor-Hermite frame estimates");
  gabor->require_subcommand(1);
  auto* scan = gabor->add_subcommand("scan", "Frame bounds on square lattices");
  int scan_n = 0;
  std::string scan_range;
  ScanSettings scan_settings;
  scan->add_option("--n", scan_n, "Window index")->required();
  scan->add_option("--omega2", scan_range, "from:to:steps")->required();
  scan->add_option("--modes", scan_settings.modes, "Hermite modes M");
  scan->add_option("--interior", scan_settings.interior, "Interior modes M'");
  scan->add_option("--radius", scan_settings.radius, "Lattice radius R");
  scan->add_option("--frame-threshold", scan_settings.thresholds.frame_relative, "frame_like above this fraction");
  scan->add_option("--deficient-threshold", scan_settings.thresholds.deficient_relative,
                   "deficient below this fraction");

  // hyper prop1
  auto* hyper = app.add_subcommand("hyper", "Hyperbolic transforms");
  hyper->require_subcommand(1);
  auto* prop1 = hyper->add_subcommand("prop1", "W transform against its Bergman decomposition");
  double p1_B = 0.0;
  int p1_n = 0;
  std::string p1_grid = "default";
  std::string p1_f = "exp";
  prop1->add_option("--B", p1_B, "Field strength")->required();
  prop1->add_option("--n", p1_n, "Level index")->required();
  prop1->add_option("--grid", p1_grid, "'default' or x0:x1:nx,y0:y1:ny");
  prop1->add_option("--f", p1_f, "Test function exp, texp or poly");

  // fuchsian
  auto* fuchsian = app.add_subcommand("fuchsian", "Fuchsian group formulas, bounds and the witness");
  fuchsian->require_subcommand(1);
  std::string sig_text = "0,3,2,3,inf";
  int f_m = 0;
  auto* f_area = fuchsian->add_subcommand("area", "Fundamental domain area");
  f_area->add_option("--signature", sig_text, "g,r,e1,...,er with inf for cusps");
  auto* f_dim = fuchsian->add_subcommand("dim", "Dimension of holomorphic forms of weight m");
  f_dim->add_option("--signature", sig_text, "g,r,e1,...,er with inf for cusps");
  f_dim->add_option("--m", f_m, "Weight")->required();
  auto* f_zeros = fuchsian->add_subcommand("zeros", "Zero count m S_G / (2 pi)");
  f_zeros->add_option("--signature", sig_text, "g,r,e1,...,er with inf for cusps");
  f_zeros->add_option("--m", f_m, "Weight")->required();

  auto* f_orbit = fuchsian->add_subcommand("orbit", "Orbit of a seed point");
  std::string group_text = "modular";
  std::string seed_text;
  int words = 2;
  f_orbit->add_option("--group", group_text, "modular or gamma(N)");
  f_orbit->add_option("--seed", seed_text, "x,y or rho or i")->required();
  f_orbit->add_option("--words", words, "Maximal word length");

  auto* f_bounds = fuchsian->add_subcommand("bounds", "Completeness bounds");
  double fb_B = 0.0;
  int fb_n = 0;
  double fb_m0 = 0.0;
  f_bounds->add_option("--B", fb_B, "Field strength")->required();
  f_bounds->add_option("--n", fb_n, "Level index")->required();
  auto* fb_m0_opt = f_bounds->add_option("--m0", fb_m0, "Weight of a form vanishing on the orbit");
  auto* fb_sig_opt = f_bounds->add_option("--signature", sig_text, "Group signature for the covolume check");

  auto* f_witness = fuchsian->add_subcommand("witness", "Incompleteness witness H");
  double fw_B = 0.0;
  int fw_n = 0;
  std::string fw_form = "E4";
  std::string fw_zeta = "rho";
  int fw_words = 4;
  f_witness->add_option("--B", fw_B, "Field strength")->required();
  f_witness->add_option("--n", fw_n, "Level index")->required();
  f_witness->add_option("--form", fw_form, "E4, E6 or Delta");
  f_witness->add_option("--zeta0", fw_zeta, "Orbit seed: rho, i or x,y");
  f_witness->add_option("--words", fw_words, "Orbit word length");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "landau: " << e.what() << "\n";
    return kUsage;
  }

  RunConfig cfg;
  Emission em;
  std::string default_format = "csv";
  int code = kOk;
  try {
    if (!config_path.empty()) load_config(config_path, cfg);
    if (app.count("--nodes")) cfg.nodes = nodes_flag;
    if (app.count("--format")) cfg.format = format_flag;
    if (app.count("--out")) cfg.out = out_flag;
    for (const std::string& t : tol_flags) {
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects name=value, got '" + t + "'");
      const std::string name = t.substr(0, eq);
      if (!cfg.tolerances.count(name)) throw UsageError("unknown tolerance '" + name + "'");
      const std::vector<double> v = parse_doubles(t.substr(eq + 1), ';', "tolerance");
      if (v.size() != 1) throw UsageError("--tol expects name=value, got '" + t + "'");
      cfg.tolerances[name] = v[0];
    }
    validate_config(cfg);

    if (*lev_euclid) {
      em.command = "levels euclid";
      em.echo = {{"B", num(lev_B)}};
      if (lev_nmax < 0) throw UsageError("--nmax must be non-negative");
      Table t{{"n", "energy"}, {}};
      for (int n = 0; n <= lev_nmax; ++n) t.rows.push_back({std::int64_t(n), euclid_level({lev_B, n})});
      em.table = t;
    } else if (*lev_hyper) {
      em.command = "levels hyper";
      em.echo = {{"B", num(lev_B)}};
      const std::vector<double> lv = hyper_levels(lev_B);
      Table t{{"n", "energy"}, {}};
      for (std::size_t n = 0; n < lv.size(); ++n) t.rows.push_back({std::int64_t(n), lv[n]});
      em.table = t;
    } else if (*scan) {
      em.command = "gabor scan";
      if (scan_n < 0) throw UsageError("--n must be non-negative");
      if (scan_settings.interior >= scan_settings.modes) throw UsageError("--interior must be smaller than --modes");
      if (scan_settings.interior < 1) throw UsageError("--interior must be positive");
      if (scan_settings.modes < scan_n + 2) throw UsageError("--modes must be at least n + 2");
      if (scan_settings.radius < 2) throw UsageError("--radius must be at least 2");
      const std::vector<double> omegas = parse_range(scan_range, "--omega2");
      for (double w : omegas) {
        if (!(w > 0.0)) throw UsageError("--omega2 values must be positive");
      }
      em.echo = {{"n", std::to_string(scan_n)},
                 {"modes", std::to_string(scan_settings.modes)},
                 {"interior", std::to_string(scan_settings.interior)},
                 {"radius", std::to_string(scan_settings.radius)},
                 {"frame_threshold", num(scan_settings.thresholds.frame_relative)},
                 {"deficient_threshold", num(scan_settings.thresholds.deficient_relative)}};
      Table t{{"omega2", "lower", "upper", "modes", "interior", "radius", "classification"}, {}};
      for (const FrameEstimate& e : frame_scan(scan_n, omegas, scan_settings)) {
        t.rows.push_back({e.omega2, e.lower, e.upper, std::int64_t(e.modes_used), std::int64_t(e.interior_modes),
                          std::int64_t(e.lattice_radius), to_string(e.classification)});
      }
      em.table = t;
    } else if (*prop1) {
      em.command = "hyper prop1";
      if (2.0 * p1_B > 1.0 && (p1_n < 0 || p1_n > max_level_index(p1_B))) {
        throw UsageError("--n must lie in 0..floor(B - 1/2)");
      }
      std::vector<double> xs{-0.5, 0.0, 0.5}, ys{0.5, 1.0, 2.0};
      if (p1_grid != "default") {
        const auto comma = p1_grid.find(',');
        if (comma == std::string::npos) throw UsageError("--grid must be 'default' or x0:x1:nx,y0:y1:ny");
        xs = parse_range(p1_grid.substr(0, comma), "--grid x");
        ys = parse_range(p1_grid.substr(comma + 1), "--grid y");
        for (double y : ys) {
          if (!(y > 0.0)) throw UsageError("--grid y values must be positive");
        }
      }
      const RadialFunction f = named_test_function(p1_f);
      const HyperLevelSpec spec{p1_B, p1_n};
      em.echo = {{"B", num(p1_B)}, {"n", std::to_string(p1_n)}, {"f", p1_f}, {"grid", p1_grid}};
      Table t{{"x", "y", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_err"}, {}};
      const double tol = cfg.tol("prop1");
      for (double x : xs) {
        for (double y : ys) {
          const Proposition1Result r = proposition1_check(spec, f, {x, y}, cfg.nodes);
          t.rows.push_back({x, y, r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.rel_err});
          if (!(r.rel_err <= tol)) code = kCheckFailed;
        }
      }
      em.table = t;
    } else if (*f_area) {
      em.command = "fuchsian area";
      const GroupSignature sig = GroupSignature::parse(sig_text);
      const Rational a = fundamental_area_over_pi(sig);
      em.echo = {{"signature", sig.str()}};
      em.table = Table{{"area_exact", "area"}, {{format_pi_multiple(a), fundamental_area(sig)}}};
    } else if (*f_dim) {
      em.command = "fuchsian dim";
      const GroupSignature sig = GroupSignature::parse(sig_text);
      em.echo = {{"signature", sig.str()}};
      em.table = Table{{"m", "dim"}, {{std::int64_t(f_m), std::int64_t(dim_hol(f_m, sig))}}};
    } else if (*f_zeros) {
      em.command = "fuchsian zeros";
      const GroupSignature sig = GroupSignature::parse(sig_text);
      const Rational z = poincare_zero_count_exact(f_m, sig);
      em.echo = {{"signature", sig.str()}};
      const std::string exact = z.den == 1 ? std::to_string(z.num) : std::to_string(z.num) + "/" + std::to_string(z.den);
      em.table = Table{{"m", "zeros_exact", "zeros"}, {{std::int64_t(f_m), exact, z.value()}}};
    } else if (*f_orbit) {
      em.command = "fuchsian orbit";
      GroupChoice group = GroupChoice::modular();
      if (group_text.rfind("gamma(", 0) == 0 && group_text.back() == ')') {
        const std::string inner = group_text.substr(6, group_text.size() - 7);
        try {
          group = GroupChoice::congruence(std::stoll(inner));
        } catch (const std::logic_error&) {
          throw UsageError("--group must be modular or gamma(N)");
        }
      } else if (group_text != "modular") {
        throw UsageError("--group must be modular or gamma(N)");
      }
      if (words < 0) throw UsageError("--words must be non-negative");
      const Complex seed = parse_point(seed_text);
      em.echo = {{"group", group.str()}, {"seed", num(seed.real()) + " " + num(seed.imag())},
                 {"words", std::to_string(words)}};
      Table t{{"word", "a", "b", "c", "d", "x", "y"}, {}};
      for (const OrbitPoint& p : orbit(group, UpperHalfPoint::from(seed), words)) {
        t.rows.push_back({p.word, p.g.a(), p.g.b(), p.g.c(), p.g.d(), p.point.x, p.point.y});
      }
      em.table = t;
    } else if (*f_bounds) {
      em.command = "fuchsian bounds";
      default_format = "json";
      if (!fb_m0_opt->count() && !fb_sig_opt->count()) throw UsageError("bounds needs --m0 and/or --signature");
      const HyperLevelSpec spec{fb_B, fb_n};
      em.echo = {{"B", num(fb_B)}, {"n", std::to_string(fb_n)}};
      json reports = json::array();
      if (fb_m0_opt->count()) reports.push_back(bound_json(check_theorem2(spec, fb_m0)));
      if (fb_sig_opt->count()) {
        const GroupSignature sig = GroupSignature::parse(sig_text);
        em.echo.emplace_back("signature", sig.str());
        reports.push_back(bound_json(check_corollary1(spec, sig)));
      }
      em.report = json{{"reports", reports}};
    } else if (*f_witness) {
      em.command = "fuchsian witness";
      default_format = "json";
      if (fw_words < 0) throw UsageError("--words must be non-negative");
      const Complex zeta0 = parse_point(fw_zeta);
      const HyperLevelSpec spec{fw_B, fw_n};
      const AutomorphicForm form(named_form(fw_form));
      std::vector<UpperHalfPoint> points;
      for (const OrbitPoint& p : orbit(GroupChoice::modular(), UpperHalfPoint::from(zeta0), fw_words)) {
        points.push_back(p.point);
      }
      WitnessOptions opts;
      opts.tol = cfg.tol("witness");
      em.echo = {{"B", num(fw_B)}, {"n", std::to_string(fw_n)}, {"form", fw_form}, {"zeta0", fw_zeta}};
      const WitnessReport rep = incompleteness_witness(spec, form, zeta0, points, opts);
      em.report = witness_json(rep, fw_form, fw_words);
      if (!rep.ok()) code = kCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "landau: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "landau: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NoBoundStates& e) {
    err << "landau: " << e.what() << "\n";
    return kDomainRefusal;
  } catch (const WitnessRegimeRefused& e) {
    err << "landau: " << e.what() << "\n";
    return kWitnessRefused;
  } catch (const InvalidSignature& e) {
    err << "landau: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidArgument& e) {
    err << "landau: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const QuadratureError& e) {
    err << "landau: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const TruncationError& e) {
    err << "landau: " << e.what() << "\n";
    return kCheckFailed;
  }

  const std::string text = render(cfg, em, default_format);
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << "landau: cannot write " << *cfg.out << "\n";
      return kInvalidInput;
    }
    file << text;
  } else {
    out << text;
  }
  return code;
}

}  // namespace landau::cli
