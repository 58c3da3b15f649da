// isochron command-line front end.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "isochron/criteria.hpp"
#include "isochron/io.hpp"
#include "isochron/isochrone_series.hpp"
#include "isochron/ode_oracle.hpp"
#include "isochron/period.hpp"
#include "isochron/reference_table.hpp"

using namespace isochron;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMonotone = 1, kInconclusive = 2, kError = 3 };

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Potential load_family(const std::string& spec) { return make_family(parse_family(spec)); }

// --- scan -----------------------------------------------------------------

struct ScanArgs {
  std::string family;
  std::optional<double> c_min, c_max;
  int count = 50;
  int nodes = kDefaultNodes;
  std::string out;
  std::string format = "csv";
};

int run_scan(const ScanArgs& a) {
  const Potential P = load_family(a.family);
  const double top = a.c_max.value_or(default_c_max(P));
  if (a.count < 1) throw ContractViolation("--count must be >= 1");
  std::vector<double> grid;
  if (a.c_min) {
    if (!(*a.c_min > 0 && *a.c_min < top)) throw ContractViolation("need 0 < c_min < c_max");
    for (int k = 0; k < a.count; ++k) {
      grid.push_back(a.count == 1 ? *a.c_min : *a.c_min + (top - *a.c_min) * k / (a.count - 1.0));
    }
  } else {
    grid = energy_grid(top, a.count);
  }
  const ScanTable scan = period_scan(P, grid, a.nodes);

  RunManifest m;
  m.command = "scan";
  m.family = P.name();
  m.parameters = {{"c_min", grid.front()}, {"c_max", top}, {"count", a.count}};
  m.nodes = a.nodes;

  const std::string summary = std::string("trend ") + to_string(scan.trend()) + ", spread " +
                              format_double(scan.spread()) + "\n";
  if (a.format == "json") {
    write_text(a.out, dump({{"manifest", m.to_json()}, {"scan", scan_json(scan)}}));
    if (!a.out.empty()) std::cout << summary;
  } else {
    write_text(a.out, scan_csv(scan));
    if (a.out.empty()) {
      std::cerr << summary;
    } else {
      write_text(a.out + ".manifest.json", dump(m.to_json()));
      std::cout << summary;
    }
  }
  return kOk;
}

// --- check ----------------------------------------------------------------

struct CheckArgs {
  std::string family;
  std::optional<double> tol;
  int nodes = kDefaultNodes;
  std::string out;
};

int run_check(const CheckArgs& a) {
  const Potential P = load_family(a.family);
  VerdictOptions opt;
  opt.nodes = a.nodes;
  if (a.tol) opt.residual_tol = opt.distance_tol = *a.tol;
  const IsochronyReport r = isochrony_verdict(P, opt);

  RunManifest m;
  m.command = "check";
  m.family = P.name();
  m.tolerances = {{"residual", opt.residual_tol}, {"distance", opt.distance_tol}, {"spread", opt.spread_tol}};
  m.nodes = opt.nodes;
  write_text(a.out, dump({{"manifest", m.to_json()}, {"report", report_json(r)}}));

  switch (r.verdict) {
    case Verdict::Isochronous:
      return kOk;
    case Verdict::Increasing:
    case Verdict::Decreasing:
      return kMonotone;
    case Verdict::Inconclusive:
      return kInconclusive;
  }
  return kError;
}

// --- coeffs ---------------------------------------------------------------

struct CoeffArgs {
  std::string mode;
  std::map<int, std::string> a;  // index -> "p/q"
  std::map<int, std::string> b;
  std::string series;
  std::optional<int> order;
  bool check_table = false;
  std::string out;
};

json series_json(const RationalSeries& g) {
  json j = json::object();
  for (int k = 2; k <= g.order(); ++k) j["a" + std::to_string(k)] = rational_json(g[k]);
  return j;
}

json b_json(const std::vector<Rational>& b) {
  json j = json::array();
  for (const auto& v : b) j.push_back(rational_json(v));
  return j;
}

int run_coeffs(const CoeffArgs& a) {
  json result;
  result["mode"] = a.mode;
  bool table_ok = true;

  if (a.mode == "odd-from-even") {
    const int order = a.order.value_or(13);
    EvenCoefficients<Rational> even;
    json inputs = json::object();
    for (const auto& [k, text] : a.a) {
      if (k % 2 != 0) throw ContractViolation("odd-from-even takes even coefficients only, got --a" + std::to_string(k));
      even[k] = parse_rational(text);
      inputs["a" + std::to_string(k)] = rational_json(even[k]);
    }
    const auto res = odd_from_even(even, order);
    json odd = json::object();
    for (const auto& [k, v] : res.a_odd) odd["a" + std::to_string(k)] = rational_json(v);
    result.update({{"order", order}, {"inputs", inputs}, {"odd", odd}, {"g", series_json(res.g_series)},
                   {"b", b_json(res.b)}});
    if (a.check_table) {
      reference::EvenTuple t;
      for (int i = 0; i < 6; ++i) t[static_cast<std::size_t>(i)] = even.count(2 * i + 2) ? even.at(2 * i + 2) : Rational(0);
      json checks = json::array();
      for (const auto& [k, want] : reference::odd_coefficients(t)) {
        if (k > order) break;
        const bool ok = res.g_series[k] == want;
        table_ok = table_ok && ok;
        checks.push_back({{"coefficient", "a" + std::to_string(k)}, {"expected", rational_json(want)}, {"ok", ok}});
      }
      result["table_check"] = {{"ok", table_ok}, {"entries", checks}};
    }
  } else if (a.mode == "g-from-b") {
    const int order = a.order.value_or(7);
    std::vector<Rational> b;
    for (const auto& [k, text] : a.b) {
      if (static_cast<int>(b.size()) <= k) b.resize(static_cast<std::size_t>(k + 1), Rational(0));
      b[static_cast<std::size_t>(k)] = parse_rational(text);
    }
    if (b.empty()) b.push_back(Rational(0));
    const auto g = g_from_b<Rational>(b, order);
    result.update({{"order", order}, {"b", b_json(b)}, {"g", series_json(g)}});
    if (a.check_table) {
      const auto at = [&](std::size_t k) { return k < b.size() ? b[k] : Rational(0); };
      json checks = json::array();
      for (const auto& [k, want] : reference::g_coefficients_from_b(at(0), at(1), at(2))) {
        if (k > order) break;
        const bool ok = g[k] == want;
        table_ok = table_ok && ok;
        checks.push_back({{"coefficient", "a" + std::to_string(k)}, {"expected", rational_json(want)}, {"ok", ok}});
      }
      if (b.size() > 3) result["table_check_note"] = "b_3 and above first enter at x^8";
      result["table_check"] = {{"ok", table_ok}, {"entries", checks}};
    }
  } else if (a.mode == "b-from-g") {
    RationalSeries g;
    if (!a.series.empty()) {
      const std::string text = a.series.rfind("series:", 0) == 0 ? a.series : "series:" + a.series;
      g = std::get<SeriesFamily>(parse_family(text)).g;
    } else {
      int top = 2;
      for (const auto& [k, text] : a.a) top = std::max(top, k);
      g = RationalSeries(top);
      g[1] = 1;
      for (const auto& [k, text] : a.a) g[k] = parse_rational(text);
    }
    // a polynomial g is exact at every order, so look past its degree
    g = g.with_order(a.order.value_or(std::max(kMaxTaylorOrder, g.order())));
    const auto m = b_from_g(g);
    result.update({{"order", g.order()}, {"g", series_json(g)}, {"b", b_json(m.b)}});
    if (m.mismatch) {
      result["isochronous"] = false;
      result["mismatch"] = {{"order", m.mismatch->order}, {"residual", rational_json(m.mismatch->residual)}};
    } else {
      result["isochronous"] = true;
    }
    if (a.check_table) result["table_check"] = {{"ok", true}, {"note", "no reference table for this mode"}};
  } else {
    throw ContractViolation("unknown --mode " + a.mode + " (odd-from-even, g-from-b, b-from-g)");
  }

  RunManifest man;
  man.command = "coeffs";
  man.parameters = {{"mode", a.mode}};
  write_text(a.out, dump({{"manifest", man.to_json()}, {"coeffs", result}}));
  return table_ok ? kOk : kMonotone;
}

// --- oracle / abel / family eval -------------------------------------------

struct OracleArgs {
  std::string family;
  double c = 0;
  int nodes = kDefaultNodes;
  double tol = 1e-12;
  std::string out;
};

int run_oracle(const OracleArgs& a) {
  const Potential P = load_family(a.family);
  SimConfig cfg;
  cfg.tol = a.tol;
  const double quad = period(P, a.c, a.nodes);
  const SimResult sim = simulate_period(P, a.c, cfg);
  RunManifest m;
  m.command = "oracle";
  m.family = P.name();
  m.parameters = {{"c", a.c}};
  m.tolerances = {{"ode", cfg.tol}};
  m.nodes = a.nodes;
  write_text(a.out, dump({{"manifest", m.to_json()},
                          {"c", a.c},
                          {"T_quad", quad},
                          {"T_sim", sim.T},
                          {"difference", sim.T - quad},
                          {"relative_difference", std::abs(sim.T - quad) / quad},
                          {"half_period", sim.half_period},
                          {"energy_drift", sim.energy_drift},
                          {"drift_warning", sim.drift_warning},
                          {"steps", sim.steps}}));
  return kOk;
}

struct AbelArgs {
  std::string family;
  std::vector<double> c;
  int nodes = kDefaultNodes;
  std::string out;
};

int run_abel(const AbelArgs& a) {
  const Potential P = load_family(a.family);
  const std::vector<double> cs = a.c.empty() ? energy_grid(default_c_max(P), 5) : a.c;
  json rows = json::array();
  for (double c : cs) {
    const AbelCheck r = abel_turning_distance(P, c, a.nodes);
    rows.push_back({{"c", c}, {"distance", r.lhs}, {"abel", r.rhs}, {"difference", r.rhs - r.lhs}});
  }
  RunManifest m;
  m.command = "abel";
  m.family = P.name();
  m.parameters = {{"c", cs}};
  m.nodes = a.nodes;
  write_text(a.out, dump({{"manifest", m.to_json()}, {"rows", rows}}));
  return kOk;
}

struct EvalArgs {
  std::string family;
  std::vector<double> x;
  int count = 21;
  std::string out;
  std::string format = "csv";
};

int run_family_eval(const EvalArgs& a) {
  const Potential P = load_family(a.family);
  std::vector<double> xs = a.x;
  if (xs.empty()) {
    if (a.count < 2) throw ContractViolation("--count must be >= 2");
    const Orbit o = turning_points(P, default_c_max(P));
    for (int k = 0; k < a.count; ++k) xs.push_back(o.a + (o.b - o.a) * k / (a.count - 1.0));
  }
  std::string csv = "x,G,g,phi\n";
  json rows = json::array();
  for (double x : xs) {
    const Jet j = P.jet(x);
    const double ph = P.phi(x);
    csv += format_double(x) + ',' + format_double(j.G) + ',' + format_double(j.g) + ',' + format_double(ph) + '\n';
    rows.push_back({{"x", x}, {"G", j.G}, {"g", j.g}, {"phi", ph}});
  }
  const Interval d = P.domain();
  RunManifest m;
  m.command = "family eval";
  m.family = P.name();
  m.parameters = {{"count", xs.size()}};
  if (a.format == "json") {
    json dom = {{"lo", std::isinf(d.lo) ? json("-inf") : json(d.lo)}, {"hi", std::isinf(d.hi) ? json("inf") : json(d.hi)}};
    const double cb = P.critical_energy();
    write_text(a.out, dump({{"manifest", m.to_json()},
                            {"domain", dom},
                            {"critical_energy", std::isinf(cb) ? json("inf") : json(cb)},
                            {"rows", rows}}));
  } else {
    write_text(a.out, csv);
    if (!a.out.empty()) write_text(a.out + ".manifest.json", dump(m.to_json()));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period function and isochronicity of x'' + g(x) = 0"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ISOCHRON_VERSION));

  const std::string family_help =
      "family spec, e.g. harmonic, urabe:alpha=0.3, isotonic:alpha=1, three:alpha=A,beta=B,gamma=C, "
      "stillinger:alpha=A,gamma=C, bmk:alpha=A, series:a2=p/q,a3=..., h:preset=NAME,alpha=A";
  const auto formats = CLI::IsMember({"csv", "json"});

  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "tabulate T and T' over energies");
  s->add_option("--family", scan.family, family_help)->required();
  s->add_option("--c-min", scan.c_min, "lowest energy (default c_max/count)");
  s->add_option("--c-max", scan.c_max, "highest energy (default 0.9 c_bar, or 1)");
  s->add_option("--count", scan.count, "number of energies")->capture_default_str();
  s->add_option("--nodes", scan.nodes, "quadrature nodes")->capture_default_str();
  s->add_option("--out", scan.out, "output file (default stdout)");
  s->add_option("--format", scan.format, "csv or json")->check(formats)->capture_default_str();

  CheckArgs check;
  auto* c = app.add_subcommand("check", "isochronicity verdict; exit 0 isochronous, 1 monotone, 2 inconclusive, 3 error");
  c->add_option("--family", check.family, family_help)->required();
  c->add_option("--tol", check.tol, "pointwise residual tolerance (default 1e-9)");
  c->add_option("--nodes", check.nodes, "quadrature nodes")->capture_default_str();
  c->add_option("--out", check.out, "output file (default stdout)");
  std::string check_format = "json";
  c->add_option("--format", check_format, "json")->check(CLI::IsMember({"json"}));

  CoeffArgs coeffs;
  auto* k = app.add_subcommand("coeffs", "exact coefficient tables");
  k->add_option("--mode", coeffs.mode, "odd-from-even, g-from-b or b-from-g")
      ->required()
      ->check(CLI::IsMember({"odd-from-even", "g-from-b", "b-from-g"}));
  for (int i = 2; i <= 20; ++i) {
    k->add_option_function<std::string>(
        "--a" + std::to_string(i), [&coeffs, i](const std::string& v) { coeffs.a[i] = v; },
        "coefficient of x^" + std::to_string(i) + " in g (p/q)");
  }
  for (int i = 0; i <= 9; ++i) {
    k->add_option_function<std::string>(
        "--b" + std::to_string(i), [&coeffs, i](const std::string& v) { coeffs.b[i] = v; },
        "b_" + std::to_string(i) + " = f^(" + std::to_string(i) + ")(0)/" + std::to_string(i) + "! (p/q)");
  }
  k->add_option("--series", coeffs.series, "g as a2=p/q,a3=... (b-from-g)");
  k->add_option("--order", coeffs.order, "series order");
  k->add_flag("--check-paper-table", coeffs.check_table, "compare against the reference closed forms");
  k->add_option("--out", coeffs.out, "output file (default stdout)");
  std::string coeffs_format = "json";
  k->add_option("--format", coeffs_format, "json")->check(CLI::IsMember({"json"}));

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "quadrature period against ODE integration");
  o->add_option("--family", oracle.family, family_help)->required();
  o->add_option("--c", oracle.c, "energy")->required();
  o->add_option("--nodes", oracle.nodes, "quadrature nodes")->capture_default_str();
  o->add_option("--tol", oracle.tol, "integrator tolerance")->capture_default_str();
  o->add_option("--out", oracle.out, "output file (default stdout)");
  std::string oracle_format = "json";
  o->add_option("--format", oracle_format, "json")->check(CLI::IsMember({"json"}));

  AbelArgs abel;
  auto* b = app.add_subcommand("abel", "turning-point distance against the Abel transform of T");
  b->add_option("--family", abel.family, family_help)->required();
  b->add_option("--c", abel.c, "energies (default 5 up to c_max)");
  b->add_option("--nodes", abel.nodes, "quadrature nodes")->capture_default_str();
  b->add_option("--out", abel.out, "output file (default stdout)");
  std::string abel_format = "json";
  b->add_option("--format", abel_format, "json")->check(CLI::IsMember({"json"}));

  EvalArgs eval;
  auto* f = app.add_subcommand("family", "family utilities");
  f->require_subcommand(1);
  auto* e = f->add_subcommand("eval", "pointwise G, g and d/dx(G/g^2)");
  e->add_option("--family", eval.family, family_help)->required();
  e->add_option("--x", eval.x, "points (default: count points between the turning points at c_max)");
  e->add_option("--count", eval.count, "number of default points")->capture_default_str();
  e->add_option("--out", eval.out, "output file (default stdout)");
  e->add_option("--format", eval.format, "csv or json")->check(formats)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ok) {
    return app.exit(ok);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kError;
  }

  try {
    if (*s) return run_scan(scan);
    if (*c) return run_check(check);
    if (*k) return run_coeffs(coeffs);
    if (*o) return run_oracle(oracle);
    if (*b) return run_abel(abel);
    if (*e) return run_family_eval(eval);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kError;
  }
  return kError;
}
