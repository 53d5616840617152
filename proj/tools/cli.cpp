#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uenergy/certify.hpp"
#include "uenergy/charpoly.hpp"
#include "uenergy/closed_forms.hpp"
#include "uenergy/energy.hpp"
#include "uenergy/enumerate.hpp"
#include "uenergy/errors.hpp"
#include "uenergy/tables.hpp"

namespace uenergy::cli {

using nlohmann::json;

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split(std::string_view s, char sep, std::size_t base = 0) {
  std::vector<Token> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back({s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start), base + start});
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int to_int(const Token& t) {
  int v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.text.empty() || ec != std::errc() || ptr != last)
    throw parse_error("expected an integer, got '" + std::string(t.text) + "'", t.offset);
  return v;
}

std::string fixed5(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// graph selectors given on the command line; "-" reads one per line from stdin
struct NamedGraph {
  std::string name;
  Graph graph;
};

std::vector<NamedGraph> read_graphs(const std::string& spec, std::istream& in) {
  std::vector<NamedGraph> out;
  if (spec != "-") {
    out.push_back({spec, parse_graph_spec(spec)});
    return out;
  }
  std::string line;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
    if (line.empty()) continue;
    if (line.find(':') != std::string::npos) out.push_back({line, parse_graph_spec(line)});
    else out.push_back({"g6:" + line, parse_graph6(line)});
  }
  return out;
}

EnergyValue run_method(const std::string& method, const Graph& g, double tol) {
  if (method == "exact") return energy_of_poly(charpoly(g), tol);
  if (method == "eig") return energy_eigensolver_oracle(g, tol);
  return energy_coulson(g, tol);
}

int cmd_energy(const std::string& spec, const std::string& method, double tol, const std::string& format,
               std::ostream& out, std::istream& in) {
  const auto graphs = read_graphs(spec, in);
  const std::vector<std::string> methods =
      method == "all" ? std::vector<std::string>{"exact", "eig", "coulson"} : std::vector<std::string>{method};
  json doc = json::array();
  if (format == "csv") out << "graph,method,value,radius\n";
  for (const auto& [name, g] : graphs) {
    json entry{{"graph", name}, {"n", g.order()}, {"m", g.size()}};
    json results = json::array();
    std::vector<double> values;
    for (const auto& m : methods) {
      const EnergyValue e = run_method(m, g, tol);
      values.push_back(e.value);
      results.push_back({{"method", m}, {"value", e.value}, {"radius", e.radius}});
      if (format == "text") out << name << " " << m << " " << fixed5(e.value) << " (radius " << sci(e.radius) << ")\n";
      else if (format == "csv") out << name << "," << m << "," << json(e.value).dump() << "," << json(e.radius).dump() << "\n";
    }
    entry["results"] = results;
    if (values.size() > 1) {
      double dev = 0;
      for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j) dev = std::max(dev, std::fabs(values[i] - values[j]));
      entry["max_deviation"] = dev;
      if (format == "text") out << name << " max deviation between routes " << sci(dev) << "\n";
    }
    doc.push_back(entry);
  }
  if (format == "json") out << doc.dump(2) << "\n";
  return exit_ok;
}

int cmd_diff(const std::string& s1, const std::string& s2, const std::string& method, double tol,
             const std::string& format, std::ostream& out) {
  const Graph g1 = parse_graph_spec(s1), g2 = parse_graph_spec(s2);
  if (g1.order() != g2.order()) throw invalid_parameters("diff needs graphs of the same order");
  double value = 0, radius = 0;
  if (method == "coulson") {
    value = energy_diff_coulson(g1, g2, tol);
    radius = tol;
  } else {
    const EnergyValue a = energy_of_poly(charpoly(g1), tol / 2), b = energy_of_poly(charpoly(g2), tol / 2);
    value = a.value - b.value;
    radius = a.radius + b.radius;
  }
  if (format == "json")
    out << json{{"graph1", s1}, {"graph2", s2}, {"method", method}, {"value", value}, {"radius", radius}}.dump(2) << "\n";
  else if (format == "csv")
    out << "graph1,graph2,method,value,radius\n"
        << s1 << "," << s2 << "," << method << "," << json(value).dump() << "," << json(radius).dump() << "\n";
  else
    out << "E(" << s1 << ") - E(" << s2 << ") = " << fixed5(value) << " (" << method << ")\n";
  return exit_ok;
}

int cmd_table(int id, const std::string& method, double tol, const std::string& format, std::ostream& out) {
  const auto rows = compute_table(id, tol, method == "coulson" ? DiffMethod::coulson : DiffMethod::exact);
  double worst = 0;
  bool ok = true;
  for (const auto& r : rows) {
    worst = std::max(worst, std::fabs(r.deviation()));
    ok = ok && r.ok();
  }
  if (format == "json") {
    json doc{{"table", id}, {"tolerance", golden_tolerance}, {"max_abs_deviation", worst}, {"pass", ok}};
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"label", r.label}, {"n", r.n}, {"t", r.t}, {"computed", r.computed},
                     {"reference", r.reference}, {"deviation", r.deviation()}, {"ok", r.ok()}});
    doc["rows"] = arr;
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "label,n,t,computed,reference,deviation,ok\n";
    for (const auto& r : rows)
      out << r.label << "," << r.n << "," << r.t << "," << json(r.computed).dump() << "," << json(r.reference).dump()
          << "," << json(r.deviation()).dump() << "," << (r.ok() ? "true" : "false") << "\n";
  } else {
    for (const auto& r : rows)
      out << r.label << "  computed " << fixed5(r.computed) << "  reference " << fixed5(r.reference) << "  deviation "
          << sci(r.deviation()) << (r.ok() ? "" : "  MISMATCH") << "\n";
    out << "table " << id << ": " << rows.size() << " rows, max |deviation| " << sci(worst) << ", "
        << (ok ? "all within " : "exceeds ") << sci(golden_tolerance) << "\n";
  }
  return ok ? exit_ok : exit_golden_mismatch;
}

int cmd_search(int n, int top, int jobs, double tol, const std::string& format, std::ostream& out) {
  const SearchReport r = max_energy_search(n, top, tol, jobs);
  if (format == "json") {
    json arr = json::array();
    for (const auto& g : r.ranking)
      arr.push_back({{"spec", code_spec(g.code)}, {"code", g.code.to_string()}, {"energy", g.energy.value},
                     {"radius", g.energy.radius}, {"tied", g.tied}});
    out << json{{"n", n}, {"graphs", r.graphs}, {"ties", r.ties}, {"winner", code_spec(r.ranking.front().code)},
                {"ranking", arr}}
               .dump(2)
        << "\n";
    return exit_ok;
  }
  if (format == "csv") {
    out << "rank,spec,code,energy,radius,tied\n";
    for (std::size_t i = 0; i < r.ranking.size(); ++i) {
      const auto& g = r.ranking[i];
      out << i + 1 << "," << code_spec(g.code) << "," << g.code.to_string() << "," << json(g.energy.value).dump() << ","
          << json(g.energy.radius).dump() << "," << (g.tied ? "true" : "false") << "\n";
    }
    return exit_ok;
  }
  const auto& w = r.ranking.front();
  out << "winner " << code_spec(w.code) << " energy " << fixed5(w.energy.value) << " (n=" << n << ", " << r.graphs
      << " unicyclic graphs" << (r.ties ? ", ties present" : "") << ")\n";
  for (std::size_t i = 0; i < r.ranking.size(); ++i) {
    const auto& g = r.ranking[i];
    out << i + 1 << "  " << code_spec(g.code) << "  " << fixed5(g.energy.value) << "  code " << g.code.to_string()
        << (g.tied ? "  tie" : "") << "\n";
  }
  return exit_ok;
}

int cmd_enumerate(int n, bool count_only, const std::string& emit, std::ostream& out) {
  if (count_only) {
    out << count_unicyclic(n) << "\n";
    return exit_ok;
  }
  for_each_unicyclic(n, [&](const UnicyclicCode& c, const Graph& g) {
    if (emit == "g6") out << format_graph6(g) << "\n";
    else out << c.to_string() << " " << code_spec(c) << "\n";
  });
  return exit_ok;
}

void print_certificate(const SignCertificate& c, int depth, std::ostream& out) {
  out << std::string(2 * depth, ' ') << c.claim_id << " " << to_string(c.verdict) << " [" << c.rule << ", "
      << to_string(c.evidence) << "]";
  if (c.rule == "sturm")
    out << " " << to_string(c.sign) << " on " << to_string(c.domain) << ", real roots -/0/+ " << c.roots_negative
        << "/" << c.roots_zero << "/" << c.roots_positive;
  else if (c.rule != "all" && c.rule != "identity" && c.rule != "grid")
    out << " " << to_string(c.sign) << " on " << to_string(c.domain);
  if (c.grid_points > 0) out << ", grid " << c.grid_points - c.grid_contradictions << "/" << c.grid_points;
  if (c.counterexample)
    out << ", counterexample [" << c.counterexample->first.get_str() << ", " << c.counterexample->second.get_str()
        << "]";
  if (!c.note.empty()) out << ", " << c.note;
  out << "\n";
  for (const auto& p : c.parts) print_certificate(p, depth + 1, out);
}

// Overrides from a JSON object, e.g. {"r": [null, null, ["1", "0", "-3"]]}. Each
// polynomial is a list of decimal coefficients, constant term first.
ClaimInputs read_claim_inputs(const std::string& path) {
  ClaimInputs in = default_claim_inputs();
  if (path.empty()) return in;
  std::ifstream file(path);
  if (!file) throw parse_error("cannot open inputs file '" + path + "'", 0);
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("inputs file is not valid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw parse_error("inputs file must hold a JSON object", 0);
  auto poly = [](const json& j, const std::string& key) {
    try {
      return from_decimal_strings(j.get<std::vector<std::string>>());
    } catch (const std::exception&) {
      throw parse_error("inputs field '" + key + "' must be a list of decimal strings", 0);
    }
  };
  const std::pair<const char*, IntPolynomial*> single[] = {{"f8", &in.f8},       {"f7", &in.f7},
                                                           {"p10", &in.p10},     {"beta_odd", &in.beta_odd},
                                                           {"beta_even", &in.beta_even}, {"p4_gap", &in.p4_gap}};
  for (const auto& [key, target] : single)
    if (doc.contains(key)) *target = poly(doc[key], key);
  for (const auto& [key, target] : {std::pair{"p", &in.p}, std::pair{"r", &in.r}}) {
    if (!doc.contains(key)) continue;
    const json& arr = doc[key];
    if (!arr.is_array() || arr.size() > target->size())
      throw parse_error(std::string("inputs field '") + key + "' must be a list of at most 5 entries", 0);
    for (std::size_t i = 0; i < arr.size(); ++i)
      if (!arr[i].is_null()) (*target)[i] = poly(arr[i], key);
  }
  return in;
}

int cmd_certify(const std::string& id, const std::string& inputs_path, const std::string& format,
                std::ostream& out) {
  static const std::vector<std::string> ids{"all", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"};
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw parse_error("unknown claim id '" + id + "'", 0);
  const ClaimInputs inputs = read_claim_inputs(inputs_path);
  ClaimReport report;
  if (id == "all") report = run_claim_suite(inputs);
  else report.claims.push_back(run_claim(id, inputs));
  bool refuted = false;
  for (const auto& c : report.claims) refuted = refuted || c.verdict == Verdict::refuted;
  if (format == "json") {
    out << report_json(report) << "\n";
  } else {
    for (const auto& c : report.claims) print_certificate(c, 0, out);
    out << (report.all_certified() ? "all claims certified" : refuted ? "refutation found" : "some claims inconclusive")
        << "\n";
  }
  if (refuted) return exit_refuted;
  return report.all_certified() ? exit_ok : exit_failure;
}

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty() || text == "standard") return standard_grid();
  std::vector<double> grid;
  for (const auto& t : split(text, ',')) {
    try {
      std::size_t used = 0;
      grid.push_back(std::stod(std::string(t.text), &used));
      if (used != t.text.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw parse_error("expected a number, got '" + std::string(t.text) + "'", t.offset);
    }
  }
  return grid;
}

int cmd_closed_form(int n, int t, const std::string& grid_text, std::optional<double> x, const std::string& format,
                    std::ostream& out) {
  const ModulusReport r = check_modulus_identity(n, parse_grid(grid_text), t);
  json doc{{"n", r.n},
           {"t_values", r.t_values},
           {"points", r.points},
           {"max_rel_dev_p6", r.max_rel_dev_p6},
           {"max_rel_dev_pt", r.max_rel_dev_pt},
           {"failures", r.failures},
           {"tolerance", r.tolerance}};
  if (x) {
    const ClosedFormSample s = eval_sample(*x, t == 0 ? 3 : t, n);
    doc["sample"] = {{"x", s.x},         {"t", s.t},         {"n", s.n},         {"z1", s.z1},
                     {"z2", s.z2},       {"a1", s.a1},       {"a2", s.a2},       {"b11", s.b11},
                     {"b12", s.b12},     {"b21", s.b21},     {"b22", s.b22},     {"g1", s.g1},
                     {"g2", s.g2},       {"m1", s.m1},       {"m2", s.m2},       {"h", s.h},
                     {"alpha", s.alpha}, {"beta", s.beta},   {"gamma", s.gamma}, {"d", s.d},
                     {"k", s.k_val},     {"f", s.f_val},     {"f_from_d", s.f_from_d}};
  }
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << "closed forms n=" << r.n << ": " << r.points << " points, max relative deviation P6 " << sci(r.max_rel_dev_p6)
        << ", Pt " << sci(r.max_rel_dev_pt) << ", failures " << r.failures << "\n";
    if (x) {
      const auto& s = doc["sample"];
      for (const char* k : {"z1", "z2", "a1", "a2", "b11", "b12", "b21", "b22", "alpha", "beta", "gamma", "k", "f"})
        out << "  " << k << " = " << s[k].get<double>() << "\n";
    }
  }
  return r.failures == 0 ? exit_ok : exit_failure;
}

int cmd_charpoly(const std::string& spec, const std::string& format, std::ostream& out) {
  const IntPolynomial p = charpoly(parse_graph_spec(spec));
  if (format == "json") out << json{{"graph", spec}, {"coefficients", to_decimal_strings(p)}}.dump(2) << "\n";
  else out << p.to_string() << "\n";
  return exit_ok;
}

} // namespace

Graph parse_graph_spec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw parse_error("graph spec needs a kind prefix such as C: or g6:", 0);
  const std::string_view kind = spec.substr(0, colon);
  if (kind == "g6") {
    try {
      return parse_graph6(spec.substr(colon + 1));
    } catch (const parse_error& e) {
      throw parse_error("bad graph6 payload", colon + 1 + e.offset());
    }
  }
  const auto args = split(spec.substr(colon + 1), ':', colon + 1);
  auto want = [&](std::size_t count) {
    if (args.size() != count)
      throw parse_error("'" + std::string(kind) + "' takes " + std::to_string(count) + " argument(s)", colon + 1);
  };
  try {
    if (kind == "C") {
      want(1);
      return make_cycle(to_int(args[0]));
    }
    if (kind == "P") {
      want(1);
      return make_path(to_int(args[0]));
    }
    if (kind == "L") {
      want(2);
      return make_lollipop(to_int(args[0]), to_int(args[1]));
    }
    if (kind == "CP") {
      want(3);
      std::vector<int> att;
      for (const auto& t : split(args[2].text, ',', args[2].offset)) att.push_back(to_int(t));
      return make_cycle_with_pendants(to_int(args[0]), to_int(args[1]), att);
    }
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(e.what(), colon + 1);
  }
  throw parse_error("unknown graph kind '" + std::string(kind) + "'", 0);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Graph energy workbench for unicyclic graphs", "uenergy"};
  app.require_subcommand(1);

  std::string format = "text";
  double tol = default_energy_tol;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--tol", tol, "absolute error tolerance")->check(CLI::PositiveNumber);
  };

  std::string spec, spec2, method = "exact", emit = "code", claim = "all", grid, inputs_path;
  int n = 0, t = 0, top = 5, jobs = 1, table_id = 0;
  bool count_only = false;
  std::optional<double> x;

  auto* energy = app.add_subcommand("energy", "energy of one graph, or of graph6 lines on stdin with '-'");
  energy->add_option("spec", spec, "graph selector")->required();
  energy->add_option("--method", method, "exact, eig, coulson or all")
      ->check(CLI::IsMember({"exact", "eig", "coulson", "all"}));
  common(energy);

  auto* diff = app.add_subcommand("diff", "E(G1) - E(G2) for graphs of equal order");
  diff->add_option("spec1", spec, "first graph")->required();
  diff->add_option("spec2", spec2, "second graph")->required();
  diff->add_option("--method", method, "exact or coulson")->check(CLI::IsMember({"exact", "coulson"}));
  common(diff);

  auto* table = app.add_subcommand("table", "recompute a reference table and compare");
  table->add_option("id", table_id, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  table->add_option("--method", method, "exact or coulson (tables 1 and 2)")
      ->check(CLI::IsMember({"exact", "coulson"}));
  common(table);

  auto* search = app.add_subcommand("search", "exhaustive maximal-energy search");
  search->add_option("--n", n, "order")->required()->check(CLI::Range(3, 20));
  search->add_option("--top", top, "ranking length")->check(CLI::PositiveNumber);
  search->add_option("--jobs", jobs, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  common(search);

  auto* enumerate = app.add_subcommand("enumerate", "list unicyclic graphs up to isomorphism");
  enumerate->add_option("--n", n, "order")->required()->check(CLI::Range(3, 20));
  enumerate->add_flag("--count-only", count_only, "print the count only");
  enumerate->add_option("--emit", emit, "code or g6")->check(CLI::IsMember({"code", "g6"}));
  enumerate->add_option("--jobs", jobs, "accepted for symmetry with search");

  auto* certify = app.add_subcommand("certify", "run the polynomial sign certificates");
  certify->add_option("claim", claim, "C1..C8 or all");
  certify->add_option("--inputs", inputs_path, "JSON file overriding claim polynomials");
  common(certify);

  auto* closed = app.add_subcommand("closed-form", "compare closed forms with exact characteristic polynomials");
  closed->add_option("--n", n, "order (>= 7)")->required();
  closed->add_option("--t", t, "odd t, 0 for every odd t <= n");
  closed->add_option("--grid", grid, "comma-separated x values, default: standard grid");
  closed->add_option("--x", x, "also print every closed-form quantity at this x");
  common(closed);

  auto* cpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  cpoly->add_option("spec", spec, "graph selector")->required();
  common(cpoly);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (*energy) return cmd_energy(spec, method, tol, format, out, in);
    if (*diff) return cmd_diff(spec, spec2, method, tol, format, out);
    if (*table) return cmd_table(table_id, method, tol, format, out);
    if (*search) return cmd_search(n, top, jobs, tol, format, out);
    if (*enumerate) return cmd_enumerate(n, count_only, emit, out);
    if (*certify) return cmd_certify(claim, inputs_path, format, out);
    if (*closed) return cmd_closed_form(n, t, grid, x, format, out);
    if (*cpoly) return cmd_charpoly(spec, format, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const convergence_error& e) {
    err << "convergence error: " << e.what() << " (estimate " << e.estimate() << ", error " << e.achieved_error()
        << ")\n";
    return exit_convergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_failure;
}

} // namespace uenergy::cli
