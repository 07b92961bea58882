// Command-line front end: every library operation plus the verification suites.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratcat/ratcat.hpp"

namespace {

using namespace ratcat;

struct Options {
  std::string format = "text";
  int n = 1, m = 1, d = 1;
  std::string path;
  std::vector<Int> generators;
  Int cutoff = 6;
  bool count_only = false;
  bool restricted = false;
  int big_n = 1, k = 1;
  std::string suite = "all";
  int max_size = 0;
  std::size_t limit = kDefaultPathLimit;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string join(const std::vector<Int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string join_partition(const Partition& p) { return p.empty() ? "()" : "(" + join(p, ",") + ")"; }

GridParams params(const Options& o) { return GridParams(o.n, o.m, o.d); }
DyckPath path(const Options& o) { return DyckPath::parse(o.path, params(o)); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_paths_enumerate(const Options& o) {
  const auto paths = enumerate_paths(params(o), o.limit);
  if (json_out(o)) {
    Json j = to_json(params(o));
    j["count"] = paths.size();
    if (!o.count_only) {
      Json list = Json::array();
      for (const auto& D : paths) list.push_back(D.steps());
      j["paths"] = list;
    }
    emit(j);
  } else if (o.count_only) {
    std::cout << paths.size() << "\n";
  } else {
    for (const auto& D : paths) std::cout << D.steps() << "\n";
  }
  return 0;
}

int cmd_sweep_zeta(const Options& o) {
  const DyckPath z = zeta(path(o));
  if (json_out(o)) emit(to_json(z));
  else std::cout << z.steps() << "\n";
  return 0;
}

int cmd_stats(const Options& o) {
  const DyckPath D = path(o);
  const auto ranks = step_ranks(D);
  if (json_out(o)) {
    Json j = to_json(D);
    j["area"] = area(D);
    j["dinv"] = dinv_sweep(D);
    j["dinv_armleg"] = dinv_armleg(D);
    j["ranks"] = ranks;
    emit(j);
  } else {
    std::cout << "area         " << area(D) << "\n"
              << "dinv         " << dinv_sweep(D) << "\n"
              << "dinv arm/leg " << dinv_armleg(D) << "\n"
              << "ranks        " << join(ranks) << "\n";
  }
  return 0;
}

int cmd_invset_info(const Options& o) {
  const GridParams p = params(o);
  const InvariantSet s = InvariantSet::from_generators(p, o.generators);
  const Skeleton sk = skeleton(s);
  const DyckPath g = map_G(s);
  std::optional<DyckPath> dpath;
  std::optional<Partition> core;
  if (s.normalized()) {
    dpath = map_D(s);
    core = core_partition(s);
  }
  if (json_out(o)) {
    Json j = to_json(s);
    j["cogenerators"] = cogenerators_m(s);
    j["normalized"] = s.normalized();
    j["skeleton"] = to_json(sk);
    j["pattern"] = sk.pattern();
    if (s.normalized()) j["gap"] = gap(s);
    j["G"] = g.steps();
    if (dpath) j["D"] = dpath->steps();
    Json parts = Json::array();
    for (const auto& rp : decompose(s))
      parts.push_back({{"residue", rp.residue}, {"shift", rp.shift}, {"generators", generators_n(rp.part)}});
    j["decomposition"] = parts;
    if (core) j["core"] = *core;
    emit(j);
    return 0;
  }
  std::cout << "generators   " << join(generators_n(s)) << "\n"
            << "cogenerators " << join(cogenerators_m(s)) << "\n"
            << "skeleton     " << join(sk.values()) << "\n"
            << "pattern      " << sk.pattern() << "\n";
  if (s.normalized()) std::cout << "gap          " << gap(s) << "\n";
  std::cout << "G            " << g.steps() << "\n";
  if (dpath) std::cout << "D            " << dpath->steps() << "\n";
  for (const auto& rp : decompose(s))
    std::cout << "part " << rp.residue << "       shift " << rp.shift << ", generators " << join(generators_n(rp.part))
              << "\n";
  if (core) std::cout << "core         " << join_partition(*core) << "\n";
  return 0;
}

int cmd_classify(const Options& o) {
  const DyckPath D = path(o);
  const LabeledDigraph g = map_D_inverse(D);
  const InvariantSet rep = minimal_representative(g);
  if (json_out(o)) {
    Json j = to_json(D);
    j["graph"] = to_json(g);
    j["canonical"] = canonical_form(g);
    j["representative"] = to_json(rep);
    j["min_gap"] = gap(rep);
    emit(j);
  } else {
    std::cout << "canonical      " << canonical_form(g) << "\n"
              << "representative " << join(generators_n(rep)) << "\n"
              << "min gap        " << gap(rep) << "\n";
  }
  return 0;
}

int cmd_color(const Options& o) {
  const ColoredPath c = color(path(o));
  if (json_out(o)) {
    emit(to_json(c));
    return 0;
  }
  std::string colors;
  for (int x : c.colors) colors += std::to_string(x);
  std::cout << c.base.steps() << "\n" << colors << "\n";
  for (std::size_t i = 0; i < c.components.size(); ++i)
    std::cout << "color " << i << ": " << c.components[i].steps() << "\n";
  return 0;
}

int print_poly(const Options& o, const QTPoly& poly) {
  if (json_out(o)) emit({{"terms", to_json(poly)}});
  else std::cout << poly.to_string() << "\n";
  return 0;
}

int cmd_poly_catalan(const Options& o) { return print_poly(o, qt_catalan(params(o), o.limit)); }

int cmd_poly_springer(const Options& o) { return print_poly(o, springer_poincare(o.n, o.m, o.limit)); }

int print_series(const Options& o, const QTSeries& s) {
  if (json_out(o)) emit(to_json(s));
  else std::cout << s.poly.to_string() << " + O(q^" << s.q_cutoff + 1 << ")\n";
  return 0;
}

int cmd_series_C(const Options& o) { return print_series(o, C_series(params(o), o.cutoff)); }

int cmd_series_F(const Options& o) { return print_series(o, F_series(o.n, o.cutoff, o.restricted)); }

int print_count(const Options& o, const BigInt& c) {
  if (json_out(o)) emit({{"count", detail::coefficient_to_json(c)}});
  else std::cout << c.str() << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const auto& s : verify::suites()) names.push_back(s.name);
  } else {
    names.push_back(o.suite);
  }
  bool ok = true;
  Json reports = Json::array();
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, o.max_size);
    ok &= r.passed;
    if (json_out(o)) {
      reports.push_back({{"suite", r.name},
                         {"passed", r.passed},
                         {"informational", r.informational},
                         {"checks", r.checks},
                         {"failures", r.failures},
                         {"notes", r.notes}});
      continue;
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
    for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
    for (const auto& n : r.notes) std::cout << "  " << n << "\n";
  }
  if (json_out(o)) emit(reports);
  return ok ? 0 : 2;
}

void add_grid(CLI::App* cmd, Options& o, bool with_d = true) {
  cmd->add_option("--n", o.n, "coprime height unit")->required();
  cmd->add_option("--m", o.m, "coprime width unit")->required();
  if (with_d) cmd->add_option("--d", o.d, "multiplicity")->capture_default_str();
}

void add_path(CLI::App* cmd, Options& o) {
  add_grid(cmd, o);
  cmd->add_option("--path", o.path, "step string over h and v")->required();
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  int (*action)(const Options&) = nullptr;
  std::function<int()> deferred;

  CLI::App app{"Rational Dyck paths, invariant sets and the sweep map"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  auto on = [&](CLI::App* cmd, int (*f)(const Options&)) { cmd->callback([&action, f] { action = f; }); };

  auto* paths = app.add_subcommand("paths", "path enumeration")->require_subcommand(1);
  auto* paths_enum = paths->add_subcommand("enumerate", "list Y_{N,M}");
  add_grid(paths_enum, o);
  paths_enum->add_flag("--count-only", o.count_only, "print only the number of paths");
  paths_enum->add_option("--limit", o.limit, "largest N+M allowed")->capture_default_str();
  on(paths_enum, cmd_paths_enumerate);

  auto* sweep = app.add_subcommand("sweep", "sweep map")->require_subcommand(1);
  auto* sweep_zeta = sweep->add_subcommand("zeta", "apply the sweep map to a path");
  add_path(sweep_zeta, o);
  on(sweep_zeta, cmd_sweep_zeta);

  auto* stats = app.add_subcommand("stats", "area, dinv and step ranks of a path");
  add_path(stats, o);
  on(stats, cmd_stats);

  auto* inv = app.add_subcommand("invset", "invariant sets")->require_subcommand(1);
  auto* inv_info = inv->add_subcommand("info", "describe the invariant set generated by a list");
  add_grid(inv_info, o);
  inv_info->add_option("--generators", o.generators, "generating elements")->required()->delimiter(',');
  on(inv_info, cmd_invset_info);

  auto* classify = app.add_subcommand("classify", "equivalence class of a path");
  add_path(classify, o);
  on(classify, cmd_classify);

  auto* colorc = app.add_subcommand("color", "coloring of a path into coprime components");
  add_path(colorc, o);
  on(colorc, cmd_color);

  auto* poly = app.add_subcommand("poly", "polynomials")->require_subcommand(1);
  auto* catalan = poly->add_subcommand("catalan", "sum of q^area t^dinv");
  add_grid(catalan, o);
  catalan->add_option("--limit", o.limit, "largest N+M allowed")->capture_default_str();
  on(catalan, cmd_poly_catalan);
  auto* springer = poly->add_subcommand("springer", "Poincare polynomial of the compactified Jacobian");
  add_grid(springer, o, false);
  on(springer, cmd_poly_springer);

  auto* series = app.add_subcommand("series", "truncated series")->require_subcommand(1);
  auto* series_c = series->add_subcommand("C", "sum over invariant sets of q^gap t^dinv");
  add_grid(series_c, o);
  series_c->add_option("--cutoff", o.cutoff, "highest q-degree")->capture_default_str();
  on(series_c, cmd_series_C);
  auto* series_f = series->add_subcommand("F", "sum over tuples of q^|a| t^dinv(a)");
  series_f->add_option("--n", o.n, "tuple length")->required();
  series_f->add_option("--cutoff", o.cutoff, "highest q-degree")->capture_default_str();
  series_f->add_flag("--restricted", o.restricted, "fix the last entry to 0");
  on(series_f, cmd_series_F);

  auto* count = app.add_subcommand("count", "closed-form counts")->require_subcommand(1);
  auto* bizley = count->add_subcommand("bizley", "number of Dyck paths in the rectangle");
  add_grid(bizley, o);
  bizley->callback([&] { deferred = [&] { return print_count(o, bizley_count(o.n, o.m, o.d)); }; });
  auto* fuss = count->add_subcommand("fuss", "Fuss-Catalan number c_N(k)");
  fuss->add_option("--N", o.big_n, "size")->required();
  fuss->add_option("--k", o.k, "slope")->required();
  fuss->callback([&] { deferred = [&] { return print_count(o, fuss_catalan(o.big_n, o.k)); }; });

  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suite_names{"all"};
  for (const auto& s : verify::suites()) suite_names.push_back(s.name);
  ver->add_option("--suite", o.suite, "suite name or all")->check(CLI::IsMember(suite_names))->capture_default_str();
  ver->add_option("--max-size", o.max_size, "largest N+M; 0 keeps each suite's default")->capture_default_str();
  on(ver, cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (action) return action(o);
    if (deferred) return deferred();
    std::cerr << app.help();
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
