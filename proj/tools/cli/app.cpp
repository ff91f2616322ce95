#include "cli/app.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/casimir.hpp"
#include "cli/report.hpp"

namespace casimir::cli {
namespace {

// Defaults reproduce the a = 4 nm, R/a = 2.5, n = 2 cavity family.
struct Params {
  double a = 4e-9;
  double r = 0.0;
  double r_over_a = 2.5;
  CLI::Option* r_opt = nullptr;
  CLI::Option* r_over_a_opt = nullptr;
  double l = 1.0;
  double phi_deg = 5.59;
  double d_over_a = 1.58;
  std::string n = "2";
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  std::size_t max_subdivisions = 2000;
  double hbar = PhysicalConstants{}.hbar;
  double c = PhysicalConstants{}.c;
  std::string out;
  std::string format;
  unsigned threads = 0;

  // sweep
  std::string var = "d-over-a";
  std::optional<double> from;
  std::optional<double> to;
  std::size_t steps = 200;
  std::string observable = "abs-total-force";

  // optimize / surface
  double phi_min_deg = 0.01;
  double phi_max_deg = 20.0;
  double doa_min = 1.01;
  double doa_max = 3.0;
  std::size_t n_phi = 64;
  std::size_t n_doa = 64;
};

void add_cavity_options(CLI::App& cmd, Params& p) {
  cmd.add_option("--a", p.a, "Narrow-end separation a [m]")->capture_default_str();
  p.r_opt = cmd.add_option("--r", p.r, "Wing length R [m]");
  p.r_over_a_opt =
      cmd.add_option("--r-over-a", p.r_over_a, "Wing length as a multiple of a (default 2.5)");
  p.r_opt->excludes(p.r_over_a_opt);
  cmd.add_option("--l", p.l, "Cavity width L [m]")->capture_default_str();
}

void add_numeric_options(CLI::App& cmd, Params& p) {
  cmd.add_option("--rel-tol", p.rel_tol, "Quadrature relative tolerance")->capture_default_str();
  cmd.add_option("--abs-tol", p.abs_tol, "Quadrature absolute tolerance [N]")
      ->capture_default_str();
  cmd.add_option("--max-subdivisions", p.max_subdivisions, "Quadrature bisection budget")
      ->capture_default_str();
  cmd.add_option("--hbar", p.hbar, "Reduced Planck constant [J s]")->capture_default_str();
  cmd.add_option("--c", p.c, "Speed of light [m/s]")->capture_default_str();
  cmd.add_option("--out", p.out, "Write the report to this file instead of stdout");
}

void add_format_option(CLI::App& cmd, Params& p, std::vector<std::string> allowed) {
  p.format = allowed.front();
  cmd.add_option("--format", p.format, "Output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
}

void add_box_options(CLI::App& cmd, Params& p) {
  cmd.add_option("--phi-min-deg", p.phi_min_deg, "Search box, phi lower edge [deg]")->capture_default_str();
  cmd.add_option("--phi-max-deg", p.phi_max_deg, "Search box, phi upper edge [deg]")->capture_default_str();
  cmd.add_option("--doa-min", p.doa_min, "Search box, d/a lower edge")->capture_default_str();
  cmd.add_option("--doa-max", p.doa_max, "Search box, d/a upper edge")->capture_default_str();
  cmd.add_option("--n-phi", p.n_phi, "Grid points along phi")->capture_default_str();
  cmd.add_option("--n-doa", p.n_doa, "Grid points along d/a")->capture_default_str();
  cmd.add_option("--threads", p.threads, "Worker threads (0 = all cores)");
}

double wing_length(const Params& p) { return p.r_opt->count() > 0 ? p.r : p.r_over_a * p.a; }

double ratio_r_over_a(const Params& p) {
  return p.r_opt->count() > 0 ? p.r / p.a : p.r_over_a;
}

CavityCount parse_count(const std::string& text) {
  if (text == "inf") return CavityCount::asymptotic();
  std::uint64_t n = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || end != text.data() + text.size() || n < 1) {
    throw ValidationError("n must be a positive integer or 'inf' (got '" + text + "')");
  }
  return CavityCount::finite(n);
}

CavityGeometry geometry(const Params& p) {
  const CavityGeometry g{p.a, wing_length(p), p.l, degrees_to_radians(p.phi_deg)};
  g.validate();
  return g;
}

PhysicalConstants constants(const Params& p) {
  const PhysicalConstants k{p.hbar, p.c};
  k.validate();
  return k;
}

QuadratureSettings quadrature(const Params& p) {
  const QuadratureSettings s{p.rel_tol, p.abs_tol, p.max_subdivisions};
  s.validate();
  return s;
}

void add_numeric_inputs(Record& rec, const Params& p) {
  rec.add("rel_tol", p.rel_tol)
      .add("abs_tol", p.abs_tol)
      .add("max_subdivisions", static_cast<std::uint64_t>(p.max_subdivisions))
      .add("hbar", p.hbar)
      .add("c", p.c);
}

Record cavity_inputs(const std::string& command, const Params& p) {
  Record rec;
  rec.add("command", command)
      .add("a", p.a)
      .add("r", wing_length(p))
      .add("l", p.l)
      .add("phi_deg", p.phi_deg);
  return rec;
}

Record search_inputs(const std::string& command, const Params& p) {
  Record rec;
  rec.add("command", command)
      .add("a", p.a)
      .add("r_over_a", ratio_r_over_a(p))
      .add("l", p.l)
      .add("n", p.n)
      .add("phi_min_deg", p.phi_min_deg)
      .add("phi_max_deg", p.phi_max_deg)
      .add("doa_min", p.doa_min)
      .add("doa_max", p.doa_max)
      .add("n_phi", static_cast<std::uint64_t>(p.n_phi))
      .add("n_doa", static_cast<std::uint64_t>(p.n_doa));
  add_numeric_inputs(rec, p);
  return rec;
}

SearchProblem search_problem(const Params& p) {
  SearchProblem problem;
  problem.a = p.a;
  problem.r_over_a = ratio_r_over_a(p);
  problem.width = p.l;
  problem.count = parse_count(p.n);
  problem.box = {degrees_to_radians(p.phi_min_deg), degrees_to_radians(p.phi_max_deg),
                 p.doa_min, p.doa_max};
  problem.validate();
  if (!(p.l > 0.0)) throw ValidationError("L > 0 required (got " + format_double(p.l) + ")");
  return problem;
}

void write_record(const Record& rec, const std::string& format, std::ostream& os) {
  if (format == "text") {
    rec.write_text(os);
  } else {
    rec.write_json(os);
  }
}

// Commands render into `os` and return an exit code; exceptions map to codes in run().

int cmd_force(const Params& p, std::ostream& os) {
  const CavityGeometry g = geometry(p);
  const ForceResult f = wing_force(g, constants(p), quadrature(p));
  Record rec = cavity_inputs("force", p);
  add_numeric_inputs(rec, p);
  rec.add("force", f.force)
      .add("abs_error_estimate", f.abs_error_estimate)
      .add("evaluations", static_cast<std::uint64_t>(f.evaluations));
  write_record(rec, p.format, os);
  return kSuccess;
}

int cmd_periodic(const Params& p, std::ostream& os) {
  const PeriodicStructure s{geometry(p), p.d_over_a * p.a, parse_count(p.n)};
  s.validate();
  const PhysicalConstants k = constants(p);
  const QuadratureSettings q = quadrature(p);
  Record rec = cavity_inputs("periodic", p);
  rec.add("d_over_a", p.d_over_a).add("n", p.n);
  add_numeric_inputs(rec, p);
  if (s.count.is_asymptotic()) {
    rec.add("effectiveness", asymptotic_effectiveness(s, k, q));
  } else {
    const StructureResult r = total_force(s, k, q);
    rec.add("total_force", r.total_force)
        .add("effectiveness", r.effectiveness)
        .add("per_cavity_force", r.per_cavity_force())
        .add("gap_force", r.gap_force());
  }
  write_record(rec, p.format, os);
  return kSuccess;
}

int cmd_sweep(const Params& p, std::ostream& os) {
  SweepSpec spec;
  spec.geometry = {p.a, wing_length(p), p.l, degrees_to_radians(p.phi_deg)};
  spec.d_over_a = p.d_over_a;
  spec.count = parse_count(p.n);
  spec.observable = p.observable == "effectiveness" ? Observable::effectiveness
                                                    : Observable::abs_total_force;
  spec.quadrature = quadrature(p);
  spec.threads = p.threads;

  std::string column;
  std::string variable_unit;
  double from = 0.0, to = 0.0;
  if (p.var == "d-over-a") {
    spec.variable = SweepVariable::d_over_a;
    column = "d_over_a";
    variable_unit = "1";
    from = p.from.value_or(1.01);
    to = p.to.value_or(3.0);
    spec.range = {from, to, p.steps};
  } else if (p.var == "phi") {
    spec.variable = SweepVariable::phi;
    column = "phi_deg";
    variable_unit = "deg";
    from = p.from.value_or(0.01);
    to = p.to.value_or(20.0);
    spec.range = {degrees_to_radians(from), degrees_to_radians(to), p.steps};
  } else {
    spec.variable = SweepVariable::wing_length;
    column = "r";
    variable_unit = "m";
    if (!p.from || !p.to) throw ValidationError("--var r requires --from and --to [m]");
    from = *p.from;
    to = *p.to;
    spec.range = {from, to, p.steps};
  }
  // The variable column is reported in the user's units on the user's grid.
  const SweepRange display{from, to, p.steps};
  const PhysicalConstants k = constants(p);
  spec.validate();

  const SweepTable table = run_sweep(spec, k);

  const std::string observable(to_string(spec.observable));
  Record meta;
  meta.add("command", "sweep")
      .add("var", p.var)
      .add("observable", p.observable)
      .add("from", from)
      .add("to", to)
      .add("steps", static_cast<std::uint64_t>(p.steps))
      .add("a", p.a)
      .add("r", wing_length(p))
      .add("l", p.l)
      .add("phi_deg", p.phi_deg)
      .add("d_over_a", p.d_over_a)
      .add("n", p.n);
  add_numeric_inputs(meta, p);
  meta.add("unit_" + column, variable_unit)
      .add("unit_" + observable,
           spec.observable == Observable::effectiveness ? "N/m" : "N");
  meta.write_csv_metadata(os);

  os << column << ',' << observable << ",status\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SweepRow& row = table.rows[i];
    const double x = display.at(i);
    os << format_double(x) << ',' << format_double(row.value) << ','
       << csv_field(row.ok() ? "ok" : "error: " + row.error) << '\n';
  }
  if (table.failures() > 0) {
    os << "# INCOMPLETE\n";
    return kNumerical;
  }
  return kSuccess;
}

int cmd_optimize(const Params& p, std::ostream& os, std::ostream& err) {
  const SearchProblem problem = search_problem(p);
  OptimizerSettings settings;
  settings.grid = {p.n_phi, p.n_doa};
  settings.quadrature = quadrature(p);
  settings.threads = p.threads;
  settings.validate();

  const OptimizationResult r = maximize_q(problem, constants(p), settings);
  if (r.boundary_maximum) {
    err << "warning: maximum lies on the search box boundary\n";
  }
  Record rec = search_inputs("optimize", p);
  rec.add("phi_star_deg", radians_to_degrees(r.phi_star))
      .add("d_over_a_star", r.d_over_a_star)
      .add("q_star", r.q_star)
      .add("refinement_iterations", static_cast<std::uint64_t>(r.refinement_iterations))
      .add("trace_length", static_cast<std::uint64_t>(r.trace.size()))
      .add("boundary_maximum", r.boundary_maximum);
  write_record(rec, p.format, os);
  return kSuccess;
}

std::string join_axis(const std::vector<double>& axis, double scale) {
  std::string s;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (i) s += ' ';
    s += format_double(axis[i] * scale);
  }
  return s;
}

int cmd_surface(const Params& p, std::ostream& os) {
  const SearchProblem problem = search_problem(p);
  const QSurface surface = q_surface(problem, {p.n_phi, p.n_doa}, constants(p), quadrature(p),
                                     p.threads);
  Record meta = search_inputs("surface", p);
  meta.add("unit_phi_deg", "deg")
      .add("unit_d_over_a", "1")
      .add("unit_effectiveness", "N/m")
      .add("axis_phi_deg", join_axis(surface.phi_axis, radians_to_degrees(1.0)))
      .add("axis_d_over_a", join_axis(surface.d_over_a_axis, 1.0));
  meta.write_csv_metadata(os);
  os << "phi_deg,d_over_a,effectiveness\n";
  for (std::size_t i = 0; i < surface.phi_axis.size(); ++i) {
    for (std::size_t j = 0; j < surface.d_over_a_axis.size(); ++j) {
      os << format_double(radians_to_degrees(surface.phi_axis[i])) << ','
         << format_double(surface.d_over_a_axis[j]) << ',' << format_double(surface.at(i, j))
         << '\n';
    }
  }
  if (!surface.failures.empty()) {
    os << "# INCOMPLETE\n";
    return kNumerical;
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir expulsion force of open trapezoid nano-cavities"};
  app.require_subcommand(1);

  std::map<std::string, Params> params;
  std::map<std::string, std::function<int(const Params&, std::ostream&)>> commands;

  {
    Params& p = params["force"];
    auto* cmd = app.add_subcommand("force", "Single-cavity expulsion force F_x");
    add_cavity_options(*cmd, p);
    cmd->add_option("--phi-deg", p.phi_deg, "Half-opening angle [deg]")->capture_default_str();
    add_numeric_options(*cmd, p);
    add_format_option(*cmd, p, {"json", "text"});
    commands["force"] = cmd_force;
  }
  {
    Params& p = params["periodic"];
    auto* cmd = app.add_subcommand("periodic", "Total force and effectiveness of n cavities");
    add_cavity_options(*cmd, p);
    cmd->add_option("--phi-deg", p.phi_deg, "Half-opening angle [deg]")->capture_default_str();
    cmd->add_option("--d-over-a", p.d_over_a, "Gap d as a multiple of a")->capture_default_str();
    cmd->add_option("--n", p.n, "Cavity count, or 'inf'")->capture_default_str();
    add_numeric_options(*cmd, p);
    add_format_option(*cmd, p, {"json", "text"});
    commands["periodic"] = cmd_periodic;
  }
  {
    Params& p = params["sweep"];
    auto* cmd = app.add_subcommand("sweep", "One-parameter sweep written as CSV");
    add_cavity_options(*cmd, p);
    cmd->add_option("--phi-deg", p.phi_deg, "Half-opening angle [deg]")->capture_default_str();
    cmd->add_option("--d-over-a", p.d_over_a, "Gap d as a multiple of a")->capture_default_str();
    cmd->add_option("--n", p.n, "Cavity count, or 'inf'")->capture_default_str();
    cmd->add_option("--var", p.var, "Swept variable")
        ->check(CLI::IsMember({"d-over-a", "phi", "r"}))
        ->capture_default_str();
    cmd->add_option("--from", p.from, "Range start (phi in deg, r in m)");
    cmd->add_option("--to", p.to, "Range end (phi in deg, r in m)");
    cmd->add_option("--steps", p.steps, "Number of rows")->capture_default_str();
    cmd->add_option("--observable", p.observable, "Quantity per row")
        ->check(CLI::IsMember({"abs-total-force", "effectiveness"}))
        ->capture_default_str();
    cmd->add_option("--threads", p.threads, "Worker threads (0 = all cores)");
    add_numeric_options(*cmd, p);
    add_format_option(*cmd, p, {"csv"});
    commands["sweep"] = cmd_sweep;
  }
  {
    Params& p = params["optimize"];
    p.rel_tol = 1e-10;
    auto* cmd = app.add_subcommand("optimize", "Maximize Q over (phi, d/a)");
    add_cavity_options(*cmd, p);
    cmd->add_option("--n", p.n, "Cavity count, or 'inf'")->capture_default_str();
    add_box_options(*cmd, p);
    add_numeric_options(*cmd, p);
    add_format_option(*cmd, p, {"json", "text"});
    commands["optimize"] = nullptr;
  }
  {
    Params& p = params["surface"];
    p.rel_tol = 1e-10;
    auto* cmd = app.add_subcommand("surface", "Q over a (phi, d/a) grid written as CSV");
    add_cavity_options(*cmd, p);
    cmd->add_option("--n", p.n, "Cavity count, or 'inf'")->capture_default_str();
    add_box_options(*cmd, p);
    add_numeric_options(*cmd, p);
    add_format_option(*cmd, p, {"csv"});
    commands["surface"] = cmd_surface;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const Params& p = params.at(name);
  std::ostringstream report;
  int code = kSuccess;
  try {
    if (name == "optimize") {
      code = cmd_optimize(p, report, err);
    } else {
      code = commands.at(name)(p, report);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const OptimizationError& e) {
    err << "error: " << e.what() << " (" << e.partial_trace().size()
        << " samples evaluated)\n";
    return kNumerical;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }

  if (p.out.empty()) {
    out << report.str();
  } else {
    std::ofstream file(p.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file " << p.out << '\n';
      return kValidation;
    }
    file << report.str();
  }
  if (code == kNumerical) err << "error: some points failed; output marked # INCOMPLETE\n";
  return code;
}

}  // namespace casimir::cli
