#include "cli/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/csv.hpp"
#include "cli/io_error.hpp"
#include "cli/json_io.hpp"
#include "cli/records.hpp"
#include "cli/svg.hpp"
#include "wwmtc/wwmtc.hpp"

namespace wwmtc::cli {

namespace {

constexpr double kDeg = 180 / std::numbers::pi;

ShapeParam resolve_p_cap(const std::optional<double>& flag) {
  return flag ? ShapeParam(*flag) : default_p_cap();
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string spec_label(const MuscleSpec& s) {
  return std::string(to_string(s.kind)) + " n=" + std::to_string(s.n) +
         " L=" + format_number(s.beam_length_mm) + " h0=" + format_number(s.offset_mm);
}

// ---- elliptic eval --------------------------------------------------------

struct EllipticArgs {
  std::string kind;
  std::optional<double> phi;
  double p = 0.0;
};

void run_elliptic(const EllipticArgs& a, std::ostream& out) {
  const bool incomplete = a.kind == "F" || a.kind == "E";
  if (incomplete && !a.phi) throw InputError("--phi is required for --kind " + a.kind);
  if (!incomplete && a.phi) throw InputError("--phi is not used with --kind " + a.kind);
  double v = 0.0;
  if (a.kind == "F") v = elliptic::ellip_f(*a.phi, a.p);
  else if (a.kind == "E") v = elliptic::ellip_e(*a.phi, a.p);
  else if (a.kind == "K") v = elliptic::ellip_k(a.p);
  else v = elliptic::ellip_e_complete(a.p);
  out << format_number(v) << '\n';
}

// ---- beam solve -----------------------------------------------------------

struct BeamArgs {
  double length = 0.0;
  double p = 0.0;
  bool json_out = false;
};

void run_beam(const BeamArgs& a, std::ostream& out) {
  const BeamSolution s = solve_beam(BeamSpec{a.length}, ShapeParam(a.p));
  if (a.json_out) {
    out << dump({{"L_mm", number(a.length)},
                 {"p", number(a.p)},
                 {"w_mm", number(s.w)},
                 {"h_mm", number(s.h)},
                 {"psi0_deg", number(s.psi0 * kDeg)},
                 {"psi0_rad", number(s.psi0)},
                 {"k_per_mm", number(s.k)}});
    return;
  }
  out << "w_mm=" << format_number(s.w) << '\n'
      << "h_mm=" << format_number(s.h) << '\n'
      << "psi0_deg=" << format_number(s.psi0 * kDeg) << '\n'
      << "psi0_rad=" << format_number(s.psi0) << '\n'
      << "k_per_mm=" << format_number(s.k) << '\n';
}

// ---- muscle curve / invert ------------------------------------------------

struct CurveArgs {
  std::vector<std::string> specs;
  int samples = 100;
  std::vector<std::string> outs;
  std::string svg;
  std::optional<double> p_cap;
};

void run_curve(const CurveArgs& a, std::ostream& out) {
  if (!a.outs.empty() && a.outs.size() != a.specs.size()) {
    throw InputError("--out given " + std::to_string(a.outs.size()) + " times for " +
                     std::to_string(a.specs.size()) + " --spec files; counts must match");
  }
  if (a.outs.empty() && a.specs.size() > 1) {
    throw InputError("several --spec files need one --out each");
  }
  const ShapeParam p_cap = resolve_p_cap(a.p_cap);
  std::vector<DeformationCurve> curves;
  for (const auto& path : a.specs) {
    const MuscleSpec spec = spec_from_json(load_json(path), path);
    curves.push_back(curve(spec, a.samples, p_cap));
  }

  Plot plot{"deformation curve", "length [mm]", "width [mm]", {}};
  for (const auto& c : curves) {
    Series s{spec_label(c.spec), {}, {}};
    for (const auto& st : c.samples) {
      s.x.push_back(st.length_mm);
      s.y.push_back(st.width_mm);
    }
    plot.series.push_back(std::move(s));
  }
  const std::string svg = a.svg.empty() ? std::string() : render_svg(plot);

  if (a.outs.empty()) {
    std::ostringstream csv;
    write_curve_csv(csv, curves.front());
    out << csv.str();
  } else {
    for (std::size_t i = 0; i < curves.size(); ++i) {
      auto f = open_output(a.outs[i]);
      write_curve_csv(f, curves[i]);
    }
  }
  if (!a.svg.empty()) {
    auto f = open_output(a.svg);
    f << svg;
  }
}

struct InvertArgs {
  std::string spec;
  double length = 0.0;
};

void run_invert(const InvertArgs& a, std::ostream& out) {
  const MuscleSpec spec = spec_from_json(load_json(a.spec), a.spec);
  out << dump(to_json(state_for_length(spec, a.length)));
}

// ---- design search --------------------------------------------------------

struct DesignArgs {
  std::string constraints;
  std::optional<double> p_cap;
  std::string csv;
};

void run_design(const DesignArgs& a, std::ostream& out, std::ostream& err) {
  const DesignConstraints c = constraints_from_json(load_json(a.constraints), a.constraints);
  const DesignReport report = search(c, resolve_p_cap(a.p_cap));
  json arr = json::array();
  for (const auto& r : report.results) arr.push_back(to_json(r));
  if (!a.csv.empty()) {
    auto f = open_output(a.csv);
    CsvWriter w(f, {"n", "L_mm", "h0_mm", "natural_length_mm", "stroke_mm", "width_at_full_mm",
                    "margin_mm"});
    for (const auto& r : report.results) {
      w.row({static_cast<double>(r.spec.n), r.spec.beam_length_mm, r.spec.offset_mm,
             r.achieved.natural_length_mm, r.achieved.stroke_mm, r.achieved.width_at_full_mm,
             r.margin_mm});
    }
  }
  out << dump(arr);
  for (const auto& r : report.infeasible) {
    err << "note: n=" << r.spec.n << " has no feasible L; binding constraint " << r.binding
        << " (best margin " << format_number(r.margin_mm) << " mm at L="
        << format_number(r.spec.beam_length_mm) << ")\n";
  }
}

// ---- tendon / winch -------------------------------------------------------

void run_tendon_fit(const std::string& data, std::ostream& out) {
  out << dump(to_json(fit_tendon(read_tendon_csv(data))));
}

void run_winch_fit(const std::string& data, std::ostream& out) {
  out << dump(to_json(fit_winch(read_winch_csv(data))));
}

struct SimulateArgs {
  std::string params;
  std::string profile;
  std::string out;
  std::string svg;
  double initial_tension = 0.0;
};

void run_winch_simulate(const SimulateArgs& a, std::ostream& out) {
  const HysteresisParams params = params_from_json(load_json(a.params), a.params);
  const CurrentProfile profile = read_profile_csv(a.profile);
  const std::vector<double> tension =
      simulate_winch(params, profile.current_a, a.initial_tension);

  std::ostringstream csv;
  CsvWriter w(csv, {"time_s", "current_A", "tension_N"});
  for (std::size_t k = 0; k < tension.size(); ++k) {
    w.row({profile.time_s[k], profile.current_a[k], tension[k]});
  }
  std::string svg;
  if (!a.svg.empty()) {
    svg = render_svg({"winch hysteresis", "current [A]", "tension [N]",
                      {{"play c=" + format_number(params.c) + " r=" + format_number(params.r),
                        profile.current_a, tension}}});
  }
  if (a.out.empty()) {
    out << csv.str();
  } else {
    auto f = open_output(a.out);
    f << csv.str();
  }
  if (!svg.empty()) {
    auto f = open_output(a.svg);
    f << svg;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wire-wound muscle-tendon complex models"};
  app.name("wwmtc");
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "wwmtc 0.1.0");
  std::function<void()> action;

  auto* elliptic_cmd = app.add_subcommand("elliptic", "Elliptic integrals (modulus convention)");
  elliptic_cmd->require_subcommand(1, 1);
  EllipticArgs ea;
  auto* eval_cmd = elliptic_cmd->add_subcommand("eval", "Evaluate F, E, K or Ec");
  eval_cmd->add_option("--kind", ea.kind, "F, E, K or Ec")
      ->required()
      ->check(CLI::IsMember({"F", "E", "K", "Ec"}));
  eval_cmd->add_option("--phi", ea.phi, "amplitude [rad], F and E only");
  eval_cmd->add_option("--p", ea.p, "modulus")->required();
  eval_cmd->callback([&] { action = [&] { run_elliptic(ea, out); }; });

  auto* beam_cmd = app.add_subcommand("beam", "Single cantilever elastica");
  beam_cmd->require_subcommand(1, 1);
  BeamArgs ba;
  auto* solve_cmd = beam_cmd->add_subcommand("solve", "Tip offsets for a shape parameter");
  solve_cmd->add_option("--L", ba.length, "beam length [mm]")->required();
  solve_cmd->add_option("--p", ba.p, "shape parameter")->required();
  solve_cmd->add_flag("--json", ba.json_out, "print JSON");
  solve_cmd->callback([&] { action = [&] { run_beam(ba, out); }; });

  auto* muscle_cmd = app.add_subcommand("muscle", "Stacked-arch muscle geometry");
  muscle_cmd->require_subcommand(1, 1);
  CurveArgs ca;
  auto* curve_cmd = muscle_cmd->add_subcommand("curve", "Width/length deformation curve");
  curve_cmd->add_option("--spec", ca.specs, "muscle spec JSON (repeatable)")->required();
  curve_cmd->add_option("--samples", ca.samples, "samples per curve")->capture_default_str();
  curve_cmd->add_option("--out", ca.outs, "CSV path per --spec (default: stdout)");
  curve_cmd->add_option("--svg", ca.svg, "SVG plot path");
  curve_cmd->add_option("--p-cap", ca.p_cap, "largest shape parameter sampled");
  curve_cmd->callback([&] { action = [&] { run_curve(ca, out); }; });

  InvertArgs ia;
  auto* invert_cmd = muscle_cmd->add_subcommand("invert", "State for a target length");
  invert_cmd->add_option("--spec", ia.spec, "muscle spec JSON")->required();
  invert_cmd->add_option("--length", ia.length, "target length [mm]")->required();
  invert_cmd->callback([&] { action = [&] { run_invert(ia, out); }; });

  auto* design_cmd = app.add_subcommand("design", "Muscle design search");
  design_cmd->require_subcommand(1, 1);
  DesignArgs da;
  auto* search_cmd = design_cmd->add_subcommand("search", "Specs meeting constraints");
  search_cmd->add_option("--constraints", da.constraints, "constraints JSON")->required();
  search_cmd->add_option("--p-cap", da.p_cap, "shape parameter at full actuation");
  search_cmd->add_option("--csv", da.csv, "CSV summary path");
  search_cmd->callback([&] { action = [&] { run_design(da, out, err); }; });

  auto* tendon_cmd = app.add_subcommand("tendon", "Tendon stiffening model");
  tendon_cmd->require_subcommand(1, 1);
  std::string tendon_data;
  auto* tfit_cmd = tendon_cmd->add_subcommand("fit", "Fit load-strain log");
  tfit_cmd->add_option("--data", tendon_data, "CSV time_s,load_N,strain,cycle")->required();
  tfit_cmd->callback([&] { action = [&] { run_tendon_fit(tendon_data, out); }; });

  auto* winch_cmd = app.add_subcommand("winch", "Winch hysteresis model");
  winch_cmd->require_subcommand(1, 1);
  std::string winch_data;
  auto* wfit_cmd = winch_cmd->add_subcommand("fit", "Fit current-tension log");
  wfit_cmd->add_option("--data", winch_data, "CSV time_s,current_A,tension_N")->required();
  wfit_cmd->callback([&] { action = [&] { run_winch_fit(winch_data, out); }; });

  SimulateArgs sa;
  auto* sim_cmd = winch_cmd->add_subcommand("simulate", "Tension for a current profile");
  sim_cmd->add_option("--params", sa.params, "JSON {\"model\",\"c\",\"r\"}")->required();
  sim_cmd->add_option("--profile", sa.profile, "CSV time_s,current_A")->required();
  sim_cmd->add_option("--out", sa.out, "CSV path (default: stdout)");
  sim_cmd->add_option("--svg", sa.svg, "SVG loop plot path");
  sim_cmd->add_option("--initial-tension", sa.initial_tension, "tension before the first sample [N]")
      ->capture_default_str();
  sim_cmd->callback([&] { action = [&] { run_winch_simulate(sa, out); }; });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ExtrasError&) {
    std::string extras;
    for (const auto& a : app.remaining(true)) extras += " " + a;
    err << "wwmtc: error: unexpected arguments:" << extras << '\n';
    return 2;
  } catch (const CLI::ParseError& e) {
    err << "wwmtc: error: " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    if (!action) throw std::logic_error("no command selected");
    action();
    return 0;
  } catch (const NumericalError& e) {
    err << "wwmtc: internal error: " << one_line(e.what()) << '\n';
    return 1;
  } catch (const Error& e) {
    err << "wwmtc: error: " << one_line(e.what()) << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "wwmtc: error: " << one_line(e.what()) << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "wwmtc: internal error: " << one_line(e.what()) << '\n';
    return 1;
  }
}

}  // namespace wwmtc::cli
