// relresp: command-line front end for the relativistic electron-gas response library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "relresp/errors.hpp"
#include "relresp/kinematics.hpp"
#include "relresp/lindhard.hpp"
#include "relresp/responses.hpp"
#include "relresp/zero_temperature.hpp"

namespace {

using namespace relresp;
using nlohmann::json;

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;
constexpr double kElectronMassEv = 510998.95;

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Medium {
  double t = 0.0;
  double xi = 1.0;
  double alpha = kFineStructure;
  bool no_vacuum = false;
  std::string units = "m";
};

struct Output {
  std::string path;
  std::string format;
  unsigned jobs = 1;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;

  std::vector<double> linear() const {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / (count - 1);
    return v;
  }
  std::vector<double> logarithmic() const {
    std::vector<double> v(count);
    const double r = std::log(hi / lo);
    for (int i = 0; i < count; ++i) v[i] = lo * std::exp(r * i / (count - 1));
    return v;
  }
  void validate(const char* name) const {
    if (count < 2) throw InvalidArgument(std::string(name) + " range needs count >= 2");
    if (!(lo < hi)) throw InvalidArgument(std::string(name) + " range needs lo < hi");
  }
};

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// eV inputs are converted to units of m (t, xi) or 2m (a, b).
double frequency_scale(const Medium& m) { return m.units == "ev" ? 2.0 * kElectronMassEv : 1.0; }
double energy_scale(const Medium& m) { return m.units == "ev" ? kElectronMassEv : 1.0; }

MediumState medium_state(const Medium& m) {
  return MediumState::make(m.t / energy_scale(m), m.xi / energy_scale(m), m.alpha);
}

EvaluationOptions evaluation_options(const Medium& m) {
  EvaluationOptions o;
  o.include_vacuum = !m.no_vacuum;
  return o;
}

void add_medium_options(CLI::App* cmd, Medium& m) {
  cmd->add_option("--t", m.t, "Temperature T/m")->check(CLI::NonNegativeNumber);
  cmd->add_option("--xi,--xf", m.xi, "Chemical potential xi/m (the Fermi energy xF at t = 0)");
  cmd->add_option("--alpha", m.alpha, "Fine-structure constant")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-vacuum", m.no_vacuum, "Drop the vacuum scalar C*");
  cmd->add_option("--units", m.units, "Input units: m (dimensionless) or ev")
      ->check(CLI::IsMember({"m", "ev"}));
}

void add_output_options(CLI::App* cmd, Output& o, const std::string& default_format) {
  cmd->add_option("--out", o.path, "Output file (default stdout; relative to $RELRESP_OUTPUT_DIR)");
  cmd->add_option("--format", o.format, "json or csv (default " + default_format + ")")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_range(CLI::App* cmd, const std::string& name, Range& r, double lo, double hi, int count) {
  r = {lo, hi, count};
  cmd->add_option("--" + name + "-min", r.lo, "Lower end of the " + name + " range");
  cmd->add_option("--" + name + "-max", r.hi, "Upper end of the " + name + " range");
  cmd->add_option("--" + name + "-count", r.count, "Points in the " + name + " range");
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("RELRESP_OUTPUT_DIR"); dir && *dir) {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void emit(const Output& o, const std::string& text) {
  if (o.path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoFailure("cannot write to stdout");
    return;
  }
  const auto path = resolve_output(o.path);
  std::ofstream f(path);
  if (!f) throw IoFailure("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw IoFailure("write to " + path.string() + " failed");
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string response_text(double a, double b, const Medium& m, const std::string& format) {
  const MediumState ms = medium_state(m);
  const EvaluationOptions opts = evaluation_options(m);
  const KinematicPoint p = derive_point(a, b);
  const Region region = classify_region(p);
  Subregion sub = Subregion::none;
  if (ms.zero_temperature() && std::abs(ms.xi) > 1.0) {
    sub = zero_t_subregion(p, FermiSurface::from_energy(std::abs(ms.xi))).label;
  }
  const ResponseScalars s = evaluate_scalars(p, ms, opts);
  const ResponseTensors r = assemble(s, p);

  if (format == "csv") {
    std::ostringstream out;
    out << "a,b,t,xi,alpha,region,subregion,re_B,im_B,re_D,im_D,re_C,im_C,re_A,im_A,"
           "re_eps_L,im_eps_L,re_nu_L,im_nu_L\n";
    out << num(a) << ',' << num(b) << ',' << num(ms.t) << ',' << num(ms.xi) << ','
        << num(ms.alpha) << ',' << to_string(region) << ',' << to_string(sub);
    for (cplx z : {s.B, s.D, s.C, s.A, r.eps_L, r.nu_L}) out << ',' << num(z.real()) << ',' << num(z.imag());
    out << '\n';
    return out.str();
  }

  json j;
  j["inputs"] = {{"a", a}, {"b", b}, {"t", ms.t}, {"xi", ms.xi}, {"alpha", ms.alpha},
                 {"include_vacuum", opts.include_vacuum}};
  j["region"] = std::string(to_string(region));
  j["subregion"] = std::string(to_string(sub));
  j["scalars"] = {{"ReB", s.B.real()}, {"ImB", s.B.imag()}, {"ReD", s.D.real()},
                  {"ImD", s.D.imag()}, {"ReC", s.C.real()}, {"ImC", s.C.imag()},
                  {"ReA", s.A.real()}, {"ImA", s.A.imag()}};
  j["tensors"] = {{"eps", complex_json(r.eps)},
                  {"eps_prime", complex_json(r.eps_prime)},
                  {"nu", complex_json(r.nu)},
                  {"nu_prime", complex_json(r.nu_prime)},
                  {"tau", complex_json(r.tau)},
                  {"sigma", complex_json(r.sigma)},
                  {"eps_L", complex_json(r.eps_L)},
                  {"nu_L", complex_json(r.nu_L)}};
  return j.dump(2) + "\n";
}

std::string scan_text(const Range& ar, const Range& br, const Medium& m, const Output& o) {
  ar.validate("a");
  br.validate("b");
  const MediumState ms = medium_state(m);
  EvaluationOptions opts = evaluation_options(m);
  opts.quadrature.rel_tol = 1e-8;
  std::vector<double> as = ar.linear();
  std::vector<double> bs = br.linear();
  for (double& a : as) a /= frequency_scale(m);
  for (double& b : bs) b /= frequency_scale(m);
  const auto cells = metamaterial_scan(as, bs, ms, opts, o.jobs);

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : cells) {
      json row = {{"a", c.a},
                  {"b", c.b},
                  {"status", to_string(c.status)},
                  {"region", c.region ? std::string(to_string(*c.region)) : "none"},
                  {"subregion", std::string(to_string(c.subregion))},
                  {"eps_L", complex_json(c.eps_L)},
                  {"nu_L", complex_json(c.nu_L)},
                  {"metamaterial", c.metamaterial}};
      if (!c.reason.empty()) row["reason"] = c.reason;
      arr.push_back(row);
    }
    return arr.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "a,b,region,subregion,re_eps_L,im_eps_L,re_nu_L,im_nu_L,metamaterial,reason\n";
  for (const auto& c : cells) {
    std::string reason = c.status == CellStatus::ok ? "" : to_string(c.status);
    out << num(c.a) << ',' << num(c.b) << ',' << (c.region ? to_string(*c.region) : "none")
        << ',' << to_string(c.subregion) << ',' << num(c.eps_L.real()) << ','
        << num(c.eps_L.imag()) << ',' << num(c.nu_L.real()) << ',' << num(c.nu_L.imag()) << ','
        << (c.metamaterial ? 1 : 0) << ',' << reason << '\n';
  }
  return out.str();
}

std::string dispersion_text(const std::string& mode, const Range& br, const Range& ar,
                            const Medium& m, const Output& o) {
  br.validate("b");
  ar.validate("a");
  if (!(br.lo > 0.0)) throw InvalidArgument("b range must be positive");
  const MediumState ms = medium_state(m);
  const EvaluationOptions opts = evaluation_options(m);
  std::vector<double> bs = br.logarithmic();
  std::vector<double> as = ar.linear();
  for (double& b : bs) b /= frequency_scale(m);
  for (double& a : as) a /= frequency_scale(m);

  std::vector<PlasmonMode> modes;
  if (mode != "transverse") modes.push_back(PlasmonMode::longitudinal);
  if (mode != "longitudinal") modes.push_back(PlasmonMode::transverse);

  std::vector<DispersionBranch> branches;
  for (PlasmonMode pm : modes) branches.push_back(dispersion(pm, bs, ms, as, opts, o.jobs));

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& br_ : branches) {
      json samples = json::array();
      for (const auto& s : br_.samples) {
        json roots = json::array();
        for (const auto& r : s.roots) {
          roots.push_back({{"a", r.a}, {"residual", r.residual}, {"damping", r.damping}});
        }
        samples.push_back({{"b", s.b}, {"roots", roots}, {"skipped", s.skipped}});
      }
      json entry = {{"mode", to_string(br_.mode)}, {"samples", samples}};
      entry["plasma_value"] = br_.plasma_value ? json(*br_.plasma_value) : json(nullptr);
      arr.push_back(entry);
    }
    return arr.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "b,mode,root_a,residual,im_at_root,status\n";
  const double nan = std::nan("");
  for (const auto& br_ : branches) {
    const std::string name = to_string(br_.mode);
    for (const auto& s : br_.samples) {
      if (s.roots.empty()) {
        out << num(s.b) << ',' << name << ",nan,nan,nan,no_root\n";
      }
      for (const auto& r : s.roots) {
        out << num(s.b) << ',' << name << ',' << num(r.a) << ',' << num(r.residual) << ','
            << num(r.damping) << ",root\n";
      }
    }
    out << "0," << name << ',' << num(br_.plasma_value.value_or(nan)) << ",nan,nan,"
        << (br_.plasma_value ? "extrapolated" : "no_extrapolation") << '\n';
  }
  return out.str();
}

std::string scan_nr_text(const Range& wr, const Range& qr, double pF, const Medium& m,
                         const Output& o) {
  wr.validate("omega");
  qr.validate("q");
  const MediumState ms = medium_state(m);
  const auto ws = wr.linear();
  const auto qs = qr.linear();
  if (o.format == "json") {
    json arr = json::array();
    for (double q : qs) {
      for (double w : ws) {
        const NRPoint p = NRPoint::make(w, q, pF);
        arr.push_back({{"omega", w},
                       {"q", q},
                       {"case", std::string(to_string(nr_case(p)))},
                       {"im_B", nr_im_B(p, ms)}});
      }
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "omega,q,case,im_B\n";
  for (double q : qs) {
    for (double w : ws) {
      const NRPoint p = NRPoint::make(w, q, pF);
      out << num(w) << ',' << num(q) << ',' << to_string(nr_case(p)) << ','
          << num(nr_im_B(p, ms)) << '\n';
    }
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Electromagnetic response of a relativistic electron gas"};
  app.require_subcommand(1);

  Medium medium;
  Output output;
  double a = 0.0;
  double b = 0.0;
  Range scan_a, scan_b, disp_a, disp_b, w_range, q_range;
  std::string mode = "both";
  double pF = 0.1;

  auto* response = app.add_subcommand("response", "Scalars and tensors at one (a, b)");
  response->add_option("--a", a, "a = omega/2m")->required();
  response->add_option("--b", b, "b = |q|/2m")->required();
  add_medium_options(response, medium);
  add_output_options(response, output, "json");

  auto* scan = app.add_subcommand("scan", "Region map and eps_L, nu_L over an (a, b) grid");
  add_range(scan, "a", scan_a, 0.01, 3.0, 50);
  add_range(scan, "b", scan_b, 0.01, 3.0, 50);
  add_medium_options(scan, medium);
  add_output_options(scan, output, "csv");

  auto* disp = app.add_subcommand("dispersion", "Plasmon roots over a log-spaced b grid");
  disp->add_option("--mode", mode, "longitudinal, transverse or both")
      ->check(CLI::IsMember({"longitudinal", "transverse", "both"}));
  add_range(disp, "b", disp_b, 1e-3, 1e-1, 8);
  add_range(disp, "a", disp_a, 0.005, 0.5, 400);
  add_medium_options(disp, medium);
  add_output_options(disp, output, "csv");

  auto* scan_nr = app.add_subcommand("scan-nr", "Nonrelativistic cases and Im B* over (omega, q)");
  add_range(scan_nr, "omega", w_range, 1e-4, 0.02, 40);
  add_range(scan_nr, "q", q_range, 1e-3, 0.3, 40);
  scan_nr->add_option("--pf", pF, "Fermi momentum pF/m")->check(CLI::NonNegativeNumber);
  add_medium_options(scan_nr, medium);
  add_output_options(scan_nr, output, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    std::string text;
    if (output.format.empty()) output.format = *response ? "json" : "csv";
    if (*response) {
      text = response_text(a / frequency_scale(medium), b / frequency_scale(medium), medium,
                           output.format);
    } else if (*scan) {
      text = scan_text(scan_a, scan_b, medium, output);
    } else if (*disp) {
      text = dispersion_text(mode, disp_b, disp_a, medium, output);
    } else {
      text = scan_nr_text(w_range, q_range, pF, medium, output);
    }
    emit(output, text);
  } catch (const IoFailure& e) {
    std::cerr << "relresp: " << e.what() << '\n';
    return kExitIo;
  } catch (const relresp::Error& e) {
    std::cerr << "relresp: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
