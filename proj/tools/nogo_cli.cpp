// Command-line surface for the universal-Hadamard no-go engine.
//
// Subcommands:
//   defect        universality defect, ensemble membership, Bloch coords
//   signalling    no-signalling protocol verdict for one state
//   locc          LOCC entanglement-monotonicity verdict for one state
//   characterize  grid sweep or Bloch trajectory as CSV
//   report        full end-to-end reproduction on a state plus a
//                 reference ensemble state
//
// Exit codes: 0 computed (any verdict), 2 malformed input, 3 degenerate
// LOCC configuration. --fail-on-violation maps a violating verdict to a
// nonzero exit for scripting.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nogo/nogo.hpp"

namespace {

using nogo::Complex;
using nogo::DensityMatrix;
using nogo::QubitSpec;
using nogo::StateVector;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDegenerate = 3;

// Shortest decimal that round-trips to the same binary value.
std::string fmt(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

std::string fmt(bool v) { return v ? "true" : "false"; }

std::string fmt(Complex z) {
  return "(" + fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i)";
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json state_json(const StateVector& s) {
  json rows = json::array();
  for (int i = 0; i < s.size(); ++i) rows.push_back(complex_json(s.amplitude(i)));
  return rows;
}

json matrix_json(const DensityMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& os, const std::string& label, const DensityMatrix& m) {
  os << label << "\n";
  for (int i = 0; i < m.dim(); ++i) {
    os << "  ";
    for (int j = 0; j < m.dim(); ++j) os << fmt(m(i, j)) << (j + 1 < m.dim() ? "  " : "");
    os << "\n";
  }
}

void print_state(std::ostream& os, const std::string& label, const StateVector& s) {
  os << label << "\n  ";
  for (int i = 0; i < s.size(); ++i) os << fmt(s.amplitude(i)) << (i + 1 < s.size() ? "  " : "");
  os << "\n";
}

struct StateInput {
  std::vector<double> a;  // re, im
  std::vector<double> b;
  std::optional<double> ensemble_beta;
  std::string sign = "+";
  bool renormalize = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "Amplitude of |0>: RE IM")->expected(2);
    cmd->add_option("--b", b, "Amplitude of |1>: RE IM")->expected(2);
    cmd->add_option("--ensemble-beta", ensemble_beta,
                    "Pick the ensemble state with this beta instead of --a/--b");
    cmd->add_option("--sign", sign, "Alpha sign for --ensemble-beta: + or -");
    cmd->add_flag("--renormalize", renormalize,
                  "Accept inputs whose norm deviates from 1 by more than 1e-6");
  }

  QubitSpec resolve() const {
    if (ensemble_beta) {
      if (sign != "+" && sign != "-") throw std::invalid_argument("--sign must be + or -");
      return nogo::ensemble_state(nogo::EnsembleParam(*ensemble_beta, sign == "+" ? +1 : -1));
    }
    if (a.size() != 2 || b.size() != 2)
      throw std::invalid_argument("provide --a RE IM and --b RE IM, or --ensemble-beta");
    const Complex ca(a[0], a[1]), cb(b[0], b[1]);
    const double n2 = std::norm(ca) + std::norm(cb);
    if (std::abs(n2 - 1.0) > 1e-6 && !renormalize)
      throw std::invalid_argument("input norm deviates from 1 by more than 1e-6 "
                                  "(pass --renormalize to accept)");
    return QubitSpec(ca, cb);
  }

  json to_json(const QubitSpec& q) const {
    json j;
    j["a"] = complex_json(q.a());
    j["b"] = complex_json(q.b());
    return j;
  }
};

struct OutputOpts {
  std::string format = "text";
  std::string path;

  void attach(CLI::App* cmd, std::vector<std::string> formats = {"text", "json"}) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(formats))
        ->default_str(formats.front());
    cmd->add_option("--output,-o", path, "Output file (default: stdout)");
  }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path: " + path);
    f << text;
  }
};

double default_tol() {
  if (const char* env = std::getenv("NOGO_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return nogo::kViolationTol;
}

json tolerances_json(double tol) {
  json j;
  j["violation"] = tol;
  j["norm"] = nogo::kNormTol;
  j["mat"] = nogo::kMatTol;
  j["eig"] = nogo::kEigTol;
  return j;
}

json signalling_json(const nogo::SignallingVerdict& v) {
  json j;
  j["distance"] = v.distance;
  j["residual_alpha"] = v.residual_alpha;
  j["residual_beta"] = v.residual_beta;
  j["signalling"] = v.signalling;
  j["spectra_equal"] = v.spectra_equal;
  return j;
}

json locc_json(const nogo::LoccVerdict& v) {
  json j;
  j["degenerate"] = v.degenerate;
  j["entropy_before"] = v.entropy_before;
  j["entropy_after"] = v.entropy_after;
  j["normalization"] = v.normalization;
  j["lambda_plus"] = v.lambda_plus;
  j["lambda_minus"] = v.lambda_minus;
  j["constraint_residual"] = v.constraint_residual;
  j["violation"] = v.violation;
  return j;
}

int run_defect(const StateInput& in, const OutputOpts& out, double tol, bool fail_on_violation) {
  const QubitSpec q = in.resolve();
  const double defect = nogo::universality_defect(q);
  const bool member = nogo::in_ensemble(q, tol);
  const nogo::BlochVector bl = nogo::bloch_coordinates(q);

  std::ostringstream os;
  if (out.format == "json") {
    json j;
    j["input"] = in.to_json(q);
    j["verdict"]["defect"] = defect;
    j["verdict"]["defect_up_to_phase"] = nogo::universality_defect_up_to_phase(q);
    j["verdict"]["in_ensemble"] = member;
    j["verdict"]["bloch"] = json::array({bl.x, bl.y, bl.z});
    j["tolerances"] = tolerances_json(tol);
    j["version"] = nogo::kVersion;
    os << j.dump(2) << "\n";
  } else {
    os << "state: a=" << fmt(q.a()) << " b=" << fmt(q.b()) << "\n"
       << "defect: " << fmt(defect) << "\n"
       << "defect_up_to_phase: " << fmt(nogo::universality_defect_up_to_phase(q)) << "\n"
       << "in_ensemble: " << fmt(member) << "\n"
       << "bloch: " << fmt(bl.x) << " " << fmt(bl.y) << " " << fmt(bl.z) << "\n";
  }
  out.write(os.str());
  return (fail_on_violation && !member) ? kExitViolation : kExitOk;
}

int run_signalling(const StateInput& in, const OutputOpts& out, double tol,
                   bool fail_on_violation) {
  const QubitSpec q = in.resolve();
  const nogo::SignallingVerdict v = nogo::signalling_verdict(q, tol);

  std::ostringstream os;
  if (out.format == "json") {
    json j;
    j["input"] = in.to_json(q);
    j["verdict"] = signalling_json(v);
    j["matrices"]["eq2"] = state_json(nogo::concretize(nogo::build_signalling_resource(q)));
    j["matrices"]["eq3"] = matrix_json(v.rho_before);
    j["matrices"]["eq4"] = state_json(
        nogo::concretize(nogo::apply_machine_bob(nogo::build_signalling_resource(q))));
    j["matrices"]["eq5"] = matrix_json(v.rho_after);
    j["tolerances"] = tolerances_json(tol);
    j["version"] = nogo::kVersion;
    os << j.dump(2) << "\n";
  } else {
    os << "state: a=" << fmt(q.a()) << " b=" << fmt(q.b()) << "\n";
    print_matrix(os, "rho_A before:", v.rho_before);
    print_matrix(os, "rho_A after:", v.rho_after);
    os << "trace_distance: " << fmt(v.distance) << "\n"
       << "residual_alpha: " << fmt(v.residual_alpha) << "\n"
       << "residual_beta: " << fmt(v.residual_beta) << "\n"
       << "signalling: " << fmt(v.signalling) << "\n"
       << "spectra_equal: " << fmt(v.spectra_equal) << "\n";
  }
  out.write(os.str());
  return (fail_on_violation && v.signalling) ? kExitViolation : kExitOk;
}

int run_locc(const StateInput& in, const OutputOpts& out, double tol, bool fail_on_violation) {
  const QubitSpec q = in.resolve();
  const nogo::LoccVerdict v = nogo::locc_verdict(q, tol);
  if (v.degenerate) {
    std::cerr << "degenerate LOCC resource: b = 0, the shared state does not encode psi\n";
    return kExitDegenerate;
  }

  std::ostringstream os;
  if (out.format == "json") {
    json j;
    j["input"] = in.to_json(q);
    j["verdict"] = locc_json(v);
    j["matrices"]["eq7"] = state_json(nogo::concretize(nogo::build_locc_resource(q)));
    j["matrices"]["eq9"] = matrix_json(nogo::rdm_before_locc(q));
    j["matrices"]["eq10"] =
        state_json(nogo::concretize(nogo::apply_machine_b2(nogo::build_locc_resource(q))));
    j["matrices"]["eq11"] = matrix_json(nogo::rdm_after_locc(q));
    j["tolerances"] = tolerances_json(tol);
    j["version"] = nogo::kVersion;
    os << j.dump(2) << "\n";
  } else {
    os << "state: a=" << fmt(q.a()) << " b=" << fmt(q.b()) << "\n"
       << "entropy_before: " << fmt(v.entropy_before) << " bits\n"
       << "entropy_after: " << fmt(v.entropy_after) << " bits\n"
       << "N: " << fmt(v.normalization) << "\n"
       << "lambda: " << fmt(v.lambda_plus) << " " << fmt(v.lambda_minus) << "\n"
       << "constraint_residual: " << fmt(v.constraint_residual) << "\n"
       << "violation: " << fmt(v.violation) << "\n";
  }
  out.write(os.str());
  return (fail_on_violation && v.violation) ? kExitViolation : kExitOk;
}

int run_characterize(const std::vector<int>& grid, const std::string& traj, int points,
                     const OutputOpts& out, double tol) {
  std::ostringstream os;
  if (!traj.empty()) {
    const auto kind = traj == "ensemble" ? nogo::TrajectoryKind::Ensemble
                                         : nogo::TrajectoryKind::Complement;
    os << "beta,x,y,z\n";
    for (const nogo::TrajectoryRow& r : nogo::trajectory(points, kind))
      os << fmt(r.beta) << "," << fmt(r.x) << "," << fmt(r.y) << "," << fmt(r.z) << "\n";
  } else {
    const nogo::SweepGrid g(grid.at(0), grid.at(1), grid.at(2));
    os << "theta,phi,chi,x,y,z,signalling_distance,entropy_after,constraint_residual,"
          "in_ensemble\n";
    for (const nogo::ClassificationRecord& r : nogo::sweep(g, tol))
      os << fmt(r.theta) << "," << fmt(r.phi) << "," << fmt(r.chi) << "," << fmt(r.bloch.x)
         << "," << fmt(r.bloch.y) << "," << fmt(r.bloch.z) << "," << fmt(r.signalling_distance)
         << "," << fmt(r.entropy_after) << "," << fmt(r.constraint_residual) << ","
         << fmt(r.in_ensemble) << "\n";
  }
  out.write(os.str());
  return kExitOk;
}

void report_one(std::ostream& os, const std::string& title, const QubitSpec& q, double tol) {
  os << "== " << title << ": a=" << fmt(q.a()) << " b=" << fmt(q.b()) << " ==\n\n";

  const nogo::SignallingVerdict sv = nogo::signalling_verdict(q, tol);
  os << "-- no-signalling protocol --\n";
  print_state(os, "Eq. (2) shared state phi_AB:",
              nogo::concretize(nogo::build_signalling_resource(q)));
  print_matrix(os, "Eq. (3) rho_A:", sv.rho_before);
  print_state(os, "Eq. (4) shared state after the machine:",
              nogo::concretize(nogo::apply_machine_bob(nogo::build_signalling_resource(q))));
  print_matrix(os, "Eq. (5) rho'_A:", sv.rho_after);
  os << "trace_distance(rho_A, rho'_A): " << fmt(sv.distance) << "\n"
     << "residuals (alpha_a - alpha_b, beta_b): " << fmt(sv.residual_alpha) << ", "
     << fmt(sv.residual_beta) << "\n"
     << "signalling: " << fmt(sv.signalling) << "\n"
     << "spectra equal: " << fmt(sv.spectra_equal) << "\n\n";

  os << "-- LOCC protocol --\n";
  const nogo::LoccVerdict lv = nogo::locc_verdict(q, tol);
  if (lv.degenerate) {
    os << "degenerate resource (b = 0); LOCC protocol skipped\n\n";
    return;
  }
  print_state(os, "Eq. (7) resource Phi_AB:", nogo::concretize(nogo::build_locc_resource(q)));
  print_matrix(os, "Eq. (9) rho_A:", nogo::rdm_before_locc(q));
  print_state(os, "Eq. (10) state after the machine on B2:",
              nogo::concretize(nogo::apply_machine_b2(nogo::build_locc_resource(q))));
  print_matrix(os, "Eq. (11)/(12) rho'_A:", nogo::rdm_after_locc(q));
  os << "N: " << fmt(lv.normalization) << "\n"
     << "Eq. (13) eigenvalues: " << fmt(lv.lambda_plus) << ", " << fmt(lv.lambda_minus) << "\n"
     << "Eq. (14) constraint residual beta_b^2 + (3/4)(alpha_a - alpha_b)^2: "
     << fmt(lv.constraint_residual) << "\n"
     << "entropy before: " << fmt(lv.entropy_before) << " bits\n"
     << "entropy after: " << fmt(lv.entropy_after) << " bits\n"
     << "violation: " << fmt(lv.violation) << "\n\n";
}

int run_report(const StateInput& in, const OutputOpts& out, double tol, bool fail_on_violation) {
  QubitSpec user = (in.a.empty() && in.b.empty() && !in.ensemble_beta)
                       ? QubitSpec(Complex(1.0 / std::sqrt(2.0), 0.0),
                                   Complex(0.0, 1.0 / std::sqrt(2.0)))
                       : in.resolve();
  const QubitSpec reference =
      nogo::ensemble_state(nogo::EnsembleParam(1.0 / std::sqrt(3.0), +1));

  std::ostringstream os;
  bool violated = false;
  if (out.format == "json") {
    json j;
    j["input"] = in.to_json(user);
    for (const auto& [key, q] : {std::pair<std::string, QubitSpec>{"user", user},
                                 {"ensemble_reference", reference}}) {
      const nogo::SignallingVerdict sv = nogo::signalling_verdict(q, tol);
      const nogo::LoccVerdict lv = nogo::locc_verdict(q, tol);
      violated = violated || sv.signalling || lv.violation;
      json sec;
      sec["state"]["a"] = complex_json(q.a());
      sec["state"]["b"] = complex_json(q.b());
      sec["signalling"] = signalling_json(sv);
      sec["locc"] = locc_json(lv);
      sec["matrices"]["eq3"] = matrix_json(sv.rho_before);
      sec["matrices"]["eq5"] = matrix_json(sv.rho_after);
      if (!lv.degenerate) {
        sec["matrices"]["eq9"] = matrix_json(nogo::rdm_before_locc(q));
        sec["matrices"]["eq11"] = matrix_json(nogo::rdm_after_locc(q));
      }
      j["reports"][key] = std::move(sec);
    }
    j["tolerances"] = tolerances_json(tol);
    j["version"] = nogo::kVersion;
    os << j.dump(2) << "\n";
  } else {
    report_one(os, "input state", user, tol);
    report_one(os, "reference ensemble state (beta = 1/sqrt 3)", reference, tol);
    const nogo::SignallingVerdict sv = nogo::signalling_verdict(user, tol);
    const nogo::LoccVerdict lv = nogo::locc_verdict(user, tol);
    violated = sv.signalling || lv.violation;
  }
  out.write(os.str());
  return (fail_on_violation && violated) ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verifier for the non-existence of a universal Hadamard gate"};
  app.require_subcommand(1);

  double tol = default_tol();
  bool fail_on_violation = false;
  app.add_option("--tol", tol, "Violation tolerance (default 1e-9, env NOGO_TOL)");
  app.add_flag("--fail-on-violation", fail_on_violation,
               "Exit nonzero when the verdict reports a violation");

  StateInput in_defect, in_sig, in_locc, in_report;
  OutputOpts out_defect, out_sig, out_locc, out_char, out_report;

  CLI::App* defect = app.add_subcommand("defect", "Universality defect of one state");
  in_defect.attach(defect);
  out_defect.attach(defect);

  CLI::App* sig = app.add_subcommand("signalling", "No-signalling protocol verdict");
  in_sig.attach(sig);
  out_sig.attach(sig);

  CLI::App* locc = app.add_subcommand("locc", "LOCC monotonicity verdict");
  in_locc.attach(locc);
  out_locc.attach(locc);

  CLI::App* chr = app.add_subcommand("characterize", "Sweep the state space to CSV");
  std::vector<int> grid{10, 10, 1};
  std::string traj;
  int points = 41;
  chr->add_option("--grid", grid, "Grid resolutions: N_THETA N_PHI N_CHI")->expected(3);
  chr->add_option("--trajectory", traj, "Emit a Bloch trajectory instead of a sweep")
      ->check(CLI::IsMember({"ensemble", "complement"}));
  chr->add_option("--points", points, "Samples per alpha sign for --trajectory");
  out_char.attach(chr, {"csv"});

  CLI::App* rep = app.add_subcommand("report", "Full reproduction document");
  in_report.attach(rep);
  out_report.attach(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (defect->parsed()) return run_defect(in_defect, out_defect, tol, fail_on_violation);
    if (sig->parsed()) return run_signalling(in_sig, out_sig, tol, fail_on_violation);
    if (locc->parsed()) return run_locc(in_locc, out_locc, tol, fail_on_violation);
    if (chr->parsed()) return run_characterize(grid, traj, points, out_char, tol);
    if (rep->parsed()) return run_report(in_report, out_report, tol, fail_on_violation);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
