// Command-line laboratory for the radial Orlicz-norm machinery: norm
// computation, sharpness sweeps over the glued counterexample family,
// verification suites, Moser iteration traces, Harnack chains, and
// oscillation recursions. Exit codes: 0 success, 1 usage or input error,
// 2 certified-infinite result (prints INF).
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orlicz/ball.hpp"
#include "orlicz/calibration.hpp"
#include "orlicz/continuity.hpp"
#include "orlicz/counterexample.hpp"
#include "orlicz/embedding.hpp"
#include "orlicz/harnack.hpp"
#include "orlicz/iteration.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/pde.hpp"
#include "orlicz/profile_io.hpp"

namespace {

using namespace orlicz;
using namespace orlicz::profiles;

double default_tol() {
  if (const char* env = std::getenv("ORLICZ_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-8;
}

// ---------------------------------------------------------------- norm ----

int run_norm(const std::string& space, double s, double p, int n,
             double radius, const std::string& profile_spec, double tol) {
  RadialProfile f = parse_profile(profile_spec, radius);
  Ball ball(n, radius);
  if (space == "Lp") {
    double v = lebesgue_norm(f, p, ball, tol);
    if (!std::isfinite(v)) {
      std::printf("INF\n");
      return 2;
    }
    std::printf("value %.6g  tol %.3g\n", v, tol);
    return 0;
  }
  NormResult r = [&] {
    if (space == "N")
      return luxemburg_norm(f, OrliczFunction(OrliczKind::kLogType, n, s),
                            ball, tol);
    if (space == "M")
      return luxemburg_norm(f, OrliczFunction(OrliczKind::kExpType, n, s),
                            ball, tol);
    if (space == "E") return exp_norm(f, s, ball, tol);
    if (space == "ALT") return alt_norm(f, n, s, ball, tol);
    throw CLI::ValidationError("--space must be one of N, M, E, ALT, Lp");
  }();
  if (!r.is_finite()) {
    std::printf("INF\n");
    return 2;
  }
  std::printf("value %.6g  bracket [%.6g, %.6g]  J %.6g  tol %.3g\n", r.value,
              r.bracket_lo, r.bracket_hi, r.functional_at_value, tol);
  return 0;
}

// --------------------------------------------------------------- sweep ----

int run_sweep(int n, const std::vector<double>& eps_list,
              const std::vector<double>& r_list, const std::string& out_path,
              double tol) {
  auto rows = sharpness_sweep(n, eps_list, r_list, tol);
  std::string body =
      "eps,r,a,b,sup_u,inf_B18,ratio_B,norm_V_Nr,int_NrV,norm_u_Ern,ratio_A\n";
  char line[512];
  for (const auto& w : rows) {
    std::snprintf(line, sizeof line,
                  "%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g\n",
                  w.eps, w.r, w.a, w.b, w.sup_u, w.inf_b18, w.ratio_b,
                  w.norm_v_log_gauge, w.int_log_gauge_v, w.norm_u_exp_gauge,
                  w.ratio_a);
    body += line;
  }
  if (out_path == "-") {
    std::fputs(body.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
      return 1;
    }
    out << body;
  }
  std::fprintf(stderr, "# rows %zu  tol %.3g\n", rows.size(), tol);
  return 0;
}

// -------------------------------------------------------------- verify ----

struct Verifier {
  int passed = 0;
  int total = 0;
  void check(const char* name, bool ok) {
    ++total;
    if (ok) ++passed;
    std::printf("  %-4s %s\n", ok ? "ok" : "FAIL", name);
  }
  bool all() const { return passed == total; }
};

void suite_counterexample(Verifier& v, int n, double tol) {
  for (double eps : {1e-1, 1e-2, 1e-3}) {
    auto sol = build_counterexample(n, eps);
    PdeProblem prob{n, sol.u, sol.potential, sol.domain};
    double scale = double(n) * std::pow(eps, -double(n));
    auto sr = strong_residual(prob);
    char name[128];
    std::snprintf(name, sizeof name, "strong residual eps=%g (%.2e of scale)",
                  eps, sr.max_abs / scale);
    v.check(name, sr.max_abs <= 1e-9 * scale);

    double jump_u = std::abs(sol.u.value_side(eps, Side::kLeft) -
                             sol.u.value_side(eps, Side::kRight));
    double jump_du = std::abs(sol.u.deriv_side(eps, Side::kLeft) -
                              sol.u.deriv_side(eps, Side::kRight));
    double du = std::abs(sol.u.deriv_side(eps, Side::kRight));
    std::snprintf(name, sizeof name, "C1 glue at eps=%g", eps);
    v.check(name, jump_u <= 1e-12 * sol.a && jump_du <= 1e-12 * du);

    std::snprintf(name, sizeof name, "boundary zero eps=%g", eps);
    v.check(name, std::abs(sol.u.value(1.0)) <= 1e-12 * sol.a);

    auto wr = weak_residual(prob, power(1.0, 1.0, 2.0, 1.0), tol);
    std::snprintf(name, sizeof name, "weak residual eps=%g (%.2e of scale)",
                  eps, std::abs(wr.value) / wr.scale);
    v.check(name, std::abs(wr.value) <= 1e-6 * wr.scale);
  }
}

std::vector<RadialProfile> verify_corpus() {
  std::vector<RadialProfile> out;
  for (double L : {0.5, 1.0, 2.0, 4.0, 8.0, 20.0})
    out.push_back(truncate_at(log_inverse(1.0, 1.0), L));
  struct Cap {
    double c, m;
  };
  for (Cap cap : {Cap{1.0, 1.0}, Cap{2.0, 2.0}, Cap{0.5, 6.0}, Cap{3.0, 1.5},
                  Cap{1.3, 3.0}})
    out.push_back(power(cap.c, cap.c, cap.m, 1.0));
  return out;
}

void suite_mt(Verifier& v, int n, double tol) {
  Ball ball(n, 1.0);
  auto corpus = verify_corpus();
  char name[128];
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto rep = trudinger_check(corpus[i], ball,
                               TrudingerMode::kDirichletEnergy, 0.5, tol);
    std::snprintf(name, sizeof name,
                  "dirichlet-energy margin, member %zu (%.3g)", i, rep.margin);
    v.check(name, rep.margin >= -1e-9 * rep.rhs);
  }
  for (double r : {0.6, 0.75, 0.9}) {
    auto rep = trudinger_check(corpus[2], ball, TrudingerMode::kInterpolated,
                               r, tol);
    std::snprintf(name, sizeof name, "interpolated margin, r=%g (%.3g)", r,
                  rep.margin);
    v.check(name, rep.margin >= -1e-9 * rep.rhs);
  }
  const auto& cal = Calibration::instance();
  for (double L : {2.0, 8.0}) {
    auto w = scale(truncate_at(log_inverse(1.0, 1.0), L), 0.1);
    auto rep = mean_product_check(w, ball, 1.0, cal.beta(n),
                                  cal.mean_product_cn(n), tol);
    std::snprintf(name, sizeof name,
                  "mean-product margin, 0.1 x truncated log L=%g (%.3g)", L,
                  rep.margin);
    v.check(name, rep.margin >= 0.0);
  }
}

void suite_harnack(Verifier& v, int n, double tol) {
  Ball ball(n, 1.0);
  char name[128];
  // constant chain against the measure-factor closed forms
  const double c = 2.0, R0 = 0.2, es = 1e-9;
  auto q = harnack_chain(constant(c, 1.0), ball, R0, 0.5, 0.0, es, tol);
  Ball b2 = ball.with_radius(2.0 * R0), b4 = ball.with_radius(4.0 * R0);
  double L2 = std::log1p(1.0 / b2.measure());
  double ex = (double(n) - 1.0) / double(n);
  double closed[6] = {c, (c + es) * std::pow(L2, -ex),
                      (c + es) * std::pow(b4.measure(), 0.5 / double(n)),
                      (c + es) * std::pow(b4.measure(), -0.5 / double(n)),
                      (c + es) * std::pow(L2, ex), c};
  bool match = true;
  for (int i = 0; i < 6; ++i)
    match = match && std::abs(q.values[i] - closed[i]) <= 1e-6 * closed[i];
  v.check("constant chain matches measure-factor closed forms", match);

  // glued solution chain at R0 = 1/16
  auto sol = build_counterexample(n, 0.05);
  auto qc = harnack_chain(sol.u, sol.domain, 1.0 / 16.0, 0.5, 0.0, es, tol);
  bool pos = qc.finite;
  for (double val : qc.values) pos = pos && val > 0.0 && std::isfinite(val);
  std::snprintf(name, sizeof name,
                "glued-solution chain finite and positive (quotient %.4g)",
                qc.harnack_quotient);
  v.check(name, pos);

  // shift sensitivity rows
  for (double shift : {1e-8, 1e-10}) {
    auto qs =
        harnack_chain(sol.u, sol.domain, 1.0 / 16.0, 0.5, 0.0, shift, tol);
    std::printf("  info eps-shift %.1e -> quotient %.9g\n", shift,
                qs.harnack_quotient);
  }
  auto q8 = harnack_chain(sol.u, sol.domain, 1.0 / 16.0, 0.5, 0.0, 1e-8, tol);
  auto q10 =
      harnack_chain(sol.u, sol.domain, 1.0 / 16.0, 0.5, 0.0, 1e-10, tol);
  double drift = std::abs(q8.harnack_quotient - q10.harnack_quotient) /
                 q10.harnack_quotient;
  std::snprintf(name, sizeof name, "quotient shift-stable (drift %.2e)",
                drift);
  v.check(name, drift < 1e-6);

  auto rv =
      dilation_check(sol.potential, n, 0.5, 1.0 / 32.0, 1.0 / 8.0, tol);
  std::snprintf(name, sizeof name, "dilation margin for the potential (%.4g)",
                rv.margin);
  v.check(name, rv.margin >= 0.0);
  auto same = dilation_check(constant(3.0, 1.0), n, 0.5, 0.1, 0.1, tol);
  v.check("dilation at equal radii is an identity",
          std::abs(same.margin) <= 1e-6 * same.rhs);
}

void suite_oscillation(Verifier& v, int n, double tol) {
  char name[128];
  OscillationParams p;
  p.theta = 0.5;
  p.tau = 0.0;
  p.gamma = 2.0;
  p.m_max = 60;
  auto pure = oscillation_recursion(p);
  bool exact = true;
  for (int m = 0; m <= 60; ++m)
    exact = exact && pure.omega[m] == std::ldexp(1.0, -m);
  v.check("theta=1/2, tau=0 recursion is exactly 2^-m", exact);
  v.check("exponential decay yields slope < -10",
          pure.slope_valid && pure.slope < -10.0);

  const double gamma = 1.5;
  OscillationParams pp = p;
  pp.tau = 0.25;
  pp.gamma = gamma;
  pp.m_max = 80;
  pp.kbar = [gamma](double rho) {
    return std::pow(std::abs(std::log(rho)), -gamma);
  };
  auto pert = oscillation_recursion(pp);
  std::snprintf(name, sizeof name,
                "perturbed slope in (-gamma, -1] (%.4f)", pert.slope);
  v.check(name, pert.slope_valid && pert.slope > -gamma &&
                    pert.slope <= -1.0);
  v.check("perturbed weighted suprema finite",
          std::isfinite(pert.k_index) && std::isfinite(pert.k_log) &&
              pert.k_index > 0.0 && pert.k_log > 0.0);

  // shrink stability across three radii below 3^-10
  std::vector<double> radii{1e-5, 1e-6, 1e-7};
  auto rows = shrink_check(constant(1.0, 1.0), n, 0.5, radii, tol);
  double lo = 1e300, hi = 0.0;
  for (const auto& row : rows) {
    lo = std::min(lo, row.measured_constant);
    hi = std::max(hi, row.measured_constant);
  }
  std::snprintf(name, sizeof name,
                "shrink constant stable on h == 1 (spread %.3f)", hi / lo);
  v.check(name, hi / lo <= 2.0);

  auto sol = build_counterexample(2, 0.1);
  lo = 1e300, hi = 0.0;
  for (double R : radii) {
    auto hR = dilate(sol.potential, 1.0 / R, 1.0);
    std::vector<double> one{R};
    auto row = shrink_check(hR, n, 0.5, one, tol);
    lo = std::min(lo, row[0].measured_constant);
    hi = std::max(hi, row[0].measured_constant);
  }
  std::snprintf(name, sizeof name,
                "shrink constant stable on rescaled potential (spread %.3f)",
                hi / lo);
  v.check(name, hi / lo <= 2.0);
}

int run_verify(const std::string& suite, int n, double tol) {
  struct Entry {
    const char* name;
    void (*fn)(Verifier&, int, double);
  };
  const std::vector<Entry> suites = {{"counterexample", suite_counterexample},
                                     {"mt", suite_mt},
                                     {"harnack", suite_harnack},
                                     {"oscillation", suite_oscillation}};
  int passed = 0, total = 0;
  bool known = suite == "all";
  for (const auto& e : suites) {
    if (suite != "all" && suite != e.name) continue;
    known = true;
    Verifier v;
    std::printf("suite %s\n", e.name);
    e.fn(v, n, tol);
    std::printf("SUITE %s %s %d/%d\n", e.name, v.all() ? "PASS" : "FAIL",
                v.passed, v.total);
    passed += v.passed;
    total += v.total;
  }
  if (!known) {
    std::fprintf(stderr, "error: unknown suite %s\n", suite.c_str());
    return 1;
  }
  if (suite == "all")
    std::printf("SUITE all %s %d/%d\n", passed == total ? "PASS" : "FAIL",
                passed, total);
  return passed == total ? 0 : 1;
}

// --------------------------------------------------------------- trace ----

int run_trace(const std::string& profile_spec, double eps, int n,
              double radius, double R, double r, double gauge, double q_cap,
              double tol) {
  RadialProfile u = eps > 0.0 ? build_counterexample(n, eps).u
                              : parse_profile(profile_spec, radius);
  Ball ball(n, eps > 0.0 ? 1.0 : radius);
  auto trace = moser_trace(u, ball, R, r, gauge, tol, q_cap);
  for (const auto& st : trace.steps)
    std::printf("j %2d  q %8.4g  h %.6g  norm %.6g\n", st.j, st.q, st.h,
                st.norm);
  std::printf("base_norm %.6g  sup_grid %.6g  grad_norm %.6g  tol %.3g\n",
              trace.base_norm, trace.sup_grid, trace.grad_norm, tol);
  std::printf("c_sup %.6g  c_grad %.6g  stop: %s\n", trace.c_sup,
              trace.c_grad, trace.stop_reason.c_str());
  if (!trace.finite) {
    std::printf("INF\n");
    return 2;
  }
  return 0;
}

// --------------------------------------------------------------- chain ----

int run_chain(const std::string& profile_spec, double eps, int n,
              double radius, double R0, double r, double gauge,
              double eps_shift, double tol) {
  RadialProfile u = eps > 0.0 ? build_counterexample(n, eps).u
                              : parse_profile(profile_spec, radius);
  Ball ball(n, eps > 0.0 ? 1.0 : radius);
  auto q = harnack_chain(u, ball, R0, r, gauge, eps_shift, tol);
  for (int i = 0; i < 6; ++i)
    std::printf("s%d %.6g%s", i + 1, q.values[i], i == 5 ? "\n" : "  ");
  for (int i = 0; i < 5; ++i)
    std::printf("r%d %.6g%s", i + 1, q.ratios[i], i == 4 ? "\n" : "  ");
  std::printf("harnack_quotient %.6g  gauge %.3g  eps_shift %.3g  tol %.3g\n",
              q.harnack_quotient, q.gauge, q.eps_shift, tol);
  if (!q.finite) {
    std::printf("INF\n");
    return 2;
  }
  return 0;
}

// ----------------------------------------------------------------- osc ----

int run_osc(double theta, double tau, double gamma, double omega0, double R,
            int m_max, double kbar_gamma) {
  OscillationParams p;
  p.theta = theta;
  p.tau = tau;
  p.gamma = gamma;
  p.omega0 = omega0;
  p.R = R;
  p.m_max = m_max;
  if (kbar_gamma > 0.0)
    p.kbar = [kbar_gamma](double rho) {
      return std::pow(std::abs(std::log(rho)), -kbar_gamma);
    };
  auto res = oscillation_recursion(p);
  for (std::size_t m = 0; m < res.omega.size(); m += 10)
    std::printf("m %3zu  omega %.6g\n", m, res.omega[m]);
  std::printf("k_index %.6g  k_log %.6g\n", res.k_index, res.k_log);
  if (res.slope_valid)
    std::printf("loglog_slope %.6g\n", res.slope);
  else
    std::printf("loglog_slope n/a\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radial Orlicz-norm laboratory"};
  app.require_subcommand(1);
  double tol = default_tol();

  auto* cmd_norm = app.add_subcommand("norm", "gauge norm of a profile");
  std::string space = "N", profile = "const:1";
  double s = 1.0, p = 2.0, radius = 1.0;
  int n = 2;
  cmd_norm->add_option("--space", space, "N | M | E | ALT | Lp");
  cmd_norm->add_option("--s", s, "Orlicz parameter s");
  cmd_norm->add_option("--p", p, "Lebesgue exponent (Lp space)");
  cmd_norm->add_option("--n", n, "dimension");
  cmd_norm->add_option("--radius", radius, "ball radius");
  cmd_norm->add_option("--profile", profile, "profile spec");
  cmd_norm->add_option("--tol", tol, "tolerance");

  auto* cmd_sweep = app.add_subcommand("sweep", "sharpness sweep CSV");
  std::vector<double> eps_list, r_list{1.0};
  std::string out_path = "-";
  cmd_sweep->add_option("--n", n, "dimension");
  cmd_sweep->add_option("--eps", eps_list, "epsilon values")
      ->delimiter(',');
  cmd_sweep->add_option("--r", r_list, "r values")->delimiter(',');
  cmd_sweep->add_option("--out", out_path, "output path (- for stdout)");
  cmd_sweep->add_option("--tol", tol, "tolerance");

  auto* cmd_verify = app.add_subcommand("verify", "verification suites");
  std::string suite = "all";
  cmd_verify->add_option("--suite", suite,
                         "counterexample | mt | harnack | oscillation | all");
  cmd_verify->add_option("--n", n, "dimension");
  cmd_verify->add_option("--tol", tol, "tolerance");

  auto* cmd_trace = app.add_subcommand("trace", "Moser iteration trace");
  double eps = 0.0, R = 0.25, r = 0.9, gauge = 0.0, q_cap = 256.0;
  cmd_trace->add_option("--profile", profile, "profile spec");
  cmd_trace->add_option("--eps", eps, "use the glued solution u_eps");
  cmd_trace->add_option("--n", n, "dimension");
  cmd_trace->add_option("--radius", radius, "domain radius");
  cmd_trace->add_option("--R", R, "iteration base radius");
  cmd_trace->add_option("--r", r, "integrability parameter in (0,1)");
  cmd_trace->add_option("--gauge", gauge, "additive gauge k");
  cmd_trace->add_option("--q-cap", q_cap, "stop once q exceeds this");
  cmd_trace->add_option("--tol", tol, "tolerance");

  auto* cmd_chain = app.add_subcommand("chain", "Harnack chain quantities");
  double R0 = 0.0625, eps_shift = 1e-9;
  cmd_chain->add_option("--profile", profile, "profile spec");
  cmd_chain->add_option("--eps", eps, "use the glued solution u_eps");
  cmd_chain->add_option("--n", n, "dimension");
  cmd_chain->add_option("--radius", radius, "domain radius");
  cmd_chain->add_option("--R0", R0, "inner radius (domain covers 4 R0)");
  cmd_chain->add_option("--r", r, "integrability parameter in (0,1)");
  cmd_chain->add_option("--gauge", gauge, "inhomogeneity gauge k");
  cmd_chain->add_option("--eps-shift", eps_shift, "regularizing shift");
  cmd_chain->add_option("--tol", tol, "tolerance");

  auto* cmd_osc = app.add_subcommand("osc", "oscillation recursion");
  double theta = 0.5, tau = 0.0, o_gamma = 2.0, omega0 = 1.0, R_osc = 1e-5,
         kbar_gamma = 0.0;
  int m_max = 80;
  cmd_osc->add_option("--theta", theta, "contraction factor in (0,1)");
  cmd_osc->add_option("--tau", tau, "perturbation coupling");
  cmd_osc->add_option("--gamma", o_gamma, "decay exponent");
  cmd_osc->add_option("--omega0", omega0, "initial oscillation");
  cmd_osc->add_option("--R", R_osc, "start radius");
  cmd_osc->add_option("--m-max", m_max, "recursion depth");
  cmd_osc->add_option("--kbar-gamma", kbar_gamma,
                      "enable kbar = |log rho|^-g");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_norm) return run_norm(space, s, p, n, radius, profile, tol);
    if (*cmd_sweep) return run_sweep(n, eps_list, r_list, out_path, tol);
    if (*cmd_verify) return run_verify(suite, n, tol);
    if (*cmd_trace)
      return run_trace(profile, eps, n, radius, R, r, gauge, q_cap, tol);
    if (*cmd_chain)
      return run_chain(profile, eps, n, radius, R0, r, gauge, eps_shift, tol);
    if (*cmd_osc)
      return run_osc(theta, tau, o_gamma, omega0, R_osc, m_max, kbar_gamma);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 1;
}
