#include "qsd/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qsd {

std::string format_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

namespace {

std::string fmt_bloch(const BlochVector& b) {
  return format_num(b.x) + "," + format_num(b.y) + "," + format_num(b.z);
}

int check_model(const KossakowskiModel& model, std::ostream& diag) {
  if (!model.cp_valid) {
    diag << "model is not completely positive: min eigenvalue of C = "
         << format_num(model.min_eigenvalue) << "\n";
    return 1;
  }
  return 0;
}

void describe_report(const AsymptoticReport& rep, std::ostream& out) {
  const auto& c = rep.classification;
  out << "classification = " << to_string(c.kind) << "  n+ = " << c.n_plus
      << "  n- = " << c.n_minus;
  if (c.xi > 0) out << "  xi = " << c.xi;
  if (c.kind == Case::case3) out << "  alpha = " << format_num(c.alpha);
  out << "\n";
  out << "dim M = " << rep.dim_m << "  dim M' = " << rep.dim_m_prime
      << "  dim Z = " << rep.dim_z << "\n";
  if (rep.oscillatory) {
    out << "peripheral spectrum is oscillatory: no asymptotic state\n";
    return;
  }
  out << "blochT_inf [oracle] = " << fmt_bloch(rep.bloch_oracle) << "\n";
  out << "rho0 (maximal rank stationary) = " << (rep.rho0 ? "found" : "none") << "\n";
  if (rep.dev_theorem_2i)
    out << "deviation oracle vs branch 2.i [theorem] = " << format_num(*rep.dev_theorem_2i)
        << "\n";
  if (rep.dev_theorem_2ii)
    out << "deviation oracle vs branch 2.ii [theorem] = "
        << format_num(*rep.dev_theorem_2ii) << "\n";
  if (rep.tau) out << "tau [closed-form] = " << format_num(*rep.tau) << "\n";
  if (rep.bloch_formula)
    out << "blochT_inf [closed-form] = " << fmt_bloch(*rep.bloch_formula) << "\n";
  if (rep.dev_formula)
    out << "deviation oracle vs closed-form = " << format_num(*rep.dev_formula) << "\n";
}

}  // namespace

CommandResult cmd_validate(const ModelConfig& cfg) {
  CommandResult res;
  const auto model = make_model(cfg);
  const auto eig = hermitian_eig(model.c, cfg.tols);
  std::ostringstream out;
  out << "eigenvalues of C:";
  for (int i = 0; i < 6; ++i) out << " " << format_num(eig.eigenvalues(i));
  out << "\n";
  out << "complete positivity: " << (model.cp_valid ? "valid" : "violated") << "\n";
  if (!model.cp_valid)
    out << "negative eigenvalue: " << format_num(model.min_eigenvalue) << "\n";
  res.output = out.str();
  res.exit_code = model.cp_valid ? 0 : 1;
  return res;
}

CommandResult cmd_classify(const ModelConfig& cfg) {
  CommandResult res;
  std::ostringstream diag;
  const auto model = make_model(cfg);
  if ((res.exit_code = check_model(model, diag))) {
    res.diagnostics = diag.str();
    return res;
  }
  const auto sd = diagonalize(model, cfg.tols);
  const auto set = lindblad_set(sd, cfg.tols);
  const auto cls = classify(model, sd, cfg.tols);

  const auto m_alg = commutant_M(set, cfg.tols);
  const auto m_prime = numerical_commutant(m_alg.basis, "Mprime", cfg.tols);
  const auto z_alg = center(m_alg, m_prime, cfg.tols);

  std::ostringstream out;
  out << "case = " << to_string(cls.kind) << "\n";
  out << "n+ = " << cls.n_plus << "  n- = " << cls.n_minus << "\n";
  if (cls.xi > 0) out << "xi = " << cls.xi << "\n";
  if (cls.kind == Case::case3) out << "alpha = " << format_num(cls.alpha) << "\n";
  out << "residuals: |A-A^T| = " << format_num(cls.res_a_sym)
      << "  |B-A| = " << format_num(cls.res_b_eq_a)
      << "  |B-alpha A| = " << format_num(cls.res_b_alpha) << "\n";
  out << "dim M [numerical] = " << m_alg.dim() << "\n";
  out << "dim M' [numerical] = " << m_prime.dim() << "\n";
  out << "dim Z [numerical] = " << z_alg.dim() << "\n";

  // Per-generator analytic spans, where defined.
  for (const auto& e : set.entries) {
    const bool plus = e.kind == LindbladKind::plus;
    out << (plus ? "plus" : "minus") << " generator " << e.index
        << ": lambda = " << format_num(e.lambda);
    if (e.involution) {
      std::vector<Mat> gen{e.v};
      const auto numeric = numerical_commutant(gen, "single", cfg.tols);
      const auto analytic = plus ? analytic_commutant_plus(e.sigma, *e.involution)
                                 : analytic_commutant_minus(e.sigma, *e.involution);
      const auto cmp = span_equal(numeric, analytic, cfg.tols);
      out << "  analytic dim = " << analytic.dim()
          << "  span agreement = " << (cmp.equal ? "yes" : "NO")
          << " (defect " << format_num(cmp.max_defect) << ")";
    } else {
      out << "  sigma singular: analytic span not available";
    }
    out << "\n";
  }
  res.output = out.str();
  return res;
}

CommandResult cmd_stationary(const ModelConfig& cfg) {
  CommandResult res;
  std::ostringstream diag;
  const auto model = make_model(cfg);
  if ((res.exit_code = check_model(model, diag))) {
    res.diagnostics = diag.str();
    return res;
  }
  const auto sd = diagonalize(model, cfg.tols);
  const auto set = lindblad_set(sd, cfg.tols);
  const auto l = build_superoperator(set);
  const auto sa = spectral_asymptotics(l, cfg.tols);

  std::ostringstream out;
  out << "stationary subspace dimension = " << sa.peripheral.size() << "\n";
  out << "oscillatory = " << (sa.oscillatory ? "yes" : "no") << "\n";
  if (!sa.oscillatory) {
    const auto rho0 = max_rank_stationary(l);
    if (rho0) {
      out << "maximal rank stationary state:\n";
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
          out << " " << format_num(rho0->m(i, j).real()) << ","
              << format_num(rho0->m(i, j).imag());
        out << "\n";
      }
    } else {
      out << "maximal rank stationary state: none\n";
    }
  }
  res.output = out.str();
  return res;
}

CommandResult cmd_evolve(const ModelConfig& cfg) {
  CommandResult res;
  std::ostringstream diag;
  const auto model = make_model(cfg);
  if ((res.exit_code = check_model(model, diag))) {
    res.diagnostics = diag.str();
    return res;
  }
  const auto sd = diagonalize(model, cfg.tols);
  const auto set = lindblad_set(sd, cfg.tols);
  const auto l = build_superoperator(set);
  const auto init = make_initial(cfg);
  const auto sa = spectral_asymptotics(l, cfg.tols);

  std::optional<DensityMatrix> asym;
  if (!sa.oscillatory && !sa.defective) asym = asymptotic_state(l, sa, init.rho);
  else diag << "oscillatory/defective peripheral spectrum: no asymptote column\n";

  std::ostringstream out;
  out << "t,blochT_x,blochT_y,blochT_z,blochA_x,blochA_y,blochA_z,"
         "purity_joint,trace_dist_to_asymptote\n";
  const int n = std::max(1, cfg.samples);
  const double step = cfg.t_max / n;
  const Mat prop = expm(l.superoperator * step);
  Vec v = vec(init.rho.m);
  for (int k = 0; k <= n; ++k) {
    const Mat rho = unvec(v, 4, 4);
    const auto bt = density_to_bloch(partial_trace_ancilla(rho));
    const auto ba = density_to_bloch(partial_trace_target(rho));
    const double purity = (rho * rho).trace().real();
    out << format_num(k * step) << "," << fmt_bloch(bt) << "," << fmt_bloch(ba) << ","
        << format_num(purity) << ",";
    if (asym) out << format_num(trace_distance(rho, asym->m));
    out << "\n";
    if (k < n) v = prop * v;
  }
  res.output = out.str();
  res.diagnostics = diag.str();
  return res;
}

CommandResult cmd_sweep(const ModelConfig& cfg) {
  CommandResult res;
  std::ostringstream diag;
  if (!cfg.sweep) {
    res.exit_code = 2;
    res.diagnostics = "sweep command requires a [sweep] section\n";
    return res;
  }
  const auto& sw = *cfg.sweep;
  static const std::vector<std::string> known{"P",         "bloch_a_x", "bloch_a_y",
                                             "bloch_a_z", "a",         "b",
                                             "alpha"};
  if (std::find(known.begin(), known.end(), sw.parameter) == known.end()) {
    res.exit_code = 2;
    res.diagnostics = "unknown sweep parameter '" + sw.parameter + "'\n";
    return res;
  }

  std::ostringstream out;
  out << sw.parameter
      << ",oracle_x,oracle_y,oracle_z,formula_x,formula_y,formula_z,deviation\n";
  for (int k = 0; k < sw.steps; ++k) {
    const double value =
        sw.steps == 1 ? sw.from : sw.from + (sw.to - sw.from) * k / (sw.steps - 1);

    double a = cfg.a, b = cfg.b, alpha = cfg.alpha;
    ModelConfig point = cfg;
    if (sw.parameter == "a") a = value;
    else if (sw.parameter == "b") b = value;
    else if (sw.parameter == "alpha") alpha = value;
    else if (sw.parameter == "P") {
      point.initial_type = "entangled";
      point.p = value;
    } else if (sw.parameter == "bloch_a_x") point.bloch_a.x = value;
    else if (sw.parameter == "bloch_a_y") point.bloch_a.y = value;
    else if (sw.parameter == "bloch_a_z") point.bloch_a.z = value;

    const auto model = make_model(point, a, b, alpha);
    if (!model.cp_valid) {
      res.exit_code = 1;
      res.diagnostics = "sweep point " + format_num(value) +
                        ": model is not completely positive\n";
      return res;
    }
    const auto rep = verify_against_oracle(model, make_initial(point), cfg.tols);
    out << format_num(value) << ",";
    if (rep.oscillatory) {
      out << ",,,,,,\n";
      diag << "sweep point " << format_num(value) << ": oscillatory\n";
      continue;
    }
    out << fmt_bloch(rep.bloch_oracle) << ",";
    if (rep.bloch_formula)
      out << fmt_bloch(*rep.bloch_formula) << "," << format_num(*rep.dev_formula);
    else
      out << ",,,";
    out << "\n";
  }
  res.output = out.str();
  res.diagnostics = diag.str();
  return res;
}

CommandResult cmd_verify_paper(const ModelConfig& cfg) {
  CommandResult res;
  std::ostringstream diag;
  const auto model = make_model(cfg);
  if ((res.exit_code = check_model(model, diag))) {
    res.diagnostics = diag.str();
    return res;
  }
  std::ostringstream out;

  out << "== configured initial state ==\n";
  describe_report(verify_against_oracle(model, make_initial(cfg), cfg.tols), out);

  out << "== maximally mixed initial state ==\n";
  describe_report(
      verify_against_oracle(model, InitialState::raw(identity(4) / 4.0), cfg.tols), out);

  out << "== entangled initial state, P = " << format_num(cfg.p) << " ==\n";
  describe_report(verify_against_oracle(model, InitialState::entangled(cfg.p), cfg.tols),
                  out);

  res.output = out.str();
  res.diagnostics = diag.str();
  res.exit_code = 0;  // deviations are findings, not failures
  return res;
}

CommandResult run_command(const std::string& name, const ModelConfig& cfg) {
  if (name == "validate") return cmd_validate(cfg);
  if (name == "classify") return cmd_classify(cfg);
  if (name == "stationary") return cmd_stationary(cfg);
  if (name == "evolve") return cmd_evolve(cfg);
  if (name == "sweep") return cmd_sweep(cfg);
  if (name == "verify-paper") return cmd_verify_paper(cfg);
  CommandResult res;
  res.exit_code = 2;
  res.diagnostics = "unknown command '" + name + "'\n";
  return res;
}

}  // namespace qsd
