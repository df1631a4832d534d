#include "qsd/classifier.hpp"

#include <cmath>

namespace qsd {

std::string to_string(Case c) {
  switch (c) {
    case Case::case1: return "Case1";
    case Case::case2: return "Case2";
    case Case::case3: return "Case3";
    case Case::trivial: return "Trivial";
  }
  return "?";
}

InitialState InitialState::product(const BlochVector& t, const BlochVector& a) {
  InitialState s;
  s.variant = Variant::product;
  s.bloch_t = t;
  s.bloch_a = a;
  s.rho = DensityMatrix{kron(bloch_to_density(t).m, bloch_to_density(a).m)};
  return s;
}

InitialState InitialState::entangled(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("InitialState::entangled: P must be in [0,1]");
  InitialState s;
  s.variant = Variant::entangled;
  s.p = p;
  Vec psi = Vec::Zero(4);
  psi(0) = std::sqrt(p);
  psi(3) = std::sqrt(1.0 - p);
  s.rho = DensityMatrix{psi * psi.adjoint()};
  return s;
}

InitialState InitialState::raw(const Mat& rho4) {
  InitialState s;
  s.variant = Variant::raw;
  s.rho = DensityMatrix::from(rho4, default_tols(), 1e2);
  return s;
}

namespace {

int distinguished_index(const Eigen::Vector3d& lambda, double threshold) {
  for (int i = 0; i < 3; ++i)
    if (lambda(i) > threshold) return i + 1;
  return 0;
}

}  // namespace

CaseClassification classify(const KossakowskiModel& model,
                            const StructuredDiagonalization& diag,
                            const Tolerances& tols) {
  CaseClassification c;
  c.n_plus = diag.n_plus;
  c.n_minus = diag.n_minus;
  const double scale = std::max(1.0, model.a.norm());
  const double tol = 1e-10 * scale;

  c.res_a_sym = (model.a - model.a.transpose()).norm();
  c.res_b_eq_a = (model.b - model.a).norm();
  const double a2 = model.a.squaredNorm();
  c.alpha = a2 > 0 ? hs_inner(model.a, model.b).real() / a2 : 0.0;
  c.res_b_alpha = (model.b - c.alpha * model.a).norm();

  const bool a_sym = c.res_a_sym <= tol;
  if (c.res_b_eq_a <= tol) {
    if (c.n_plus == 0) {
      c.kind = Case::trivial;  // zero generator
    } else if (c.n_plus == 1 && a_sym) {
      c.kind = Case::case1;
      c.xi = distinguished_index(diag.lambda_plus, diag.zero_threshold);
    } else {
      c.kind = Case::case2;
    }
    return c;
  }
  if (a_sym && c.res_b_alpha <= tol && std::abs(std::abs(c.alpha) - 1.0) > 1e-10 &&
      c.n_plus == 1 && c.n_minus == 1) {
    c.kind = Case::case3;
    c.xi = distinguished_index(diag.lambda_plus, diag.zero_threshold);
    return c;
  }
  c.kind = Case::trivial;
  return c;
}

namespace {

const LindbladEntry& find_plus_entry(const LindbladOperatorSet& set, int xi) {
  for (const auto& e : set.entries)
    if (e.kind == LindbladKind::plus && e.index == xi) return e;
  throw std::runtime_error("projectors_for: distinguished plus entry not found");
}

}  // namespace

ProjectorFamily projectors_for(const CaseClassification& c,
                               const LindbladOperatorSet& set) {
  ProjectorFamily fam;
  fam.provenance = c.kind;
  switch (c.kind) {
    case Case::case2:
      fam.projectors = {pi_minus(), pi_plus()};
      return fam;
    case Case::case1:
    case Case::case3: {
      const auto& e = find_plus_entry(set, c.xi);
      if (!e.involution)
        throw std::runtime_error(
            "projectors_for: singular effective Pauli, no involution available");
      const Mat r2 = kron(e.involution->r, e.involution->r);
      if (c.kind == Case::case1) {
        fam.projectors = {r2 * pi_k(1) * r2, r2 * pi_k(4) * r2,
                          r2 * (pi_k(2) + pi_k(3)) * r2};
      } else {
        for (int j = 1; j <= 4; ++j) fam.projectors.push_back(r2 * pi_k(j) * r2);
      }
      return fam;
    }
    case Case::trivial:
      throw std::invalid_argument("projectors_for: trivial case has no projector family");
  }
  return fam;
}

std::optional<DensityMatrix> max_rank_stationary(const LiouvilleOperator& l) {
  const auto sa = spectral_asymptotics(l);
  const DensityMatrix mixed{identity(4) / 4.0};
  const DensityMatrix cand = asymptotic_state(l, sa, mixed);  // throws if oscillatory
  const double residual = (l.superoperator * vec(cand.m)).norm();
  if (residual > 1e-9) return std::nullopt;
  if (cand.min_eigenvalue() <= 1e-8) return std::nullopt;
  return cand;
}

DensityMatrix theorem_asymptotic(const ProjectorFamily& family,
                                 const std::optional<DensityMatrix>& rho0,
                                 const DensityMatrix& rho_init, TheoremBranch branch) {
  Mat out = Mat::Zero(4, 4);
  if (branch == TheoremBranch::b2ii) {
    for (const auto& p : family.projectors) out += p * rho_init.m * p;
  } else {
    if (!rho0)
      throw std::invalid_argument("theorem_asymptotic: branch 2.i requires rho0");
    for (const auto& p : family.projectors) {
      const double w = (p * rho_init.m * p).trace().real();
      const double denom = (p * rho0->m * p).trace().real();
      if (denom <= 1e-14)
        throw std::runtime_error("theorem_asymptotic: vanishing denominator in 2.i");
      out += w * (p * rho0->m * p) / denom;
    }
  }
  return DensityMatrix::from(out, default_tols(), 1e3);
}

BlochVector formula_case13(const Eigen::Vector3d& u, const BlochVector& bt) {
  const double s = bt.x * u(0) - bt.y * u(1) + bt.z * u(2);
  return BlochVector{u(0) * s, -u(1) * s, u(2) * s};
}

BlochVector formula_case13(const Eigen::Vector3d& u, double p) {
  const double f = 2.0 * p - 1.0;
  return BlochVector{f * u(0) * u(2), -f * u(1) * u(2), f * u(2) * u(2)};
}

namespace {

Case2Formula case2_formula(double a, double b, double z_factor) {
  if (a <= 0 || a * a < b * b)
    throw std::invalid_argument("formula_case2_example: requires a > 0 and a^2 >= b^2");
  Case2Formula f;
  f.tau = a * b / (3.0 * a * a + 2.0 * b * b);  // as printed
  f.bloch = BlochVector{0.0, 0.0, f.tau * z_factor};
  return f;
}

}  // namespace

Case2Formula formula_case2_example(double a, double b, const BlochVector& bt,
                                   const BlochVector& ba) {
  const double dot = bt.x * ba.x + bt.y * ba.y + bt.z * ba.z;
  return case2_formula(a, b, 3.0 + dot);
}

Case2Formula formula_case2_example(double a, double b, double p) {
  return case2_formula(a, b, 4.0 * (1.0 + std::sqrt(p * (1.0 - p))));
}

namespace {

// Recognizes the worked-example block pattern [[a, ib, 0], [-ib, a, 0], [0, 0, a]].
std::optional<std::pair<double, double>> match_example_block(const Mat& a) {
  const double eps = 1e-10 * std::max(1.0, a.cwiseAbs().maxCoeff());
  const double av = a(0, 0).real();
  const double bv = a(0, 1).imag();
  Mat ref(3, 3);
  ref << av, cplx(0, bv), 0, cplx(0, -bv), av, 0, 0, 0, av;
  if ((a - ref).cwiseAbs().maxCoeff() > eps) return std::nullopt;
  return std::make_pair(av, bv);
}

double bloch_dev(const BlochVector& a, const BlochVector& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace

AsymptoticReport verify_against_oracle(const KossakowskiModel& model,
                                       const InitialState& init,
                                       const Tolerances& tols) {
  AsymptoticReport rep;
  const auto diag = diagonalize(model, tols);
  const auto set = lindblad_set(diag, tols);
  const auto l = build_superoperator(set);
  rep.classification = classify(model, diag, tols);

  const auto m_alg = commutant_M(set, tols);
  const auto m_prime = m_alg.basis.empty()
                           ? OperatorAlgebra{"Mprime", {}}
                           : numerical_commutant(
                                 std::vector<Mat>(m_alg.basis.begin(), m_alg.basis.end()),
                                 "Mprime", tols);
  const auto z_alg = center(m_alg, m_prime, tols);
  rep.dim_m = m_alg.dim();
  rep.dim_m_prime = m_prime.dim();
  rep.dim_z = z_alg.dim();

  const auto sa = spectral_asymptotics(l, tols);
  if (sa.oscillatory) {
    rep.oscillatory = true;
    return rep;
  }

  const DensityMatrix oracle = asymptotic_state(l, sa, init.rho);
  rep.rho_inf_oracle = oracle.m;
  rep.bloch_oracle = density_to_bloch(partial_trace_ancilla(oracle));

  auto rho0 = max_rank_stationary(l);
  if (rho0) rep.rho0 = rho0->m;

  if (rep.classification.kind != Case::trivial) {
    try {
      const auto fam = projectors_for(rep.classification, set);
      const DensityMatrix mixed{identity(4) / 4.0};
      switch (rep.classification.kind) {
        case Case::case1: {
          const auto th = theorem_asymptotic(fam, std::nullopt, init.rho, TheoremBranch::b2ii);
          rep.theorem_2ii = th.m;
          rep.dev_theorem_2ii = (th.m - oracle.m).norm();
          break;
        }
        case Case::case3: {
          const auto th = theorem_asymptotic(fam, mixed, init.rho, TheoremBranch::b2i);
          rep.theorem_2i = th.m;
          rep.dev_theorem_2i = (th.m - oracle.m).norm();
          break;
        }
        case Case::case2: {
          const auto th2 = theorem_asymptotic(fam, std::nullopt, init.rho, TheoremBranch::b2ii);
          rep.theorem_2ii = th2.m;
          rep.dev_theorem_2ii = (th2.m - oracle.m).norm();
          if (rho0) {
            const auto th1 = theorem_asymptotic(fam, rho0, init.rho, TheoremBranch::b2i);
            rep.theorem_2i = th1.m;
            rep.dev_theorem_2i = (th1.m - oracle.m).norm();
          }
          break;
        }
        default: break;
      }
    } catch (const std::exception&) {
      // Singular effective Pauli: no analytic projector family; the oracle
      // result stands alone.
    }
  } else if (rho0) {
    // Part 1: the unique stationary state is the prediction for every input.
    rep.theorem_2i = rho0->m;
    rep.dev_theorem_2i = (rho0->m - oracle.m).norm();
  }

  // Closed-form Bloch formulas, where available.
  const auto kind = rep.classification.kind;
  if ((kind == Case::case1 || kind == Case::case3) && rep.classification.xi > 0) {
    const Eigen::Vector3d u_row =
        diag.u_tilde.row(rep.classification.xi - 1).real().transpose();
    if (init.variant == InitialState::Variant::product)
      rep.bloch_formula = formula_case13(u_row, init.bloch_t);
    else if (init.variant == InitialState::Variant::entangled)
      rep.bloch_formula = formula_case13(u_row, init.p);
  } else if (kind == Case::case2) {
    if (const auto ab = match_example_block(model.a)) {
      if (init.variant == InitialState::Variant::product) {
        const auto f = formula_case2_example(ab->first, ab->second, init.bloch_t, init.bloch_a);
        rep.bloch_formula = f.bloch;
        rep.tau = f.tau;
      } else if (init.variant == InitialState::Variant::entangled) {
        const auto f = formula_case2_example(ab->first, ab->second, init.p);
        rep.bloch_formula = f.bloch;
        rep.tau = f.tau;
      }
    }
  }
  if (rep.bloch_formula)
    rep.dev_formula = bloch_dev(*rep.bloch_formula, rep.bloch_oracle);
  return rep;
}

}  // namespace qsd
