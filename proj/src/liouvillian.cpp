#include "qsd/liouvillian.hpp"

#include <cmath>

namespace qsd {

Mat generator_action(const LindbladOperatorSet& set, const Mat& rho) {
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const auto& e : set.entries) {
    const Mat vdv = e.v.adjoint() * e.v;
    out += e.v * rho * e.v.adjoint() - 0.5 * (vdv * rho + rho * vdv);
  }
  return out;
}

Mat generator_matrix_action(const Mat& c6, const Mat& rho) {
  if (c6.rows() != 6 || c6.cols() != 6)
    throw std::invalid_argument("generator_matrix_action: C must be 6x6");
  Mat out = Mat::Zero(4, 4);
  for (int i = 0; i < 6; ++i) {
    const Mat fi = local_op(i + 1);
    for (int j = 0; j < 6; ++j) {
      if (c6(i, j) == cplx(0.0)) continue;
      const Mat fj = local_op(j + 1);
      const Mat ff = fi * fj;
      out += c6(i, j) * (fj * rho * fi - 0.5 * (ff * rho + rho * ff));
    }
  }
  return out;
}

LiouvilleOperator build_superoperator(const LindbladOperatorSet& set,
                                      const Mat& hamiltonian) {
  LiouvilleOperator l;
  l.dim = 4;
  const int d2 = l.dim * l.dim;
  l.superoperator = Mat::Zero(d2, d2);
  const Mat id = identity(l.dim);
  for (const auto& e : set.entries) {
    const Mat vdv = e.v.adjoint() * e.v;
    l.superoperator += kron(e.v.conjugate(), e.v) -
                       0.5 * (kron(id, vdv) + kron(vdv.transpose(), id));
    l.max_rate = std::max(l.max_rate, e.lambda);
  }
  if (hamiltonian.size() > 0) {
    l.hamiltonian = hamiltonian;
    l.superoperator += cplx(0, -1) * (kron(id, hamiltonian) -
                                      kron(hamiltonian.transpose(), id));
  } else {
    l.hamiltonian = Mat::Zero(l.dim, l.dim);
  }
  return l;
}

namespace {

DensityMatrix revalidate(const Mat& m, double slack) {
  Tolerances relaxed = default_tols();
  return DensityMatrix::from(m, relaxed, slack);
}

}  // namespace

DensityMatrix evolve(const LiouvilleOperator& l, const DensityMatrix& rho0, double t) {
  if (t < 0) throw std::invalid_argument("evolve: t must be nonnegative");
  const Vec v = expm(l.superoperator * t) * vec(rho0.m);
  // 1e-8 absolute slack relative to the 1e-12-scale base tolerances
  return revalidate(unvec(v, l.dim, l.dim), 1e4);
}

DensityMatrix evolve_rk(const LindbladOperatorSet& set, const DensityMatrix& rho0,
                        double t, double dt) {
  if (dt <= 0) throw std::invalid_argument("evolve_rk: dt must be positive");
  const double steps_d = std::ceil(t / dt - 1e-12);
  if (steps_d > 2e7) throw std::invalid_argument("evolve_rk: step count overflow");
  const long steps = std::max(0L, static_cast<long>(steps_d));
  Mat rho = rho0.m;
  double time = 0;
  for (long s = 0; s < steps; ++s) {
    const double h = std::min(dt, t - time);
    const Mat k1 = generator_action(set, rho);
    const Mat k2 = generator_action(set, rho + 0.5 * h * k1);
    const Mat k3 = generator_action(set, rho + 0.5 * h * k2);
    const Mat k4 = generator_action(set, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    time += h;
  }
  return revalidate(rho, 1e4);
}

SpectralAsymptotics spectral_asymptotics(const LiouvilleOperator& l,
                                         const Tolerances& tols) {
  SpectralAsymptotics sa;
  Eigen::ComplexEigenSolver<Mat> es(l.superoperator, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectral_asymptotics: eigensolver failed");
  sa.eigenvalues = es.eigenvalues();

  const double scale = std::max(1.0, l.max_rate);
  sa.threshold = tols.peripheral * scale;
  for (Eigen::Index i = 0; i < sa.eigenvalues.size(); ++i) {
    if (std::abs(sa.eigenvalues(i).real()) <= sa.threshold) {
      sa.peripheral.push_back(static_cast<int>(i));
      if (std::abs(sa.eigenvalues(i).imag()) > sa.threshold) sa.oscillatory = true;
    }
  }
  if (sa.oscillatory) return sa;

  // Non-oscillatory peripheral spectrum: the asymptotic projection pairs the
  // right and left kernels of the superoperator.
  const auto right = null_space(l.superoperator, tols.null_space);
  const auto left = null_space(l.superoperator.adjoint(), tols.null_space);
  if (right.size() != left.size() || right.size() != sa.peripheral.size()) {
    sa.defective = true;
    return sa;
  }
  const int k = static_cast<int>(right.size());
  const int d2 = static_cast<int>(l.superoperator.rows());
  Mat nr(d2, k), nl(d2, k);
  for (int i = 0; i < k; ++i) {
    nr.col(i) = right[i];
    nl.col(i) = left[i];
  }
  const Mat g = nl.adjoint() * nr;
  Eigen::JacobiSVD<Mat> svd(g);
  if (svd.singularValues().minCoeff() < 1e-10) {
    sa.defective = true;  // Jordan structure on the peripheral eigenvalue
    return sa;
  }
  sa.projection = nr * g.inverse() * nl.adjoint();
  return sa;
}

DensityMatrix asymptotic_state(const LiouvilleOperator& l, const SpectralAsymptotics& sa,
                               const DensityMatrix& rho0) {
  if (sa.oscillatory)
    throw std::runtime_error("asymptotic_state: oscillatory peripheral spectrum, no limit");
  if (sa.defective)
    throw std::runtime_error("asymptotic_state: defective peripheral eigenvalue");
  const Vec v = sa.projection * vec(rho0.m);
  Mat m = unvec(v, l.dim, l.dim);
  m = (m + m.adjoint()) / 2.0;
  m /= m.trace().real();
  return revalidate(m, 1e4);
}

DensityMatrix asymptotic_state(const LiouvilleOperator& l, const DensityMatrix& rho0) {
  return asymptotic_state(l, spectral_asymptotics(l), rho0);
}

}  // namespace qsd
