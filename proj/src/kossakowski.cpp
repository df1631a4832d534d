#include "qsd/kossakowski.hpp"

#include <cmath>
#include <sstream>

namespace qsd {

KossakowskiModel assemble(const Mat& a, const Mat& b, const Tolerances& tols) {
  if (a.rows() != 3 || a.cols() != 3 || b.rows() != 3 || b.cols() != 3)
    throw std::invalid_argument("assemble: blocks must be 3x3");
  for (const auto* blk : {&a, &b}) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double d = std::abs((*blk)(i, j) - std::conj((*blk)(j, i)));
        if (d > tols.hermiticity * std::max(1.0, blk->cwiseAbs().maxCoeff())) {
          std::ostringstream err;
          err << "assemble: block " << (blk == &a ? "A" : "B")
              << " is not Hermitian at (" << i << "," << j << "), defect " << d;
          throw std::invalid_argument(err.str());
        }
      }
  }
  KossakowskiModel m;
  m.a = a;
  m.b = b;
  m.c.resize(6, 6);
  m.c.block(0, 0, 3, 3) = a;
  m.c.block(0, 3, 3, 3) = b;
  m.c.block(3, 0, 3, 3) = b.adjoint();
  m.c.block(3, 3, 3, 3) = a;
  Eigen::SelfAdjointEigenSolver<Mat> es((m.c + m.c.adjoint()) / 2.0,
                                        Eigen::EigenvaluesOnly);
  m.min_eigenvalue = es.eigenvalues().minCoeff();
  const double scale = std::max(1.0, m.c.cwiseAbs().maxCoeff());
  m.cp_valid = m.min_eigenvalue >= -tols.psd_slack * scale;
  return m;
}

StructuredDiagonalization diagonalize(const KossakowskiModel& model,
                                      const Tolerances& tols) {
  StructuredDiagonalization d;
  const HermitianEig plus = hermitian_eig(model.a + model.b, tols);
  const HermitianEig minus = hermitian_eig(model.a - model.b, tols);
  d.u_tilde = plus.u;
  d.u_hat = minus.u;
  d.lambda_plus = plus.eigenvalues;
  d.lambda_minus = minus.eigenvalues;

  d.u.resize(6, 6);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  d.u.block(0, 0, 3, 3) = inv_sqrt2 * d.u_tilde;
  d.u.block(0, 3, 3, 3) = inv_sqrt2 * d.u_tilde;
  d.u.block(3, 0, 3, 3) = -inv_sqrt2 * d.u_hat;
  d.u.block(3, 3, 3, 3) = inv_sqrt2 * d.u_hat;

  const double max_abs =
      std::max(d.lambda_plus.cwiseAbs().maxCoeff(), d.lambda_minus.cwiseAbs().maxCoeff());
  d.zero_threshold = tols.zero_eig_rel * max_abs;
  for (int i = 0; i < 3; ++i) {
    if (d.lambda_plus(i) > d.zero_threshold) ++d.n_plus;
    if (d.lambda_minus(i) > d.zero_threshold) ++d.n_minus;
  }
  return d;
}

namespace {

Mat sigma_from_row(const Mat& u_row3) {
  Mat s = Mat::Zero(2, 2);
  for (int k = 0; k < 3; ++k) s += u_row3(0, k) * pauli(k + 1);
  return s;
}

LindbladEntry make_entry(LindbladKind kind, int index, double lambda,
                         const Mat& u_row3, const Tolerances& tols) {
  LindbladEntry e;
  e.kind = kind;
  e.index = index;
  e.lambda = lambda;
  e.sigma = sigma_from_row(u_row3);
  e.sigma_hermitian = herm_defect(e.sigma) <= 1e-10;
  const Mat i2 = identity(2);
  const double sign = (kind == LindbladKind::plus) ? 1.0 : -1.0;
  e.v = std::sqrt(lambda / 2.0) * (kron(i2, e.sigma) + sign * kron(e.sigma, i2));
  e.involution = involution_decompose(e.sigma);
  (void)tols;
  return e;
}

}  // namespace

LindbladOperatorSet lindblad_set(const StructuredDiagonalization& diag,
                                 const Tolerances& tols) {
  LindbladOperatorSet set;
  for (int i = 0; i < 3; ++i) {
    if (diag.lambda_plus(i) > diag.zero_threshold)
      set.entries.push_back(make_entry(LindbladKind::plus, i + 1,
                                       diag.lambda_plus(i), diag.u_tilde.row(i), tols));
  }
  for (int i = 0; i < 3; ++i) {
    if (diag.lambda_minus(i) > diag.zero_threshold)
      set.entries.push_back(make_entry(LindbladKind::minus, i + 1,
                                       diag.lambda_minus(i), diag.u_hat.row(i), tols));
  }
  return set;
}

std::optional<Involution> involution_decompose(const Mat& sigma) {
  if (sigma.rows() != 2 || sigma.cols() != 2)
    throw std::invalid_argument("involution_decompose: matrix must be 2x2");
  if (std::abs(sigma.trace()) > 1e-10 * std::max(1.0, sigma.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("involution_decompose: matrix must be traceless");

  Eigen::Vector3cd c;
  for (int k = 0; k < 3; ++k) c(k) = (pauli(k + 1) * sigma).trace() / 2.0;
  const cplx mu2 = c(0) * c(0) + c(1) * c(1) + c(2) * c(2);
  const double scale = c.cwiseAbs().squaredNorm();
  if (scale == 0.0 || std::abs(mu2) < 1e-12 * scale) return std::nullopt;

  const cplx mu = std::sqrt(mu2);
  const Eigen::Vector3cd n = c / mu;

  // Reflection through the bisector of e3 and n maps sigma_3 onto sigma/mu.
  Mat r;
  const cplx gamma2 = 2.0 + 2.0 * n(2);
  if (std::abs(gamma2) < 1e-12) {
    r = pauli(1);  // n = -e3: any equatorial reflection works
  } else {
    const cplx gamma = std::sqrt(gamma2);
    Eigen::Vector3cd m3 = n;
    m3(2) += 1.0;
    m3 /= gamma;
    r = Mat::Zero(2, 2);
    for (int k = 0; k < 3; ++k) r += m3(k) * pauli(k + 1);
  }
  return Involution{mu, r};
}

}  // namespace qsd
