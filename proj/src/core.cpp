#include "qsd/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsd {

Mat pauli(int k) {
  Mat s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0); break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

Mat identity(int n) { return Mat::Identity(n, n); }

Mat local_op(int i) {
  if (i >= 1 && i <= 3) return kron(pauli(i), identity(2));
  if (i >= 4 && i <= 6) return kron(identity(2), pauli(i - 3));
  throw std::invalid_argument("local_op: index must be in 1..6");
}

Mat kron(const Mat& m1, const Mat& m2) {
  const Eigen::Index r1 = m1.rows(), c1 = m1.cols();
  const Eigen::Index r2 = m2.rows(), c2 = m2.cols();
  Mat out(r1 * r2, c1 * c2);
  for (Eigen::Index i = 0; i < r1; ++i)
    for (Eigen::Index j = 0; j < c1; ++j)
      out.block(i * r2, j * c2, r2, c2) = m1(i, j) * m2;
  return out;
}

cplx hs_inner(const Mat& x, const Mat& y) { return (x.adjoint() * y).trace(); }

double herm_defect(const Mat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Vec vec(const Mat& m) {
  Vec v(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

Mat unvec(const Vec& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw std::invalid_argument("unvec: size mismatch");
  Mat m(rows, cols);
  Eigen::Index k = 0;
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = v(k++);
  return m;
}

DensityMatrix DensityMatrix::from(const Mat& m, const Tolerances& tols, double slack) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  std::ostringstream err;
  if (herm_defect(m) > tols.hermiticity * slack) {
    err << "DensityMatrix: Hermiticity defect " << herm_defect(m);
    throw std::invalid_argument(err.str());
  }
  const double tr_dev = std::abs(m.trace() - cplx(1.0));
  if (tr_dev > tols.trace * slack) {
    err << "DensityMatrix: trace deviation " << tr_dev;
    throw std::invalid_argument(err.str());
  }
  DensityMatrix rho{(m + m.adjoint()) / 2.0};
  const double min_ev = rho.min_eigenvalue();
  if (min_ev < -tols.psd_slack * slack) {
    err << "DensityMatrix: negative eigenvalue " << min_ev;
    throw std::invalid_argument(err.str());
  }
  return rho;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix partial_trace_ancilla(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("partial_trace_ancilla: dimension must be 4");
  return DensityMatrix{partial_trace_ancilla(rho.m)};
}

Mat partial_trace_ancilla(const Mat& rho4) {
  if (rho4.rows() != 4 || rho4.cols() != 4)
    throw std::invalid_argument("partial_trace_ancilla: dimension must be 4");
  Mat out = Mat::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += rho4(2 * i + k, 2 * j + k);
  return out;
}

Mat partial_trace_target(const Mat& rho4) {
  if (rho4.rows() != 4 || rho4.cols() != 4)
    throw std::invalid_argument("partial_trace_target: dimension must be 4");
  Mat out = Mat::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += rho4(2 * k + i, 2 * k + j);
  return out;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityMatrix bloch_to_density(const BlochVector& v) {
  if (v.norm() > 1.0 + 1e-10)
    throw std::invalid_argument("bloch_to_density: norm exceeds 1");
  Mat m = 0.5 * (identity(2) + v.x * pauli(1) + v.y * pauli(2) + v.z * pauli(3));
  return DensityMatrix{m};
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  return density_to_bloch(rho.m);
}

BlochVector density_to_bloch(const Mat& rho2) {
  if (rho2.rows() != 2 || rho2.cols() != 2)
    throw std::invalid_argument("density_to_bloch: dimension must be 2");
  BlochVector v;
  v.x = (pauli(1) * rho2).trace().real();
  v.y = (pauli(2) * rho2).trace().real();
  v.z = (pauli(3) * rho2).trace().real();
  return v;
}

namespace {

// Rotate the first component with magnitude above `eps` real positive.
void fix_phase(Eigen::Ref<Vec> v, double eps = 1e-9) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > eps) {
      v *= std::conj(v(i)) / a;
      return;
    }
  }
}

bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

HermitianEig hermitian_eig(const Mat& m, const Tolerances& tols) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eig: matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (herm_defect(m) > tols.hermiticity * scale)
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es((m + m.adjoint()) / 2.0);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: solver failed");

  const Eigen::Index n = m.rows();
  std::vector<Vec> cols(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    cols[i] = es.eigenvectors().col(i);
    fix_phase(cols[i]);
  }
  Eigen::VectorXd vals = es.eigenvalues();

  // Deterministic tie-breaking inside (near-)degenerate groups.
  const double tie = 1e-12 * std::max(1.0, vals.cwiseAbs().maxCoeff());
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && vals(end) - vals(start) <= tie) ++end;
    std::sort(cols.begin() + start, cols.begin() + end, lex_less);
    start = end;
  }

  HermitianEig out;
  out.eigenvalues = vals;
  out.u.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out.u.row(i) = cols[i].adjoint();
  return out;
}

Mat expm(const Mat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("expm: matrix must be square");
  const Eigen::Index n = m.rows();
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Mat t = m / std::pow(2.0, squarings);

  Mat sum = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = term * t / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

std::vector<Vec> null_space(const Mat& m, double tol) {
  if (tol <= 0) throw std::invalid_argument("null_space: tol must be positive");
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<Vec> basis;
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (smax == 0.0 || s < tol * smax) basis.push_back(svd.matrixV().col(i));
  }
  for (auto& v : basis) fix_phase(v);
  return basis;
}

double trace_distance(const Mat& a, const Mat& b) {
  Eigen::SelfAdjointEigenSolver<Mat> es((a - b + (a - b).adjoint()) / 2.0,
                                        Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace qsd
