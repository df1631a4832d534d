#include "qsd/commutant.hpp"

namespace qsd {

Mat omega_plus() {
  Mat o = Mat::Zero(4, 4);
  for (int k = 1; k <= 3; ++k) o += kron(pauli(k), pauli(k));
  return o;
}

Mat pi_k(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("pi_k: index must be in 1..4");
  Mat p = Mat::Zero(4, 4);
  p(k - 1, k - 1) = 1.0;
  return p;
}

Mat pi_minus() { return 0.25 * (identity(4) - omega_plus()); }

Mat pi_plus() { return identity(4) - pi_minus(); }

OperatorAlgebra orthonormalize(const std::vector<Mat>& span, const std::string& label) {
  OperatorAlgebra alg;
  alg.label = label;
  if (span.empty()) return alg;
  const int d2 = static_cast<int>(span[0].size());
  Mat cols(d2, static_cast<int>(span.size()));
  for (size_t i = 0; i < span.size(); ++i) cols.col(static_cast<int>(i)) = vec(span[i]);

  // Modified Gram-Schmidt with a rank cutoff.
  std::vector<Vec> kept;
  const double cutoff = 1e-10 * cols.cwiseAbs().maxCoeff();
  for (int i = 0; i < cols.cols(); ++i) {
    Vec v = cols.col(i);
    for (const auto& q : kept) v -= q.dot(v) * q;
    for (const auto& q : kept) v -= q.dot(v) * q;  // second pass
    const double n = v.norm();
    if (n > cutoff) kept.push_back(v / n);
  }
  const int d = static_cast<int>(std::sqrt(static_cast<double>(d2)) + 0.5);
  for (const auto& q : kept) alg.basis.push_back(unvec(q, d, d));
  return alg;
}

OperatorAlgebra numerical_commutant(const std::vector<Mat>& generators,
                                    const std::string& label,
                                    const Tolerances& tols) {
  if (generators.empty())
    throw std::invalid_argument("numerical_commutant: empty generator list");
  const int d = static_cast<int>(generators[0].rows());
  const int d2 = d * d;
  const Mat id = identity(d);

  // Stack commutator superoperators for every generator and its adjoint.
  Mat stacked(2 * static_cast<int>(generators.size()) * d2, d2);
  int row = 0;
  for (const auto& g : generators) {
    stacked.block(row, 0, d2, d2) = kron(id, g) - kron(g.transpose(), id);
    row += d2;
    const Mat ga = g.adjoint();
    stacked.block(row, 0, d2, d2) = kron(id, ga) - kron(ga.transpose(), id);
    row += d2;
  }
  OperatorAlgebra alg;
  alg.label = label;
  for (const auto& v : null_space(stacked, tols.null_space))
    alg.basis.push_back(unvec(v, d, d));
  return alg;
}

OperatorAlgebra commutant_M(const LindbladOperatorSet& set, const Tolerances& tols) {
  if (set.entries.empty()) {
    // No dissipators: everything commutes.
    std::vector<Mat> units;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Mat e = Mat::Zero(4, 4);
        e(i, j) = 1.0;
        units.push_back(e);
      }
    return orthonormalize(units, "M");
  }
  std::vector<Mat> gens;
  for (const auto& e : set.entries) gens.push_back(e.v);
  return numerical_commutant(gens, "M", tols);
}

OperatorAlgebra center(const OperatorAlgebra& m, const OperatorAlgebra& m_prime,
                       const Tolerances& tols) {
  const int d2 = 16;
  Mat pm = Mat::Zero(d2, d2), pp = Mat::Zero(d2, d2);
  for (const auto& b : m.basis) {
    const Vec v = vec(b);
    pm += v * v.adjoint();
  }
  for (const auto& b : m_prime.basis) {
    const Vec v = vec(b);
    pp += v * v.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(pm + pp);
  OperatorAlgebra z;
  z.label = "Z";
  for (Eigen::Index i = 0; i < d2; ++i) {
    if (es.eigenvalues()(i) >= 2.0 - tols.span_defect)
      z.basis.push_back(unvec(es.eigenvectors().col(i), 4, 4));
  }
  return z;
}

OperatorAlgebra analytic_commutant_plus(const Mat& sigma, const Involution& inv) {
  const Mat i2 = identity(2);
  const bool hermitian = herm_defect(sigma) <= 1e-10;
  if (!hermitian) {
    return orthonormalize({identity(4), omega_plus()}, "analytic-plus");
  }
  const Mat r2 = kron(inv.r, inv.r);
  const Mat delta_minus = r2 * (kron(pauli(1), pauli(2)) - kron(pauli(2), pauli(1))) * r2;
  return orthonormalize({identity(4), kron(i2, sigma), kron(sigma, i2),
                         kron(sigma, sigma), omega_plus(), delta_minus},
                        "analytic-plus");
}

OperatorAlgebra analytic_commutant_minus(const Mat& sigma, const Involution& inv) {
  const Mat i2 = identity(2);
  const bool hermitian = herm_defect(sigma) <= 1e-10;
  if (!hermitian) {
    return orthonormalize({identity(4)}, "analytic-minus");
  }
  const Mat s2 = kron(inv.r, inv.r);
  const Mat omega_minus = s2 * (kron(pauli(1), pauli(1)) - kron(pauli(2), pauli(2))) * s2;
  const Mat delta_plus = s2 * (kron(pauli(1), pauli(2)) + kron(pauli(2), pauli(1))) * s2;
  return orthonormalize({identity(4), kron(i2, sigma), kron(sigma, i2),
                         kron(sigma, sigma), omega_minus, delta_plus},
                        "analytic-minus");
}

SpanComparison span_equal(const OperatorAlgebra& x, const OperatorAlgebra& y,
                          const Tolerances& tols) {
  SpanComparison cmp;
  const int d2 = 16;
  auto projector = [&](const OperatorAlgebra& a) {
    Mat p = Mat::Zero(d2, d2);
    for (const auto& b : a.basis) {
      const Vec v = vec(b);
      p += v * v.adjoint();
    }
    return p;
  };
  const Mat px = projector(x), py = projector(y);
  double defect = 0;
  for (const auto& b : x.basis) {
    const Vec v = vec(b);
    defect = std::max(defect, (v - py * v).norm());
  }
  for (const auto& b : y.basis) {
    const Vec v = vec(b);
    defect = std::max(defect, (v - px * v).norm());
  }
  cmp.max_defect = defect;
  cmp.equal = defect <= tols.span_defect;
  return cmp;
}

}  // namespace qsd
