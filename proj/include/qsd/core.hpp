#pragma once

// Dense complex matrix kernel for two-qubit open-system computations.
// All dimensions are small (<= 16); everything is computed densely and
// deterministically.

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qsd {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec3 = Eigen::Vector3d;

// Centralized numerical tolerances.
struct Tolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double psd_slack = 1e-10;
  double zero_eig_rel = 1e-10;   // relative cutoff for "vanishing" rates
  double peripheral = 1e-9;      // peripheral-spectrum threshold (relative)
  double span_defect = 1e-8;     // subspace comparison defect
  double null_space = 1e-9;      // relative singular value cutoff
};

inline const Tolerances& default_tols() {
  static const Tolerances t{};
  return t;
}

// --- Pauli / local operator basis ------------------------------------------
//
// Convention: the Pauli matrices are kept unnormalized (Tr sigma_i sigma_j =
// 2 delta_ij) and the local two-qubit operators F_1..F_6 are plain tensor
// products (trace inner product 4 delta_ij). The first tensor factor is the
// target qubit, the second the ancilla.

Mat pauli(int k);          // k = 1,2,3; sigma_3 diagonal
Mat identity(int n);
Mat local_op(int i);       // F_i: sigma_i (x) I for i=1..3, I (x) sigma_{i-3} for i=4..6

Mat kron(const Mat& m1, const Mat& m2);

// Hilbert-Schmidt inner product <X, Y> = Tr(X^dag Y).
cplx hs_inner(const Mat& x, const Mat& y);

double herm_defect(const Mat& m);   // max entry of |M - M^dag|

// --- Vectorization (column stacking) ---------------------------------------

Vec vec(const Mat& m);
Mat unvec(const Vec& v, int rows, int cols);

// --- Density matrices ------------------------------------------------------

struct DensityMatrix {
  Mat m;

  int dim() const { return static_cast<int>(m.rows()); }

  // Validates Hermiticity, unit trace and positivity. Throws
  // std::invalid_argument on failure. `slack` scales all three tolerances
  // (used to relax checks after numerical time evolution).
  static DensityMatrix from(const Mat& m, const Tolerances& tols = default_tols(),
                            double slack = 1.0);

  double min_eigenvalue() const;
};

// Reduction over the second (ancilla) tensor factor of a 4x4 state.
DensityMatrix partial_trace_ancilla(const DensityMatrix& rho);
Mat partial_trace_ancilla(const Mat& rho4);

// Reduction over the first (target) tensor factor.
Mat partial_trace_target(const Mat& rho4);

// --- Bloch vectors ---------------------------------------------------------

struct BlochVector {
  double x = 0, y = 0, z = 0;
  double norm() const;
};

DensityMatrix bloch_to_density(const BlochVector& v);
BlochVector density_to_bloch(const DensityMatrix& rho);
BlochVector density_to_bloch(const Mat& rho2);

// --- Eigen / exponential / null space --------------------------------------

struct HermitianEig {
  Eigen::VectorXd eigenvalues;   // ascending
  Mat u;                         // rows are conjugated eigenvectors: U M U^dag diagonal
};

// Hermitian eigendecomposition with deterministic phase fixing: the first
// nonzero component of every eigenvector is rotated real positive, and equal
// eigenvalues are ordered lexicographically by their phase-fixed vectors.
HermitianEig hermitian_eig(const Mat& m, const Tolerances& tols = default_tols());

// Scaling-and-squaring matrix exponential (Taylor on the scaled matrix).
Mat expm(const Mat& m);

// Orthonormal basis of the right null space: columns v with singular value
// < tol * sigma_max.
std::vector<Vec> null_space(const Mat& m, double tol);

// Trace distance (1/2) ||rho - sigma||_1 for Hermitian arguments.
double trace_distance(const Mat& a, const Mat& b);

}  // namespace qsd
