#pragma once

// Generator superoperator, time evolution (matrix exponential and RK4) and
// exact asymptotics via the kernel projection of the vectorized generator.
// The spectral route is the independent oracle for every closed-form claim.

#include "qsd/kossakowski.hpp"

namespace qsd {

struct LiouvilleOperator {
  int dim = 4;                   // Hilbert space dimension
  Mat superoperator;             // dim^2 x dim^2, column-stacked convention
  Mat hamiltonian;               // dim x dim Hermitian, zero by default
  double max_rate = 0;           // largest Lindblad rate, sets time scales
};

struct SpectralAsymptotics {
  Vec eigenvalues;               // all superoperator eigenvalues
  std::vector<int> peripheral;   // indices with |Re| below threshold
  bool oscillatory = false;      // peripheral eigenvalue with nonzero Im
  bool defective = false;        // peripheral Jordan block detected
  Mat projection;                // P_inf (valid when !oscillatory && !defective)
  double threshold = 0;
};

// Diagonal-form generator action, sum_i (V rho V^dag - 1/2 {V^dag V, rho}).
Mat generator_action(const LindbladOperatorSet& set, const Mat& rho);

// Matrix-form generator action from the Kossakowski matrix C directly:
// L[rho] = sum_ij c_ij (F_j rho F_i - 1/2 {F_i F_j, rho}).
// The index pairing matches the eigenvector orientation used in lindblad_set,
// so this agrees with generator_action on the constructed operator set.
Mat generator_matrix_action(const Mat& c6, const Mat& rho);

LiouvilleOperator build_superoperator(const LindbladOperatorSet& set,
                                      const Mat& hamiltonian = Mat());

// exp(L t) applied to rho0; the output is re-validated with relaxed
// tolerances. Throws when positivity fails beyond the relaxed slack
// (CP-violation evidence for invalid models).
DensityMatrix evolve(const LiouvilleOperator& l, const DensityMatrix& rho0, double t);

// Classical fixed-step RK4 on drho/dt = L[rho]; integrates the diagonal-form
// action directly, independent of the vectorization route.
DensityMatrix evolve_rk(const LindbladOperatorSet& set, const DensityMatrix& rho0,
                        double t, double dt);

SpectralAsymptotics spectral_asymptotics(const LiouvilleOperator& l,
                                         const Tolerances& tols = default_tols());

// P_inf applied to rho0. Throws std::runtime_error when the peripheral
// spectrum is oscillatory or defective (no limit exists / none computed).
DensityMatrix asymptotic_state(const LiouvilleOperator& l, const SpectralAsymptotics& sa,
                               const DensityMatrix& rho0);
DensityMatrix asymptotic_state(const LiouvilleOperator& l, const DensityMatrix& rho0);

}  // namespace qsd
