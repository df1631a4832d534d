#pragma once

// Block Kossakowski matrix C = [[A, B], [B, A]] (Hermitian 3x3 blocks),
// structured diagonalization through A+B / A-B, and the resulting Lindblad
// operator set with effective single-qubit Paulis.
//
// Conventions (applied uniformly, see README):
//  * local operators F_i are unnormalized tensor products, Tr F_i F_j = 4 d_ij;
//  * rows of the stored unitaries are conjugated eigenvectors, so that
//    U_tilde (A+B) U_tilde^dag is diagonal;
//  * the effective Paulis are built from the *unstarred* row entries,
//    sigma_tilde_i = sum_k u_ik sigma_k. With this orientation a coupling
//    block with positive imaginary off-diagonal entries pumps excitations
//    upward, matching the closed-form stationary states this library checks.

#include "qsd/core.hpp"

#include <optional>

namespace qsd {

struct KossakowskiModel {
  Mat a;        // 3x3 Hermitian local block
  Mat b;        // 3x3 Hermitian coupling block
  Mat c;        // assembled 6x6
  double min_eigenvalue = 0;  // smallest eigenvalue of C
  bool cp_valid = false;      // C >= 0 within PSD slack
};

struct StructuredDiagonalization {
  Mat u_tilde;  // 3x3, diagonalizes A+B
  Mat u_hat;    // 3x3, diagonalizes A-B
  Eigen::Vector3d lambda_plus;   // ascending
  Eigen::Vector3d lambda_minus;  // ascending
  Mat u;        // assembled 6x6 block unitary
  int n_plus = 0;
  int n_minus = 0;
  double zero_threshold = 0;    // absolute cutoff used for n_plus / n_minus
};

enum class LindbladKind { plus, minus };

// sigma = mu * R sigma_3 R with R an involution (R^2 = I).
struct Involution {
  cplx mu;
  Mat r;  // 2x2
};

struct LindbladEntry {
  LindbladKind kind;
  int index;       // 1..3 within its kind
  double lambda;   // rate (nonzero by construction)
  Mat v;           // 4x4, includes the sqrt(lambda) factor
  Mat sigma;       // 2x2 effective Pauli (traceless)
  bool sigma_hermitian = false;
  std::optional<Involution> involution;  // absent when sigma is singular
};

struct LindbladOperatorSet {
  std::vector<LindbladEntry> entries;
};

// Assembles and validates the block structure; throws std::invalid_argument
// naming the offending entry for non-Hermitian blocks. CP status is reported,
// not enforced.
KossakowskiModel assemble(const Mat& a, const Mat& b,
                          const Tolerances& tols = default_tols());

StructuredDiagonalization diagonalize(const KossakowskiModel& model,
                                      const Tolerances& tols = default_tols());

// Emits only entries whose rate exceeds the zero threshold.
LindbladOperatorSet lindblad_set(const StructuredDiagonalization& diag,
                                 const Tolerances& tols = default_tols());

// Decomposes a traceless 2x2 matrix as mu R sigma_3 R; returns nullopt when
// the bilinear Pauli norm mu^2 = sum_k c_k^2 vanishes (singular sigma).
std::optional<Involution> involution_decompose(const Mat& sigma);

}  // namespace qsd
