#pragma once

// Commutant algebras of the Lindblad operator set: numerical computation via
// stacked commutator superoperators, the closed-form spans for nonsingular
// effective Paulis, subspace intersection and comparison.

#include "qsd/kossakowski.hpp"

#include <string>

namespace qsd {

struct OperatorAlgebra {
  std::string label;
  std::vector<Mat> basis;  // 4x4, orthonormal in the Hilbert-Schmidt metric
  int dim() const { return static_cast<int>(basis.size()); }
};

// Named fixed operators.
Mat omega_plus();                   // sum_k sigma_k (x) sigma_k
Mat pi_k(int k);                    // diagonal matrix units, k = 1..4
Mat pi_minus();                     // singlet projector, (I - omega_plus)/4
Mat pi_plus();                      // triplet projector

// Orthonormalizes a spanning list (dropping dependent elements) into an
// algebra record.
OperatorAlgebra orthonormalize(const std::vector<Mat>& span, const std::string& label);

// {X : [X, G] = 0 and [X, G^dag] = 0 for every generator G}.
OperatorAlgebra numerical_commutant(const std::vector<Mat>& generators,
                                    const std::string& label = "custom",
                                    const Tolerances& tols = default_tols());

// Commutant of all retained Lindblad operators (empty set yields the full
// 16-dimensional algebra).
OperatorAlgebra commutant_M(const LindbladOperatorSet& set,
                            const Tolerances& tols = default_tols());

// Subspace intersection M ^ M' via the sum of the two orthogonal projectors.
OperatorAlgebra center(const OperatorAlgebra& m, const OperatorAlgebra& m_prime,
                       const Tolerances& tols = default_tols());

// Closed-form commutants; require a nonsingular sigma (throws otherwise).
// The Hermiticity reduction for non-self-adjoint sigma is applied.
OperatorAlgebra analytic_commutant_plus(const Mat& sigma, const Involution& inv);
OperatorAlgebra analytic_commutant_minus(const Mat& sigma, const Involution& inv);

struct SpanComparison {
  bool equal = false;
  double max_defect = 0;
};

SpanComparison span_equal(const OperatorAlgebra& x, const OperatorAlgebra& y,
                          const Tolerances& tols = default_tols());

}  // namespace qsd
