#pragma once

// Classification of a block Kossakowski model into the structural cases that
// admit indirect asymptotic manipulation, the associated projector families,
// the projection-theorem asymptotic states, the closed-form Bloch formulas,
// and the reconciliation harness against the spectral oracle.

#include "qsd/commutant.hpp"
#include "qsd/liouvillian.hpp"

namespace qsd {

enum class Case { case1, case2, case3, trivial };

std::string to_string(Case c);

struct CaseClassification {
  Case kind = Case::trivial;
  int xi = 0;             // distinguished index (1..3), 0 when unused
  double alpha = 0;       // B = alpha A ratio (case 3)
  int n_plus = 0;
  int n_minus = 0;
  double res_a_sym = 0;   // ||A - A^T||_F
  double res_b_eq_a = 0;  // ||B - A||_F
  double res_b_alpha = 0; // ||B - alpha A||_F
};

struct ProjectorFamily {
  Case provenance = Case::trivial;
  std::vector<Mat> projectors;
};

struct InitialState {
  enum class Variant { product, entangled, raw };
  Variant variant = Variant::product;
  BlochVector bloch_t, bloch_a;  // product variant
  double p = 0;                  // entangled variant
  DensityMatrix rho;             // realized 4x4 state

  static InitialState product(const BlochVector& t, const BlochVector& a);
  static InitialState entangled(double p);
  static InitialState raw(const Mat& rho4);
};

struct AsymptoticReport {
  CaseClassification classification;
  bool oscillatory = false;
  Mat rho_inf_oracle;                  // 4x4 (empty when oscillatory)
  BlochVector bloch_oracle;            // reduced target state
  std::optional<Mat> rho0;             // maximal-rank stationary state
  std::optional<Mat> theorem_2i;       // branch 2.i prediction
  std::optional<Mat> theorem_2ii;      // branch 2.ii prediction
  std::optional<double> dev_theorem_2i;
  std::optional<double> dev_theorem_2ii;
  std::optional<BlochVector> bloch_formula;  // closed-form prediction
  std::optional<double> dev_formula;   // |formula - oracle| (Euclidean)
  std::optional<double> tau;           // case-2 example coefficient
  int dim_m = 0, dim_m_prime = 0, dim_z = 0;
};

CaseClassification classify(const KossakowskiModel& model,
                            const StructuredDiagonalization& diag,
                            const Tolerances& tols = default_tols());

// Throws when the distinguished effective Pauli is singular (no involution).
ProjectorFamily projectors_for(const CaseClassification& c,
                               const LindbladOperatorSet& set);

// Candidate I/4-seeded stationary state, returned only when stationary and
// strictly positive.
std::optional<DensityMatrix> max_rank_stationary(const LiouvilleOperator& l);

enum class TheoremBranch { b2i, b2ii };

DensityMatrix theorem_asymptotic(const ProjectorFamily& family,
                                 const std::optional<DensityMatrix>& rho0,
                                 const DensityMatrix& rho_init, TheoremBranch branch);

// Closed-form reduced Bloch vectors (evaluated verbatim; the oracle
// adjudicates correctness).
BlochVector formula_case13(const Eigen::Vector3d& u_row, const BlochVector& bloch_t);
BlochVector formula_case13(const Eigen::Vector3d& u_row, double p);

struct Case2Formula {
  double tau;
  BlochVector bloch;
};
Case2Formula formula_case2_example(double a, double b, const BlochVector& bloch_t,
                                   const BlochVector& bloch_a);
Case2Formula formula_case2_example(double a, double b, double p);

AsymptoticReport verify_against_oracle(const KossakowskiModel& model,
                                       const InitialState& init,
                                       const Tolerances& tols = default_tols());

}  // namespace qsd
