#include <doctest.h>

#include "qsd/core.hpp"

#include <random>

using namespace qsd;

namespace {

std::mt19937 rng(20260823);

Mat random_matrix(int rows, int cols, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = scale * cplx(u(rng), u(rng));
  return m;
}

Mat random_hermitian(int n, double scale = 1.0) {
  const Mat m = random_matrix(n, n, scale);
  return (m + m.adjoint()) / 2.0;
}

Mat random_density(int n) {
  const Mat g = random_matrix(n, n);
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace

TEST_CASE("kron on Pauli examples") {
  CHECK((kron(identity(2), pauli(3)) - Eigen::Vector4cd(1, -1, 1, -1).asDiagonal().toDenseMatrix()).norm() == doctest::Approx(0.0));
  CHECK((kron(pauli(3), identity(2)) - Eigen::Vector4cd(1, 1, -1, -1).asDiagonal().toDenseMatrix()).norm() == doctest::Approx(0.0));
  Mat anti = Mat::Zero(4, 4);
  anti(0, 3) = anti(1, 2) = anti(2, 1) = anti(3, 0) = 1;
  CHECK((kron(pauli(1), pauli(1)) - anti).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron bilinearity, associativity and trace factorization") {
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = random_matrix(2, 2), b = random_matrix(2, 2), c = random_matrix(2, 2);
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() < 1e-13);
    const cplx s(0.7, -0.3);
    CHECK((kron(s * a + b, c) - s * kron(a, c) - kron(b, c)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-13);
  }
}

TEST_CASE("partial trace over the ancilla") {
  for (int trial = 0; trial < 10; ++trial) {
    const Mat rho_t = random_density(2), rho_a = random_density(2);
    CHECK((partial_trace_ancilla(kron(rho_t, rho_a)) - rho_t).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((partial_trace_target(kron(rho_t, rho_a)) - rho_a).cwiseAbs().maxCoeff() < 1e-13);
  }

  // singlet reduces to the maximally mixed state
  Vec psi = Vec::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  const Mat singlet = psi * psi.adjoint();
  CHECK((partial_trace_ancilla(singlet) - identity(2) / 2.0).cwiseAbs().maxCoeff() < 1e-14);

  // Schmidt state of weight P reduces to diag(P, 1-P)
  const double p = 0.3;
  Vec phi = Vec::Zero(4);
  phi(0) = std::sqrt(p);
  phi(3) = std::sqrt(1 - p);
  Mat expected = Mat::Zero(2, 2);
  expected(0, 0) = p;
  expected(1, 1) = 1 - p;
  CHECK((partial_trace_ancilla(Mat(phi * phi.adjoint())) - expected).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(partial_trace_ancilla(identity(2)), std::invalid_argument);
}

TEST_CASE("hermitian_eig basics") {
  const auto e3 = hermitian_eig(pauli(3));
  CHECK(e3.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(e3.eigenvalues(1) == doctest::Approx(1.0));

  // [[a, ib], [-ib, a]] (+) [a] has eigenvalues a -/+ b and a
  Mat blk(3, 3);
  blk << 1.0, cplx(0, 0.5), 0, cplx(0, -0.5), 1.0, 0, 0, 0, 1.0;
  const auto eb = hermitian_eig(blk);
  CHECK(eb.eigenvalues(0) == doctest::Approx(0.5));
  CHECK(eb.eigenvalues(1) == doctest::Approx(1.0));
  CHECK(eb.eigenvalues(2) == doctest::Approx(1.5));

  const auto ez = hermitian_eig(Mat::Zero(3, 3));
  CHECK(ez.eigenvalues.cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(hermitian_eig(random_matrix(3, 3)), std::invalid_argument);
}

TEST_CASE("hermitian_eig reconstruction and determinism") {
  for (int trial = 0; trial < 20; ++trial) {
    const Mat m = random_hermitian(4, 2.0);
    const auto e = hermitian_eig(m);
    const Mat d = e.u * m * e.u.adjoint();
    Mat diag_only = Mat::Zero(4, 4);
    for (int i = 0; i < 4; ++i) diag_only(i, i) = e.eigenvalues(i);
    CHECK((d - diag_only).cwiseAbs().maxCoeff() < 1e-11);
    CHECK((e.u.adjoint() * diag_only * e.u - m).cwiseAbs().maxCoeff() < 1e-11);
    // identical input bits give identical output bits
    const auto e2 = hermitian_eig(m);
    CHECK((e.u - e2.u).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("expm") {
  CHECK((expm(Mat::Zero(3, 3)) - identity(3)).cwiseAbs().maxCoeff() < 1e-14);

  Mat d = Mat::Zero(3, 3);
  d(0, 0) = 0.5;
  d(1, 1) = cplx(0, 1);
  d(2, 2) = -2.0;
  const Mat ed = expm(d);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(ed(i, i) - std::exp(d(i, i))) < 1e-13);

  // Euler identity: exp(i pi sigma_1 / 2) = i sigma_1
  const Mat e = expm(cplx(0, M_PI / 2.0) * pauli(1));
  CHECK((e - cplx(0, 1) * pauli(1)).cwiseAbs().maxCoeff() < 1e-12);

  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_matrix(4, 4);
    m *= 5.0 / m.cwiseAbs().rowwise().sum().maxCoeff();
    CHECK((expm(m) * expm(-m) - identity(4)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("null_space") {
  CHECK(null_space(identity(4), 1e-10).empty());
  CHECK(null_space(Mat::Zero(3, 3), 1e-10).size() == 3);

  Mat ones(2, 2);
  ones << 1, 1, 1, 1;
  const auto ns = null_space(ones, 1e-10);
  REQUIRE(ns.size() == 1);
  Vec expected(2);
  expected << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(ns[0].dot(expected)) - 1.0) < 1e-12);

  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_matrix(6, 6);
    m.col(4) = m.col(0) + m.col(2);  // force rank deficiency
    m.col(5) = m.col(1);
    const double tol = 1e-9;
    const double smax = Eigen::JacobiSVD<Mat>(m).singularValues()(0);
    for (const auto& v : null_space(m, tol)) CHECK((m * v).norm() <= 10 * tol * smax);
  }
}

TEST_CASE("Bloch conversions") {
  CHECK((bloch_to_density({0, 0, 0}).m - identity(2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);
  Mat up = Mat::Zero(2, 2);
  up(0, 0) = 1;
  CHECK((bloch_to_density({0, 0, 1}).m - up).cwiseAbs().maxCoeff() < 1e-15);
  const auto plus = bloch_to_density({1, 0, 0});
  CHECK(plus.min_eigenvalue() == doctest::Approx(0.0).epsilon(1e-12));

  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const BlochVector v{u(rng), u(rng), u(rng)};
    const auto w = density_to_bloch(bloch_to_density(v));
    CHECK(std::abs(v.x - w.x) < 1e-14);
    CHECK(std::abs(v.y - w.y) < 1e-14);
    CHECK(std::abs(v.z - w.z) < 1e-14);
  }
  CHECK_THROWS_AS(bloch_to_density({1.1, 0, 0}), std::invalid_argument);
}

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix::from(identity(4) / 4.0));
  CHECK_THROWS_AS(DensityMatrix::from(identity(4)), std::invalid_argument);  // trace 4
  Mat bad = identity(2);
  bad(0, 1) = 0.1;  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix::from(bad / 2.0), std::invalid_argument);
  Mat neg = Mat::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::from(neg), std::invalid_argument);
}
