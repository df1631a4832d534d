#include <doctest.h>

#include "qsd/liouvillian.hpp"

#include <random>

using namespace qsd;

namespace {

std::mt19937 rng(77123);

Mat random_density4() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cplx(u(rng), u(rng));
  Mat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Mat eq30_block(double a, double b) {
  Mat m(3, 3);
  m << a, cplx(0, b), 0, cplx(0, -b), a, 0, 0, 0, a;
  return m;
}

LindbladOperatorSet eq30_set(double a, double b) {
  return lindblad_set(diagonalize(assemble(eq30_block(a, b), eq30_block(a, b))));
}

DensityMatrix singlet() {
  Vec psi = Vec::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  return DensityMatrix{psi * psi.adjoint()};
}

DensityMatrix basis_state(int k) {
  Mat m = Mat::Zero(4, 4);
  m(k, k) = 1.0;
  return DensityMatrix{m};
}

// Single custom Lindblad operator wrapped as a set entry.
LindbladOperatorSet single_op(const Mat& v, double lambda = 1.0) {
  LindbladOperatorSet set;
  LindbladEntry e;
  e.kind = LindbladKind::plus;
  e.index = 1;
  e.lambda = lambda;
  e.v = v;
  e.sigma = Mat::Zero(2, 2);
  set.entries.push_back(e);
  return set;
}

}  // namespace

TEST_CASE("generator_action basics") {
  // unital for Hermitian operators
  const auto set = single_op(local_op(3));
  CHECK(generator_action(set, identity(4) / 4.0).cwiseAbs().maxCoeff() < 1e-14);

  // singlet is dark for every collective B = A model
  const auto collective = eq30_set(1.0, 0.5);
  CHECK(generator_action(collective, singlet().m).cwiseAbs().maxCoeff() < 1e-12);

  // collective raising pushes |down,down> toward the symmetric one-excitation state
  const auto pumping = eq30_set(1.0, 1.0);
  const Mat flow = generator_action(pumping, basis_state(3).m);
  CHECK(flow(1, 1).real() > 0.1);
  CHECK(flow(2, 2).real() > 0.1);
  CHECK(flow(1, 2).real() > 0.1);  // coherent symmetric superposition
  CHECK(flow(3, 3).real() < -0.1);

  // traceless and Hermitian output
  for (int trial = 0; trial < 10; ++trial) {
    const Mat out = generator_action(collective, random_density4());
    CHECK(std::abs(out.trace()) < 1e-12);
    CHECK(herm_defect(out) < 1e-12);
  }
}

TEST_CASE("build_superoperator matches generator_action") {
  const auto set = eq30_set(1.0, 0.5);
  const auto l = build_superoperator(set);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat rho = random_density4();
    const Mat via_super = unvec(l.superoperator * vec(rho), 4, 4);
    CHECK((via_super - generator_action(set, rho)).cwiseAbs().maxCoeff() < 1e-11);
  }

  // empty set: zero superoperator
  const auto l0 = build_superoperator(LindbladOperatorSet{});
  CHECK(l0.superoperator.cwiseAbs().maxCoeff() == 0.0);

  // trace preservation: Tr functional annihilates the generator from the left
  Vec tr = vec(identity(4));
  CHECK((tr.adjoint() * l.superoperator).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("single dephasing operator: first-qubit coherences decay at rate 2") {
  const auto set = single_op(local_op(3));  // sigma_3 (x) I
  const auto l = build_superoperator(set);
  // rho with a first-qubit coherence decays as exp(-2t)
  Mat rho = identity(4) / 4.0;
  rho(0, 2) = rho(2, 0) = 0.1;  // |up>< down| on the first qubit
  const auto evolved = evolve(l, DensityMatrix{rho}, 0.7);
  CHECK(std::abs(evolved.m(0, 2).real() - 0.1 * std::exp(-2 * 0.7)) < 1e-10);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(evolved.m(i, i).real() - 0.25) < 1e-12);
}

TEST_CASE("evolve: t = 0 and the semigroup property") {
  const auto set = eq30_set(1.0, 0.5);
  const auto l = build_superoperator(set);
  const Mat rho = random_density4();
  CHECK((evolve(l, DensityMatrix{rho}, 0.0).m - rho).cwiseAbs().maxCoeff() < 1e-13);

  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double t = u(rng), s = u(rng);
    const auto one = evolve(l, evolve(l, DensityMatrix{rho}, t), s);
    const auto two = evolve(l, DensityMatrix{rho}, t + s);
    CHECK((one.m - two.m).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("evolve: collective pumping fills the top state") {
  const auto l = build_superoperator(eq30_set(1.0, 1.0));
  const auto final_state = evolve(l, basis_state(3), 20.0);
  CHECK(trace_distance(final_state.m, basis_state(0).m) < 1e-6);
}

TEST_CASE("evolve_rk agrees with the exponential route") {
  const auto set = eq30_set(1.0, 0.5);
  const auto l = build_superoperator(set);
  const Mat rho = random_density4();
  const auto via_exp = evolve(l, DensityMatrix{rho}, 5.0);
  const auto via_rk = evolve_rk(set, DensityMatrix{rho}, 5.0, 1e-3);
  CHECK((via_exp.m - via_rk.m).cwiseAbs().maxCoeff() < 1e-6);

  // zero generator: state unchanged
  const auto frozen = evolve_rk(LindbladOperatorSet{}, DensityMatrix{rho}, 3.0, 1e-2);
  CHECK((frozen.m - rho).cwiseAbs().maxCoeff() < 1e-14);

  // trace drift over 10^4 steps
  const auto out = evolve_rk(set, DensityMatrix{rho}, 10.0, 1e-3);
  CHECK(std::abs(out.m.trace() - cplx(1.0)) < 1e-9);

  CHECK_THROWS_AS(evolve_rk(set, DensityMatrix{rho}, 1.0, 1e-9), std::invalid_argument);
}

TEST_CASE("conservation along the evolution") {
  const auto set = eq30_set(1.0, 0.5);
  const auto l = build_superoperator(set);
  const Mat rho = random_density4();
  for (double t : {0.5, 2.0, 10.0, 50.0 / 3.0}) {
    const auto e = evolve(l, DensityMatrix{rho}, t);
    CHECK(std::abs(e.m.trace() - cplx(1.0)) < 1e-10);
    CHECK(herm_defect(e.m) < 1e-10);
    CHECK(e.min_eigenvalue() > -1e-8);
  }
}

TEST_CASE("contractivity of the trace distance") {
  const auto l = build_superoperator(eq30_set(1.0, 0.5));
  const Mat r1 = random_density4(), r2 = random_density4();
  double prev = trace_distance(r1, r2);
  for (double t : {0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double d = trace_distance(evolve(l, DensityMatrix{r1}, t).m,
                                    evolve(l, DensityMatrix{r2}, t).m);
    CHECK(d <= prev + 1e-9);
    prev = d;
  }
}

TEST_CASE("spectral_asymptotics: kernel structure") {
  // pure dephasing of the first qubit: kernel multiplicity 8
  const auto dephasing = build_superoperator(single_op(local_op(3)));
  const auto sa1 = spectral_asymptotics(dephasing);
  CHECK_FALSE(sa1.oscillatory);
  CHECK(sa1.peripheral.size() == 8);

  // worked-example model: at least two orthogonal stationary states
  const auto l2 = build_superoperator(eq30_set(1.0, 0.5));
  const auto sa2 = spectral_asymptotics(l2);
  CHECK(sa2.peripheral.size() >= 2);

  // decoupled unital model: unique stationary state I/4
  const auto l3 =
      build_superoperator(lindblad_set(diagonalize(assemble(Mat::Identity(3, 3), Mat::Zero(3, 3)))));
  const auto sa3 = spectral_asymptotics(l3);
  CHECK(sa3.peripheral.size() == 1);
  const auto unique = asymptotic_state(l3, sa3, DensityMatrix{random_density4()});
  CHECK((unique.m - identity(4) / 4.0).cwiseAbs().maxCoeff() < 1e-10);

  // spectrum in the closed left half-plane; projection idempotent
  for (const auto* l : {&dephasing, &l2, &l3}) {
    const auto sa = spectral_asymptotics(*l);
    CHECK(sa.eigenvalues.real().maxCoeff() <= 1e-9);
    CHECK((sa.projection * sa.projection - sa.projection).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("asymptotic_state") {
  const auto set = eq30_set(1.0, 1.0);
  const auto l = build_superoperator(set);
  const auto sa = spectral_asymptotics(l);

  // stationary input is a fixed point of the projection
  const auto s = singlet();
  CHECK((asymptotic_state(l, sa, s).m - s.m).cwiseAbs().maxCoeff() < 1e-10);

  // maximally mixed input: 1/4 singlet + 3/4 top state
  const auto out = asymptotic_state(l, sa, DensityMatrix{identity(4) / 4.0});
  Mat expected = 0.25 * s.m;
  expected(0, 0) += 0.75;
  CHECK((out.m - expected).cwiseAbs().maxCoeff() < 1e-9);
  const auto bloch = density_to_bloch(partial_trace_ancilla(out.m));
  CHECK(bloch.z == doctest::Approx(0.75).epsilon(1e-9));

  // agreement with the exponential route at long times
  const Mat rho = random_density4();
  const auto spectral = asymptotic_state(l, sa, DensityMatrix{rho});
  const auto longtime = evolve(l, DensityMatrix{rho}, 50.0 / 4.0);
  CHECK((spectral.m - longtime.m).cwiseAbs().maxCoeff() < 1e-6);
}
