#include <doctest.h>

#include <cmath>

#include "djsim/correlations.hpp"
#include "djsim/simulate.hpp"
#include "support/reference.hpp"

using namespace djsim;

TEST_SUITE_BEGIN("states");

TEST_CASE("pure state construction enforces normalization") {
  PureState zero(2);
  CHECK(zero.dim() == 4);
  CHECK(std::abs(zero.amplitudes()[0] - 1.0) < 1e-15);

  Vector bad(4);
  bad << 1.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(PureState(2, bad), std::invalid_argument);
  CHECK_THROWS_AS(PureState(3, Vector::Ones(4) / 2.0), std::invalid_argument);
}

TEST_CASE("density matrix invariants are checked") {
  Matrix good = Matrix::Identity(4, 4) / 4.0;
  CHECK_NOTHROW(DensityMatrix(2, good));

  Matrix not_trace_one = Matrix::Identity(4, 4);
  CHECK_THROWS_AS(DensityMatrix(2, not_trace_one), std::invalid_argument);

  Matrix not_hermitian = good;
  not_hermitian(0, 1) = 0.5;
  CHECK_THROWS_AS(DensityMatrix(2, not_hermitian), std::invalid_argument);

  Matrix not_psd = Matrix::Zero(2, 2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(1, not_psd), std::invalid_argument);
}

TEST_CASE("bipartition validation") {
  CHECK_THROWS_AS(Bipartition(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition(3, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition(3, {3}), std::out_of_range);
  const Bipartition part(4, {2, 0});
  CHECK(part.side_a() == std::vector<int>{0, 2});
  CHECK(part.side_b() == std::vector<int>{1, 3});
}

TEST_CASE("dqc1 initial state") {
  SUBCASE("alpha zero is maximally mixed") {
    const DensityMatrix rho = dqc1_initial_state(1, 0.0);
    CHECK(max_abs_diff(rho.matrix(), Matrix::Identity(4, 4) / 4.0) < 1e-15);
  }
  SUBCASE("alpha one has a pure control") {
    const DensityMatrix rho = dqc1_initial_state(1, 1.0);
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = 0.5;
    expected(1, 1) = 0.5;
    CHECK(max_abs_diff(rho.matrix(), expected) < 1e-15);
  }
  SUBCASE("n=3 alpha=1 matches the direct tensor form") {
    const DensityMatrix rho = dqc1_initial_state(3, 1.0);
    Matrix z = Matrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const Matrix expected =
        kron(Matrix::Identity(2, 2) + z, Matrix::Identity(8, 8)) / 16.0;
    CHECK(max_abs_diff(rho.matrix(), expected) < 1e-15);
  }
  SUBCASE("rejects bad arguments") {
    CHECK_THROWS_AS(dqc1_initial_state(1, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(dqc1_initial_state(1, 1.1), std::invalid_argument);
    CHECK_THROWS_AS(dqc1_initial_state(0, 0.5), std::invalid_argument);
  }
}

TEST_CASE("hadamard on |0> gives |+>") {
  const PureState psi = apply_gate(PureState(1), HadamardGate{0});
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(psi.amplitudes()[0] - s) < 1e-15);
  CHECK(std::abs(psi.amplitudes()[1] - s) < 1e-15);
}

TEST_CASE("rotz pair cancels") {
  Rng rng(11);
  const PureState psi = testing::random_pure(3, rng);
  PureState out = apply_gate(psi, RotZGate{1, 0.731});
  out = apply_gate(out, RotZGate{1, -0.731});
  CHECK((out.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("hadamard then controlled oracle reproduces the direct pre-measurement state") {
  const OracleFunction f = classify({0, 1});
  for (double alpha : {0.0, 0.5, 1.0}) {
    DensityMatrix rho = dqc1_initial_state(1, alpha);
    rho = apply_gate(rho, HadamardGate{0});
    rho = apply_gate(rho, controlled_oracle_unitary(f));
    CHECK(max_abs_diff(rho.matrix(), testing::eq3_state_direct(f, alpha).matrix()) < 1e-14);
  }
}

TEST_CASE("gate application matches explicit matrices on random pure states") {
  Rng rng(202);
  const int m = 3;
  const std::vector<Gate> gates = {
      HadamardGate{2}, RotZGate{0, 1.234}, CnotGate{0, 2}, CnotGate{2, 1},
      DiagonalGate{{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}},
      ControlledDiagonalGate{1, {0.4, -0.9, 1.7, 0.2}},
  };
  for (const Gate& gate : gates) {
    const PureState psi = testing::random_pure(m, rng);
    const PureState fast = apply_gate(psi, gate);
    const Vector direct = gate_matrix(gate, m) * psi.amplitudes();
    CHECK((fast.amplitudes() - direct).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("gate application preserves density-matrix invariants") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    DensityMatrix rho = testing::random_density(3, rng);
    const std::vector<Gate> gates = {
        HadamardGate{int(rng.uniform_below(3))},
        RotZGate{int(rng.uniform_below(3)), 2.0 * kPi * rng.uniform_unit()},
        CnotGate{0, 1 + int(rng.uniform_below(2))},
    };
    for (const Gate& gate : gates) {
      rho = apply_gate(rho, gate);  // constructor re-checks the invariants
      CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
      CHECK(hermitian_eigenvalues(rho.matrix()).minCoeff() > -1e-10);
    }
  }
}

TEST_CASE("random circuits undo under the reversed inverse") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c;
    c.m = 3;
    for (int g = 0; g < 12; ++g) {
      switch (rng.uniform_below(3)) {
        case 0: c.gates.push_back(HadamardGate{int(rng.uniform_below(3))}); break;
        case 1:
          c.gates.push_back(RotZGate{int(rng.uniform_below(3)), 2.0 * kPi * rng.uniform_unit()});
          break;
        default: {
          const int control = int(rng.uniform_below(3));
          const int target = (control + 1 + int(rng.uniform_below(2))) % 3;
          c.gates.push_back(CnotGate{control, target});
        }
      }
    }
    const DensityMatrix rho = testing::random_density(3, rng);
    const DensityMatrix back = apply_circuit(apply_circuit(rho, c), inverse_circuit(c));
    CHECK(max_abs_diff(back.matrix(), rho.matrix()) < 1e-10);

    const PureState psi = testing::random_pure(3, rng);
    const PureState pure_back = apply_circuit(apply_circuit(psi, c), inverse_circuit(c));
    CHECK((pure_back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("partial trace recovers product factors") {
  Rng rng(31);
  const DensityMatrix a = testing::random_density(1, rng);
  const DensityMatrix b = testing::random_density(2, rng);
  const DensityMatrix joint(3, kron(a.matrix(), b.matrix()));
  CHECK(max_abs_diff(partial_trace(joint, Bipartition(3, {0})).matrix(), a.matrix()) < 1e-12);
  CHECK(max_abs_diff(partial_trace(joint, Bipartition(3, {1, 2})).matrix(), b.matrix()) < 1e-12);
}

TEST_CASE("partial trace of the pre-measurement state gives the control states") {
  SUBCASE("balanced keeps I/2") {
    const OracleFunction f = classify({0, 1, 1, 0});
    const DensityMatrix control =
        partial_trace(testing::eq3_state_direct(f, 1.0), Bipartition(3, {0}));
    CHECK(max_abs_diff(control.matrix(), Matrix::Identity(2, 2) / 2.0) < 1e-13);
  }
  SUBCASE("constant 0 keeps (I + alpha X)/2") {
    const OracleFunction f = classify({0, 0, 0, 0});
    const DensityMatrix control =
        partial_trace(testing::eq3_state_direct(f, 1.0), Bipartition(3, {0}));
    Matrix expected(2, 2);
    expected << 0.5, 0.5, 0.5, 0.5;
    CHECK(max_abs_diff(control.matrix(), expected) < 1e-13);
  }
  SUBCASE("errors on mismatched bipartition") {
    const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
    CHECK_THROWS_AS(partial_trace(rho, Bipartition(3, {0})), std::invalid_argument);
  }
}

TEST_CASE("partial transpose properties") {
  SUBCASE("product states stay positive") {
    Rng rng(5);
    const DensityMatrix a = testing::random_density(1, rng);
    const DensityMatrix b = testing::random_density(1, rng);
    const DensityMatrix joint(2, kron(a.matrix(), b.matrix()));
    const Matrix pt = partial_transpose(joint, Bipartition(2, {0}));
    CHECK(hermitian_eigenvalues(pt).minCoeff() > -1e-12);
  }
  SUBCASE("bell state spectrum") {
    Vector bell(4);
    const double s = 1.0 / std::sqrt(2.0);
    bell << s, 0.0, 0.0, s;
    const DensityMatrix rho = DensityMatrix::from_pure(PureState(2, bell));
    const RealVector values = hermitian_eigenvalues(partial_transpose(rho, Bipartition(2, {0})));
    CHECK(std::abs(values[0] + 0.5) < 1e-12);
    CHECK(std::abs(values[1] - 0.5) < 1e-12);
    CHECK(std::abs(values[2] - 0.5) < 1e-12);
    CHECK(std::abs(values[3] - 0.5) < 1e-12);
  }
  SUBCASE("involution and trace preservation on random states") {
    Rng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
      const DensityMatrix rho = testing::random_density(3, rng);
      const Bipartition part(3, {0, 2});
      const Matrix pt = partial_transpose(rho, part);
      CHECK(std::abs(pt.trace().real() - 1.0) < 1e-12);
      CHECK(is_hermitian(pt, 1e-12));
      CHECK(max_abs_diff(partial_transpose(pt, part), rho.matrix()) < 1e-14);
    }
  }
  SUBCASE("the alpha=1 final state is PPT for any split") {
    const OracleFunction f = classify({0, 1, 0, 1, 0, 1, 1, 0});
    const DensityMatrix rho = testing::eq5_state_direct(f);
    for (const auto& split : {Bipartition(4, {0}), Bipartition(4, {0, 1}), Bipartition(4, {2})}) {
      CHECK(hermitian_eigenvalues(partial_transpose(rho, split)).minCoeff() > -1e-12);
    }
  }
}

TEST_CASE("expectation values") {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;

  SUBCASE("sigma_x on (I+X)/2 is 1") {
    Matrix rho(2, 2);
    rho << 0.5, 0.5, 0.5, 0.5;
    CHECK(expectation(DensityMatrix(1, rho), x, {0}) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("control of the pre-measurement state") {
    const OracleFunction balanced = classify({0, 1, 1, 0});
    CHECK(std::abs(expectation(testing::eq3_state_direct(balanced, 1.0), x, {0})) < 1e-13);
    const OracleFunction constant = classify({0, 0, 0, 0});
    CHECK(expectation(testing::eq3_state_direct(constant, 0.5), x, {0}) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const OracleFunction constant1 = classify({1, 1, 1, 1});
    CHECK(expectation(testing::eq3_state_direct(constant1, 0.5), x, {0}) ==
          doctest::Approx(-0.5).epsilon(1e-12));
  }
  SUBCASE("rejects non-Hermitian observables") {
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(expectation(DensityMatrix::maximally_mixed(1), bad, {0}),
                    std::invalid_argument);
  }
}

TEST_CASE("variance identity on the pre-measurement state") {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  for (const auto& table :
       {std::vector<uint8_t>{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}}) {
    for (double alpha : {0.0, 0.3, 0.5, 1.0}) {
      const OracleFunction f = classify(table);
      const DensityMatrix rho = testing::eq3_state_direct(f, alpha);
      const double exp_x = expectation(rho, x, {0});
      const DensityMatrix control = partial_trace(rho, Bipartition(3, {0}));
      const double exp_x2 = expectation(control, Matrix(x * x), {0});
      const double delta = std::sqrt(exp_x2 - exp_x * exp_x);
      CHECK(std::abs(delta - std::sqrt(1.0 - exp_x * exp_x)) < 1e-10);
    }
  }
}

TEST_CASE("custom unitary gates must be unitary") {
  Matrix not_unitary = Matrix::Ones(2, 2);
  CHECK_THROWS_AS(gate_matrix(CustomUnitaryGate{not_unitary, {0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(gate_matrix(CnotGate{1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(gate_matrix(HadamardGate{2}, 2), std::out_of_range);
}

TEST_SUITE_END();
