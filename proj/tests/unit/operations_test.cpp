#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "mdd/circuit.hpp"
#include "mdd/dense.hpp"
#include "mdd/errors.hpp"
#include "mdd/gates.hpp"
#include "mdd/operations.hpp"
#include "oracle.hpp"

namespace mdd {
namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

Eigen::VectorXcd random_vector(std::mt19937_64& gen, Eigen::Index size) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(size);
  for (Eigen::Index i = 0; i < size; ++i) v[i] = Complex{g(gen), g(gen)};
  return v / v.norm();
}

double max_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

Edge entangled_state(Package& pkg) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(6);
  v[0] = kInvSqrt3;
  v[3] = -kInvSqrt3;
  v[5] = kInvSqrt3;
  return from_dense_vector(pkg, v);
}

// Register (2,3): line 0 is the qubit, line 1 the qutrit.
Edge controlled_exchange(Package& pkg) { return make_gate_dd(pkg, cex(pkg.reg(), 1, 1, 0, 0, 1)); }

TEST(Kron, ZeroOperandGivesZero) {
  Package pkg(QuditRegister({2, 3}));
  const std::vector<std::size_t> low{0};
  const auto y = basis_state(pkg, low);
  EXPECT_TRUE(kron(pkg, pkg.zero(), y).is_zero());
  EXPECT_TRUE(kron(pkg, y, pkg.zero()).is_zero());
}

TEST(Kron, ScalarOneIsNeutral) {
  Package pkg(QuditRegister({2, 3}));
  const std::vector<std::size_t> digits{1, 2};
  const auto y = basis_state(pkg, digits);
  EXPECT_EQ(kron(pkg, pkg.one(), y), y);
}

TEST(Kron, QutritOneTimesQubitZero) {
  Package pkg(QuditRegister({2, 3}));
  const std::vector<std::size_t> one{1};
  const std::vector<std::size_t> zero{0};
  const auto x = basis_state(pkg, one, 1);
  const auto y = basis_state(pkg, zero, 0);
  const auto v = to_dense_vector(pkg, kron(pkg, x, y));
  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(6);
  expected[2] = 1.0;
  EXPECT_EQ(v, expected);
}

TEST(Kron, MatchesDenseKroneckerProduct) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<std::size_t> dims{dim(gen), dim(gen), dim(gen)};
    Package pkg{QuditRegister(dims)};
    const auto xv = random_vector(gen, static_cast<Eigen::Index>(dims[2]));
    const auto yv = random_vector(gen, static_cast<Eigen::Index>(dims[0] * dims[1]));
    const auto x = from_dense_vector(pkg, xv, 2);
    const auto y = from_dense_vector(pkg, yv, 0);
    const auto got = to_dense_vector(pkg, kron(pkg, x, y));
    const Eigen::VectorXcd want = oracle::kron(xv, yv);
    EXPECT_LT(max_diff(got, want), 1e-12);
  }
}

TEST(Kron, MatrixOperandsMatchDense) {
  Package pkg(QuditRegister({4, 3, 2}));
  // Upper part: X on line 2 alone; lower part: identity on lines 0..1.
  std::vector<Edge> children(4, pkg.zero());
  children[1] = pkg.one();
  children[2] = pkg.one();
  const auto x_top = pkg.make_node(2, NodeKind::Matrix, std::move(children));
  const auto got = to_dense_matrix(pkg, kron(pkg, x_top, pkg.identity(1)));
  const auto want = oracle::kron(pauli_x(2).matrix(), Eigen::MatrixXcd::Identity(12, 12));
  EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-15);
  const std::vector<std::size_t> low{0, 0};
  EXPECT_THROW((void)kron(pkg, x_top, basis_state(pkg, low)), StructuralError);
}

TEST(Multiply, HadamardOnQutritZero) {
  Package pkg(QuditRegister({3}));
  const auto h = make_gate_dd(pkg, GateSpec{hadamard(3), 0, {}});
  const auto v = to_dense_vector(pkg, multiply(pkg, h, zero_state(pkg)));
  for (Eigen::Index i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(v[i] - kInvSqrt3), 0.0, 1e-15);
}

TEST(Multiply, IdentityReturnsSameTarget) {
  Package pkg(QuditRegister({2, 3}));
  const auto v = entangled_state(pkg);
  const auto r = multiply(pkg, pkg.identity(1), v);
  EXPECT_EQ(r.node, v.node);
  EXPECT_EQ(r.weight, v.weight);
}

TEST(Multiply, CexMapsOneZeroToOneOne) {
  Package pkg(QuditRegister({2, 3}));
  const std::vector<std::size_t> in{0, 1};
  const std::vector<std::size_t> out{1, 1};
  const auto r = multiply(pkg, controlled_exchange(pkg), basis_state(pkg, in));
  EXPECT_EQ(r, basis_state(pkg, out));
}

TEST(Multiply, RejectsMismatchedOperands) {
  Package pkg(QuditRegister({2, 3}));
  const auto v = entangled_state(pkg);
  EXPECT_THROW((void)multiply(pkg, v, v), StructuralError);
  EXPECT_THROW((void)multiply(pkg, pkg.identity(0), v), StructuralError);
}

TEST(MultiplyMM, CyclicShiftCubedIsIdentity) {
  Package pkg(QuditRegister({3}));
  const auto x = make_gate_dd(pkg, GateSpec{pauli_x(3), 0, {}});
  const auto x3 = multiply_mm(pkg, multiply_mm(pkg, x, x), x);
  EXPECT_EQ(x3, pkg.identity(0));
}

TEST(MultiplyMM, IdentityIsNeutral) {
  Package pkg(QuditRegister({2, 3}));
  const auto b = controlled_exchange(pkg);
  EXPECT_EQ(multiply_mm(pkg, pkg.identity(1), b), b);
  EXPECT_EQ(multiply_mm(pkg, b, pkg.identity(1)), b);
}

TEST(MultiplyMM, PhaseTimesAdjointIsIdentity) {
  Package pkg(QuditRegister({3}));
  const GateSpec z{pauli_z(3), 0, {}};
  const auto prod = multiply_mm(pkg, make_gate_dd(pkg, z), make_gate_dd(pkg, dagger(z)));
  EXPECT_LT((to_dense_matrix(pkg, prod) - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_EQ(prod.node, pkg.identity(0).node);
}

TEST(MultiplyMM, MatchesDenseProduct) {
  std::mt19937_64 gen(5);
  Package pkg(QuditRegister({2, 3, 2}));
  const auto a = make_gate_dd(pkg, GateSpec{hadamard(3), 1, {Control{0, 1}}});
  const auto b = make_gate_dd(pkg, GateSpec{givens(2, 0, 1, 0.3, 1.1), 2, {Control{1, 2}}});
  const auto got = to_dense_matrix(pkg, multiply_mm(pkg, a, b));
  const auto want = (to_dense_matrix(pkg, a) * to_dense_matrix(pkg, b)).eval();
  EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Add, ZeroIsNeutral) {
  Package pkg(QuditRegister({2, 3}));
  const auto v = entangled_state(pkg);
  EXPECT_EQ(add(pkg, v, pkg.zero()), v);
  EXPECT_EQ(add(pkg, pkg.zero(), v), v);
}

TEST(Add, SameNodeSumsWeights) {
  Package pkg(QuditRegister({2, 3}));
  const auto v = entangled_state(pkg);
  const auto sum = add(pkg, v, v);
  EXPECT_EQ(sum.node, v.node);
  EXPECT_NEAR(std::abs(sum.weight.value() - 2.0 * v.weight.value()), 0.0, 1e-15);
}

TEST(Add, CancellationGivesZeroStub) {
  Package pkg(QuditRegister({3}));
  const auto v = zero_state(pkg);
  const auto neg = pkg.scale(v, pkg.numbers().lookup(-1.0));
  const auto sum = add(pkg, v, neg);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_TRUE(sum.is_terminal());
}

TEST(Add, CommutativeAndAssociativeOnAmplitudes) {
  std::mt19937_64 gen(99);
  Package pkg(QuditRegister({3, 2, 4}));
  for (int trial = 0; trial < 20; ++trial) {
    const auto av = random_vector(gen, 24);
    const auto bv = random_vector(gen, 24);
    const auto cv = random_vector(gen, 24);
    const auto a = from_dense_vector(pkg, av);
    const auto b = from_dense_vector(pkg, bv);
    const auto c = from_dense_vector(pkg, cv);
    const auto ab = to_dense_vector(pkg, add(pkg, a, b));
    const auto ba = to_dense_vector(pkg, add(pkg, b, a));
    EXPECT_LT(max_diff(ab, ba), 1e-10);
    EXPECT_LT(max_diff(ab, av + bv), 1e-10);
    const auto left = to_dense_vector(pkg, add(pkg, add(pkg, a, b), c));
    const auto right = to_dense_vector(pkg, add(pkg, a, add(pkg, b, c)));
    EXPECT_LT(max_diff(left, right), 1e-10);
  }
}

TEST(Amplitude, EntangledStatePaths) {
  Package pkg(QuditRegister({2, 3}));
  const auto v = entangled_state(pkg);
  const std::vector<std::size_t> d00{0, 0};
  const std::vector<std::size_t> d11{1, 1};
  const std::vector<std::size_t> d01{1, 0};
  const std::vector<std::size_t> d10{0, 1};
  EXPECT_NEAR(std::abs(get_amplitude(pkg, v, d00) - kInvSqrt3), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(get_amplitude(pkg, v, d11) + kInvSqrt3), 0.0, 1e-15);
  EXPECT_EQ(get_amplitude(pkg, v, d01), Complex{});
  EXPECT_EQ(get_amplitude(pkg, v, d10), Complex{});
}

TEST(Amplitude, RejectsBadIndices) {
  Package pkg(QuditRegister({2, 3}));
  const auto v = entangled_state(pkg);
  const std::vector<std::size_t> out_of_range{0, 3};
  const std::vector<std::size_t> too_short{0};
  EXPECT_THROW((void)get_amplitude(pkg, v, out_of_range), InputError);
  EXPECT_THROW((void)get_amplitude(pkg, v, too_short), InputError);
}

TEST(MatrixEntry, ControlledExchange) {
  Package pkg(QuditRegister({2, 3}));
  const auto m = controlled_exchange(pkg);
  const std::vector<std::size_t> d00{0, 0};
  const std::vector<std::size_t> d10{0, 1};  // qutrit 1, qubit 0
  const std::vector<std::size_t> d11{1, 1};
  const std::vector<std::size_t> d20{0, 2};
  EXPECT_EQ(get_matrix_entry(pkg, m, d00, d00), Complex(1.0, 0.0));
  EXPECT_EQ(get_matrix_entry(pkg, m, d11, d10), Complex(1.0, 0.0));
  EXPECT_EQ(get_matrix_entry(pkg, m, d10, d10), Complex{});
  // Off-diagonal qutrit block: zero stub.
  EXPECT_EQ(get_matrix_entry(pkg, m, d20, d00), Complex{});
}

TEST(InnerProduct, NormalizedStateWithItself) {
  Package pkg(QuditRegister({2, 3}));
  const auto v = entangled_state(pkg);
  EXPECT_NEAR(std::abs(inner_product(pkg, v, v) - 1.0), 0.0, 1e-15);
}

TEST(InnerProduct, OrthogonalBasisStates) {
  Package pkg(QuditRegister({3}));
  const std::vector<std::size_t> zero{0};
  const std::vector<std::size_t> one{1};
  EXPECT_EQ(inner_product(pkg, basis_state(pkg, zero), basis_state(pkg, one)), Complex{});
}

TEST(InnerProduct, GhzAgainstHadamardStateMatchesDense) {
  const auto ghz = gen_ghz(2, 3);
  auto pkg = make_package(ghz);
  const auto a = run(pkg, ghz).final_state;
  const auto b = multiply(pkg, make_gate_dd(pkg, GateSpec{hadamard(3), 1, {}}), zero_state(pkg));
  const Complex want = to_dense_vector(pkg, a).dot(to_dense_vector(pkg, b));  // dot conjugates the left
  EXPECT_NEAR(std::abs(inner_product(pkg, a, b) - want), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(want - Complex(1.0 / 3.0, 0.0)), 0.0, 1e-14);
}

TEST(InnerProduct, ConjugatesLeftOperand) {
  Package pkg(QuditRegister({2}));
  Eigen::VectorXcd a(2);
  a << Complex(0.0, 1.0), 0.0;
  Eigen::VectorXcd b(2);
  b << 1.0, 0.0;
  EXPECT_NEAR(std::abs(inner_product(pkg, from_dense_vector(pkg, a), from_dense_vector(pkg, b)) - Complex(0.0, -1.0)),
              0.0, 1e-15);
}

TEST(Sample, BasisStateIsDeterministic) {
  Package pkg(QuditRegister({2, 3}));
  const std::vector<std::size_t> digits{1, 2};
  const auto v = basis_state(pkg, digits);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample(pkg, v, rng), BasisIndex(digits.begin(), digits.end()));
}

TEST(Sample, UniformQutritFrequencies) {
  Package pkg(QuditRegister({3}));
  const auto v = multiply(pkg, make_gate_dd(pkg, GateSpec{hadamard(3), 0, {}}), zero_state(pkg));
  Rng rng(12345);
  std::vector<std::size_t> counts(3, 0);
  constexpr std::size_t kShots = 30000;
  for (std::size_t i = 0; i < kShots; ++i) ++counts[sample(pkg, v, rng)[0]];
  for (const auto c : counts) EXPECT_NEAR(static_cast<double>(c) / kShots, 1.0 / 3.0, 0.02);
  const auto chi = oracle::chi_square(counts, Eigen::VectorXd::Constant(3, 1.0 / 3.0), kShots);
  EXPECT_LT(chi.statistic, oracle::chi_square_critical_99(chi.df));
}

TEST(Sample, GhzSupportIsDiagonal) {
  const auto circuit = gen_ghz(3, 3);
  auto pkg = make_package(circuit);
  const auto v = run(pkg, circuit).final_state;
  Rng rng(8);
  for (int i = 0; i < 3000; ++i) {
    const auto s = sample(pkg, v, rng);
    EXPECT_TRUE(s[0] == s[1] && s[1] == s[2]);
  }
}

TEST(Sample, RejectsUnnormalizedState) {
  Package pkg(QuditRegister({3}));
  const auto v = pkg.scale(zero_state(pkg), pkg.numbers().lookup(2.0));
  Rng rng(1);
  EXPECT_THROW((void)sample(pkg, v, rng), InputError);
  EXPECT_THROW((void)sample(pkg, pkg.zero(), rng), InputError);
}

TEST(Sample, SameSeedSameSequence) {
  const auto circuit = gen_random({3, 2, 2}, 40, 17);
  auto pkg = make_package(circuit);
  const auto v = run(pkg, circuit).final_state;
  Rng a(77);
  Rng b(77);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(sample(pkg, v, a), sample(pkg, v, b));
}

TEST(Properties, CachingDoesNotChangeResults) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto circuit = gen_random({2, 3, 4}, 60, seed);
    RunOptions cached;
    RunOptions uncached;
    uncached.caching = false;
    auto p1 = make_package(circuit, cached);
    auto p2 = make_package(circuit, uncached);
    const auto v1 = to_dense_vector(p1, run(p1, circuit, cached).final_state);
    const auto v2 = to_dense_vector(p2, run(p2, circuit, uncached).final_state);
    EXPECT_LT(max_diff(v1, v2), 1e-10) << "seed " << seed;
  }
}

TEST(Properties, GatesPreserveNorm) {
  std::mt19937_64 gen(4);
  Package pkg(QuditRegister({3, 2, 5}));
  auto state = from_dense_vector(pkg, random_vector(gen, 30));
  const auto circuit = gen_random({3, 2, 5}, 80, 9);
  for (const auto& op : circuit.ops) {
    for (const auto& g : lower(pkg.reg(), op)) {
      state = multiply(pkg, make_gate_dd(pkg, g), state);
      EXPECT_NEAR(std::abs(inner_product(pkg, state, state) - 1.0), 0.0, 1e-10);
    }
  }
}

TEST(Properties, DenseOracleAgreesOnSmallRandomCircuits) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const auto circuit = gen_random({3, 2, 3}, 50, seed);
    auto pkg = make_package(circuit);
    const auto got = to_dense_vector(pkg, run(pkg, circuit).final_state);
    EXPECT_LT(max_diff(got, oracle::simulate(circuit)), 1e-10) << "seed " << seed;
  }
}

}  // namespace
}  // namespace mdd
