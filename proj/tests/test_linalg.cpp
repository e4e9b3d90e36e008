#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nogo/linalg.hpp"
#include "oracles.hpp"

using namespace nogo;

namespace {

StateVector ket(std::vector<Complex> amps, std::vector<int> dims) {
  return StateVector(std::move(amps), std::move(dims));
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("state vector validates its subsystem signature") {
  CHECK_THROWS_AS(ket({1.0, 0.0, 0.0}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ket({0.0, 0.0}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(ket({Complex(std::nan("")), 0.0}, {2}), std::invalid_argument);

  StateVector s = ket({2.0, 0.0}, {2});
  CHECK(s.was_renormalized());
  CHECK(std::abs(s.amplitude(0) - Complex(1.0)) < kNormTol);

  StateVector t = ket({1.0, 0.0}, {2});
  CHECK_FALSE(t.was_renormalized());
}

TEST_CASE("tensor product of basis states") {
  StateVector zero = ket({1.0, 0.0}, {2});
  StateVector one = ket({0.0, 1.0}, {2});
  StateVector zz = tensor_product(zero, zero);
  REQUIRE(zz.dims() == std::vector<int>{2, 2});
  CHECK(std::abs(zz.amplitude(0) - Complex(1.0)) < kNormTol);
  CHECK(std::abs(zz.amplitude(1)) < kNormTol);
  CHECK(std::abs(zz.amplitude(2)) < kNormTol);
  CHECK(std::abs(zz.amplitude(3)) < kNormTol);

  StateVector plus = ket({kInvSqrt2, kInvSqrt2}, {2});
  StateVector p1 = tensor_product(plus, one);
  CHECK(std::abs(p1.amplitude(0)) < kNormTol);
  CHECK(std::abs(p1.amplitude(1) - Complex(kInvSqrt2)) < kNormTol);
  CHECK(std::abs(p1.amplitude(2)) < kNormTol);
  CHECK(std::abs(p1.amplitude(3) - Complex(kInvSqrt2)) < kNormTol);
}

TEST_CASE("tensor product rejects oversized composites") {
  StateVector big = ket(std::vector<Complex>(8, kInvSqrt2 / 2.0), {8});
  StateVector qubit = ket({1.0, 0.0}, {2});
  CHECK_NOTHROW(tensor_product(big, qubit));
  CHECK_THROWS_AS(tensor_product(tensor_product(big, qubit), qubit), std::invalid_argument);
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  StateVector bell = ket({kInvSqrt2, 0.0, 0.0, kInvSqrt2}, {2, 2});
  DensityMatrix rho = partial_trace(bell, {0});
  CHECK(std::abs(rho(0, 0) - Complex(0.5)) < kMatTol);
  CHECK(std::abs(rho(1, 1) - Complex(0.5)) < kMatTol);
  CHECK(std::abs(rho(0, 1)) < kMatTol);
}

TEST_CASE("partial trace of a product state preserves purity") {
  StateVector s = tensor_product(ket({1.0, 0.0}, {2}), ket({0.0, 1.0}, {2}));
  DensityMatrix rho = partial_trace(s, {0});
  CHECK(std::abs(rho(0, 0) - Complex(1.0)) < kMatTol);
  CHECK(std::abs(rho(1, 1)) < kMatTol);
  CHECK_THROWS_AS(partial_trace(s, {2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {}), std::invalid_argument);
}

TEST_CASE("partial trace preserves unit trace on random states") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Complex> amps(8);
    for (Complex& z : amps) z = Complex(g(rng), g(rng));
    StateVector s(std::move(amps), {2, 2, 2});
    for (const std::vector<int>& keep : {std::vector<int>{0}, {1}, {2}, {0, 2}, {1, 2}}) {
      DensityMatrix rho = partial_trace(s, keep);
      Complex tr = 0.0;
      for (int i = 0; i < rho.dim(); ++i) tr += rho(i, i);
      CHECK(std::abs(tr - Complex(1.0)) < kMatTol);
    }
  }
}

TEST_CASE("eigenvalues of identity/2") {
  Spectrum s = hermitian_eigenvalues({0.5, 0.0, 0.0, 0.5}, 2);
  CHECK(std::abs(s.values[0] - 0.5) < kEigTol);
  CHECK(std::abs(s.values[1] - 0.5) < kEigTol);
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
  CHECK_THROWS_AS(hermitian_eigenvalues({0.5, Complex(0.1, 0.0), Complex(0.3, 0.0), 0.5}, 2),
                  std::invalid_argument);
}

TEST_CASE("Jacobi matches the dim-2 closed form on random Hermitian matrices") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 500; ++rep) {
    auto m = oracles::random_hermitian(rng, 2);
    Spectrum closed = eigenvalues_2x2(m);
    Spectrum jac = jacobi_eigenvalues(m, 2);
    CHECK(std::abs(closed.values[0] - jac.values[0]) < 1e-12);
    CHECK(std::abs(closed.values[1] - jac.values[1]) < 1e-12);
  }
}

TEST_CASE("Jacobi preserves trace and Frobenius norm at dims 3..8") {
  std::mt19937_64 rng(13);
  for (int dim : {3, 4, 5, 8}) {
    for (int rep = 0; rep < 50; ++rep) {
      auto m = oracles::random_hermitian(rng, dim);
      double tr = 0.0, fro2 = 0.0;
      for (int i = 0; i < dim; ++i) tr += m[i * dim + i].real();
      for (const Complex& z : m) fro2 += std::norm(z);
      Spectrum s = jacobi_eigenvalues(m, dim);
      double sum = 0.0, sq = 0.0;
      for (double v : s.values) {
        sum += v;
        sq += v * v;
      }
      CHECK(std::abs(sum - tr) < 1e-10);
      CHECK(std::abs(sq - fro2) < 1e-9);
      CHECK(std::is_sorted(s.values.rbegin(), s.values.rend()));
    }
  }
}

TEST_CASE("Jacobi recovers a planted spectrum") {
  // Diagonal matrix conjugated by a known unitary (2x2 rotations embedded
  // in dim 4), built without the solver under test.
  const std::vector<double> planted{0.6, 0.25, 0.15, 0.0};
  std::vector<Complex> m(16, Complex(0.0));
  for (int i = 0; i < 4; ++i) m[i * 4 + i] = planted[i];
  // Conjugate by J with J[p][p]=J[q][q]=c, J[q][p]=s, J[p][q]=-conj(s).
  auto rotate = [&](int p, int q, double angle, double phase) {
    const double c = std::cos(angle);
    const Complex s = std::polar(std::sin(angle), phase);
    std::vector<Complex> next = m;
    for (int i = 0; i < 4; ++i) {  // B = A J
      next[i * 4 + p] = c * m[i * 4 + p] + s * m[i * 4 + q];
      next[i * 4 + q] = -std::conj(s) * m[i * 4 + p] + c * m[i * 4 + q];
    }
    m = next;
    for (int j = 0; j < 4; ++j) {  // A' = J^H B
      next[p * 4 + j] = c * m[p * 4 + j] + std::conj(s) * m[q * 4 + j];
      next[q * 4 + j] = -s * m[p * 4 + j] + c * m[q * 4 + j];
    }
    m = next;
  };
  rotate(0, 1, 0.7, 0.3);
  rotate(1, 3, 1.1, -0.9);
  rotate(0, 2, 0.4, 2.1);
  Spectrum s = hermitian_eigenvalues(m, 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(s.values[i] - planted[i]) < 1e-10);
}

TEST_CASE("trace distance basics") {
  DensityMatrix p(2, {1.0, 0.0, 0.0, 0.0});
  DensityMatrix q(2, {0.0, 0.0, 0.0, 1.0});
  CHECK(trace_distance(p, p) < kNormTol);
  CHECK(std::abs(trace_distance(p, q) - 1.0) < kNormTol);
  DensityMatrix r4(4, [] {
    std::vector<Complex> m(16, Complex(0.0));
    for (int i = 0; i < 4; ++i) m[i * 4 + i] = 0.25;
    return m;
  }());
  CHECK_THROWS_AS(trace_distance(p, r4), std::invalid_argument);
}

TEST_CASE("trace distance is a metric on sampled triples") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g(0.0, 1.0);
  auto random_rho = [&] {
    std::vector<Complex> amps(8);
    for (Complex& z : amps) z = Complex(g(rng), g(rng));
    return partial_trace(StateVector(std::move(amps), {4, 2}), {0});
  };
  for (int rep = 0; rep < 50; ++rep) {
    DensityMatrix a = random_rho(), b = random_rho(), c = random_rho();
    CHECK(std::abs(trace_distance(a, b) - trace_distance(b, a)) < 1e-14);
    CHECK(trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-12);
    CHECK(trace_distance(a, b) >= 0.0);
    CHECK(trace_distance(a, b) <= 1.0);
  }
}

TEST_CASE("entropy of pure and maximally mixed states") {
  DensityMatrix pure(2, {1.0, 0.0, 0.0, 0.0});
  CHECK(von_neumann_entropy(pure) < 1e-12);
  DensityMatrix mixed(2, {0.5, 0.0, 0.0, 0.5});
  CHECK(std::abs(von_neumann_entropy(mixed) - 1.0) < 1e-12);
}

TEST_CASE("entropy of the spectrum {1/2 + 1/(4 sqrt 2), 1/2 - 1/(4 sqrt 2)}") {
  const double lp = 0.5 + 1.0 / (4.0 * std::sqrt(2.0));
  const double lm = 1.0 - lp;
  // Independent binary-entropy evaluation.
  const double expected = -lp * std::log2(lp) - lm * std::log2(lm);
  CHECK(std::abs(expected - 0.90785230) < 1e-4);
  DensityMatrix rho(2, {Complex(lp), 0.0, 0.0, Complex(lm)});
  CHECK(std::abs(von_neumann_entropy(rho) - expected) < 1e-12);
}

TEST_CASE("entropy stays within [0, log2 dim] on random reduced states") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Complex> amps(8);
    for (Complex& z : amps) z = Complex(g(rng), g(rng));
    DensityMatrix rho = partial_trace(StateVector(std::move(amps), {4, 2}), {0});
    const double h = von_neumann_entropy(rho);
    CHECK(h >= 0.0);
    CHECK(h <= 2.0 + 1e-12);
  }
}

TEST_CASE("density matrix constructor enforces its invariants") {
  CHECK_THROWS_AS(DensityMatrix(2, {1.0, 0.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(2, {0.5, Complex(0.2, 0.0), Complex(0.3, 0.0), 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(2, {1.5, 0.0, 0.0, -0.5}), std::invalid_argument);
}
