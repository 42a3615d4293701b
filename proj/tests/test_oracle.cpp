#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "gscomm/oracle.hpp"
#include "testutil.hpp"

using namespace gscomm;

namespace {

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amp(i)) * b.amp(i);
  return acc;
}

bool amplitudes_equal(const StateVector& a, const StateVector& b, double tol = 1e-12) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(a.amp(i) - b.amp(i)) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("uniform plus and graph-state amplitudes") {
  const StateVector plus = StateVector::uniform_plus(1);
  CHECK(plus.amp(0) == std::complex<double>{1.0 / std::sqrt(2.0), 0.0});
  CHECK(plus.amp(1) == plus.amp(0));

  // CZ on |++> by hand: basis order 00,01,10,11.
  const StateVector edge = build_graph_state(testutil::single_edge());
  CHECK(edge.amp(0) == std::complex<double>{0.5, 0.0});
  CHECK(edge.amp(1) == std::complex<double>{0.5, 0.0});
  CHECK(edge.amp(2) == std::complex<double>{0.5, 0.0});
  CHECK(edge.amp(3) == std::complex<double>{-0.5, 0.0});

  const auto edgeless = PartitionedGraph::from_parts(1, {1}, {});
  CHECK(amplitudes_equal(build_graph_state(edgeless), StateVector::uniform_plus(2)));
}

TEST_CASE("every vertex generator stabilizes the graph state") {
  for (const auto& g : testutil::corpus_upto(8, 2, 31)) {
    const StateVector state = build_graph_state(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
      const auto eig = stabilizer_eigenvalue(state, vertex_generator(g, v));
      REQUIRE(eig.has_value());
      CHECK(*eig == +1);
    }
  }
}

TEST_CASE("pauli actions") {
  const StateVector zero = StateVector(1);
  CHECK(amplitudes_equal(apply_pauli(zero, {PauliOp::Axis::Z, 0}), zero));

  const StateVector one = apply_pauli(zero, {PauliOp::Axis::X, 0});
  CHECK(one.amp(0) == std::complex<double>{0.0, 0.0});
  CHECK(one.amp(1) == std::complex<double>{1.0, 0.0});

  SUBCASE("X and Z anticommute on the same site") {
    const StateVector psi = random_state(3, 41);
    const StateVector zx =
        apply_pauli(apply_pauli(psi, {PauliOp::Axis::X, 1}), {PauliOp::Axis::Z, 1});
    const StateVector xz =
        apply_pauli(apply_pauli(psi, {PauliOp::Axis::Z, 1}), {PauliOp::Axis::X, 1});
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      CHECK(std::abs(zx.amp(i) + xz.amp(i)) < 1e-12);
    }
  }
  SUBCASE("paulis are involutions and Y is exact") {
    const StateVector psi = random_state(2, 42);
    for (const auto axis : {PauliOp::Axis::X, PauliOp::Axis::Y, PauliOp::Axis::Z}) {
      const StateVector twice = apply_pauli(apply_pauli(psi, {axis, 0}), {axis, 0});
      CHECK(amplitudes_equal(twice, psi));
    }
    // Y = iXZ
    const StateVector y = apply_pauli(psi, {PauliOp::Axis::Y, 0});
    StateVector ixz = apply_pauli(apply_pauli(psi, {PauliOp::Axis::Z, 0}), {PauliOp::Axis::X, 0});
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      CHECK(std::abs(y.amp(i) - std::complex<double>{0.0, 1.0} * ixz.amp(i)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(apply_pauli(zero, {PauliOp::Axis::X, 1}), DimensionError);
}

TEST_CASE("normalization survives paulis and cz") {
  const StateVector psi = random_state(4, 43);
  CHECK(psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(apply_pauli(psi, {PauliOp::Axis::Y, 2}).norm_squared() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(apply_cz(psi, 0, 3).norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("X on a vertex equals Z on its neighborhood, amplitude for amplitude") {
  for (const auto& g : testutil::corpus_upto(8, 2, 32)) {
    const StateVector state = build_graph_state(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
      StateVector lhs = apply_pauli(state, {PauliOp::Axis::X, v});
      StateVector rhs = state;
      for (const int j : g.neighbors(v)) rhs = apply_pauli(rhs, {PauliOp::Axis::Z, j});
      CHECK(amplitudes_equal(lhs, rhs));
    }
  }
}

TEST_CASE("graph basis states") {
  const auto g = testutil::path4();
  const StateVector base = build_graph_state(g);

  SUBCASE("zero label reproduces the graph state") {
    CHECK(amplitudes_equal(graph_basis_state(g, BitVector(4)), base));
  }
  SUBCASE("generator signs follow the label bits") {
    for (std::uint64_t kv = 0; kv < 16; ++kv) {
      const BitVector k = BitVector::from_unsigned(kv, 4);
      const StateVector state = graph_basis_state(g, k);
      for (int v = 0; v < 4; ++v) {
        const auto eig = stabilizer_eigenvalue(state, vertex_generator(g, v));
        REQUIRE(eig.has_value());
        CHECK(*eig == (k[static_cast<std::size_t>(v)] ? -1 : +1));
      }
    }
  }
  SUBCASE("distinct labels give orthogonal states") {
    for (std::uint64_t ka = 0; ka < 16; ++ka) {
      for (std::uint64_t kb = ka + 1; kb < 16; ++kb) {
        const StateVector sa = graph_basis_state(g, BitVector::from_unsigned(ka, 4));
        const StateVector sb = graph_basis_state(g, BitVector::from_unsigned(kb, 4));
        CHECK(std::abs(inner(sa, sb)) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(graph_basis_state(g, BitVector(3)), DimensionError);
}

TEST_CASE("basis completeness: the Gram matrix is the identity") {
  for (const auto& g : {testutil::single_edge(), testutil::star4(), testutil::path(6)}) {
    const int m = g.num_vertices();
    const std::uint64_t count = std::uint64_t{1} << m;
    std::vector<StateVector> basis;
    basis.reserve(count);
    for (std::uint64_t kv = 0; kv < count; ++kv) {
      basis.push_back(
          graph_basis_state(g, BitVector::from_unsigned(kv, static_cast<std::size_t>(m))));
    }
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = a; b < count; ++b) {
        const double expected = a == b ? 1.0 : 0.0;
        CHECK(std::abs(inner(basis[a], basis[b]) - expected) < 1e-10);
      }
    }
  }
}

TEST_CASE("stabilizer_eigenvalue sign table") {
  const auto g = testutil::path4();
  const StateVector state = build_graph_state(g);
  const StabilizerGenerator g2 = vertex_generator(g, 2);

  CHECK(stabilizer_eigenvalue(state, g2) == +1);
  CHECK(stabilizer_eigenvalue(apply_pauli(state, {PauliOp::Axis::Z, 2}), g2) == -1);
  // |+>^4 is not an eigenstate of any generator of a graph with edges
  const StateVector plus = StateVector::uniform_plus(4);
  for (int v = 0; v < 4; ++v) {
    CHECK_FALSE(stabilizer_eigenvalue(plus, vertex_generator(g, v)).has_value());
  }
}

TEST_CASE("projector decomposition over all generator products") {
  CHECK(graph_state_projector_check(testutil::single_edge(), 51));
  CHECK(graph_state_projector_check(testutil::path4(), 52));
  CHECK(graph_state_projector_check(testutil::star4(), 53));
  CHECK(graph_state_projector_check(testutil::path(6), 54));

  SUBCASE("a flipped generator sign breaks the identity") {
    std::vector<int> signs(4, 1);
    signs[1] = -1;
    CHECK_FALSE(stabilizer_sum_matches_projector(testutil::path4(), signs, 55));
  }
  SUBCASE("size cap") {
    CHECK_THROWS_AS(graph_state_projector_check(testutil::matching(5)), SizeLimitError);
  }
}

TEST_CASE("fidelity") {
  const StateVector psi = random_state(3, 61);
  CHECK(fidelity(psi, psi) == doctest::Approx(1.0).epsilon(1e-12));

  const StateVector zero = StateVector(1);
  const StateVector one = apply_pauli(zero, {PauliOp::Axis::X, 0});
  CHECK(fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-12));

  // global phase of either argument is invisible
  std::vector<std::complex<double>> flipped(psi.amplitudes().begin(), psi.amplitudes().end());
  for (auto& a : flipped) a *= std::complex<double>{0.0, 1.0};
  CHECK(fidelity(psi, StateVector::from_amplitudes(std::move(flipped))) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(fidelity(zero, psi), DimensionError);
}

TEST_CASE("project_onto basics") {
  SUBCASE("|00> onto |0> at the first site") {
    const StateVector s(2);
    const Projection proj = project_onto(s, std::vector<int>{0}, StateVector(1));
    CHECK(proj.probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(proj.zero_outcome);
    CHECK(std::abs(proj.residual.amp(0) - 1.0) < 1e-12);
  }
  SUBCASE("|+> tensor psi onto |1>") {
    const StateVector psi = random_state(2, 62);
    const StateVector s = tensor(StateVector::uniform_plus(1), psi);
    const StateVector one = apply_pauli(StateVector(1), {PauliOp::Axis::X, 0});
    const Projection proj = project_onto(s, std::vector<int>{0}, one);
    CHECK(proj.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fidelity(proj.residual, psi) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("orthogonal projection flags a zero outcome") {
    const StateVector s(2);  // |00>
    const StateVector one = apply_pauli(StateVector(1), {PauliOp::Axis::X, 0});
    const Projection proj = project_onto(s, std::vector<int>{0}, one);
    CHECK(proj.zero_outcome);
    CHECK(proj.probability < 1e-12);
  }
  SUBCASE("probabilities over a complete basis sum to one") {
    const StateVector psi = random_state(3, 63);
    double total = 0.0;
    for (std::uint64_t b = 0; b < 4; ++b) {
      std::vector<std::complex<double>> amps(4, {0.0, 0.0});
      amps[b] = {1.0, 0.0};
      const Projection proj =
          project_onto(psi, std::vector<int>{0, 2}, StateVector::from_amplitudes(std::move(amps)));
      total += proj.probability;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("argument validation") {
    const StateVector psi = random_state(3, 64);
    CHECK_THROWS_AS(project_onto(psi, std::vector<int>{0}, StateVector(2)), DimensionError);
    CHECK_THROWS_AS(project_onto(psi, std::vector<int>{0, 0}, StateVector(2)), DimensionError);
    CHECK_THROWS_AS(project_onto(psi, std::vector<int>{0, 1, 2}, StateVector(3)), DimensionError);
  }
}

TEST_CASE("textbook single-qubit teleportation through a Bell pair") {
  // Input on qubit 0, Bell pair (|00>+|11>)/sqrt(2) on qubits 1 and 2;
  // measuring qubits 0,1 in the Bell basis leaves the input on qubit 2 up to
  // a known Pauli, each outcome with probability 1/4.
  const StateVector psi = random_state(1, 65);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<std::complex<double>> bell(4, {0.0, 0.0});
  bell[0] = {inv_sqrt2, 0.0};
  bell[3] = {inv_sqrt2, 0.0};
  const StateVector pair = StateVector::from_amplitudes(std::move(bell));
  const StateVector full = tensor(psi, pair);

  const auto bell_state = [&](int x, int z) {
    StateVector b = pair;
    if (x) b = apply_pauli(b, {PauliOp::Axis::X, 0});
    if (z) b = apply_pauli(b, {PauliOp::Axis::Z, 0});
    return b;
  };
  double total = 0.0;
  for (const int x : {0, 1}) {
    for (const int z : {0, 1}) {
      const Projection proj = project_onto(full, std::vector<int>{0, 1}, bell_state(x, z));
      CHECK(proj.probability == doctest::Approx(0.25).epsilon(1e-10));
      total += proj.probability;
      StateVector fixed = proj.residual;
      if (x) fixed = apply_pauli(fixed, {PauliOp::Axis::X, 0});
      if (z) fixed = apply_pauli(fixed, {PauliOp::Axis::Z, 0});
      CHECK(fidelity(fixed, psi) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("size caps fail fast") {
  CHECK_THROWS_AS(StateVector(14), SizeLimitError);
  CHECK_NOTHROW(StateVector(13));
  CHECK_THROWS_AS(build_graph_state(testutil::matching(7)), SizeLimitError);
  CHECK_THROWS_AS(tensor(StateVector(7), StateVector(7)), SizeLimitError);
}

TEST_CASE("random states are reproducible and normalized") {
  const StateVector a = random_state(3, 99);
  const StateVector b = random_state(3, 99);
  CHECK(amplitudes_equal(a, b, 0.0));
  CHECK(a.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity(a, random_state(3, 100)) < 0.999);
}
