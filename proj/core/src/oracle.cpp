#include "gscomm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

namespace gscomm {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

std::size_t bit_mask(int num_qubits, int site) {
  return std::size_t{1} << (num_qubits - 1 - site);
}

void check_site(const StateVector& s, int site) {
  if (site < 0 || site >= s.num_qubits()) {
    throw DimensionError("qubit index " + std::to_string(site) + " out of range for " +
                         std::to_string(s.num_qubits()) + " qubits");
  }
}

int parity(std::size_t bits) { return std::popcount(bits) & 1; }

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw Error("state vector needs at least one qubit");
  if (num_qubits > kMaxOracleQubits) {
    throw SizeLimitError("state vector capped at " + std::to_string(kMaxOracleQubits) +
                         " qubits, requested " + std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

StateVector StateVector::uniform_plus(int num_qubits) {
  StateVector s(num_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
  std::fill(s.amps_.begin(), s.amps_.end(), std::complex<double>{a, 0.0});
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<std::complex<double>> amps) {
  if (amps.empty() || !std::has_single_bit(amps.size())) {
    throw DimensionError("amplitude count must be a power of two");
  }
  const int nq = std::bit_width(amps.size()) - 1;
  if (nq < 1) throw Error("state vector needs at least one qubit");
  if (nq > kMaxOracleQubits) throw SizeLimitError("amplitude vector exceeds the qubit cap");
  return StateVector(nq, std::move(amps));
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

StabilizerGenerator vertex_generator(const PartitionedGraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.num_vertices()) {
    throw Error("generator vertex out of range");
  }
  return {vertex, g.neighbors(vertex)};
}

StateVector build_graph_state(const PartitionedGraph& g) {
  StateVector s = StateVector::uniform_plus(g.num_vertices());
  for (const auto& [u, v] : g.edges()) s = apply_cz(s, u, v);
  return s;
}

StateVector apply_pauli(const StateVector& s, const PauliOp& p) {
  check_site(s, p.site);
  const std::size_t mask = bit_mask(s.num_qubits(), p.site);
  std::vector<std::complex<double>> out(s.dim());
  switch (p.axis) {
    case PauliOp::Axis::X:
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.amp(i ^ mask);
      break;
    case PauliOp::Axis::Y:
      // |0> -> i|1>, |1> -> -i|0>
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (i & mask) ? kImag * s.amp(i ^ mask) : -kImag * s.amp(i ^ mask);
      }
      break;
    case PauliOp::Axis::Z:
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (i & mask) ? -s.amp(i) : s.amp(i);
      }
      break;
  }
  return StateVector::from_amplitudes(std::move(out));
}

StateVector apply_cz(const StateVector& s, int a, int b) {
  check_site(s, a);
  check_site(s, b);
  if (a == b) throw DimensionError("cz needs two distinct qubits");
  const std::size_t both = bit_mask(s.num_qubits(), a) | bit_mask(s.num_qubits(), b);
  std::vector<std::complex<double>> out(s.amplitudes().begin(), s.amplitudes().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if ((i & both) == both) out[i] = -out[i];
  }
  return StateVector::from_amplitudes(std::move(out));
}

StateVector apply_generator(const StateVector& s, const StabilizerGenerator& gen) {
  check_site(s, gen.x_site);
  const std::size_t xmask = bit_mask(s.num_qubits(), gen.x_site);
  std::size_t zmask = 0;
  for (const int z : gen.z_sites) {
    check_site(s, z);
    if (z == gen.x_site) throw Error("generator has Z on its own X site");
    zmask |= bit_mask(s.num_qubits(), z);
  }
  std::vector<std::complex<double>> out(s.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t j = i ^ xmask;
    out[i] = parity(j & zmask) ? -s.amp(j) : s.amp(j);
  }
  return StateVector::from_amplitudes(std::move(out));
}

StateVector graph_basis_state(const PartitionedGraph& g, const BitVector& k) {
  if (static_cast<int>(k.size()) != g.num_vertices()) {
    throw DimensionError("basis label length must equal the vertex count");
  }
  StateVector s = build_graph_state(g);
  const std::size_t mask = k.to_unsigned();
  std::vector<std::complex<double>> out(s.amplitudes().begin(), s.amplitudes().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (parity(i & mask)) out[i] = -out[i];
  }
  return StateVector::from_amplitudes(std::move(out));
}

std::optional<int> stabilizer_eigenvalue(const StateVector& s, const StabilizerGenerator& gen) {
  constexpr double kTol = 1e-10;
  const StateVector mapped = apply_generator(s, gen);
  bool plus = true;
  bool minus = true;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto diff = mapped.amp(i) - s.amp(i);
    const auto sum = mapped.amp(i) + s.amp(i);
    if (std::abs(diff) > kTol) plus = false;
    if (std::abs(sum) > kTol) minus = false;
    if (!plus && !minus) return std::nullopt;
  }
  if (plus) return +1;
  return -1;
}

bool stabilizer_sum_matches_projector(const PartitionedGraph& g, std::span<const int> signs,
                                      std::uint64_t seed) {
  const int m = g.num_vertices();
  if (m > 8) throw SizeLimitError("projector check capped at 8 vertices");
  if (static_cast<int>(signs.size()) != m) throw DimensionError("one sign per generator required");

  std::vector<StabilizerGenerator> gens;
  gens.reserve(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) gens.push_back(vertex_generator(g, v));

  const StateVector psi = random_state(m, seed);
  const StateVector graph = build_graph_state(g);

  // target = |G><G| psi
  std::complex<double> overlap{0.0, 0.0};
  for (std::size_t i = 0; i < psi.dim(); ++i) overlap += std::conj(graph.amp(i)) * psi.amp(i);

  std::vector<std::complex<double>> acc(psi.dim(), {0.0, 0.0});
  const std::size_t terms = std::size_t{1} << m;
  for (std::size_t j = 0; j < terms; ++j) {
    StateVector term = psi;
    double sign = 1.0;
    for (int v = 0; v < m; ++v) {
      if ((j >> (m - 1 - v)) & 1u) {
        term = apply_generator(term, gens[static_cast<std::size_t>(v)]);
        sign *= static_cast<double>(signs[static_cast<std::size_t>(v)]);
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += sign * term.amp(i);
  }
  const double scale = 1.0 / static_cast<double>(terms);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const auto expected = overlap * graph.amp(i);
    if (std::abs(acc[i] * scale - expected) > 1e-10) return false;
  }
  return true;
}

bool graph_state_projector_check(const PartitionedGraph& g, std::uint64_t seed) {
  const std::vector<int> signs(static_cast<std::size_t>(g.num_vertices()), 1);
  return stabilizer_sum_matches_projector(g, signs, seed);
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("fidelity needs equal qubit counts");
  std::complex<double> overlap{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) overlap += std::conj(a.amp(i)) * b.amp(i);
  return std::norm(overlap);
}

Projection project_onto(const StateVector& s, std::span<const int> sites,
                        const StateVector& basis_state) {
  const int m = s.num_qubits();
  const int k = basis_state.num_qubits();
  if (static_cast<int>(sites.size()) != k) {
    throw DimensionError("site list must match the basis state's qubit count");
  }
  if (k >= m) throw DimensionError("projection must leave at least one qubit");

  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::vector<std::size_t> site_mask(sites.size());
  for (std::size_t j = 0; j < sites.size(); ++j) {
    check_site(s, sites[j]);
    if (used[static_cast<std::size_t>(sites[j])]) {
      throw DimensionError("duplicate qubit in projection site list");
    }
    used[static_cast<std::size_t>(sites[j])] = 1;
    site_mask[j] = bit_mask(m, sites[j]);
  }
  std::vector<std::size_t> rest_mask;
  for (int q = 0; q < m; ++q) {
    if (!used[static_cast<std::size_t>(q)]) rest_mask.push_back(bit_mask(m, q));
  }
  const int r = m - k;

  std::vector<std::complex<double>> residual(std::size_t{1} << r, {0.0, 0.0});
  const std::size_t basis_dim = basis_state.dim();
  for (std::size_t rest = 0; rest < residual.size(); ++rest) {
    std::size_t base = 0;
    for (int j = 0; j < r; ++j) {
      if ((rest >> (r - 1 - j)) & 1u) base |= rest_mask[static_cast<std::size_t>(j)];
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t b = 0; b < basis_dim; ++b) {
      std::size_t idx = base;
      for (int j = 0; j < k; ++j) {
        if ((b >> (k - 1 - j)) & 1u) idx |= site_mask[static_cast<std::size_t>(j)];
      }
      acc += std::conj(basis_state.amp(b)) * s.amp(idx);
    }
    residual[rest] = acc;
  }

  double prob = 0.0;
  for (const auto& a : residual) prob += std::norm(a);
  const bool zero = prob <= 1e-12;
  if (!zero) {
    const double inv = 1.0 / std::sqrt(prob);
    for (auto& a : residual) a *= inv;
  }
  return {prob, StateVector::from_amplitudes(std::move(residual)), zero};
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int nq = a.num_qubits() + b.num_qubits();
  if (nq > kMaxOracleQubits) throw SizeLimitError("tensor product exceeds the qubit cap");
  std::vector<std::complex<double>> out(std::size_t{1} << nq);
  const std::size_t bdim = b.dim();
  for (std::size_t ia = 0; ia < a.dim(); ++ia) {
    for (std::size_t ib = 0; ib < bdim; ++ib) {
      out[(ia << b.num_qubits()) | ib] = a.amp(ia) * b.amp(ib);
    }
  }
  return StateVector::from_amplitudes(std::move(out));
}

StateVector random_state(int num_qubits, std::uint64_t seed) {
  StateVector s(num_qubits);  // validates the qubit count
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng]() {
    // (0, 1], safe for log()
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  };
  std::vector<std::complex<double>> amps(s.dim());
  for (auto& a : amps) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    a = {radius * std::cos(angle), radius * std::sin(angle)};
  }
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace gscomm
