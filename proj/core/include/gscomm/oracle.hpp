#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gscomm/errors.hpp"
#include "gscomm/gf2.hpp"
#include "gscomm/graph.hpp"

// Brute-force dense state-vector simulator: the ground truth every symbolic
// protocol result is checked against.
//
// Conventions, fixed so hand-computed amplitude tables are bit-exact:
//   - qubit 0 (graph vertex 1) is the MOST significant bit of the amplitude
//     index, so a 2-qubit state lists amplitudes in basis order 00,01,10,11;
//   - equality of states is never tested through the global phase; use
//     fidelity() or an explicitly phase-aligned comparison.
// All arithmetic is double precision; tolerances are stated per operation.

namespace gscomm {

inline constexpr int kMaxOracleQubits = 13;

/// Single-qubit Pauli acting on `site` (0-based).
struct PauliOp {
  enum class Axis { X, Y, Z };
  Axis axis;
  int site;
};

/// X on x_site, Z on every member of z_sites (x_site never among them).
struct StabilizerGenerator {
  int x_site;
  std::vector<int> z_sites;
};

/// The generator attached to `vertex`: X there, Z on each neighbor.
StabilizerGenerator vertex_generator(const PartitionedGraph& g, int vertex);

/// Immutable dense amplitude vector; operations return fresh states.
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits; throws SizeLimitError above the cap.
  explicit StateVector(int num_qubits);

  /// |+>^{⊗ num_qubits}.
  static StateVector uniform_plus(int num_qubits);
  /// Takes ownership of raw amplitudes (must have power-of-two length).
  static StateVector from_amplitudes(std::vector<std::complex<double>> amps);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::complex<double> amp(std::size_t index) const { return amps_[index]; }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  double norm_squared() const;

 private:
  StateVector(int num_qubits, std::vector<std::complex<double>> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  int num_qubits_ = 0;
  std::vector<std::complex<double>> amps_;
};

/// CZ along every edge of g applied to |+>^{⊗2n}. Every vertex generator has
/// eigenvalue +1 on the result.
StateVector build_graph_state(const PartitionedGraph& g);

StateVector apply_pauli(const StateVector& s, const PauliOp& p);
StateVector apply_cz(const StateVector& s, int a, int b);
StateVector apply_generator(const StateVector& s, const StabilizerGenerator& gen);

/// Z^k applied to the graph state: the member of the orthogonal measurement
/// basis with generator signs (-1)^{k_i}. k must have one bit per vertex.
StateVector graph_basis_state(const PartitionedGraph& g, const BitVector& k);

/// +1 or -1 when gen maps s to ±s within 1e-10 per amplitude; empty when s
/// is not an eigenstate.
std::optional<int> stabilizer_eigenvalue(const StateVector& s, const StabilizerGenerator& gen);

/// Verifies on a random state that 2^{-2n} * sum over all generator products
/// acts as the rank-one projector onto the graph state (tolerance 1e-10).
/// Capped at 2n <= 8 (the sum has 4^n terms).
bool graph_state_projector_check(const PartitionedGraph& g, std::uint64_t seed = 1);

/// Same check with explicit per-generator signs; all +1 reproduces
/// graph_state_projector_check, one -1 is the negative control.
bool stabilizer_sum_matches_projector(const PartitionedGraph& g, std::span<const int> signs,
                                      std::uint64_t seed = 1);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

struct Projection {
  double probability;
  StateVector residual;  // remaining qubits in ascending original order;
                         // renormalized unless zero_outcome
  bool zero_outcome;     // probability below 1e-12
};

/// Projects the qubits listed in `sites` (ordered to match basis_state's
/// qubits) onto basis_state and traces them out.
Projection project_onto(const StateVector& s, std::span<const int> sites,
                        const StateVector& basis_state);

/// a's qubits become the leading (most significant) qubits of the product.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Reproducible Haar-like random pure state: amplitudes are standard complex
/// Gaussians from mt19937_64 via Box-Muller, then normalized. The generator
/// is spelled out here (not std::normal_distribution) so identical seeds give
/// identical states on every platform.
StateVector random_state(int num_qubits, std::uint64_t seed);

inline constexpr std::string_view kRandomStateAlgorithm = "mt19937_64+box-muller";

}  // namespace gscomm
