#pragma once

#include <vector>

#include "gscomm/gf2.hpp"
#include "gscomm/graph.hpp"
#include "gscomm/oracle.hpp"

// Faithful one-to-many teleportation of an unknown n-qubit state through a
// 2n-qubit graph state. The measuring party holds the receiver-side graph
// qubits plus the unknown qubits, measures them jointly in the basis
// Z^k |G'> built on the mirror graph, and announces the 2n-bit outcome k;
// receiver i then applies Z^{c_x,i} X^{c_z,i} to its qubit.
//
// The corrections are GF(2)-linear in k (k_< = first n bits, k_> = last n):
//     c_x = k_<  xor  transpose(gamma_t^{-1} gamma_s) * k_>
//     c_z = transpose(gamma_t^{-1}) * k_>
// with the same transposed gamma_t indexing the dense-coding module uses;
// the full-outcome oracle sweeps in tests/test_teleportation.cpp pin this
// form down.

namespace gscomm {

struct Outcome {
  BitVector k;  // length 2n, bit i announced for measured qubit i

  BitVector lower() const { return k.slice(0, k.size() / 2); }
  BitVector upper() const { return k.slice(k.size() / 2, k.size() / 2); }
};

struct Correction {
  BitVector c_x;  // Z exponents, one per receiver
  BitVector c_z;  // X exponents, one per receiver
  friend bool operator==(const Correction&, const Correction&) = default;
};

/// Throws NotViableError when gamma_t is singular (no corrections exist).
Correction correction_vectors(const PartitionedGraph& g, const Outcome& o);

struct TeleportOutcome {
  double probability;
  StateVector post;   // corrected residual on the n receiver qubits
  double fid;         // fidelity against the input; NaN on zero_outcome
  bool zero_outcome;  // the projector annihilated the state
};

/// Full amplitude-level run of one measurement branch: prepares
/// |G> (qubits 0..2n-1) tensor |input> (qubits 2n..3n-1), projects the
/// unknown qubits followed by the measuring party's graph qubits onto
/// Z^k |G'>, applies the corrections, and compares with the input.
/// Needs 3n <= 13 qubits.
TeleportOutcome teleport_oracle(const PartitionedGraph& g, const StateVector& input,
                                const Outcome& o);

struct OutcomeRecord {
  BitVector k;
  double probability;
  double fid;  // NaN when zero_outcome or when the graph is not viable
  bool zero_outcome;
};

struct SweepReport {
  bool viable = false;
  double min_fid = 0.0;          // over nonzero outcomes; NaN when not viable
  double probability_sum = 0.0;  // 1 within 1e-10 for any graph
  int graph_qubits = 0;          // entanglement consumed per run: 2n
  int classical_bits = 0;        // announced per run: 2n
  std::vector<OutcomeRecord> outcomes;
};

/// Sweeps all 4^n measurement outcomes for one input. On viable graphs every
/// nonzero outcome is corrected and scored; otherwise only the outcome
/// distribution is reported.
SweepReport run_all_outcomes(const PartitionedGraph& g, const StateVector& input);

}  // namespace gscomm
