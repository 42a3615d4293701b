#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "gscomm/gf2.hpp"
#include "gscomm/graph.hpp"
#include "gscomm/oracle.hpp"

// Deterministic many-to-one dense coding over a shared 2n-qubit graph state.
// Sender i encodes two classical bits (a_i, b_i) by applying X^{a_i} Z^{b_i}
// to its qubit; the receiver measures all 2n generator eigenvalues and reads
// the signs off as the outcome k = (b', a').
//
// Index convention, fixed by the oracle test on the asymmetric 4-vertex path
// (tests/test_dense_coding.cpp): with (gamma_t)_{ij} = 1 iff sender i
// neighbors receiver j, an X on sender l flips the generator eigenvalue of
// every receiver adjacent to l, so the receiver-side syndrome is
//     a' = transpose(gamma_t) * a
// and decoding inverts that transposed map. The sender-side signs pick up
// the sender-sender edges:
//     b' = b xor gamma_s * a.

namespace gscomm {

struct Message {
  BitVector a;  // X exponents, one per sender
  BitVector b;  // Z exponents, one per sender
  friend bool operator==(const Message&, const Message&) = default;
};

struct Syndrome {
  BitVector b_prime;  // sender-generator signs
  BitVector a_prime;  // receiver-generator signs

  /// The announced measurement outcome k = (b', a').
  BitVector outcome_bits() const { return b_prime.concat(a_prime); }

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

/// Predicts the measured syndrome by Pauli/generator anticommutation
/// counting, without touching amplitudes.
Syndrome encode_symbolic(const PartitionedGraph& g, const Message& m);

/// The encoded state itself: prod_i X_i^{a_i} Z_i^{b_i} |G>. Capped at
/// 2n <= 12.
StateVector encode_oracle(const PartitionedGraph& g, const Message& m);

/// Recovers the message: a from the inverted (transposed) sender-receiver
/// block, then b = b' xor gamma_s * a. Throws NotViableError when the block
/// is singular.
Message decode(const PartitionedGraph& g, const Syndrome& s);

struct RoundTripReport {
  std::uint64_t total = 0;       // messages swept (4^n)
  std::uint64_t decoded_ok = 0;  // decode(encode(m)) == m
  bool bijective = false;        // all syndromes pairwise distinct
  /// Two distinct messages sharing a syndrome, present iff not bijective.
  std::optional<std::pair<Message, Message>> collision;
  bool oracle_checked = false;
  std::uint64_t oracle_ok = 0;   // messages whose measured eigenvalues match
};

/// Sweeps all 4^n messages. Symbolic-only runs allow n <= 6; with_oracle
/// additionally measures every encoded state's generator eigenvalues and is
/// capped at n <= 4.
RoundTripReport roundtrip_exhaustive(const PartitionedGraph& g, bool with_oracle = false);

}  // namespace gscomm
