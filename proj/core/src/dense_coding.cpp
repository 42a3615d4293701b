#include "gscomm/dense_coding.hpp"

#include <string>
#include <unordered_map>

namespace gscomm {

namespace {

void check_message(const PartitionedGraph& g, const Message& m) {
  const auto n = static_cast<std::size_t>(g.n());
  if (m.a.size() != n || m.b.size() != n) {
    throw DimensionError("message vectors must have one bit per sender");
  }
}

}  // namespace

Syndrome encode_symbolic(const PartitionedGraph& g, const Message& m) {
  check_message(g, m);
  const SubgraphMatrices sm = sub_matrices(g);
  Syndrome s;
  s.a_prime = transpose(sm.gamma_t) * m.a;
  s.b_prime = m.b ^ (sm.gamma_s * m.a);
  return s;
}

StateVector encode_oracle(const PartitionedGraph& g, const Message& m) {
  check_message(g, m);
  if (g.num_vertices() > 12) {
    throw SizeLimitError("oracle encoding capped at 12 qubits");
  }
  StateVector s = build_graph_state(g);
  for (int i = 0; i < g.n(); ++i) {
    // X^{a_i} Z^{b_i}: the Z factor acts first.
    if (m.b[static_cast<std::size_t>(i)]) s = apply_pauli(s, {PauliOp::Axis::Z, i});
    if (m.a[static_cast<std::size_t>(i)]) s = apply_pauli(s, {PauliOp::Axis::X, i});
  }
  return s;
}

Message decode(const PartitionedGraph& g, const Syndrome& s) {
  const auto n = static_cast<std::size_t>(g.n());
  if (s.a_prime.size() != n || s.b_prime.size() != n) {
    throw DimensionError("syndrome vectors must have one bit per sender");
  }
  const SubgraphMatrices sm = sub_matrices(g);
  BitMatrix decode_map;
  try {
    decode_map = invert(transpose(sm.gamma_t));
  } catch (const SingularError&) {
    throw NotViableError();
  }
  Message m;
  m.a = decode_map * s.a_prime;
  m.b = s.b_prime ^ (sm.gamma_s * m.a);
  return m;
}

RoundTripReport roundtrip_exhaustive(const PartitionedGraph& g, bool with_oracle) {
  const int n = g.n();
  if (n > 6) throw SizeLimitError("exhaustive sweep capped at n = 6");
  if (with_oracle && n > 4) {
    throw SizeLimitError("exhaustive sweep with oracle confirmation capped at n = 4");
  }

  const bool viable = is_viable(g);
  const std::uint64_t side = std::uint64_t{1} << n;

  RoundTripReport report;
  report.total = side * side;
  report.bijective = true;
  report.oracle_checked = with_oracle;

  std::unordered_map<std::uint64_t, Message> seen_syndromes;
  seen_syndromes.reserve(report.total);

  for (std::uint64_t av = 0; av < side; ++av) {
    for (std::uint64_t bv = 0; bv < side; ++bv) {
      const Message m{BitVector::from_unsigned(av, static_cast<std::size_t>(n)),
                      BitVector::from_unsigned(bv, static_cast<std::size_t>(n))};
      const Syndrome syn = encode_symbolic(g, m);

      const std::uint64_t key = syn.outcome_bits().to_unsigned();
      if (const auto [it, inserted] = seen_syndromes.try_emplace(key, m); !inserted) {
        if (report.bijective) {
          report.bijective = false;
          report.collision = std::make_pair(it->second, m);
        }
      }

      if (viable && decode(g, syn) == m) ++report.decoded_ok;

      if (with_oracle) {
        const StateVector encoded = encode_oracle(g, m);
        const BitVector k = syn.outcome_bits();
        bool agree = true;
        for (int v = 0; v < g.num_vertices() && agree; ++v) {
          const auto eig = stabilizer_eigenvalue(encoded, vertex_generator(g, v));
          const int expected = k[static_cast<std::size_t>(v)] ? -1 : +1;
          agree = eig.has_value() && *eig == expected;
        }
        if (agree) ++report.oracle_ok;
      }
    }
  }
  return report;
}

}  // namespace gscomm
