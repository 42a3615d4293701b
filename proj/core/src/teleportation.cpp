#include "gscomm/teleportation.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace gscomm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_shapes(const PartitionedGraph& g, const StateVector& input) {
  if (input.num_qubits() != g.n()) {
    throw DimensionError("input state must have one qubit per sender/receiver pair");
  }
  if (3 * g.n() > kMaxOracleQubits) {
    throw SizeLimitError("teleportation simulation needs 3n <= " +
                         std::to_string(kMaxOracleQubits) + " qubits");
  }
}

std::vector<int> measurement_sites(int n) {
  // Basis qubit order: unknown qubits first, then the measuring party's
  // graph qubits.
  std::vector<int> sites;
  sites.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sites.push_back(2 * n + i);
  for (int i = 0; i < n; ++i) sites.push_back(n + i);
  return sites;
}

}  // namespace

Correction correction_vectors(const PartitionedGraph& g, const Outcome& o) {
  if (static_cast<int>(o.k.size()) != g.num_vertices()) {
    throw DimensionError("outcome must carry one bit per graph vertex");
  }
  const SubgraphMatrices sm = sub_matrices(g);
  BitMatrix inv;
  try {
    inv = invert(sm.gamma_t);
  } catch (const SingularError&) {
    throw NotViableError();
  }
  const BitVector k_lo = o.lower();
  const BitVector k_hi = o.upper();
  Correction c;
  c.c_z = transpose(inv) * k_hi;
  c.c_x = k_lo ^ (transpose(inv * sm.gamma_s) * k_hi);
  return c;
}

TeleportOutcome teleport_oracle(const PartitionedGraph& g, const StateVector& input,
                                const Outcome& o) {
  check_shapes(g, input);
  const Correction corr = correction_vectors(g, o);  // rejects non-viable graphs up front
  const int n = g.n();

  const StateVector full = tensor(build_graph_state(g), input);
  const MirrorGraph mirror = mirror_pair(g);
  const StateVector basis = graph_basis_state(mirror.graph, o.k);
  const std::vector<int> sites = measurement_sites(n);

  Projection proj = project_onto(full, sites, basis);
  if (proj.zero_outcome) {
    return {proj.probability, std::move(proj.residual), kNaN, true};
  }

  StateVector post = std::move(proj.residual);
  for (int i = 0; i < n; ++i) {
    // Z^{c_x,i} X^{c_z,i}: the X factor acts first.
    if (corr.c_z[static_cast<std::size_t>(i)]) post = apply_pauli(post, {PauliOp::Axis::X, i});
    if (corr.c_x[static_cast<std::size_t>(i)]) post = apply_pauli(post, {PauliOp::Axis::Z, i});
  }
  const double fid = fidelity(post, input);
  return {proj.probability, std::move(post), fid, false};
}

SweepReport run_all_outcomes(const PartitionedGraph& g, const StateVector& input) {
  check_shapes(g, input);
  const int n = g.n();

  SweepReport report;
  report.viable = is_viable(g);
  report.graph_qubits = 2 * n;
  report.classical_bits = 2 * n;
  report.min_fid = report.viable ? 1.0 : kNaN;

  const std::uint64_t num_outcomes = std::uint64_t{1} << (2 * n);
  report.outcomes.reserve(num_outcomes);

  // Only needed on the non-viable path, where corrections do not exist and
  // only the outcome distribution can be reported.
  std::optional<StateVector> full;
  if (!report.viable) full = tensor(build_graph_state(g), input);
  const MirrorGraph mirror = mirror_pair(g);
  const std::vector<int> sites = measurement_sites(n);

  for (std::uint64_t kv = 0; kv < num_outcomes; ++kv) {
    const Outcome o{BitVector::from_unsigned(kv, 2 * static_cast<std::size_t>(n))};
    if (report.viable) {
      TeleportOutcome t = teleport_oracle(g, input, o);
      report.probability_sum += t.probability;
      if (!t.zero_outcome && t.fid < report.min_fid) report.min_fid = t.fid;
      report.outcomes.push_back({o.k, t.probability, t.fid, t.zero_outcome});
    } else {
      const StateVector basis = graph_basis_state(mirror.graph, o.k);
      const Projection proj = project_onto(*full, sites, basis);
      report.probability_sum += proj.probability;
      report.outcomes.push_back({o.k, proj.probability, kNaN, proj.zero_outcome});
    }
  }
  return report;
}

}  // namespace gscomm
