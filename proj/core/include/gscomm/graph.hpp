#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gscomm/errors.hpp"
#include "gscomm/gf2.hpp"

namespace gscomm {

// Simple undirected graph on 2n vertices split into n senders and n
// receivers. Vertices are relabeled on construction: senders occupy internal
// slots 0..n-1 (sorted by original id) and receivers n..2n-1. Files, the CLI
// and reports speak original 1-based ids; in-memory indices are 0-based.
// Instances are immutable after construction.
class PartitionedGraph {
 public:
  /// Builds and validates a graph from original-label parts. `sender_ids`
  /// must hold n distinct vertices in 1..2n; edges use original ids with no
  /// loops or duplicates. Throws ParseError on any violation.
  static PartitionedGraph from_parts(int n, std::vector<int> sender_ids,
                                     std::vector<std::pair<int, int>> edges);

  /// Parses the three-section text format (see to_file_format). '#' starts a
  /// comment; blank lines are ignored; section order is fixed.
  static PartitionedGraph parse(std::istream& in);
  static PartitionedGraph parse_string(std::string_view text);

  int n() const { return n_; }
  int num_vertices() const { return 2 * n_; }

  // Internal-index queries (0-based; sender iff v < n).
  bool is_sender(int v) const { return v < n_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  /// Canonical internal edge list: pairs (u, v) with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int original_id(int internal) const { return original_ids_[static_cast<std::size_t>(internal)]; }
  /// Maps an original 1-based id back to the internal index; throws Error if unknown.
  int internal_index(int original_id) const;
  std::vector<int> sender_ids() const;
  std::vector<int> receiver_ids() const;

  bool connected() const;

  /// Canonical three-line form:
  ///   pairs: <n>
  ///   senders: <id> ... <id>
  ///   edges: <u>-<v> ...
  /// parse(to_file_format()) reproduces *this exactly.
  std::string to_file_format() const;

  friend bool operator==(const PartitionedGraph&, const PartitionedGraph&) = default;

 private:
  PartitionedGraph() = default;

  int n_ = 0;
  std::vector<int> original_ids_;            // internal -> original
  std::vector<std::vector<int>> adj_;        // sorted neighbor lists, internal
  std::vector<std::pair<int, int>> edges_;   // canonical, internal
};

/// Edge classes by endpoint membership; pairs carry original ids, canonical
/// order. The three sets partition the edge set.
struct EdgePartition {
  std::vector<std::pair<int, int>> e_sr;  // one sender endpoint, one receiver
  std::vector<std::pair<int, int>> e_s;   // both senders
  std::vector<std::pair<int, int>> e_r;   // both receivers
};

/// The n-by-n sub-adjacency blocks.
///   gamma_t(i, j) = 1 iff sender i and receiver n+j share an edge
///   gamma_s / gamma_r: adjacency among senders / among receivers
/// plus strict triangular splits in internal label order, so
/// transpose(*_upper) == *_lower and lower + upper == full.
struct SubgraphMatrices {
  BitMatrix gamma_t;
  BitMatrix gamma_s;
  BitMatrix gamma_r;
  BitMatrix gamma_s_lower, gamma_s_upper;
  BitMatrix gamma_r_lower, gamma_r_upper;
};

EdgePartition classify_edges(const PartitionedGraph& g);

SubgraphMatrices sub_matrices(const PartitionedGraph& g);

/// Full GF(2) rank of gamma_t: the graph supports deterministic dense coding
/// and faithful teleportation iff this holds.
bool is_viable(const PartitionedGraph& g);

/// Toggles every edge between two neighbors of `vertex` (internal index).
/// The partition is unchanged. Involutive; a no-op at degree <= 1 vertices.
PartitionedGraph local_complement(const PartitionedGraph& g, int vertex);

/// Structural copy of `g` in which each sender keeps its adjacency but is
/// renamed with a primed label, sharing the receiver vertices. The copy's
/// sub-matrices equal the original's; it carries the measurement-side graph
/// for teleportation.
struct MirrorGraph {
  PartitionedGraph graph;
  std::vector<std::string> sender_labels;  // "3'" for original sender 3
  std::vector<int> receiver_ids;           // shared with the original
};

MirrorGraph mirror_pair(const PartitionedGraph& g);

}  // namespace gscomm
