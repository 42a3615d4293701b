#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gscomm/graph.hpp"

namespace gscomm::cli {

struct GraphSummary {
  int n = 0;
  int vertices = 0;
  std::vector<int> sender_ids;
  std::vector<int> receiver_ids;
  std::size_t e_sr = 0, e_s = 0, e_r = 0;
  bool tanner_type = false;
  bool connected = false;
};

/// One record per CLI invocation: graph summary, viability verdict, the
/// sub-adjacency matrices, and a per-command results payload. Matrix rows and
/// bit vectors serialize as strings of 0/1 with vertex 1 first.
struct ProtocolReport {
  GraphSummary graph;
  bool viable = false;
  std::size_t gamma_t_rank = 0;
  std::vector<std::string> gamma_t_rows, gamma_s_rows, gamma_r_rows;
  nlohmann::json results;
  double elapsed_ms = 0.0;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Fills the graph/viability/matrix sections; `results` stays empty.
ProtocolReport make_report(const PartitionedGraph& g);

}  // namespace gscomm::cli
