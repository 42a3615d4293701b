#include "report.hpp"

#include <sstream>

#include "gscomm/version.hpp"

namespace gscomm::cli {

ProtocolReport make_report(const PartitionedGraph& g) {
  ProtocolReport rep;
  rep.graph.n = g.n();
  rep.graph.vertices = g.num_vertices();
  rep.graph.sender_ids = g.sender_ids();
  rep.graph.receiver_ids = g.receiver_ids();
  const EdgePartition part = classify_edges(g);
  rep.graph.e_sr = part.e_sr.size();
  rep.graph.e_s = part.e_s.size();
  rep.graph.e_r = part.e_r.size();
  rep.graph.tanner_type = part.e_s.empty() && part.e_r.empty();
  rep.graph.connected = g.connected();

  const SubgraphMatrices sm = sub_matrices(g);
  rep.gamma_t_rank = rank(sm.gamma_t);
  rep.viable = rep.gamma_t_rank == static_cast<std::size_t>(g.n());
  for (std::size_t r = 0; r < static_cast<std::size_t>(g.n()); ++r) {
    rep.gamma_t_rows.push_back(sm.gamma_t.row_string(r));
    rep.gamma_s_rows.push_back(sm.gamma_s.row_string(r));
    rep.gamma_r_rows.push_back(sm.gamma_r.row_string(r));
  }
  return rep;
}

nlohmann::json ProtocolReport::to_json() const {
  return {
      {"graph",
       {{"n", graph.n},
        {"vertices", graph.vertices},
        {"senders", graph.sender_ids},
        {"receivers", graph.receiver_ids},
        {"edges", {{"sr", graph.e_sr}, {"s", graph.e_s}, {"r", graph.e_r}}},
        {"tanner_type", graph.tanner_type},
        {"connected", graph.connected}}},
      {"viability", {{"viable", viable}, {"rank", gamma_t_rank}}},
      {"matrices",
       {{"gamma_t", gamma_t_rows}, {"gamma_s", gamma_s_rows}, {"gamma_r", gamma_r_rows}}},
      {"results", results},
      {"timing", {{"ms", elapsed_ms}}},
      {"version", std::string(kVersion)},
  };
}

namespace {

void append_ids(std::ostream& out, const std::vector<int>& ids) {
  for (const int id : ids) out << ' ' << id;
}

void append_matrix(std::ostream& out, const std::string& name, const std::string& annotation,
                   const std::vector<std::string>& rows) {
  out << name << " (" << annotation << ")\n";
  for (const auto& row : rows) {
    out << " ";
    for (const char c : row) out << ' ' << c;
    out << '\n';
  }
}

}  // namespace

std::string ProtocolReport::to_text() const {
  std::ostringstream out;
  out << "graph: n=" << graph.n << " vertices=" << graph.vertices << '\n';
  out << "senders:";
  append_ids(out, graph.sender_ids);
  out << "\nreceivers:";
  append_ids(out, graph.receiver_ids);
  out << '\n';
  out << "edges: sr=" << graph.e_sr << " s=" << graph.e_s << " r=" << graph.e_r;
  if (graph.tanner_type) out << " (Tanner-type)";
  out << '\n';
  if (!graph.connected) out << "warning: graph is disconnected\n";

  std::ostringstream senders_note, receivers_note;
  senders_note << "rows: senders";
  append_ids(senders_note, graph.sender_ids);
  senders_note << " | cols: receivers";
  append_ids(senders_note, graph.receiver_ids);
  append_matrix(out, "Gamma_T", senders_note.str(), gamma_t_rows);

  std::ostringstream s_note;
  s_note << "senders";
  append_ids(s_note, graph.sender_ids);
  append_matrix(out, "Gamma_S", s_note.str(), gamma_s_rows);

  std::ostringstream r_note;
  r_note << "receivers";
  append_ids(r_note, graph.receiver_ids);
  append_matrix(out, "Gamma_R", r_note.str(), gamma_r_rows);

  out << "viability: " << (viable ? "VIABLE" : "NOT VIABLE") << " (rank " << gamma_t_rank << '/'
      << graph.n << ")\n";
  return out.str();
}

}  // namespace gscomm::cli
