#include "gscomm/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <vector>

namespace gscomm {

namespace {

std::string strip_comment_and_trim(std::string line) {
  if (const auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

std::pair<int, int> canonical_original(const gscomm::PartitionedGraph& g, int u, int v) {
  const int a = g.original_id(u);
  const int b = g.original_id(v);
  return {std::min(a, b), std::max(a, b)};
}

int parse_int(const std::string& tok, int line, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "malformed " + what + " '" + tok + "'");
  }
  return value;
}

struct Section {
  int line_no;
  std::string keyword;
  std::string rest;
};

Section read_section(const std::pair<int, std::string>& content, int expected_index) {
  static const char* kKeywords[3] = {"pairs", "senders", "edges"};
  const auto& [line_no, text] = content;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError(line_no, "malformed line: expected '" +
                                  std::string(kKeywords[expected_index]) + ": ...'");
  }
  std::string keyword = strip_comment_and_trim(text.substr(0, colon));
  if (keyword != kKeywords[expected_index]) {
    throw ParseError(line_no, "expected section '" + std::string(kKeywords[expected_index]) +
                                  "', found '" + keyword + "'");
  }
  return {line_no, keyword, text.substr(colon + 1)};
}

}  // namespace

PartitionedGraph PartitionedGraph::parse(std::istream& in) {
  std::vector<std::pair<int, std::string>> content;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string text = strip_comment_and_trim(raw);
    if (!text.empty()) content.emplace_back(line_no, std::move(text));
  }
  if (content.size() < 3) {
    throw ParseError(line_no == 0 ? 1 : line_no,
                     "expected three sections: pairs, senders, edges");
  }
  if (content.size() > 3) {
    throw ParseError(content[3].first, "unexpected content after the edges section");
  }

  const Section pairs_sec = read_section(content[0], 0);
  const Section senders_sec = read_section(content[1], 1);
  const Section edges_sec = read_section(content[2], 2);

  const auto pair_toks = split_ws(pairs_sec.rest);
  if (pair_toks.size() != 1) {
    throw ParseError(pairs_sec.line_no, "expected a single pair count");
  }
  const int n = parse_int(pair_toks[0], pairs_sec.line_no, "pair count");
  if (n < 1) throw ParseError(pairs_sec.line_no, "pair count must be at least 1");
  const int num_vertices = 2 * n;

  std::vector<int> senders;
  for (const auto& tok : split_ws(senders_sec.rest)) {
    const int id = parse_int(tok, senders_sec.line_no, "sender id");
    if (id < 1 || id > num_vertices) {
      throw ParseError(senders_sec.line_no,
                       "out-of-range vertex " + tok + " (valid: 1.." +
                           std::to_string(num_vertices) + ")");
    }
    if (std::find(senders.begin(), senders.end(), id) != senders.end()) {
      throw ParseError(senders_sec.line_no, "duplicate sender id " + tok);
    }
    senders.push_back(id);
  }
  if (static_cast<int>(senders.size()) != n) {
    throw ParseError(senders_sec.line_no,
                     "wrong sender count: expected " + std::to_string(n) + ", found " +
                         std::to_string(senders.size()));
  }

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const auto& tok : split_ws(edges_sec.rest)) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size()) {
      throw ParseError(edges_sec.line_no, "malformed edge '" + tok + "' (expected u-v)");
    }
    const int u = parse_int(tok.substr(0, dash), edges_sec.line_no, "edge endpoint");
    const int v = parse_int(tok.substr(dash + 1), edges_sec.line_no, "edge endpoint");
    for (const int w : {u, v}) {
      if (w < 1 || w > num_vertices) {
        throw ParseError(edges_sec.line_no,
                         "out-of-range vertex " + std::to_string(w) + " in edge '" + tok + "'");
      }
    }
    if (u == v) throw ParseError(edges_sec.line_no, "self-loop '" + tok + "'");
    const std::pair<int, int> canonical{std::min(u, v), std::max(u, v)};
    if (!seen.insert(canonical).second) {
      throw ParseError(edges_sec.line_no, "duplicate edge '" + tok + "'");
    }
    edges.emplace_back(canonical);
  }

  // Relabel: sorted senders -> 0..n-1, sorted receivers -> n..2n-1.
  std::sort(senders.begin(), senders.end());
  std::vector<int> internal_of(static_cast<std::size_t>(num_vertices) + 1, -1);
  PartitionedGraph g;
  g.n_ = n;
  g.original_ids_.resize(static_cast<std::size_t>(num_vertices));
  int next_sender = 0;
  for (const int id : senders) {
    internal_of[static_cast<std::size_t>(id)] = next_sender;
    g.original_ids_[static_cast<std::size_t>(next_sender)] = id;
    ++next_sender;
  }
  int next_receiver = n;
  for (int id = 1; id <= num_vertices; ++id) {
    if (internal_of[static_cast<std::size_t>(id)] == -1) {
      internal_of[static_cast<std::size_t>(id)] = next_receiver;
      g.original_ids_[static_cast<std::size_t>(next_receiver)] = id;
      ++next_receiver;
    }
  }

  g.adj_.assign(static_cast<std::size_t>(num_vertices), {});
  for (const auto& [u, v] : edges) {
    const int iu = internal_of[static_cast<std::size_t>(u)];
    const int iv = internal_of[static_cast<std::size_t>(v)];
    g.edges_.emplace_back(std::min(iu, iv), std::max(iu, iv));
    g.adj_[static_cast<std::size_t>(iu)].push_back(iv);
    g.adj_[static_cast<std::size_t>(iv)].push_back(iu);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

PartitionedGraph PartitionedGraph::parse_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

PartitionedGraph PartitionedGraph::from_parts(int n, std::vector<int> sender_ids,
                                              std::vector<std::pair<int, int>> edges) {
  std::ostringstream out;
  out << "pairs: " << n << "\nsenders:";
  for (const int id : sender_ids) out << ' ' << id;
  out << "\nedges:";
  for (const auto& [u, v] : edges) out << ' ' << u << '-' << v;
  out << '\n';
  return parse_string(out.str());
}

bool PartitionedGraph::has_edge(int u, int v) const {
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int PartitionedGraph::internal_index(int original_id) const {
  for (std::size_t i = 0; i < original_ids_.size(); ++i) {
    if (original_ids_[i] == original_id) return static_cast<int>(i);
  }
  throw Error("unknown vertex id " + std::to_string(original_id));
}

std::vector<int> PartitionedGraph::sender_ids() const {
  return {original_ids_.begin(), original_ids_.begin() + n_};
}

std::vector<int> PartitionedGraph::receiver_ids() const {
  return {original_ids_.begin() + n_, original_ids_.end()};
}

bool PartitionedGraph::connected() const {
  const auto m = static_cast<std::size_t>(num_vertices());
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int w : adj_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == m;
}

std::string PartitionedGraph::to_file_format() const {
  std::ostringstream out;
  out << "pairs: " << n_ << "\nsenders:";
  for (const int id : sender_ids()) out << ' ' << id;
  out << "\nedges:";
  std::vector<std::pair<int, int>> original;
  original.reserve(edges_.size());
  for (const auto& [u, v] : edges_) {
    original.emplace_back(canonical_original(*this, u, v));
  }
  std::sort(original.begin(), original.end());
  for (const auto& [u, v] : original) out << ' ' << u << '-' << v;
  out << '\n';
  return out.str();
}

EdgePartition classify_edges(const PartitionedGraph& g) {
  EdgePartition part;
  for (const auto& [u, v] : g.edges()) {
    const std::pair<int, int> original = canonical_original(g, u, v);
    const int sender_endpoints = (g.is_sender(u) ? 1 : 0) + (g.is_sender(v) ? 1 : 0);
    if (sender_endpoints == 1) {
      part.e_sr.emplace_back(original);
    } else if (sender_endpoints == 2) {
      part.e_s.emplace_back(original);
    } else {
      part.e_r.emplace_back(original);
    }
  }
  std::sort(part.e_sr.begin(), part.e_sr.end());
  std::sort(part.e_s.begin(), part.e_s.end());
  std::sort(part.e_r.begin(), part.e_r.end());
  return part;
}

SubgraphMatrices sub_matrices(const PartitionedGraph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  SubgraphMatrices sm{BitMatrix(n, n), BitMatrix(n, n), BitMatrix(n, n),
                      {}, {}, {}, {}};
  for (const auto& [u, v] : g.edges()) {
    const bool us = g.is_sender(u);
    const bool vs = g.is_sender(v);
    if (us && vs) {
      sm.gamma_s.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), 1);
      sm.gamma_s.set(static_cast<std::size_t>(v), static_cast<std::size_t>(u), 1);
    } else if (!us && !vs) {
      sm.gamma_r.set(static_cast<std::size_t>(u) - n, static_cast<std::size_t>(v) - n, 1);
      sm.gamma_r.set(static_cast<std::size_t>(v) - n, static_cast<std::size_t>(u) - n, 1);
    } else {
      const int s = us ? u : v;
      const int r = us ? v : u;
      sm.gamma_t.set(static_cast<std::size_t>(s), static_cast<std::size_t>(r) - n, 1);
    }
  }
  sm.gamma_s_lower = strictly_lower(sm.gamma_s);
  sm.gamma_s_upper = strictly_upper(sm.gamma_s);
  sm.gamma_r_lower = strictly_lower(sm.gamma_r);
  sm.gamma_r_upper = strictly_upper(sm.gamma_r);
  return sm;
}

bool is_viable(const PartitionedGraph& g) {
  return rank(sub_matrices(g).gamma_t) == static_cast<std::size_t>(g.n());
}

PartitionedGraph local_complement(const PartitionedGraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.num_vertices()) {
    throw Error("local complement: vertex index " + std::to_string(vertex) + " out of range");
  }
  std::set<std::pair<int, int>> edge_set(g.edges().begin(), g.edges().end());
  const auto& nbrs = g.neighbors(vertex);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const std::pair<int, int> e{std::min(nbrs[i], nbrs[j]), std::max(nbrs[i], nbrs[j])};
      if (const auto it = edge_set.find(e); it != edge_set.end()) {
        edge_set.erase(it);
      } else {
        edge_set.insert(e);
      }
    }
  }
  std::vector<std::pair<int, int>> original_edges;
  original_edges.reserve(edge_set.size());
  for (const auto& [u, v] : edge_set) {
    original_edges.emplace_back(canonical_original(g, u, v));
  }
  return PartitionedGraph::from_parts(g.n(), g.sender_ids(), std::move(original_edges));
}

MirrorGraph mirror_pair(const PartitionedGraph& g) {
  MirrorGraph mirror{g, {}, g.receiver_ids()};
  for (const int id : g.sender_ids()) {
    mirror.sender_labels.push_back(std::to_string(id) + "'");
  }
  return mirror;
}

}  // namespace gscomm
