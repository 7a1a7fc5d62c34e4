#include "mgp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

namespace mgp {

namespace {

struct Line {
  std::string text;
  std::size_t number; // 1-based position in the file
};

bool is_blank(const std::string &s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

bool is_comment(const std::string &s) {
  for (const char c : s) {
    if (c == '%') {
      return true;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return false;
}

/// All non-comment lines; trailing blank lines are dropped.
std::vector<Line> content_lines(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') {
      text.pop_back();
    }
    if (is_comment(text)) {
      continue;
    }
    lines.push_back({text, number});
  }
  while (!lines.empty() && is_blank(lines.back().text)) {
    lines.pop_back();
  }
  return lines;
}

std::vector<std::string_view> tokens_of(const std::string &s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
      ++j;
    }
    if (j > i) {
      out.push_back(std::string_view(s).substr(i, j - i));
    }
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw IoError("line " + std::to_string(line) + ": not an integer: '" +
                  std::string(tok) + "'");
  }
  return value;
}

double parse_double(std::string_view tok, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw IoError("line " + std::to_string(line) + ": not a number: '" +
                  std::string(tok) + "'");
  }
  return value;
}

struct AdjEntry {
  NodeID target;
  EdgeWeight weight;
  std::size_t line;
};

} // namespace

Graph read_metis(const std::filesystem::path &path) {
  const std::vector<Line> lines = content_lines(path);
  if (lines.empty()) {
    throw IoError(path.string() + ": missing header line");
  }
  const auto header = tokens_of(lines[0].text);
  if (header.size() < 2 || header.size() > 3) {
    throw IoError("line " + std::to_string(lines[0].number) +
                  ": header must be 'n m' or 'n m fmt'");
  }
  const long long n_ll = parse_int(header[0], lines[0].number);
  const long long m_ll = parse_int(header[1], lines[0].number);
  if (n_ll < 0 || m_ll < 0) {
    throw IoError("line " + std::to_string(lines[0].number) +
                  ": negative node or edge count");
  }
  bool has_node_weights = false;
  bool has_edge_weights = false;
  if (header.size() == 3) {
    const long long fmt = parse_int(header[2], lines[0].number);
    if (fmt != 0 && fmt != 1 && fmt != 10 && fmt != 11) {
      throw IoError("line " + std::to_string(lines[0].number) +
                    ": format must be 0, 1, 10 or 11");
    }
    has_edge_weights = fmt % 10 == 1;
    has_node_weights = fmt / 10 == 1;
  }
  const NodeID n = static_cast<NodeID>(n_ll);
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw IoError(path.string() + ": expected " + std::to_string(n) +
                  " adjacency lines, found " +
                  std::to_string(lines.size() - 1));
  }

  std::vector<NodeWeight> node_weights(n, 1);
  std::vector<std::vector<AdjEntry>> adj(n);
  for (NodeID u = 0; u < n; ++u) {
    const Line &line = lines[u + 1];
    const auto toks = tokens_of(line.text);
    std::size_t pos = 0;
    if (has_node_weights) {
      if (toks.empty()) {
        throw IoError("line " + std::to_string(line.number) +
                      ": missing node weight");
      }
      const long long w = parse_int(toks[0], line.number);
      if (w < 0) {
        throw IoError("line " + std::to_string(line.number) +
                      ": negative node weight");
      }
      node_weights[u] = w;
      pos = 1;
    }
    const std::size_t rest = toks.size() - pos;
    if (has_edge_weights && rest % 2 != 0) {
      throw IoError("line " + std::to_string(line.number) +
                    ": neighbor list must be (target, weight) pairs");
    }
    while (pos < toks.size()) {
      const long long target = parse_int(toks[pos++], line.number);
      if (target < 1 || target > n_ll) {
        throw IoError("line " + std::to_string(line.number) +
                      ": neighbor " + std::to_string(target) +
                      " out of range 1.." + std::to_string(n_ll));
      }
      const NodeID v = static_cast<NodeID>(target - 1);
      if (v == u) {
        throw IoError("line " + std::to_string(line.number) +
                      ": self loop at node " + std::to_string(target));
      }
      EdgeWeight w = 1;
      if (has_edge_weights) {
        w = parse_int(toks[pos++], line.number);
        if (w <= 0) {
          throw IoError("line " + std::to_string(line.number) +
                        ": edge weight must be positive");
        }
      }
      adj[u].push_back({v, w, line.number});
    }
    std::sort(adj[u].begin(), adj[u].end(),
              [](const AdjEntry &a, const AdjEntry &b) {
                return a.target < b.target;
              });
    for (std::size_t i = 1; i < adj[u].size(); ++i) {
      if (adj[u][i].target == adj[u][i - 1].target) {
        throw IoError("line " + std::to_string(line.number) +
                      ": duplicate neighbor " +
                      std::to_string(adj[u][i].target + 1));
      }
    }
  }

  std::vector<EdgeDef> edges;
  edges.reserve(static_cast<std::size_t>(m_ll));
  std::size_t directed = 0;
  for (NodeID u = 0; u < n; ++u) {
    directed += adj[u].size();
    for (const AdjEntry &e : adj[u]) {
      const auto &back = adj[e.target];
      const auto it = std::lower_bound(
          back.begin(), back.end(), u,
          [](const AdjEntry &a, NodeID v) { return a.target < v; });
      if (it == back.end() || it->target != u) {
        throw IoError("line " + std::to_string(e.line) + ": edge " +
                      std::to_string(u + 1) + "-" +
                      std::to_string(e.target + 1) +
                      " is not listed in both directions");
      }
      if (it->weight != e.weight) {
        throw IoError("line " + std::to_string(e.line) + ": edge " +
                      std::to_string(u + 1) + "-" +
                      std::to_string(e.target + 1) +
                      " has mismatched weights " + std::to_string(e.weight) +
                      " and " + std::to_string(it->weight));
      }
      if (u < e.target) {
        edges.push_back({u, e.target, e.weight});
      }
    }
  }
  if (directed != 2 * static_cast<std::size_t>(m_ll)) {
    throw IoError(path.string() + ": header announces " +
                  std::to_string(m_ll) + " edges but the lists hold " +
                  std::to_string(directed) + " entries (expected " +
                  std::to_string(2 * m_ll) + ")");
  }
  try {
    return build_graph(n, edges, node_weights);
  } catch (const std::invalid_argument &e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_metis(const Graph &g, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  bool has_node_weights = false;
  for (NodeID v = 0; v < g.n(); ++v) {
    has_node_weights |= g.node_weight(v) != 1;
  }
  bool has_edge_weights = false;
  for (EdgeID e = 0; e < g.m(); ++e) {
    has_edge_weights |= g.edge(e).weight != 1;
  }
  out << g.n() << ' ' << g.m();
  if (has_node_weights) {
    out << ' ' << (has_edge_weights ? "11" : "10");
  } else if (has_edge_weights) {
    out << ' ' << "1";
  }
  out << '\n';
  for (NodeID u = 0; u < g.n(); ++u) {
    std::vector<std::pair<NodeID, EdgeWeight>> nbrs;
    nbrs.reserve(g.degree(u));
    for (const Arc &arc : g.arcs(u)) {
      nbrs.emplace_back(arc.target, arc.weight);
    }
    std::sort(nbrs.begin(), nbrs.end());
    bool first = true;
    if (has_node_weights) {
      out << g.node_weight(u);
      first = false;
    }
    for (const auto &[v, w] : nbrs) {
      if (!first) {
        out << ' ';
      }
      out << v + 1;
      if (has_edge_weights) {
        out << ' ' << w;
      }
      first = false;
    }
    out << '\n';
  }
  if (!out) {
    throw IoError("failed while writing " + path.string());
  }
}

Coords read_coords(const std::filesystem::path &path, NodeID n) {
  const std::vector<Line> lines = content_lines(path);
  if (lines.size() != n) {
    throw IoError(path.string() + ": expected " + std::to_string(n) +
                  " coordinate lines, found " + std::to_string(lines.size()));
  }
  Coords coords(n);
  for (NodeID v = 0; v < n; ++v) {
    const auto toks = tokens_of(lines[v].text);
    if (toks.size() != 2) {
      throw IoError("line " + std::to_string(lines[v].number) +
                    ": expected 'x y'");
    }
    coords[v] = {parse_double(toks[0], lines[v].number),
                 parse_double(toks[1], lines[v].number)};
  }
  return coords;
}

void write_coords(const Coords &coords, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out.precision(17);
  for (const auto &[x, y] : coords) {
    out << x << ' ' << y << '\n';
  }
  if (!out) {
    throw IoError("failed while writing " + path.string());
  }
}

void write_partition(const std::vector<BlockID> &block_of,
                     const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  for (const BlockID b : block_of) {
    out << b << '\n';
  }
  if (!out) {
    throw IoError("failed while writing " + path.string());
  }
}

std::vector<BlockID> read_partition(const std::filesystem::path &path,
                                    NodeID n) {
  const std::vector<Line> lines = content_lines(path);
  if (lines.size() != n) {
    throw IoError(path.string() + ": expected " + std::to_string(n) +
                  " lines, found " + std::to_string(lines.size()));
  }
  std::vector<BlockID> blocks(n);
  for (NodeID v = 0; v < n; ++v) {
    const auto toks = tokens_of(lines[v].text);
    if (toks.size() != 1) {
      throw IoError("line " + std::to_string(lines[v].number) +
                    ": expected one block id");
    }
    const long long b = parse_int(toks[0], lines[v].number);
    if (b < 0) {
      throw IoError("line " + std::to_string(lines[v].number) +
                    ": negative block id");
    }
    blocks[v] = static_cast<BlockID>(b);
  }
  return blocks;
}

} // namespace mgp
