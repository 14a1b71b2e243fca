#include "racg/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <sstream>

#include "racg/error.hpp"

namespace racg {

CoxeterDiagram::CoxeterDiagram(int n, const std::vector<Edge>& edges)
    : n_(n) {
  if (n < 3) throw Error(ErrorKind::TooFewVertices, "need at least 3 vertices, got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) * n, false);
  for (Edge e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "edge {" + std::to_string(e.a + 1) + ", " +
                                                  std::to_string(e.b + 1) + "} outside 1.." + std::to_string(n));
    }
    if (e.a == e.b) throw Error(ErrorKind::SyntaxError, "self-loop at vertex " + std::to_string(e.a + 1));
    if (e.a > e.b) std::swap(e.a, e.b);
    if (adj_[index(e.a, e.b)]) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge {" + std::to_string(e.a + 1) + ", " + std::to_string(e.b + 1) + "} listed twice");
    }
    adj_[index(e.a, e.b)] = adj_[index(e.b, e.a)] = true;
    edges_.push_back(e);
  }
}

std::vector<int> CoxeterDiagram::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (j != i && adjacent(i, j)) out.push_back(j);
  return out;
}

bool CoxeterDiagram::is_connected() const {
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      frontier.push(w);
    }
  }
  return reached == n_;
}

bool is_connected(const CoxeterDiagram& g) { return g.is_connected(); }

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void syntax(int line_no, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
}

long parse_int(std::string_view tok, int line_no) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    syntax(line_no, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

CoxeterDiagram parse_diagram(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens[0] != "n" || tokens.size() != 2) syntax(line_no, "expected 'n <INT>' first");
      const long v = parse_int(tokens[1], line_no);
      if (v < 3) throw Error(ErrorKind::TooFewVertices, "line " + std::to_string(line_no) + ": n = " + std::to_string(v));
      if (v > 64) syntax(line_no, "n = " + std::to_string(v) + " exceeds the supported maximum 64");
      n = static_cast<int>(v);
      continue;
    }
    if (tokens[0] != "edge" || tokens.size() != 3) syntax(line_no, "expected 'edge <i> <j>'");
    const long i = parse_int(tokens[1], line_no);
    const long j = parse_int(tokens[2], line_no);
    if (i < 1 || j < 1 || i > n || j > n) {
      throw Error(ErrorKind::IndexOutOfRange, "line " + std::to_string(line_no) + ": vertex index outside 1.." +
                                                  std::to_string(n));
    }
    if (i == j) syntax(line_no, "self-loop at vertex " + std::to_string(i));
    const Edge e{static_cast<int>(std::min(i, j)) - 1, static_cast<int>(std::max(i, j)) - 1};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
      throw Error(ErrorKind::DuplicateEdge, "line " + std::to_string(line_no) + ": edge " + std::to_string(e.a + 1) +
                                                " " + std::to_string(e.b + 1) + " repeated");
    }
    edges.push_back(e);
  }
  if (n < 0) syntax(line_no, "missing 'n <INT>' line");
  return CoxeterDiagram(n, edges);
}

std::string serialize_diagram(const CoxeterDiagram& g) {
  std::ostringstream os;
  os << "n " << g.size() << "\n";
  for (const Edge& e : g.edges()) os << "edge " << e.a + 1 << " " << e.b + 1 << "\n";
  return os.str();
}

CoxeterDiagram cycle_complement(int n) {
  if (n < 5) throw Error(ErrorKind::NTooSmall, "cycle complement needs n >= 5, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
      if (!consecutive) edges.push_back({i, j});
    }
  return CoxeterDiagram(n, edges);
}

}  // namespace racg
