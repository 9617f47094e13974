#include "drg/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace drg {

namespace {

[[noreturn]] void bad_params(const std::string& message) {
  throw InputError("BadParams", message);
}

bool connected(int n, const std::vector<std::vector<int>>& adj) {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

int parse_int(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw InputError("BadParams", what + ": '" + token + "' is not an integer");
  }
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), words_((n + 63) / 64), adj_(n) {
  if (n <= 0) bad_params("a graph needs at least one vertex");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      bad_params("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) bad_params("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
      bad_params("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  if (!connected(n_, adj_)) {
    throw InputError("DisconnectedInput", "graph on " + std::to_string(n) +
                                              " vertices is not connected");
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph hamming(int d, int q) {
  if (d < 1 || q < 2) bad_params("hamming requires d >= 1 and q >= 2");
  long n = 1;
  for (int i = 0; i < d; ++i) {
    n *= q;
    if (n > 2'000'000) bad_params("hamming graph too large");
  }
  std::vector<std::pair<int, int>> edges;
  for (long word = 0; word < n; ++word) {
    long place = 1;
    for (int coord = 0; coord < d; ++coord, place *= q) {
      const long digit = (word / place) % q;
      for (long other = digit + 1; other < q; ++other) {
        edges.emplace_back(static_cast<int>(word), static_cast<int>(word + (other - digit) * place));
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

Graph johnson(int n, int e) {
  if (e < 1 || n < 2 * e || n > 62) bad_params("johnson requires 1 <= e, 2e <= n <= 62");
  std::vector<std::uint64_t> subsets;
  // Lexicographic enumeration of e-subsets of {0..n-1}.
  std::vector<int> pick(e);
  for (int i = 0; i < e; ++i) pick[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int p : pick) mask |= std::uint64_t{1} << p;
    subsets.push_back(mask);
    if (subsets.size() > 200'000) bad_params("johnson graph too large");
    int i = e - 1;
    while (i >= 0 && pick[i] == n - e + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < e; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<std::pair<int, int>> edges;
  const int count = static_cast<int>(subsets.size());
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      if (__builtin_popcountll(subsets[u] & subsets[v]) == e - 1) edges.emplace_back(u, v);
    }
  }
  return Graph(count, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) bad_params("complete_bipartite requires a, b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, edges);
}

Graph kneser_6_2() {
  std::vector<std::uint32_t> pairs;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) pairs.push_back((1U << i) | (1U << j));
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 15; ++u) {
    for (int v = u + 1; v < 15; ++v) {
      if ((pairs[u] & pairs[v]) == 0) edges.emplace_back(u, v);
    }
  }
  return Graph(15, edges);
}

Graph lcf(const std::vector<int>& shifts, int repeats) {
  if (shifts.empty() || repeats < 1) bad_params("lcf requires a shift list and repeats >= 1");
  const int n = static_cast<int>(shifts.size()) * repeats;
  if (n < 4) bad_params("lcf graph needs at least 4 vertices");
  auto target = [&](int i) {
    return ((i + shifts[i % shifts.size()]) % n + n) % n;
  };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    const int j = target(i);
    if (target(j) != i) {
      bad_params("lcf shifts are not symmetric at vertex " + std::to_string(i));
    }
    if (i < j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

const std::vector<LcfCode>& named_lcf_codes() {
  static const std::vector<LcfCode> codes{
      {"heawood", {5, -5}, 7},
      {"pappus", {5, 7, -7, 7, -7, -5}, 3},
      {"desargues", {5, -5, 9, -9}, 5},
      {"tutte8", {-13, -9, 7, -7, 9, 13}, 5},
      {"tutte12",
       {17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17},
       7},
      {"foster", {17, -9, 37, -37, 9, -17}, 15},
      {"k33", {3, -3}, 3},
      {"cube", {3, -3}, 4},
  };
  return codes;
}

Graph lcf_named(const std::string& name) {
  for (const auto& code : named_lcf_codes()) {
    if (code.name == name) return lcf(code.shifts, code.repeats);
  }
  bad_params("unknown LCF graph '" + name + "'");
}

Graph read_edgelist(std::istream& in) {
  std::string line;
  int n = -1;
  long declared = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  auto parse_error = [&](const std::string& message) {
    throw InputError("ParseError", "edge list line " + std::to_string(line_no) + ": " + message);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      if (n >= 0) parse_error("second header");
      if (!(tokens >> format >> n >> declared) || format != "graph" || n < 1 || declared < 0) {
        parse_error("expected 'p graph <n> <m>'");
      }
    } else if (tag == "e") {
      if (n < 0) parse_error("edge before header");
      int u = 0;
      int v = 0;
      if (!(tokens >> u >> v)) parse_error("expected 'e <u> <v>'");
      edges.emplace_back(u, v);
    } else {
      parse_error("unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw InputError("ParseError", "edge list has no 'p graph' header");
  if (static_cast<long>(edges.size()) != declared) {
    throw InputError("ParseError", "header declares " + std::to_string(declared) +
                                       " edges, found " + std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph load_edgelist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("IoError", "cannot open edge list '" + path + "'");
  return read_edgelist(in);
}

void write_edgelist(std::ostream& out, const Graph& g) {
  out << "p graph " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

Graph build(const std::string& kind, const std::vector<std::string>& args) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      bad_params(kind + " expects " + std::to_string(count) + " argument(s), got " +
                 std::to_string(args.size()));
    }
  };
  if (kind == "hamming") {
    need(2);
    return hamming(parse_int(args[0], "d"), parse_int(args[1], "q"));
  }
  if (kind == "johnson") {
    need(2);
    return johnson(parse_int(args[0], "n"), parse_int(args[1], "e"));
  }
  if (kind == "complete_bipartite") {
    need(2);
    return complete_bipartite(parse_int(args[0], "a"), parse_int(args[1], "b"));
  }
  if (kind == "kneser_6_2") {
    need(0);
    return kneser_6_2();
  }
  if (kind == "lcf") {
    if (args.size() == 1) return lcf_named(args[0]);
    need(2);
    std::vector<int> shifts;
    std::stringstream list(args[0]);
    std::string token;
    while (std::getline(list, token, ',')) shifts.push_back(parse_int(token, "shift"));
    return lcf(shifts, parse_int(args[1], "repeats"));
  }
  if (kind == "edgelist") {
    need(1);
    return load_edgelist(args[0]);
  }
  bad_params("unknown graph kind '" + kind + "'");
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), dist_(static_cast<std::size_t>(g.order()) * g.order(), 0xFFFF) {
  for (int source = 0; source < n_; ++source) {
    std::uint16_t* row = dist_.data() + static_cast<std::size_t>(source) * n_;
    std::queue<int> frontier;
    row[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        if (row[w] == 0xFFFF) {
          row[w] = static_cast<std::uint16_t>(row[v] + 1);
          diameter_ = std::max(diameter_, static_cast<int>(row[w]));
          frontier.push(w);
        }
      }
    }
  }
}

Graph distance_graph(const Graph& g, int i) {
  if (i < 1) bad_params("distance must be at least 1");
  const DistanceMatrix dist(g);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (dist(u, v) == i) edges.emplace_back(u, v);
    }
  }
  try {
    return Graph(g.order(), edges);
  } catch (const InputError& e) {
    if (e.kind() == "DisconnectedInput") {
      throw InputError("DisconnectedResult",
                       "distance-" + std::to_string(i) + " graph is not connected");
    }
    throw;
  }
}

Graph halved_graph(const Graph& g, int side) {
  if (side != 0 && side != 1) bad_params("side must be 0 or 1");
  const int n = g.order();
  std::vector<int> color(n, -1);
  color[0] = 0;
  std::queue<int> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        frontier.push(w);
      } else if (color[w] == color[v]) {
        throw InputError("NotBipartite", "edge (" + std::to_string(v) + "," + std::to_string(w) +
                                             ") joins vertices of the same class");
      }
    }
  }
  std::vector<int> index(n, -1);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (color[v] == side) index[v] = count++;
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<char> mark(n, 0);
  for (int u = 0; u < n; ++u) {
    if (color[u] != side) continue;
    std::vector<int> reached;
    for (int w : g.neighbors(u)) {
      for (int x : g.neighbors(w)) {
        if (x > u && !mark[x]) {
          mark[x] = 1;
          reached.push_back(x);
        }
      }
    }
    std::sort(reached.begin(), reached.end());
    for (int x : reached) {
      edges.emplace_back(index[u], index[x]);
      mark[x] = 0;
    }
  }
  try {
    return Graph(count, edges);
  } catch (const InputError& e) {
    if (e.kind() == "DisconnectedInput") {
      throw InputError("DisconnectedResult", "halved graph is not connected");
    }
    throw;
  }
}

}  // namespace drg
