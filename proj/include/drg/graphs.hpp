#pragma once

#include "drg/arrays.hpp"
#include "drg/errors.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drg {

/// Simple, undirected, connected graph on vertices 0..n-1. Neighbor lists
/// are sorted; an adjacency bitset backs O(1) adjacency queries and the
/// clique searches.
class Graph {
 public:
  /// Throws InputError("BadParams") on self-loops, duplicate or out-of-range
  /// edges and InputError("DisconnectedInput") if the graph is disconnected.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  int words() const { return words_; }
  /// Bitset row of v, `words()` 64-bit words.
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

 private:
  int n_;
  int words_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
};

// Constructions. All throw InputError("BadParams") on invalid parameters.
Graph hamming(int d, int q);
Graph johnson(int n, int e);
Graph complete_bipartite(int a, int b);
/// 2-subsets of a 6-set, adjacent when disjoint.
Graph kneser_6_2();
/// Cubic Hamiltonian graph: the cycle 0..n-1 plus chords i ~ i + shifts[i mod len],
/// n = len * repeats.
Graph lcf(const std::vector<int>& shifts, int repeats);

struct LcfCode {
  std::string name;
  std::vector<int> shifts;
  int repeats;
};

/// heawood, pappus, desargues, tutte8, tutte12, foster, plus k33 and cube.
const std::vector<LcfCode>& named_lcf_codes();
Graph lcf_named(const std::string& name);

/// `p graph <n> <m>` header then m lines `e <u> <v>`, 0-indexed; lines
/// starting with `c` are comments. Throws InputError("ParseError").
Graph read_edgelist(std::istream& in);
/// Throws InputError("IoError") when the file cannot be read.
Graph load_edgelist(const std::string& path);
void write_edgelist(std::ostream& out, const Graph& g);

/// Dispatches on a kind name: hamming d q | johnson n e |
/// complete_bipartite a b | kneser_6_2 | lcf <name> | lcf <s1,s2,...> <repeats>
/// | edgelist <path>.
Graph build(const std::string& kind, const std::vector<std::string>& args);

/// All-pairs BFS distances, row-major n*n.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);
  int operator()(int x, int y) const { return dist_[static_cast<std::size_t>(x) * n_ + y]; }
  int diameter() const { return diameter_; }

 private:
  int n_;
  int diameter_ = 0;
  std::vector<std::uint16_t> dist_;
};

/// Adjacency = distance exactly i. Throws InputError("DisconnectedResult").
Graph distance_graph(const Graph& g, int i);

/// One bipartition class (side 0 contains vertex 0), adjacency = distance 2,
/// vertices renumbered in increasing original order. Throws
/// InputError("NotBipartite") or InputError("DisconnectedResult").
Graph halved_graph(const Graph& g, int side);

class NotDistanceRegular : public InfeasibleError {
 public:
  NotDistanceRegular(int x, int y, int distance, char which, long expected, long found);

  int x;
  int y;
  int distance;
  char which;     // 'c', 'a' or 'b'
  long expected;  // -1 when the distance never occurs from vertex 0
  long found;
};

/// BFS from every vertex; checks that c_i, a_i, b_i depend only on
/// i = d(x, y). Throws NotDistanceRegular with the first counterexample in
/// (x, y) order. A complete graph yields InputError("InvalidArray").
IntersectionArray check_drg(const Graph& g);

struct ClawWitness {
  int center = -1;
  std::vector<int> leaves;
};

/// Lexicographically least n-claw: smallest center, then lexicographically
/// least leaf set.
std::optional<ClawWitness> find_claw(const Graph& g, int n);

/// Every maximal clique with at least `min_size` vertices, each sorted, in
/// lexicographic order.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, int min_size = 1);

struct CliqueCover {
  int clique_size = 0;
  std::vector<std::vector<int>> cliques;
  std::vector<int> per_vertex_count;
  int uniform_count = 0;
};

/// Finds a set of Delsarte cliques (size 1 - k/theta_min) covering each edge
/// exactly once. Throws InfeasibleError("NonIntegralCliqueSize") or
/// InfeasibleError("NoCover").
CliqueCover delsarte_cover(const Graph& g, const IntersectionArray& array);

/// Lines are maximal cliques with at least k - 2(a_1+1) + 1 vertices. Checks
/// that every edge lies in exactly one line, every vertex in exactly three,
/// and every line has 1 + k/3 vertices. Throws InputError("PreconditionFailed")
/// when k <= max{3, 8(a_1+1)/3} or a 4-claw exists, otherwise
/// InfeasibleError("LineNotUnique" | "LineCountNotThree" | "LineSizeWrong").
CliqueCover verify_lines(const Graph& g, const IntersectionArray& array);

struct LocalComponent {
  int size = 0;
  bool is_clique = false;
  friend bool operator==(const LocalComponent&, const LocalComponent&) = default;
};

struct LocalReport {
  /// Components of the local graph of vertex 0, largest first.
  std::vector<LocalComponent> components;
  bool uniform = true;  // every local graph has the same component signature
  bool disjoint_cliques = true;  // every component of every local graph is a clique
  int first_nonuniform_vertex = -1;
};

LocalReport local_check(const Graph& g);

nlohmann::ordered_json to_json(const ClawWitness& claw);
nlohmann::ordered_json to_json(const CliqueCover& cover);
nlohmann::ordered_json to_json(const LocalReport& report);

}  // namespace drg
