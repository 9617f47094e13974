#include "drg/graphs.hpp"
#include "drg/spectrum.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>

namespace drg {

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& bits) {
  int total = 0;
  for (auto word : bits) total += __builtin_popcountll(word);
  return total;
}

void set(Bits& bits, int v) { bits[v >> 6] |= std::uint64_t{1} << (v & 63); }
void reset(Bits& bits, int v) { bits[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

template <typename Fn>
void for_each_bit(const Bits& bits, Fn&& fn) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      const int bit = __builtin_ctzll(word);
      fn(static_cast<int>(w * 64 + bit));
      word &= word - 1;
    }
  }
}

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Bron-Kerbosch with Tomita pivoting on bitsets.
struct CliqueSearch {
  const Graph& g;
  int min_size;
  std::vector<std::vector<int>>& out;
  std::vector<int> current;

  void expand(Bits& p, Bits& x) {
    const int p_count = popcount(p);
    if (p_count == 0) {
      if (popcount(x) == 0 && static_cast<int>(current.size()) >= min_size) {
        auto clique = current;
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
      }
      return;
    }
    if (static_cast<int>(current.size()) + p_count < min_size) return;

    int pivot = -1;
    int best = -1;
    auto consider = [&](int u) {
      const std::uint64_t* row = g.row(u);
      int overlap = 0;
      for (std::size_t w = 0; w < p.size(); ++w) overlap += __builtin_popcountll(p[w] & row[w]);
      if (overlap > best) {
        best = overlap;
        pivot = u;
      }
    };
    for_each_bit(p, consider);
    for_each_bit(x, consider);

    Bits candidates(p.size());
    const std::uint64_t* pivot_row = g.row(pivot);
    for (std::size_t w = 0; w < p.size(); ++w) candidates[w] = p[w] & ~pivot_row[w];

    for_each_bit(candidates, [&](int v) {
      const std::uint64_t* row = g.row(v);
      Bits next_p(p.size());
      Bits next_x(x.size());
      for (std::size_t w = 0; w < p.size(); ++w) {
        next_p[w] = p[w] & row[w];
        next_x[w] = x[w] & row[w];
      }
      current.push_back(v);
      expand(next_p, next_x);
      current.pop_back();
      reset(p, v);
      set(x, v);
    });
  }
};

// Exact cover of the edge set by candidate cliques (Knuth's Algorithm X,
// choosing the edge with the fewest live candidates).
class EdgeCover {
 public:
  EdgeCover(const Graph& g, const std::vector<std::vector<int>>& cliques)
      : cliques_(cliques), edge_cliques_(g.edge_count()), edge_index_(g.order()) {
    int id = 0;
    for (const auto& [u, v] : g.edges()) {
      edge_index_[u].emplace_back(v, id);
      ++id;
    }
    clique_edges_.resize(cliques.size());
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      const auto& clique = cliques[c];
      for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          const int e = edge_id(clique[i], clique[j]);
          clique_edges_[c].push_back(e);
          edge_cliques_[e].push_back(static_cast<int>(c));
        }
      }
    }
  }

  /// Index of an edge with no candidate clique, or -1.
  int uncoverable_edge() const {
    for (std::size_t e = 0; e < edge_cliques_.size(); ++e) {
      if (edge_cliques_[e].empty()) return static_cast<int>(e);
    }
    return -1;
  }

  /// Index of an edge lying in two or more candidates, or -1.
  int shared_edge() const {
    for (std::size_t e = 0; e < edge_cliques_.size(); ++e) {
      if (edge_cliques_[e].size() > 1) return static_cast<int>(e);
    }
    return -1;
  }

  /// Chosen clique indices in increasing order; nullopt when no exact cover
  /// exists. Throws InfeasibleError("SearchLimit") past `budget` nodes.
  std::optional<std::vector<int>> solve(long budget) {
    if (shared_edge() < 0) {
      if (uncoverable_edge() >= 0) return std::nullopt;
      std::vector<int> all(cliques_.size());
      for (std::size_t c = 0; c < all.size(); ++c) all[c] = static_cast<int>(c);
      return all;
    }
    covered_.assign(edge_cliques_.size(), 0);
    blocked_.assign(cliques_.size(), 0);
    budget_ = budget;
    chosen_.clear();
    if (!search(static_cast<long>(edge_cliques_.size()))) return std::nullopt;
    auto result = chosen_;
    std::sort(result.begin(), result.end());
    return result;
  }

  int edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto& list = edge_index_[u];
    auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(v, -1));
    return it->second;
  }

 private:
  bool search(long remaining) {
    if (remaining == 0) return true;
    if (--budget_ < 0) {
      throw InfeasibleError("SearchLimit", "clique cover search exceeded its node budget");
    }
    int best_edge = -1;
    int best_count = std::numeric_limits<int>::max();
    for (std::size_t e = 0; e < edge_cliques_.size(); ++e) {
      if (covered_[e]) continue;
      int live = 0;
      for (int c : edge_cliques_[e]) live += blocked_[c] == 0;
      if (live < best_count) {
        best_count = live;
        best_edge = static_cast<int>(e);
        if (live <= 1) break;
      }
    }
    if (best_count == 0) return false;
    for (int c : edge_cliques_[best_edge]) {
      if (blocked_[c]) continue;
      // Take c: mark its edges covered and block every clique sharing one.
      for (int e : clique_edges_[c]) {
        covered_[e] = 1;
        for (int other : edge_cliques_[e]) ++blocked_[other];
      }
      chosen_.push_back(c);
      if (search(remaining - static_cast<long>(clique_edges_[c].size()))) return true;
      chosen_.pop_back();
      for (int e : clique_edges_[c]) {
        covered_[e] = 0;
        for (int other : edge_cliques_[e]) --blocked_[other];
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& cliques_;
  std::vector<std::vector<int>> clique_edges_;
  std::vector<std::vector<int>> edge_cliques_;
  std::vector<std::vector<std::pair<int, int>>> edge_index_;
  std::vector<char> covered_;
  std::vector<int> blocked_;
  std::vector<int> chosen_;
  long budget_ = 0;
};

constexpr long kCoverBudget = 5'000'000;

std::pair<int, int> nth_edge(const Graph& g, int index) { return g.edges()[index]; }

CliqueCover make_cover(const Graph& g, int size, std::vector<std::vector<int>> cliques) {
  CliqueCover cover;
  cover.clique_size = size;
  cover.per_vertex_count.assign(g.order(), 0);
  for (const auto& clique : cliques) {
    for (int v : clique) ++cover.per_vertex_count[v];
  }
  cover.cliques = std::move(cliques);
  const int first = cover.per_vertex_count.empty() ? 0 : cover.per_vertex_count.front();
  const bool uniform = std::all_of(cover.per_vertex_count.begin(), cover.per_vertex_count.end(),
                                   [&](int count) { return count == first; });
  cover.uniform_count = uniform ? first : -1;
  return cover;
}

}  // namespace

NotDistanceRegular::NotDistanceRegular(int x_, int y_, int distance_, char which_,
                                       long expected_, long found_)
    : InfeasibleError("NotDistanceRegular",
                      "vertices " + pair_text(x_, y_) + " at distance " +
                          std::to_string(distance_) + ": " + std::string(1, which_) + "_" +
                          std::to_string(distance_) + " = " + std::to_string(found_) +
                          (expected_ < 0 ? std::string(", distance absent from vertex 0")
                                         : ", expected " + std::to_string(expected_))),
      x(x_),
      y(y_),
      distance(distance_),
      which(which_),
      expected(expected_),
      found(found_) {}

IntersectionArray check_drg(const Graph& g) {
  const int n = g.order();
  const DistanceMatrix dist(g);
  const int diameter = dist.diameter();

  // Reference triples (c_i, a_i, b_i) from vertex 0.
  std::vector<std::array<long, 3>> reference(diameter + 1, {-1, -1, -1});
  auto triple = [&](int x, int y) {
    const int i = dist(x, y);
    std::array<long, 3> counts{0, 0, 0};
    for (int z : g.neighbors(y)) {
      const int j = dist(x, z);
      if (j == i - 1) ++counts[0];
      else if (j == i) ++counts[1];
      else ++counts[2];
    }
    return counts;
  };
  for (int y = 0; y < n; ++y) {
    auto& slot = reference[dist(0, y)];
    if (slot[0] < 0) slot = triple(0, y);
  }

  struct Mismatch {
    int y = -1;
    int distance = 0;
    char which = 'c';
    long expected = 0;
    long found = 0;
  };
  std::vector<Mismatch> mismatches(n);
  detail::parallel_for(n, [&](int x) {
    for (int y = 0; y < n; ++y) {
      const int i = dist(x, y);
      const auto counts = triple(x, y);
      static constexpr char kNames[3] = {'c', 'a', 'b'};
      for (int t = 0; t < 3; ++t) {
        const long expected = i <= diameter ? reference[i][t] : -1;
        if (expected != counts[t]) {
          mismatches[x] = {y, i, kNames[t], expected, counts[t]};
          return;
        }
      }
    }
  });
  for (int x = 0; x < n; ++x) {
    const auto& m = mismatches[x];
    if (m.y >= 0) throw NotDistanceRegular(x, m.y, m.distance, m.which, m.expected, m.found);
  }

  std::vector<Integer> b;
  std::vector<Integer> c;
  for (int i = 0; i < diameter; ++i) b.emplace_back(reference[i][2]);
  for (int i = 1; i <= diameter; ++i) c.emplace_back(reference[i][0]);
  return IntersectionArray(std::move(b), std::move(c));
}

std::optional<ClawWitness> find_claw(const Graph& g, int n) {
  if (n < 1) throw InputError("BadParams", "claw size must be at least 1");
  const int order = g.order();
  std::vector<std::optional<ClawWitness>> found(order);
  detail::parallel_for(order, [&](int center) {
    const auto& nbrs = g.neighbors(center);
    if (static_cast<int>(nbrs.size()) < n) return;
    std::vector<int> leaves;
    // Leaves chosen by increasing position, so the first hit is lexicographically least.
    std::function<bool(std::size_t)> extend = [&](std::size_t start) {
      if (static_cast<int>(leaves.size()) == n) return true;
      const std::size_t need = n - leaves.size();
      for (std::size_t i = start; i + need <= nbrs.size(); ++i) {
        const int v = nbrs[i];
        bool independent = true;
        for (int leaf : leaves) {
          if (g.adjacent(leaf, v)) {
            independent = false;
            break;
          }
        }
        if (!independent) continue;
        leaves.push_back(v);
        if (extend(i + 1)) return true;
        leaves.pop_back();
      }
      return false;
    };
    if (extend(0)) found[center] = ClawWitness{center, leaves};
  });
  for (auto& witness : found) {
    if (witness) return witness;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int min_size) {
  const int n = g.order();
  const int words = g.words();
  std::vector<std::vector<std::vector<int>>> per_vertex(n);
  // Each maximal clique is reported from its smallest vertex.
  detail::parallel_for(n, [&](int v) {
    Bits p(words);
    Bits x(words);
    for (int w : g.neighbors(v)) {
      if (w > v) set(p, w);
      else set(x, w);
    }
    CliqueSearch search{g, min_size, per_vertex[v], {v}};
    search.expand(p, x);
  });
  std::vector<std::vector<int>> out;
  for (auto& list : per_vertex) {
    for (auto& clique : list) out.push_back(std::move(clique));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CliqueCover delsarte_cover(const Graph& g, const IntersectionArray& array) {
  const auto report = eigenvalues(array);
  const auto bound = delsarte_bound(array, report);
  if (!bound.exact || !bound.integral || bound.degenerate) {
    throw InfeasibleError("NonIntegralCliqueSize",
                          "Delsarte bound 1 - k/theta_min is not an integer");
  }
  const long size = to_long(bound.value.get_num());
  if (size < 2 || size > g.order()) {
    throw InfeasibleError("NonIntegralCliqueSize", "Delsarte clique size out of range");
  }

  std::vector<std::vector<int>> candidates;
  for (auto& clique : maximal_cliques(g, static_cast<int>(size))) {
    if (static_cast<long>(clique.size()) == size) candidates.push_back(std::move(clique));
  }
  EdgeCover cover(g, candidates);
  if (const int e = cover.uncoverable_edge(); e >= 0) {
    const auto [u, v] = nth_edge(g, e);
    throw InfeasibleError("NoCover", "edge " + pair_text(u, v) + " lies in no Delsarte clique");
  }
  const auto chosen = cover.solve(kCoverBudget);
  if (!chosen) {
    throw InfeasibleError("NoCover", "no set of Delsarte cliques covers every edge exactly once");
  }
  std::vector<std::vector<int>> cliques;
  for (int index : *chosen) cliques.push_back(candidates[index]);

  auto result = make_cover(g, static_cast<int>(size), std::move(cliques));
  // Each vertex has k neighbors and each clique through it covers size-1 of them.
  const Rational expected = -report.theta_min().value;
  if (result.uniform_count < 0 || Rational(result.uniform_count) != expected) {
    throw AnomalyError("CoverCountMismatch",
                       "exact Delsarte cover with per-vertex count other than -theta_min");
  }
  return result;
}

CliqueCover verify_lines(const Graph& g, const IntersectionArray& array) {
  const Integer k = array.k();
  const Integer a1 = array.a_at(1);
  if (k <= 3 || 3 * k <= 8 * (a1 + 1)) {
    throw InputError("PreconditionFailed", "k = " + to_string(k) + " is not above max{3, 8(a1+1)/3} = max{3, " +
                                               to_string(ratio(8 * (a1 + 1), 3)) + "}");
  }
  if (const auto claw = find_claw(g, 4)) {
    throw InputError("PreconditionFailed",
                     "graph has a 4-claw centred at " + std::to_string(claw->center));
  }
  const long threshold = to_long(k - 2 * (a1 + 1) + 1);
  auto lines = maximal_cliques(g, static_cast<int>(std::max(1L, threshold)));

  EdgeCover index(g, lines);
  if (const int e = index.uncoverable_edge(); e >= 0) {
    const auto [u, v] = nth_edge(g, e);
    throw InfeasibleError("LineNotUnique", "edge " + pair_text(u, v) + " lies in no line");
  }
  if (const int e = index.shared_edge(); e >= 0) {
    const auto [u, v] = nth_edge(g, e);
    throw InfeasibleError("LineNotUnique", "edge " + pair_text(u, v) + " lies in two or more lines");
  }
  const Rational line_size = 1 + ratio(k, 3);
  for (const auto& line : lines) {
    if (Rational(static_cast<long>(line.size())) != line_size) {
      std::string text;
      for (int v : line) text += (text.empty() ? "" : ",") + std::to_string(v);
      throw InfeasibleError("LineSizeWrong", "line {" + text + "} has " +
                                                 std::to_string(line.size()) +
                                                 " vertices, expected " + to_string(line_size));
    }
  }
  const int size = static_cast<int>(lines.empty() ? 0 : lines.front().size());
  auto cover = make_cover(g, size, std::move(lines));
  for (int v = 0; v < g.order(); ++v) {
    if (cover.per_vertex_count[v] != 3) {
      throw InfeasibleError("LineCountNotThree", "vertex " + std::to_string(v) + " lies in " +
                                                     std::to_string(cover.per_vertex_count[v]) +
                                                     " lines");
    }
  }
  return cover;
}

LocalReport local_check(const Graph& g) {
  const int n = g.order();
  struct Local {
    std::vector<LocalComponent> components;
    bool cliques = true;
  };
  std::vector<Local> locals(n);
  detail::parallel_for(n, [&](int v) {
    const auto& nbrs = g.neighbors(v);
    std::vector<char> seen(nbrs.size(), 0);
    auto& local = locals[v];
    for (std::size_t start = 0; start < nbrs.size(); ++start) {
      if (seen[start]) continue;
      std::vector<std::size_t> component{start};
      seen[start] = 1;
      for (std::size_t head = 0; head < component.size(); ++head) {
        const int u = nbrs[component[head]];
        for (std::size_t j = 0; j < nbrs.size(); ++j) {
          if (!seen[j] && g.adjacent(u, nbrs[j])) {
            seen[j] = 1;
            component.push_back(j);
          }
        }
      }
      std::size_t internal = 0;
      for (std::size_t i = 0; i < component.size(); ++i) {
        for (std::size_t j = i + 1; j < component.size(); ++j) {
          internal += g.adjacent(nbrs[component[i]], nbrs[component[j]]);
        }
      }
      const std::size_t size = component.size();
      const bool clique = internal == size * (size - 1) / 2;
      local.components.push_back({static_cast<int>(size), clique});
      local.cliques = local.cliques && clique;
    }
    std::sort(local.components.begin(), local.components.end(),
              [](const LocalComponent& a, const LocalComponent& b) {
                if (a.size != b.size) return a.size > b.size;
                return a.is_clique && !b.is_clique;
              });
  });

  LocalReport report;
  report.components = locals[0].components;
  for (int v = 0; v < n; ++v) {
    report.disjoint_cliques = report.disjoint_cliques && locals[v].cliques;
    if (report.uniform && locals[v].components != report.components) {
      report.uniform = false;
      report.first_nonuniform_vertex = v;
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const ClawWitness& claw) {
  return {{"center", claw.center}, {"leaves", claw.leaves}};
}

nlohmann::ordered_json to_json(const CliqueCover& cover) {
  nlohmann::ordered_json out;
  out["clique_size"] = cover.clique_size;
  out["clique_count"] = cover.cliques.size();
  out["per_vertex_count"] = cover.uniform_count;
  out["cliques"] = cover.cliques;
  return out;
}

nlohmann::ordered_json to_json(const LocalReport& report) {
  nlohmann::ordered_json components = nlohmann::ordered_json::array();
  for (const auto& c : report.components) {
    components.push_back({{"size", c.size}, {"clique", c.is_clique}});
  }
  nlohmann::ordered_json out;
  out["components"] = components;
  out["uniform"] = report.uniform;
  out["disjoint_cliques"] = report.disjoint_cliques;
  if (!report.uniform) out["first_nonuniform_vertex"] = report.first_nonuniform_vertex;
  return out;
}

}  // namespace drg
