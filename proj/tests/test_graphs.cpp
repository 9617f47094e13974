#include "drg/classify.hpp"
#include "drg/geometry.hpp"
#include "drg/graphs.hpp"
#include "drg/spectrum.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cstdlib>
#include <set>
#include <sstream>

using namespace drg;

namespace {

template <typename Fn>
std::string error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

// Brute-force claw check: every n-subset of every neighborhood.
bool has_claw_brute(const Graph& g, int n) {
  for (int c = 0; c < g.order(); ++c) {
    const auto& nb = g.neighbors(c);
    const int d = static_cast<int>(nb.size());
    if (d < n) continue;
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    while (true) {
      bool independent = true;
      for (int i = 0; i < n && independent; ++i) {
        for (int j = i + 1; j < n && independent; ++j) {
          if (g.adjacent(nb[pick[i]], nb[pick[j]])) independent = false;
        }
      }
      if (independent) return true;
      int i = n - 1;
      while (i >= 0 && pick[i] == d - n + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

// Brute-force maximal cliques by subset enumeration (small graphs only).
std::vector<std::vector<int>> cliques_brute(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<int> set;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) set.push_back(v);
    }
    bool clique = true;
    for (std::size_t i = 0; i < set.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < set.size() && clique; ++j) clique = g.adjacent(set[i], set[j]);
    }
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (mask >> v & 1U) continue;
      bool joins = true;
      for (int u : set) joins = joins && g.adjacent(u, v);
      if (joins) maximal = false;
    }
    if (maximal) out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("constructions have the expected size") {
  const auto h = hamming(3, 3);
  CHECK(h.order() == 27);
  for (int v = 0; v < h.order(); ++v) CHECK(h.degree(v) == 6);

  const auto j = johnson(6, 3);
  CHECK(j.order() == 20);
  for (int v = 0; v < j.order(); ++v) CHECK(j.degree(v) == 9);

  const auto k = kneser_6_2();
  CHECK(k.order() == 15);
  // Brute-force lambda and mu over all pairs.
  std::set<int> lambdas;
  std::set<int> mus;
  for (int u = 0; u < 15; ++u) {
    CHECK(k.degree(u) == 6);
    for (int v = u + 1; v < 15; ++v) {
      int common = 0;
      for (int w = 0; w < 15; ++w) common += k.adjacent(u, w) && k.adjacent(v, w);
      (k.adjacent(u, v) ? lambdas : mus).insert(common);
    }
  }
  CHECK(lambdas == std::set<int>{1});
  CHECK(mus == std::set<int>{3});
  CHECK(check_drg(k) == make_array({6, 4}, {1, 3}));

  CHECK(complete_bipartite(3, 4).edge_count() == 12);
}

TEST_CASE("construction errors") {
  CHECK(error_kind([] { hamming(3, 1); }) == "BadParams");
  CHECK(error_kind([] { johnson(5, 3); }) == "BadParams");
  CHECK(error_kind([] { complete_bipartite(0, 3); }) == "BadParams");
  CHECK(error_kind([] { lcf({5, -5}, 0); }) == "BadParams");
  CHECK(error_kind([] { lcf({5, 3}, 7); }) == "BadParams");  // chords not symmetric
  CHECK(error_kind([] { lcf_named("petersen"); }) == "BadParams");
  CHECK(error_kind([] { Graph(3, {{0, 0}}); }) == "BadParams");
  CHECK(error_kind([] { Graph(3, {{0, 1}, {1, 0}, {1, 2}}); }) == "BadParams");
  CHECK(error_kind([] { Graph(3, {{0, 3}}); }) == "BadParams");
  CHECK(error_kind([] { Graph(4, {{0, 1}, {2, 3}}); }) == "DisconnectedInput");
  CHECK(error_kind([] { build("hamming", {"3"}); }) == "BadParams");
  CHECK(error_kind([] { build("hamming", {"3", "x"}); }) == "BadParams");
  CHECK(error_kind([] { build("torus", {}); }) == "BadParams");
}

TEST_CASE("check_drg reproduces closed-form arrays") {
  for (int d = 2; d <= 4; ++d) {
    for (int q = 2; q <= 5; ++q) {
      if (d == 4 && q > 3) continue;
      CAPTURE(d);
      CAPTURE(q);
      CHECK(check_drg(hamming(d, q)) == oracle::hamming_array(d, q));
    }
  }
  for (int n = 6; n <= 10; ++n) {
    for (int e = 2; e <= 3; ++e) {
      if (2 * e > n) continue;
      CAPTURE(n);
      CHECK(check_drg(johnson(n, e)) == oracle::johnson_array(n, e));
    }
  }
  CHECK(check_drg(hamming(3, 3)) == make_array({6, 4, 2}, {1, 2, 3}));
  CHECK(check_drg(johnson(6, 3)) == make_array({9, 4, 1}, {1, 4, 9}));
}

TEST_CASE("check_drg agrees with the pairwise oracle") {
  for (const auto& g : {hamming(3, 3), johnson(7, 3), kneser_6_2(), lcf_named("desargues")}) {
    std::vector<long> b;
    std::vector<long> c;
    REQUIRE(oracle::intersection_numbers(g, b, c));
    CHECK(check_drg(g) == oracle::array_of(b, c));
  }
}

TEST_CASE("check_drg rejects non-distance-regular graphs") {
  try {
    check_drg(path(4));
    FAIL("path accepted");
  } catch (const NotDistanceRegular& e) {
    CHECK(e.kind() == "NotDistanceRegular");
    CHECK(e.x >= 0);
    CHECK(e.found != e.expected);
  }
  // Regular but not distance-regular: the 3-prism.
  const Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_THROWS_AS(check_drg(prism), NotDistanceRegular);
  CHECK(error_kind([] { check_drg(complete(4)); }) == "InvalidArray");
}

TEST_CASE("named LCF graphs give the cubic table") {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"k33", "K33"},         {"heawood", "Heawood"}, {"pappus", "Pappus"},
      {"desargues", "Desargues"}, {"tutte8", "Tutte 8-cage"}, {"tutte12", "Tutte 12-cage"},
      {"foster", "Foster"}};
  for (const auto& [code, name] : expected) {
    CAPTURE(code);
    const auto arr = check_drg(lcf_named(code));
    const auto it = std::find_if(cubic_table().begin(), cubic_table().end(),
                                 [&](const KnownArray& e) { return e.name == name; });
    REQUIRE(it != cubic_table().end());
    CHECK(arr == it->array);
  }
  CHECK(check_drg(lcf_named("cube")) == make_array({3, 2, 1}, {1, 2, 3}));
  CHECK(lcf_named("foster").order() == 90);
  CHECK(check_drg(lcf_named("foster")) ==
        make_array({3, 2, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 2, 2, 2, 3}));
}

TEST_CASE("distance and halved graphs") {
  const auto halved = halved_graph(lcf_named("foster"), 0);
  CHECK(halved.order() == 45);
  CHECK(check_drg(halved) == make_array({6, 4, 2, 1}, {1, 1, 4, 6}));
  CHECK(check_drg(halved_graph(lcf_named("foster"), 1)) == make_array({6, 4, 2, 1}, {1, 1, 4, 6}));

  const auto h3 = distance_graph(hamming(3, 3), 3);
  CHECK(h3.order() == 27);
  for (int v = 0; v < 27; ++v) CHECK(h3.degree(v) == 8);
  CHECK(derive(check_drg(hamming(3, 3))).k_shell[3] == 8);

  const auto k3 = halved_graph(complete_bipartite(3, 3), 0);
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);

  CHECK(error_kind([] { halved_graph(kneser_6_2(), 0); }) == "NotBipartite");
  CHECK(error_kind([] { halved_graph(hamming(3, 2), 2); }) == "BadParams");
  // Distance-2 graph of the 4-cycle is two disjoint edges.
  CHECK(error_kind([] { distance_graph(hamming(2, 2), 2); }) == "DisconnectedResult");
}

TEST_CASE("find_claw") {
  const auto w = find_claw(hamming(4, 2), 4);
  REQUIRE(w.has_value());
  CHECK(w->center == 0);
  CHECK(w->leaves == std::vector<int>{1, 2, 4, 8});

  CHECK_FALSE(find_claw(hamming(3, 3), 4).has_value());
  CHECK(find_claw(complete_bipartite(3, 3), 3).has_value());
  CHECK_FALSE(find_claw(complete_bipartite(3, 3), 4).has_value());

  for (const auto& g : {hamming(3, 3), hamming(3, 4), johnson(6, 3), johnson(7, 3), kneser_6_2(),
                        lcf_named("pappus"), hamming(4, 2), halved_graph(lcf_named("foster"), 0)}) {
    for (int n = 2; n <= 4; ++n) {
      const auto claw = find_claw(g, n);
      CHECK(claw.has_value() == has_claw_brute(g, n));
      if (!claw) continue;
      CHECK(static_cast<int>(claw->leaves.size()) == n);
      for (int leaf : claw->leaves) CHECK(g.adjacent(claw->center, leaf));
      for (std::size_t i = 0; i < claw->leaves.size(); ++i) {
        for (std::size_t j = i + 1; j < claw->leaves.size(); ++j) {
          CHECK_FALSE(g.adjacent(claw->leaves[i], claw->leaves[j]));
        }
      }
    }
  }
}

TEST_CASE("maximal_cliques agree with subset enumeration") {
  for (const auto& g : {kneser_6_2(), hamming(2, 3), johnson(6, 2), lcf_named("heawood"),
                        complete_bipartite(3, 4), path(5)}) {
    CHECK(maximal_cliques(g) == cliques_brute(g));
  }
  const auto big = maximal_cliques(johnson(6, 3), 4);
  CHECK(big.size() == 15 + 15);  // one per 2-subset and one per 4-subset
}

TEST_CASE("delsarte_cover examples") {
  const auto h = delsarte_cover(hamming(3, 3), check_drg(hamming(3, 3)));
  CHECK(h.clique_size == 3);
  CHECK(h.cliques.size() == 27);
  CHECK(h.uniform_count == 3);

  const auto j = delsarte_cover(johnson(6, 3), check_drg(johnson(6, 3)));
  CHECK(j.clique_size == 4);
  CHECK(j.uniform_count == 3);

  const auto k = delsarte_cover(kneser_6_2(), check_drg(kneser_6_2()));
  CHECK(k.clique_size == 3);
  CHECK(k.cliques.size() == 15);
  CHECK(k.uniform_count == 3);
}

TEST_CASE("delsarte_cover covers each edge once") {
  for (const auto& g : {hamming(3, 3), hamming(3, 4), hamming(3, 5), johnson(6, 3), johnson(7, 3),
                        johnson(8, 3), kneser_6_2(), lcf_named("foster")}) {
    const auto arr = check_drg(g);
    CAPTURE(format(arr));
    const auto cover = delsarte_cover(g, arr);
    std::size_t pairs = 0;
    std::set<std::pair<int, int>> seen;
    for (const auto& c : cover.cliques) {
      CHECK(static_cast<int>(c.size()) == cover.clique_size);
      pairs += c.size() * (c.size() - 1) / 2;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t jdx = i + 1; jdx < c.size(); ++jdx) {
          CHECK(g.adjacent(c[i], c[jdx]));
          CHECK(seen.insert({c[i], c[jdx]}).second);
        }
      }
    }
    CHECK(pairs == g.edge_count());
    CHECK(Rational(cover.uniform_count) == -eigenvalues(arr).theta_min().value);
  }
}

TEST_CASE("delsarte_cover failures") {
  // Pentagon: irrational theta_min.
  const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(error_kind([&] { delsarte_cover(c5, check_drg(c5)); }) == "NonIntegralCliqueSize");
  // Petersen: theta_min = -2, Delsarte size 2.5.
  const Graph petersen = distance_graph(johnson(5, 2), 2);
  CHECK(error_kind([&] { delsarte_cover(petersen, check_drg(petersen)); }) == "NonIntegralCliqueSize");
  // J(5,2): theta_min = -2, the five point cliques of size 4 cover every edge.
  const auto j52 = johnson(5, 2);
  CHECK_NOTHROW(delsarte_cover(j52, check_drg(j52)));
}

TEST_CASE("verify_lines") {
  for (int q = 3; q <= 5; ++q) {
    const auto g = hamming(3, q);
    const auto lines = verify_lines(g, check_drg(g));
    CHECK(lines.clique_size == q);
    CHECK(lines.uniform_count == 3);
    CHECK(static_cast<int>(lines.cliques.size()) == 3 * q * q);
  }
  const auto k = verify_lines(kneser_6_2(), check_drg(kneser_6_2()));
  CHECK(k.uniform_count == 3);
  CHECK(k.clique_size == 3);

  // Preconditions: claw present, or k too small relative to a_1.
  CHECK(error_kind([] { verify_lines(hamming(4, 2), check_drg(hamming(4, 2))); }) == "PreconditionFailed");
  CHECK(error_kind([] { verify_lines(johnson(7, 3), check_drg(johnson(7, 3))); }) == "PreconditionFailed");
  CHECK(error_kind([] { verify_lines(lcf_named("heawood"), check_drg(lcf_named("heawood"))); }) ==
        "PreconditionFailed");
}

TEST_CASE("local_check") {
  const auto h = local_check(hamming(3, 3));
  CHECK(h.uniform);
  CHECK(h.disjoint_cliques);
  CHECK(h.components == std::vector<LocalComponent>(3, LocalComponent{2, true}));

  const auto j = local_check(johnson(6, 3));
  CHECK(j.uniform);
  CHECK_FALSE(j.disjoint_cliques);
  REQUIRE(j.components.size() == 1);
  CHECK(j.components[0].size == 9);
  CHECK_FALSE(j.components[0].is_clique);

  const auto k = local_check(complete_bipartite(3, 3));
  CHECK(k.components == std::vector<LocalComponent>(3, LocalComponent{1, true}));

  const auto p = local_check(path(3));
  CHECK_FALSE(p.uniform);
  CHECK(p.first_nonuniform_vertex == 1);
}

TEST_CASE("edge list round trip and errors") {
  const auto g = lcf_named("pappus");
  std::stringstream buffer;
  write_edgelist(buffer, g);
  const auto back = read_edgelist(buffer);
  CHECK(back.edges() == g.edges());

  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edgelist(in);
  };
  CHECK(parse("c comment\np graph 3 2\ne 0 1\n\ne 1 2\n").edge_count() == 2);
  CHECK(error_kind([&] { parse("e 0 1\n"); }) == "ParseError");
  CHECK(error_kind([&] { parse("p graph 3 3\ne 0 1\ne 1 2\n"); }) == "ParseError");
  CHECK(error_kind([&] { parse("p graph 3 2\ne 0 1\nx 1 2\n"); }) == "ParseError");
  CHECK(error_kind([&] { parse("p graph 3 2\ne 0 1\ne 1 1\n"); }) == "BadParams");
  CHECK(error_kind([&] { parse("p graph 3 2\ne 0 1\ne 0 1\n"); }) == "BadParams");
  CHECK(error_kind([&] { parse("p graph 4 2\ne 0 1\ne 2 3\n"); }) == "DisconnectedInput");
  CHECK(error_kind([] { load_edgelist("/nonexistent/graph.el"); }) == "IoError");
}

TEST_CASE("results do not depend on the thread count") {
  const auto g = halved_graph(lcf_named("foster"), 0);
  auto run = [&] {
    std::ostringstream out;
    out << format(check_drg(g)) << ' ';
    out << to_json(local_check(g)).dump() << ' ';
    const auto claw = find_claw(hamming(4, 2), 4);
    out << to_json(*claw).dump() << ' ';
    out << maximal_cliques(johnson(7, 3), 1).size() << ' ';
    out << to_json(delsarte_cover(johnson(7, 3), check_drg(johnson(7, 3)))).dump();
    return out.str();
  };
  setenv("DRG_THREADS", "1", 1);
  const auto serial = run();
  setenv("DRG_THREADS", "4", 1);
  const auto parallel = run();
  unsetenv("DRG_THREADS");
  CHECK(serial == parallel);
}
