#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wcycle/centrality.hpp"
#include "wcycle/errors.hpp"

using namespace wcycle;

namespace {

WeightedGraph fixture(const char* name) {
  return WeightedGraph::load_file(std::string(WCYCLE_FIXTURE_DIR) + "/" +
                                  name);
}

ScoreVector wcycle_of(const WeightedGraph& g) {
  return wcycle_centrality(g, cycle_basis(g, spanning_forest(g)));
}

WeightedGraph scaled(const WeightedGraph& g, double lambda) {
  std::vector<std::tuple<NodeId, NodeId, double>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v, lambda * e.w);
  return WeightedGraph::from_edges(g.node_count(), edges);
}

}  // namespace

TEST_CASE("WCycle: triangle, tree, chorded square") {
  auto tri = wcycle_of(fixture("triangle.txt"));
  for (double s : tri.scores) CHECK(s == doctest::Approx(3.0));

  auto tree = wcycle_of(fixture("tree.txt"));
  for (double s : tree.scores) CHECK(s == 0.0);

  auto g = fixture("chorded_square.txt");
  auto sv = wcycle_of(g);
  CHECK(sv.scores[*g.node_by_label("1")] == doctest::Approx(3.0));
  CHECK(sv.scores[*g.node_by_label("2")] == doctest::Approx(1.5));
  CHECK(sv.scores[*g.node_by_label("3")] == doctest::Approx(3.0));
  CHECK(sv.scores[*g.node_by_label("4")] == doctest::Approx(1.5));
}

TEST_CASE("WCycle matches the brute-force oracle on random graphs") {
  oracles::TestRng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + rng.below(30);
    auto g = trial % 2 ? oracles::random_connected_graph(n, rng.below(n), rng)
                       : oracles::random_graph(n, 0.2, rng);
    auto sv = wcycle_of(g);
    auto expected = oracles::brute_wcycle(g);
    for (NodeId v = 0; v < g.node_count(); ++v)
      CHECK(sv.scores[v] == doctest::Approx(expected[v]).epsilon(1e-12));
  }
}

TEST_CASE("WCycle sum identity") {
  oracles::TestRng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracles::random_connected_graph(20, 15, rng);
    auto basis = cycle_basis(g, spanning_forest(g));
    if (basis.size() == 0) continue;
    auto sv = wcycle_centrality(g, basis);
    double total = 0;
    for (double s : sv.scores) total += s;
    double expected = 0;
    for (const auto& c : basis.cycles())
      expected += double(c.nodes.size()) * c.weight_sum;
    expected /= double(basis.size());
    CHECK(total == doctest::Approx(expected));
  }
}

TEST_CASE("weighted degree") {
  auto g = WeightedGraph::from_edges(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  auto sv = weighted_degree(g);
  CHECK(sv.scores[0] == doctest::Approx(3.0));
  CHECK(sv.scores[1] == doctest::Approx(1.0));
  CHECK(sv.scores[4] == 0.0);
}

TEST_CASE("weighted h-index: stated examples") {
  // center 0 with neighbors of strength 3 and 2 over unit edges
  auto g = WeightedGraph::from_edges(
      7, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 5, 1}});
  CHECK(g.strength(1) == doctest::Approx(3.0));
  CHECK(g.strength(2) == doctest::Approx(2.0));
  CHECK(weighted_h_index_node(g, 0) == doctest::Approx(2.0));
  CHECK(weighted_h_index_node(g, 6) == 0.0);

  auto tri = fixture("triangle.txt");
  auto sv = weighted_h_index(tri);
  for (double s : sv.scores) CHECK(s == doctest::Approx(2.0));
}

TEST_CASE("weighted h-index matches the threshold-grid oracle") {
  oracles::TestRng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = [&] {
      switch (trial % 3) {
        case 0: {  // star with random weights
          const int leaves = 1 + rng.below(8);
          std::vector<std::tuple<NodeId, NodeId, double>> edges;
          for (int i = 1; i <= leaves; ++i)
            edges.emplace_back(0, i, 0.1 + 3 * rng.uniform());
          return WeightedGraph::from_edges(leaves + 1, edges);
        }
        case 1:
          return oracles::random_connected_graph(2 + rng.below(12), 0, rng);
        default:
          return oracles::random_graph(10, 0.5, rng);
      }
    }();
    auto sv = weighted_h_index(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      CHECK(sv.scores[v] ==
            doctest::Approx(oracles::brute_wh(g, v)).epsilon(1e-9));
      CHECK(sv.scores[v] <= g.strength(v) + 1e-12);
    }
  }
}

TEST_CASE("weighted coreness: stated examples") {
  auto tri = weighted_coreness(fixture("triangle.txt"));
  for (double s : tri.scores) CHECK(s == doctest::Approx(2.0));

  auto star = WeightedGraph::from_edges(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  auto sv = weighted_coreness(star);
  for (double s : sv.scores) CHECK(s == doctest::Approx(1.0));

  auto two = WeightedGraph::from_edges(
      6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  auto sv2 = weighted_coreness(two);
  for (double s : sv2.scores) CHECK(s == doctest::Approx(2.0));
}

TEST_CASE("weighted coreness matches naive re-peeling") {
  oracles::TestRng rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = oracles::random_graph(14, 0.25, rng);
    auto sv = weighted_coreness(g);
    auto expected = oracles::brute_coreness(g);
    for (NodeId v = 0; v < g.node_count(); ++v)
      CHECK(sv.scores[v] == doctest::Approx(expected[v]).epsilon(1e-12));
  }
}

TEST_CASE("weighted betweenness: stated examples") {
  auto path = WeightedGraph::from_edges(3, {{0, 1, 1}, {1, 2, 1}});
  auto sv = weighted_betweenness(path);
  CHECK(sv.scores[1] == doctest::Approx(1.0));
  CHECK(sv.scores[0] == 0.0);
  CHECK(sv.scores[2] == 0.0);

  auto tri = fixture("triangle.txt");
  for (double s : weighted_betweenness(tri).scores) CHECK(s == 0.0);

  auto skew = WeightedGraph::from_edges(
      3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 0.4}});
  auto svs = weighted_betweenness(skew);
  CHECK(svs.scores[1] == doctest::Approx(1.0));
}

TEST_CASE("weighted betweenness matches exhaustive enumeration") {
  oracles::TestRng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + rng.below(9);  // N <= 12
    auto g = trial % 2 ? oracles::random_connected_graph(n, rng.below(n), rng)
                       : oracles::random_graph(n, 0.35, rng);
    auto sv = weighted_betweenness(g);
    auto expected = oracles::brute_betweenness(g);
    for (NodeId v = 0; v < g.node_count(); ++v)
      CHECK(sv.scores[v] == doctest::Approx(expected[v]).epsilon(1e-9));
  }
}

TEST_CASE("betweenness: threaded run equals sequential") {
  oracles::TestRng rng(61);
  auto g = oracles::random_connected_graph(40, 60, rng);
  auto seq = weighted_betweenness(g, 1);
  auto par = weighted_betweenness(g, 4);
  for (NodeId v = 0; v < g.node_count(); ++v)
    CHECK(seq.scores[v] == doctest::Approx(par.scores[v]).epsilon(1e-12));
}

TEST_CASE("rankings are deterministic permutations") {
  oracles::TestRng rng(67);
  auto g = oracles::random_graph(30, 0.2, rng);
  for (const auto& sv :
       {wcycle_of(g), weighted_degree(g), weighted_h_index(g),
        weighted_coreness(g), weighted_betweenness(g)}) {
    std::vector<char> seen(g.node_count(), 0);
    for (std::size_t i = 0; i < sv.ranking.size(); ++i) {
      CHECK(!seen[sv.ranking[i]]);
      seen[sv.ranking[i]] = 1;
      if (i > 0) {
        CHECK(sv.scores[sv.ranking[i - 1]] >= sv.scores[sv.ranking[i]]);
        if (sv.scores[sv.ranking[i - 1]] == sv.scores[sv.ranking[i]])
          CHECK(sv.ranking[i - 1] < sv.ranking[i]);
      }
    }
  }
}

TEST_CASE("uniform weight scaling preserves rankings, scales local scores") {
  oracles::TestRng rng(71);
  auto g = oracles::random_connected_graph(18, 20, rng);
  auto h = scaled(g, 3.5);
  auto pairs = {
      std::pair{wcycle_of(g), wcycle_of(h)},
      std::pair{weighted_degree(g), weighted_degree(h)},
      std::pair{weighted_h_index(g), weighted_h_index(h)},
  };
  for (const auto& [a, b] : pairs) {
    CHECK(a.ranking == b.ranking);
    for (NodeId v = 0; v < g.node_count(); ++v)
      CHECK(b.scores[v] == doctest::Approx(3.5 * a.scores[v]));
  }
  CHECK(weighted_betweenness(g).ranking == weighted_betweenness(h).ranking);
}

TEST_CASE("top_k sizes and tie handling") {
  std::vector<double> scores(100, 1.0);
  auto sv = ScoreVector::from_scores("X", scores);
  CHECK(seed_count(0.05, 100) == 5);
  CHECK(seed_count(0.05, 332) == 17);
  CHECK(top_k(sv, 0.03).members == std::vector<NodeId>{0, 1, 2});
  CHECK_THROWS_AS(top_k(sv, 0.0), ConfigError);
  CHECK_THROWS_AS(top_k(sv, 1.5), ConfigError);
  CHECK(top_k(sv, 1.0).members.size() == 100);
}
