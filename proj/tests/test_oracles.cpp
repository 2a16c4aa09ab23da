#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/oracles.hpp"
#include "support.hpp"

using namespace sforge;

namespace {

std::vector<Edge> closure_edges(const Digraph& g) {
  const auto reach = oracle::reachability(g);
  std::vector<Edge> out;
  for (Vertex u = 0; u < reach.size(); ++u)
    for (Vertex v = 0; v < reach.size(); ++v)
      if (u != v && reach[u][v]) out.push_back({u, v});
  return out;
}

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("primitive oracles on a hand-made graph") {
    // 0 -> 1 -> 2, 0 -> 2 heavy, 3 isolated
    const WeightedDigraph g(4, {{0, 1, 2}, {1, 2, 2}, {0, 2, 5}}, 5);
    const auto bf = oracle::bellman_ford_all_pairs(4, g.edges());
    CHECK(bf[0][2] == 4);
    CHECK(bf[2][0] == kInfinity);
    const auto one_hop = oracle::enumerate_hop_bounded(g, 1);
    CHECK(one_hop[0][2] == 5);
    CHECK(one_hop[0][0] == 0);
    const Digraph t = g.topology();
    const auto bfs = oracle::bfs_all_pairs(4, t.edges());
    CHECK(bfs[0][2] == 1);
    CHECK(oracle::diameter(4, t.edges()) == 1);
    CHECK(oracle::reachability(t)[3][3] == 1);
    CHECK(oracle::reachability(t)[0][3] == 0);
  }

  TEST_CASE("empty H reports the graph's own diameter") {
    const Digraph g = test::path_graph(9);
    const VerificationReport r = verify_shortcut(g, {}, 8);
    CHECK(r.passed());
    CHECK(r.achieved_diameter == 8);
    const VerificationReport tight = verify_shortcut(g, {}, 7);
    CHECK_FALSE(tight.passed());
    CHECK(tight.find("diameter")->witness.find("(0,8)") != std::string::npos);
  }

  TEST_CASE("full closure gives diameter 1") {
    const Digraph g = generate_digraph({Family::random_dag, 40, 0.08, 1, 3});
    const VerificationReport r = verify_shortcut(g, closure_edges(g), 1);
    CHECK(r.passed());
    CHECK(r.achieved_diameter == 1);
  }

  TEST_CASE("planted non-closure edge is caught with its witness") {
    const Digraph g = generate_digraph({Family::random_dag, 30, 0.1, 1, 8});
    const auto reach = oracle::reachability(g);
    std::optional<Edge> planted;
    for (Vertex u = 0; u < 30 && !planted; ++u)
      for (Vertex v = 0; v < 30 && !planted; ++v)
        if (u != v && !reach[u][v]) planted = Edge{u, v};
    REQUIRE(planted);
    std::vector<Edge> h = closure_edges(g);
    h.push_back(*planted);
    const VerificationReport r = verify_shortcut(g, h, 30);
    const Check* c = r.find("closure_membership");
    CHECK(c->status == CheckStatus::fail);
    CHECK(c->witness == "(" + std::to_string(planted->from) + "," + std::to_string(planted->to) + ")");
    CHECK(r.find("closure_preserved")->status == CheckStatus::fail);
  }

  TEST_CASE("hopset oracle trio") {
    const WeightedDigraph g = generate_weighted({Family::weighted_random, 30, 0.08, 9, 4});
    SUBCASE("empty H: the lower side always holds") {
      const VerificationReport r = verify_hopset(g, {}, 29, {1, 4});
      CHECK(r.passed());
      CHECK(verify_hopset(g, {}, 1, {1, 4}).find("lower_side")->status == CheckStatus::pass);
    }
    SUBCASE("full weighted closure: exact at one hop") {
      const auto bf = oracle::bellman_ford_all_pairs(30, g.edges());
      std::vector<WeightedEdge> h;
      for (Vertex u = 0; u < 30; ++u)
        for (Vertex v = 0; v < 30; ++v)
          if (u != v && bf[u][v] != kInfinity) h.push_back({u, v, bf[u][v]});
      const VerificationReport r = verify_hopset(g, h, 1, {1, 4});
      CHECK(r.passed());
      CHECK(r.achieved_hops == 1);
      CHECK(r.achieved_stretch == doctest::Approx(1.0));
    }
    SUBCASE("planted light edge breaks the lower side") {
      const auto bf = oracle::bellman_ford_all_pairs(30, g.edges());
      std::optional<WeightedEdge> planted;
      for (Vertex u = 0; u < 30 && !planted; ++u)
        for (Vertex v = 0; v < 30 && !planted; ++v)
          if (u != v && bf[u][v] != kInfinity && bf[u][v] > 1) planted = WeightedEdge{u, v, bf[u][v] - 1};
      REQUIRE(planted);
      const VerificationReport r = verify_hopset(g, std::vector<WeightedEdge>{*planted}, 29, {1, 4});
      CHECK(r.find("exact_weights")->status == CheckStatus::fail);
      const Check* lower = r.find("lower_side");
      CHECK(lower->status == CheckStatus::fail);
      CHECK_FALSE(lower->witness.empty());
    }
  }

  TEST_CASE("upper side fails when beta hops are not enough") {
    const WeightedDigraph g = test::unit_path(10);
    const VerificationReport r = verify_hopset(g, {}, 5, {1, 4});
    CHECK(r.find("upper_side")->status == CheckStatus::fail);
    CHECK(r.achieved_hops == 9);
  }

  TEST_CASE("nice oracle: empty collection on a low-hop graph") {
    const WeightedDigraph g(4, {{0, 1, 1}, {2, 3, 1}}, 1);
    NicePathCollection q;
    q.beta = 24;
    CHECK(verify_nice(g, q).passed());
  }

  TEST_CASE("nice oracle: hand-built collection on a path") {
    // Unit path 0..5, beta = 24 (two hops): {0,1,2} then {3,4,5}.
    const WeightedDigraph g = test::unit_path(6);
    NicePathCollection q;
    q.beta = 24;
    q.paths.push_back({{0, 1, 2}, {1, 1}, 2});
    q.paths.push_back({{3, 4, 5}, {1, 1}, 2});
    const VerificationReport r = verify_nice(g, q);
    CHECK_MESSAGE(r.passed(), r.to_json());

    SUBCASE("dropping the second path breaks maximality") {
      q.paths.pop_back();
      const VerificationReport broken = verify_nice(g, q);
      CHECK(broken.find("N6_maximal")->status == CheckStatus::fail);
    }
    SUBCASE("overlapping paths break N1") {
      q.paths[1] = {{2, 3, 4}, {1, 1}, 2};
      CHECK(verify_nice(g, q).find("N1_disjoint_closure_paths")->status == CheckStatus::fail);
    }
    SUBCASE("a longer path first breaks local minimality") {
      const WeightedDigraph w(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 3}}, 3);
      NicePathCollection bad;
      bad.beta = 24;
      bad.paths.push_back({{3, 4, 5}, {1, 3}, 4});
      bad.paths.push_back({{0, 1, 2}, {1, 1}, 2});
      const VerificationReport v = verify_nice(w, bad);
      CHECK(v.find("N4_nondecreasing")->status == CheckStatus::fail);
      CHECK(v.find("N5_locally_minimal")->status == CheckStatus::fail);
    }
  }

  TEST_CASE("nice oracle agrees with the construction") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const WeightedDigraph g =
          generate_weighted({Family::weighted_random, 30 + seed, 0.06, 12, seed});
      const VerificationReport r = verify_nice(g, nice_collection(g, 24));
      CHECK_MESSAGE(r.passed(), r.to_json());
    }
  }

  TEST_CASE("nice oracle skips enumeration above the guard") {
    const WeightedDigraph g = test::unit_path(kNiceEnumerationLimit + 1);
    const VerificationReport r = verify_nice(g, nice_collection(g, 12));
    CHECK(r.find("N5_locally_minimal")->status == CheckStatus::skipped);
    CHECK(r.find("N6_maximal")->status == CheckStatus::skipped);
    CHECK(r.passed());
  }

  TEST_CASE("lower-bound checker: single path passes") {
    const Digraph g = test::path_graph(6);
    const std::vector<std::vector<Vertex>> paths{{0, 1, 2, 3, 4, 5}};
    const VerificationReport r = check_lb_properties(g, paths, {1, 5});
    CHECK_MESSAGE(r.passed(), r.to_json());
  }

  TEST_CASE("lower-bound checker: two paths sharing two vertices") {
    // 0 -> 2 -> 3 -> 4 and 1 -> 2 -> 3 -> 5
    const Digraph g(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
    const std::vector<std::vector<Vertex>> paths{{0, 2, 3, 4}, {1, 2, 3, 5}};
    const VerificationReport r = check_lb_properties(g, paths, {2, 3});
    const Check* c = r.find("P4_pairwise_intersection");
    CHECK(c->status == CheckStatus::fail);
    CHECK(c->witness == "paths 0 and 1 share 2 vertices");
    CHECK(r.find("P1_degree_bound")->status == CheckStatus::pass);
    CHECK(r.find("P3_unique_paths")->status == CheckStatus::pass);
  }

  TEST_CASE("lower-bound checker: other planted faults") {
    const Digraph diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    const std::vector<std::vector<Vertex>> through{{0, 1, 3}};
    const VerificationReport r = check_lb_properties(diamond, through, {1, 2});
    CHECK(r.find("P1_degree_bound")->status == CheckStatus::fail);
    CHECK(r.find("P3_unique_paths")->status == CheckStatus::fail);
    const Digraph cycle(3, {{0, 1}, {1, 2}, {2, 0}});
    const std::vector<std::vector<Vertex>> short_path{{0, 1}};
    const VerificationReport c = check_lb_properties(cycle, short_path, {1, 3});
    CHECK(c.find("P6_acyclic")->status == CheckStatus::fail);
    CHECK(c.find("P3_unique_paths")->status == CheckStatus::skipped);
    CHECK(c.find("P2_paths_and_lengths")->status == CheckStatus::fail);
  }

  TEST_CASE("lower-bound checker on subdivided paths") {
    const Digraph g(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
    for (std::size_t k : {1, 2, 5}) {
      const Subdivision s = subdivide(g, k);
      std::vector<std::vector<Vertex>> mapped{s.map_path(std::vector<Vertex>{0, 1, 2, 3}),
                                              s.map_path(std::vector<Vertex>{4, 5, 6, 7})};
      const VerificationReport r = check_lb_properties(s.graph, mapped, {1, (k + 1) * 4 - 1});
      CHECK_MESSAGE(r.passed(), r.to_json());
    }
  }

  TEST_CASE("decomposition checker catches planted faults") {
    const Digraph g(4, {{0, 1}, {1, 2}, {2, 3}});
    ChainDecomposition d;
    d.chains = {{0, 2}};
    d.antichains = {{1, 3}};
    const VerificationReport r = check_decomposition(g, d, 2);
    CHECK(r.find("chains_are_paths")->status == CheckStatus::fail);
    CHECK(r.find("exact_cover")->status == CheckStatus::pass);
    d.chains = {{0, 1}};
    d.antichains = {{2, 3}};
    CHECK(check_decomposition(g, d, 2).find("antichains_independent")->status == CheckStatus::fail);
    d.antichains = {{2}};
    CHECK(check_decomposition(g, d, 2).find("exact_cover")->status == CheckStatus::fail);
  }

  TEST_CASE("report JSON") {
    const VerificationReport r = verify_shortcut(test::path_graph(4), {}, 2);
    const auto doc = nlohmann::json::parse(r.to_json());
    CHECK(doc["passed"] == false);
    CHECK(doc["achieved_diameter"] == 3);
    CHECK(doc["checks"].size() == 3);
    CHECK(doc["checks"][2]["status"] == "fail");
    CHECK(doc["checks"][2].contains("witness"));
  }
}
