#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "rootpoly/combinatorics.hpp"
#include "rootpoly/graph_io.hpp"

using namespace rootpoly;

namespace {

Graph g(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

}  // namespace

TEST_SUITE("predicates") {
  TEST_CASE("noncrossing") {
    CHECK_FALSE(is_noncrossing(g(4, {{1, 3}, {2, 4}})));
    CHECK(is_noncrossing(g(4, {{1, 4}, {2, 3}})));
    CHECK(is_noncrossing(g(4, {})));
    CHECK(crosses({1, 3}, {2, 4}));
    CHECK_FALSE(crosses({1, 3}, {3, 4}));
  }

  TEST_CASE("alternating") {
    CHECK_FALSE(is_alternating(g(3, {{1, 2}, {2, 3}})));
    CHECK(is_alternating(g(3, {{1, 3}, {2, 3}})));
    CHECK(is_alternating(g(3, {})));
  }

  TEST_CASE("forest and tree") {
    CHECK(is_forest(brute::path(4)));
    CHECK_FALSE(is_forest(g(3, {{1, 2}, {2, 3}, {1, 3}})));
    CHECK(is_forest(g(2, {{1, 2}})));
    CHECK(is_tree(brute::path(4)));
    CHECK_FALSE(is_tree(g(4, {{1, 2}, {3, 4}})));
  }

  TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(g(3, {{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(g(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(g(3, {{1, 2}, {1, 2}}), std::invalid_argument);
  }
}

TEST_SUITE("closure and routes") {
  TEST_CASE("closure examples") {
    CHECK(transitive_closure(brute::path(4)).edge_count() == 6);
    const Graph alt = g(3, {{1, 3}, {2, 3}});
    CHECK(transitive_closure(alt) == alt);
    CHECK(transitive_closure(g(4, {{1, 2}, {2, 4}, {3, 4}})) == g(4, {{1, 2}, {1, 4}, {2, 4}, {3, 4}}));
  }

  TEST_CASE("routes") {
    const auto routes = playable_routes(g(3, {{1, 2}, {2, 3}}));
    CHECK(routes.size() == 3);
    CHECK(vertex_set(g(3, {{1, 2}, {2, 3}})) == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(playable_routes(g(5, {{2, 5}})).size() == 1);
    CHECK(vertex_set(g(5, {{2, 5}})) == std::vector<Edge>{{2, 5}});
    CHECK(playable_routes(brute::path(4)).size() == 6);
    CHECK(vertex_set(brute::path(4)).size() == 6);
  }

  TEST_CASE("closure matches Warshall and is idempotent on every noncrossing tree up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
      for (const Graph& t : noncrossing_trees(n)) {
        const Graph c = transitive_closure(t);
        CHECK(c.edges() == brute::closure(t));
        CHECK(transitive_closure(c) == c);
        CHECK(vertex_set(t) == c.edges());
        CHECK(static_cast<long>(playable_routes(t).size()) == brute::count_routes(t));
      }
  }

  TEST_CASE("noncrossing tree counts agree with subset search") {
    for (int n = 1; n <= 6; ++n)
      CHECK(static_cast<long>(noncrossing_trees(n).size()) == brute::noncrossing_spanning_trees(n));
  }
}

TEST_SUITE("pseudo components") {
  TEST_CASE("eight vertex tree") {
    const auto ps = pseudo_components(g(8, {{1, 5}, {5, 8}, {2, 5}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}));
    REQUIRE(ps.size() == 4);
    CHECK(ps[0].edges == std::vector<Edge>{{1, 5}, {5, 8}});
    CHECK((ps[0].is_left && ps[0].is_right));
    std::set<std::vector<Edge>> rest;
    for (std::size_t x = 1; x < ps.size(); ++x) rest.insert(ps[x].edges);
    CHECK(rest == std::set<std::vector<Edge>>{{{2, 5}}, {{3, 4}, {4, 5}}, {{5, 6}, {6, 7}}});
    for (const auto& p : ps) {
      if (p.edges == std::vector<Edge>{{2, 5}}) CHECK((p.is_left && !p.is_right));
      if (p.edges == std::vector<Edge>{{3, 4}, {4, 5}}) CHECK((p.is_left && !p.is_right));
      if (p.edges == std::vector<Edge>{{5, 6}, {6, 7}}) CHECK((!p.is_left && p.is_right));
    }
  }

  TEST_CASE("path is a single component") {
    const auto ps = pseudo_components(brute::path(5));
    REQUIRE(ps.size() == 1);
    CHECK((ps[0].is_left && ps[0].is_right));
  }

  TEST_CASE("star") {
    const auto ps = pseudo_components(g(4, {{1, 4}, {2, 4}, {3, 4}}));
    REQUIRE(ps.size() == 3);
    CHECK(ps[0].edges == std::vector<Edge>{{1, 4}});
    CHECK((ps[0].is_left && ps[0].is_right));
    for (std::size_t x = 1; x < 3; ++x) CHECK((ps[x].is_left && ps[x].is_right));
  }

  TEST_CASE("flags follow the incident edges of the host tree") {
    for (int n = 2; n <= 7; ++n)
      for (const Graph& t : noncrossing_trees(n))
        for (const auto& p : pseudo_components(t)) {
          bool left = true, right = true;
          for (Edge e : t.edges()) {
            if (e.j == p.first) left = false;
            if (e.i == p.last) right = false;
          }
          CHECK(p.is_left == left);
          CHECK(p.is_right == right);
        }
  }

  TEST_CASE("components partition the edges") {
    for (int n = 2; n <= 7; ++n)
      for (const Graph& t : noncrossing_trees(n)) {
        std::vector<Edge> all;
        for (const auto& p : pseudo_components(t)) {
          CHECK(p.first < p.last);
          for (Edge e : p.edges) {
            CHECK(p.first <= e.i);
            CHECK(e.j <= p.last);
            all.push_back(e);
          }
        }
        std::sort(all.begin(), all.end());
        CHECK(all == t.edges());
      }
  }

  TEST_CASE("rejects crossing input") {
    CHECK_THROWS_AS(pseudo_components(g(4, {{1, 3}, {2, 4}, {1, 2}})), std::invalid_argument);
  }
}

TEST_SUITE("labelings") {
  TEST_CASE("good labeling examples") {
    const LabeledGraph p = good_labeling(brute::path(4));
    CHECK(p.by_label() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    const LabeledGraph v = good_labeling(g(3, {{1, 3}, {2, 3}}));
    CHECK(v.label_of({2, 3}) == 1);
    CHECK(v.label_of({1, 3}) == 2);
    CHECK(is_good(good_labeling(g(4, {{1, 2}, {1, 3}, {3, 4}}))));
  }

  TEST_CASE("is_good examples") {
    CHECK(is_good(LabeledGraph(4, {{1, 2}, {2, 3}, {3, 4}})));
    CHECK_FALSE(is_good(LabeledGraph(4, {{3, 4}, {2, 3}, {1, 2}})));
    CHECK_FALSE(is_good(LabeledGraph(3, {{1, 3}, {2, 3}})));
  }

  TEST_CASE("good labeling is good on every noncrossing tree up to 7 vertices") {
    for (int n = 1; n <= 7; ++n)
      for (const Graph& t : noncrossing_trees(n)) {
        const LabeledGraph lg = good_labeling(t);
        CHECK(lg.base() == t);
        CHECK(is_good(lg));
      }
  }

  TEST_CASE("lexicographic labels") {
    const LabeledGraph s = lexicographic_labels(g(4, {{1, 4}, {2, 4}, {3, 4}}));
    CHECK(s.label_of({1, 4}) == 3);
    CHECK(s.label_of({2, 4}) == 2);
    CHECK(s.label_of({3, 4}) == 1);
    const LabeledGraph t = lexicographic_labels(g(4, {{1, 4}, {1, 3}}));
    CHECK(t.label_of({1, 4}) == 1);
    CHECK(t.label_of({1, 3}) == 2);
    CHECK(lexicographic_labels(g(2, {{1, 2}})).label_of({1, 2}) == 1);
  }
}

TEST_SUITE("admissible forests") {
  TEST_CASE("path on four vertices") {
    const Graph p = brute::path(4);
    CHECK(enumerate_admissible_forests(p, 3).size() == 5);
    CHECK(enumerate_admissible_forests(p, 1) == std::vector<Graph>{g(4, {{1, 4}})});
    CHECK(Integer(enumerate_admissible_forests(p, 2).size()) == schroeder(3, 1));
  }

  TEST_CASE("forests are noncrossing alternating forests in the closure") {
    for (int n = 2; n <= 6; ++n)
      for (const Graph& t : noncrossing_trees(n)) {
        const Graph c = transitive_closure(t);
        for (int k = 0; k < n; ++k)
          for (const Graph& f : enumerate_admissible_forests(t, k)) {
            CHECK(static_cast<int>(f.edge_count()) == k);
            CHECK(f.contains({1, n}));
            CHECK(is_noncrossing(f));
            CHECK(is_alternating(f));
            CHECK(is_forest(f));
            for (Edge e : f.edges()) CHECK(c.contains(e));
          }
      }
  }

  TEST_CASE("path census matches polygon dissections") {
    for (int n = 1; n <= 6; ++n) {
      const FVector f = admissible_census(brute::path(n + 1));
      CHECK(f.at(0) == 0);
      for (int k = 0; k <= n - 1; ++k) {
        CHECK(f.at(k + 1) == brute::polygon_dissections(n + 2, k));
        CHECK(schroeder(n, k) == brute::polygon_dissections(n + 2, k));
      }
    }
  }

  TEST_CASE("top count of the path is the number of noncrossing alternating trees") {
    for (int n = 1; n <= 6; ++n) {
      CHECK(admissible_census(brute::path(n)).at(n - 1) == brute::noncrossing_alternating_trees(n));
      CHECK(catalan(n - 1) == brute::noncrossing_alternating_trees(n));
    }
  }

  TEST_CASE("schroeder domain") {
    CHECK_THROWS_AS(schroeder(3, 3), std::domain_error);
    CHECK_THROWS_AS(schroeder(3, -1), std::domain_error);
  }
}

TEST_SUITE("diagonals") {
  TEST_CASE("examples") {
    CHECK(forest_to_diagonals(g(4, {{1, 4}})).empty());
    CHECK(forest_to_diagonals(g(4, {{1, 4}, {2, 4}})) == std::vector<Diagonal>{{2, 5}});
  }

  TEST_CASE("round trip and bijection on paths") {
    for (int n = 1; n <= 6; ++n) {
      const Graph p = brute::path(n + 1);
      std::set<std::vector<Diagonal>> seen;
      for (int k = 1; k <= n; ++k)
        for (const Graph& f : enumerate_admissible_forests(p, k)) {
          const auto d = forest_to_diagonals(f);
          CHECK(static_cast<int>(d.size()) == k - 1);
          for (std::size_t x = 0; x < d.size(); ++x) {
            CHECK(d[x].a + 2 <= d[x].b);
            CHECK_FALSE((d[x].a == 1 && d[x].b == n + 2));
            for (std::size_t y = x + 1; y < d.size(); ++y) CHECK_FALSE(diagonals_cross(d[x], d[y]));
          }
          CHECK(diagonals_to_forest(n, d) == f);
          CHECK(seen.insert(d).second);
        }
    }
  }

  TEST_CASE("rejects forests without the long edge") {
    CHECK_THROWS_AS(forest_to_diagonals(g(4, {{1, 3}})), std::invalid_argument);
  }
}

TEST_SUITE("uncrossing") {
  TEST_CASE("noncrossing input keeps its labels") {
    const Graph p = brute::path(5);
    const Uncrossing u = uncross(p);
    CHECK(u.graph == p);
    for (int v = 1; v <= 5; ++v) CHECK(u.image(v) == v);
    CHECK(uncross(g(2, {{1, 2}})).graph == g(2, {{1, 2}}));
  }

  TEST_CASE("crossing pair") {
    const Graph c = g(4, {{1, 3}, {2, 4}});
    const Uncrossing u = uncross(c);
    CHECK(is_noncrossing(u.graph));
    CHECK(u.graph.edge_count() == 2);
    for (Edge e : c.edges()) CHECK(u.image(e.i) < u.image(e.j));
    CHECK(u.pull_back(u.graph) == c);
  }

  TEST_CASE("every tree on five vertices with increasing edges uncrosses") {
    std::vector<Edge> all;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) all.push_back({i, j});
    int tested = 0;
    for (std::uint64_t mask = 0; mask < (1u << all.size()); ++mask) {
      if (__builtin_popcountll(mask) != 4) continue;
      std::vector<Edge> pick;
      for (std::size_t x = 0; x < all.size(); ++x)
        if (mask >> x & 1) pick.push_back(all[x]);
      if (!brute::acyclic(5, pick)) continue;
      const Graph t(5, pick);
      const Uncrossing u = uncross(t);
      CHECK(is_noncrossing(u.graph));
      std::set<int> image;
      for (int v = 1; v <= 5; ++v) image.insert(u.image(v));
      CHECK(image.size() == 5);
      for (Edge e : t.edges()) CHECK(u.graph.contains({u.image(e.i), u.image(e.j)}));
      CHECK(u.pull_back(u.graph) == t);
      ++tested;
    }
    CHECK(tested == 125);
  }

  TEST_CASE("cycles are refused") {
    CHECK_THROWS_AS(uncross(g(3, {{1, 2}, {2, 3}, {1, 3}})), std::invalid_argument);
  }
}

TEST_SUITE("graph literals") {
  TEST_CASE("text round trip") {
    const Graph t = parse_graph("n=4; edges=1-2,2-3,3-4");
    CHECK(t == brute::path(4));
    CHECK(parse_graph(format_graph(t)) == t);
  }

  TEST_CASE("json round trip") {
    const Graph t = g(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}});
    const nlohmann::json j = t;
    CHECK(j.get<Graph>() == t);
    CHECK(parse_graph(j.dump()) == t);
    const LabeledGraph lg = good_labeling(t);
    const nlohmann::json k = lg;
    CHECK(k.get<LabeledGraph>() == lg);
    CHECK(parse_labeled_graph(format_labeled_graph(lg)) == lg);
  }

  TEST_CASE("parse errors carry a caret") {
    try {
      parse_graph("n=4; edges=1-2,2-x");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 17);
      const std::string a = e.annotated();
      CHECK(a.find("\n  n=4; edges=1-2,2-x\n") != std::string::npos);
      CHECK(a.back() == '^');
    }
    CHECK_THROWS_AS(parse_graph("n=3; edges=1-4"), ParseError);
    CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[1]]}"), ParseError);
  }
}
