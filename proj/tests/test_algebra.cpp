#include <doctest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "rootpoly/combinatorics.hpp"
#include "rootpoly/graph_io.hpp"
#include "rootpoly/groebner.hpp"
#include "rootpoly/polynomial.hpp"
#include "rootpoly/reduction.hpp"
#include "rootpoly/trace.hpp"

using namespace rootpoly;

namespace {

constexpr const char* kPathNormalForm =
    "x14 x13 x12 + x14 x23 x13 + b x14 x13 + x24 x14 x23 + b x14 x23 + x34 x14 x12 + x34 x24 x14 + "
    "b x34 x14 + b x14 x12 + b x24 x14 + b^2 x14";

Monomial nc(const char* text) { return parse_monomial(text, Mode::noncommutative); }
Monomial cm(const char* text) { return parse_monomial(text, Mode::commutative); }

using Word = std::vector<Letter>;

bool distinct(Letter a, Letter b) { return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j; }

// Every word reachable by swapping adjacent commuting letters.
std::set<Word> commutation_class(const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> todo{w};
  while (!todo.empty()) {
    Word cur = todo.back();
    todo.pop_back();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (!distinct(cur[p], cur[p + 1])) continue;
      Word next = cur;
      std::swap(next[p], next[p + 1]);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

// Larger letter means smaller (i, j); words compare lexicographically.
Word class_maximum(const Word& w) {
  const auto cls = commutation_class(w);
  Word best = *cls.begin();
  auto bigger = [](const Word& a, const Word& b) {
    for (std::size_t p = 0; p < a.size(); ++p)
      if (a[p] != b[p]) return a[p] < b[p];
    return false;
  };
  for (const Word& c : cls)
    if (bigger(c, best)) best = c;
  return best;
}

bool class_has_tip(const Word& w) {
  for (const Word& c : commutation_class(w))
    for (std::size_t p = 0; p + 1 < c.size(); ++p)
      if (c[p].j == c[p + 1].i) return true;
  return false;
}

Word random_word(std::mt19937& rng, int vertices, int length) {
  std::uniform_int_distribution<int> pick(1, vertices);
  Word w;
  while (static_cast<int>(w.size()) < length) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    w.push_back({a, b});
  }
  return w;
}

std::vector<Integer> integer_coefficients(const Polynomial& p) {
  std::vector<Integer> out;
  for (const Rational& r : specialize_x_to_one(p)) {
    REQUIRE(denominator(r) == 1);
    out.push_back(numerator(r));
  }
  return out;
}

}  // namespace

TEST_SUITE("monomials") {
  TEST_CASE("letter order") {
    CHECK(letter_less({3, 4}, {1, 2}));
    CHECK_FALSE(letter_less({1, 2}, {1, 3}));
    CHECK(commute({1, 2}, {3, 4}));
    CHECK_FALSE(commute({1, 2}, {2, 3}));
  }

  TEST_CASE("canonical words") {
    CHECK(canonical_word(Word{{3, 4}, {1, 2}}) == Word{{1, 2}, {3, 4}});
    CHECK(canonical_word(Word{{1, 2}, {2, 3}}) == Word{{1, 2}, {2, 3}});
    CHECK(canonical_word(Word{{3, 4}, {1, 3}, {2, 5}}) == Word{{2, 5}, {3, 4}, {1, 3}});
  }

  TEST_CASE("canonical word is the class maximum for random words") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
      const Word w = random_word(rng, 6, 1 + trial % 6);
      const Word c = canonical_word(w);
      CHECK(c == class_maximum(w));
      CHECK(equivalent(w, c));
    }
  }

  TEST_CASE("commutative words are sorted") {
    CHECK(cm("x12 x13").word() == Word{{1, 3}, {1, 2}});
    CHECK(cm("x12 x13") == cm("x13 x12"));
  }

  TEST_CASE("rendering and parsing") {
    CHECK(format(nc("x12 x23")) == "x12 x23");
    CHECK(format(nc("b^2 x14")) == "b^2 x14");
    CHECK(format(nc("b")) == "b");
    CHECK(format(Monomial(Mode::noncommutative, {})) == "1");
    CHECK(format(Letter{3, 12}) == "x{3,12}");
    CHECK(nc("x{10,12} x{3,10}").word() == Word{{10, 12}, {3, 10}});
    CHECK_THROWS_AS(nc("x12 y23"), ParseError);
    CHECK_THROWS_AS(nc("x21"), ParseError);
  }

  TEST_CASE("json round trip") {
    const Monomial m = nc("b x34 x12 x23");
    const nlohmann::json j = m;
    CHECK(j.get<Monomial>() == m);
    const Polynomial p = parse_polynomial(kPathNormalForm, Mode::noncommutative);
    const nlohmann::json k = p;
    CHECK(k.get<Polynomial>() == p);
    const Polynomial q = parse_polynomial("1/2 x12 - 3 b x13", Mode::commutative);
    CHECK(nlohmann::json(q).get<Polynomial>() == q);
    CHECK(parse_polynomial(format(q), Mode::commutative) == q);
  }

  TEST_CASE("admissible order") {
    AdmissibleLess less;
    CHECK(less(nc("x12"), nc("x34 x12")));
    CHECK(less(nc("x13"), nc("x12")));
    CHECK(less(nc("x12"), nc("b x12")));
  }
}

TEST_SUITE("polynomials") {
  TEST_CASE("arithmetic") {
    Polynomial p(nc("x12"), 2);
    p += Polynomial(nc("x12"), -2);
    CHECK(p.is_zero());
    CHECK(format(p) == "0");
    const Polynomial q = Polynomial(nc("x12")) * nc("x23");
    CHECK(q.leading() == nc("x12 x23"));
    CHECK(format(parse_polynomial("x13 - 2 b x12", Mode::noncommutative)) == "-2 b x12 + x13");
  }
}

TEST_SUITE("trace") {
  TEST_CASE("tip can hide behind a commuting letter") {
    const Word w{{1, 2}, {3, 4}, {2, 3}};
    const auto sites = tip_sites(w);
    REQUIRE(sites.size() == 1);
    const Arranged a = bring_together(w, sites[0]);
    CHECK(a.word[a.position] == Letter{1, 2});
    CHECK(a.word[a.position + 1] == Letter{2, 3});
    CHECK(equivalent(a.word, w));
  }

  TEST_CASE("blocked sites") {
    CHECK(tip_sites(Word{{1, 2}, {2, 4}, {2, 3}}).size() == 1);
    CHECK(tip_sites(Word{{2, 3}, {1, 2}}).empty());
    CHECK(tip_sites(Word{{1, 2}, {2, 5}, {2, 3}, {3, 4}}).size() == 2);
  }

  TEST_CASE("contains_tip agrees with the commutation class") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
      const Word w = random_word(rng, 5, 1 + trial % 6);
      CHECK(contains_tip(Monomial(Mode::noncommutative, w)) == class_has_tip(w));
      CHECK(!tip_sites(w).empty() == class_has_tip(w));
    }
  }
}

TEST_SUITE("reduction steps") {
  TEST_CASE("S step") {
    const auto [g1, g2, g3] = reduce_step_S(Graph(3, {{1, 2}, {2, 3}}), {{1, 2}, {2, 3}});
    CHECK(g1 == Graph(3, {{1, 2}, {1, 3}}));
    CHECK(g2 == Graph(3, {{2, 3}, {1, 3}}));
    CHECK(g3 == Graph(3, {{1, 3}}));
    const auto [h1, h2, h3] = reduce_step_S(brute::path(4), {{2, 3}, {3, 4}});
    CHECK(h1 == Graph(4, {{1, 2}, {2, 3}, {2, 4}}));
    CHECK(h2 == Graph(4, {{1, 2}, {3, 4}, {2, 4}}));
    CHECK(h3 == Graph(4, {{1, 2}, {2, 4}}));
    CHECK_THROWS_AS(reduce_step_S(brute::path(4), {{1, 2}, {3, 4}}), std::invalid_argument);
  }

  TEST_CASE("recorded S pivot sequence reproduces the displayed commutative reduction") {
    struct Node {
      Graph g;
      int beta;
    };
    std::vector<Node> nodes{{brute::path(4), 0}};
    auto expand = [&](std::size_t at, Pivot pivot) {
      const Node n = nodes[at];
      const auto children = reduce_step_S(n.g, pivot);
      nodes.erase(nodes.begin() + static_cast<long>(at));
      nodes.insert(nodes.begin() + static_cast<long>(at),
                   {{children[0], n.beta}, {children[1], n.beta}, {children[2], n.beta + 1}});
    };
    expand(0, {{2, 3}, {3, 4}});
    expand(0, {{1, 2}, {2, 3}});
    expand(3, {{1, 2}, {2, 4}});
    expand(6, {{1, 2}, {2, 4}});
    expand(0, {{1, 2}, {2, 4}});
    Polynomial got(Mode::commutative);
    for (const Node& n : nodes) got.add(Monomial(Mode::commutative, n.g.edges(), n.beta), 1);
    const Polynomial expected = parse_polynomial(
        "x13 x14 x12 + x13 x24 x14 + b x13 x14 + x24 x23 x13 + b x24 x13 + x34 x14 x12 + x34 x24 x14 + "
        "b x34 x14 + b x14 x12 + b x24 x14 + b^2 x14",
        Mode::commutative);
    CHECK(got == expected);
  }

  TEST_CASE("B step") {
    const auto c = reduce_step_B(LabeledGraph(3, {{1, 2}, {2, 3}}), {{1, 2}, {2, 3}});
    CHECK(c[0] == LabeledGraph(3, {{1, 3}, {1, 2}}));
    CHECK(c[1] == LabeledGraph(3, {{2, 3}, {1, 3}}));
    CHECK(c[2] == LabeledGraph(3, {{1, 3}}));
    const auto d = reduce_step_B(LabeledGraph(4, {{1, 2}, {2, 3}, {3, 4}}), {{2, 3}, {3, 4}});
    CHECK(d[0] == LabeledGraph(4, {{1, 2}, {2, 4}, {2, 3}}));
    CHECK(d[1] == LabeledGraph(4, {{1, 2}, {3, 4}, {2, 4}}));
    CHECK(d[2] == LabeledGraph(4, {{1, 2}, {2, 4}}));
    const auto e = reduce_step_B(LabeledGraph(5, {{1, 2}, {2, 3}, {4, 5}}), {{1, 2}, {2, 3}});
    CHECK(e[2] == LabeledGraph(5, {{1, 3}, {4, 5}}));
  }

  TEST_CASE("B commutation") {
    const LabeledGraph g(4, {{1, 2}, {3, 4}});
    CHECK(commute_B(g, 1) == LabeledGraph(4, {{3, 4}, {1, 2}}));
    CHECK(commute_B(commute_B(g, 1), 1) == g);
    CHECK_THROWS_AS(commute_B(LabeledGraph(3, {{1, 2}, {2, 3}}), 1), std::invalid_argument);
  }

  TEST_CASE("strategy names") {
    for (const char* name : {"lex-first", "rightmost", "seeded-random"})
      CHECK(Strategy::parse(name, 3).name() == name);
    CHECK_THROWS_AS(Strategy::parse("middle"), std::invalid_argument);
  }
}

TEST_SUITE("reduction trees") {
  TEST_CASE("B tree of the path on four vertices has the eleven leaves") {
    const ReductionTree t = build_reduction_tree(good_labeling(brute::path(4)), Strategy());
    CHECK(t.leaves().size() == 11);
    const FVector f = t.leaf_census();
    CHECK(f.counts == std::vector<Integer>{0, 1, 5, 5});
  }

  TEST_CASE("alternating roots are leaves") {
    const ReductionTree t = build_reduction_tree(Graph(4, {{1, 4}, {2, 4}, {3, 4}}), Strategy());
    CHECK(t.nodes.size() == 1);
  }

  TEST_CASE("S leaf censuses agree across strategies") {
    const std::vector<Strategy> all{Strategy(Strategy::Kind::lex_first), Strategy(Strategy::Kind::rightmost),
                                    Strategy(Strategy::Kind::seeded_random, 1),
                                    Strategy(Strategy::Kind::seeded_random, 99)};
    for (int n = 2; n <= 6; ++n)
      for (const Graph& t : noncrossing_trees(n)) {
        const FVector base = build_reduction_tree(t, all[0]).leaf_census();
        CHECK(base == admissible_census(t));
        for (const Strategy& s : all) CHECK(build_reduction_tree(t, s).leaf_census() == base);
      }
  }

  TEST_CASE("reduced forms") {
    CHECK(format(reduced_form(cm("x12 x23"), Strategy())) == "x13 x12 + x23 x13 + b x13");
    const Polynomial expected = parse_polynomial(kPathNormalForm, Mode::noncommutative);
    CHECK(expected.size() == 11);
    for (const Strategy& s : {Strategy(Strategy::Kind::lex_first), Strategy(Strategy::Kind::rightmost),
                              Strategy(Strategy::Kind::seeded_random, 5)})
      CHECK(reduced_form(nc("x12 x23 x34"), s) == expected);
  }

  TEST_CASE("S path reduced forms at x = 1 give polygon dissection counts") {
    for (int n = 1; n <= 5; ++n) {
      Word w;
      for (int v = 1; v <= n; ++v) w.push_back({v, v + 1});
      const auto c = integer_coefficients(reduced_form(Monomial(Mode::commutative, w), Strategy()));
      REQUIRE(static_cast<int>(c.size()) == n);
      for (int m = 0; m < n; ++m) CHECK(c[m] == brute::polygon_dissections(n + 2, n - m - 1));
    }
  }
}

TEST_SUITE("groebner") {
  TEST_CASE("normal form examples") {
    CHECK(normal_form(nc("x12 x23 x34")) == parse_polynomial(kPathNormalForm, Mode::noncommutative));
    CHECK(normal_form(nc("x14 x23")) == Polynomial(nc("x14 x23")));
    CHECK(normal_form(nc("x23 x12")) == Polynomial(nc("x23 x12")));
    CHECK(format(generator(1, 2, 3)) == "x12 x23 - x13 x12 - x23 x13 - b x13");
  }

  TEST_CASE("normal forms contain no tips") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      const Word w = random_word(rng, 5, 1 + trial % 5);
      const Polynomial p = normal_form(Monomial(Mode::noncommutative, w));
      for (const auto& [m, coefficient] : p.terms()) CHECK_FALSE(contains_tip(m));
    }
  }

  TEST_CASE("reduced forms of paths equal normal forms") {
    for (int n = 1; n <= 5; ++n) {
      Word w;
      for (int v = 1; v <= n; ++v) w.push_back({v, v + 1});
      const Monomial m(Mode::noncommutative, w);
      const Polynomial r = reduced_form(m, Strategy());
      CHECK(r == normal_form(m));
      CHECK(integer_coefficients(r).front() == catalan(n));
    }
  }

  TEST_CASE("overlaps reduce to zero") {
    const auto three = overlap_relations(3);
    CHECK_FALSE(three.empty());
    bool path_overlap = false;
    for (const auto& o : three) {
      CHECK(o.remainder.is_zero());
      if (o.f == std::array<int, 3>{1, 2, 3} && o.c == Letter{3, 4}) path_overlap = true;
    }
    CHECK(path_overlap);
    for (const auto& o : overlap_relations(4)) CHECK(o.remainder.is_zero());
    CHECK(tips_reduced(4));
  }

  TEST_CASE("seeded rewrite orders agree") {
    const Polynomial p(nc("x12 x23 x34"));
    std::vector<RewriteStep> trace;
    CHECK(normal_form(p, SitePolicy::seeded(17), &trace) == normal_form(p));
    CHECK_FALSE(trace.empty());
  }
}
