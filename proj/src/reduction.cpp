#include "rootpoly/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootpoly/trace.hpp"

namespace rootpoly {

namespace {

void check_pivot(Pivot p) {
  if (p.first.j != p.second.i || p.first.i >= p.first.j || p.second.i >= p.second.j)
    throw std::invalid_argument("pivot must be (i,j), (j,k) with i < j < k");
}

void erase_one(std::vector<Edge>& edges, Edge e) {
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end()) throw std::invalid_argument("pivot edge not present");
  edges.erase(it);
}

std::array<std::vector<Edge>, 3> split_multiset(const std::vector<Edge>& edges, Pivot p) {
  const Edge joined{p.first.i, p.second.j};
  std::array<std::vector<Edge>, 3> out{edges, edges, edges};
  erase_one(out[0], p.second);
  out[0].push_back(joined);
  erase_one(out[1], p.first);
  out[1].push_back(joined);
  erase_one(out[2], p.first);
  erase_one(out[2], p.second);
  out[2].push_back(joined);
  for (auto& g : out) std::sort(g.begin(), g.end());
  return out;
}

// Word-level labeled step at 0-based position a (labels a+1, a+2).
std::array<std::vector<Edge>, 3> split_word(const std::vector<Edge>& word, std::size_t a) {
  const Edge ij = word[a], jk = word[a + 1];
  const Edge ik{ij.i, jk.j};
  std::array<std::vector<Edge>, 3> out{word, word, word};
  out[0][a] = ik;
  out[0][a + 1] = ij;
  out[1][a] = jk;
  out[1][a + 1] = ik;
  out[2][a] = ik;
  out[2].erase(out[2].begin() + static_cast<std::ptrdiff_t>(a) + 1);
  return out;
}

std::vector<Pivot> pivots_of(const std::vector<Edge>& edges) {
  std::vector<Pivot> out;
  for (Edge e : edges)
    for (Edge f : edges)
      if (e.j == f.i) out.push_back({e, f});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::array<Graph, 3> reduce_step_S(const Graph& g, Pivot pivot) {
  check_pivot(pivot);
  if (!g.contains(pivot.first) || !g.contains(pivot.second))
    throw std::invalid_argument("reduce_step_S: pivot edge not present");
  if (g.contains({pivot.first.i, pivot.second.j}))
    throw std::invalid_argument("reduce_step_S: (i,k) already present; result would be a multigraph");
  auto parts = split_multiset(g.edges(), pivot);
  return {Graph(g.vertex_count(), parts[0]), Graph(g.vertex_count(), parts[1]),
          Graph(g.vertex_count(), parts[2])};
}

std::array<LabeledGraph, 3> reduce_step_B(const LabeledGraph& g, Pivot pivot) {
  check_pivot(pivot);
  const int a = g.label_of(pivot.first), b = g.label_of(pivot.second);
  if (a == 0 || b == 0) throw std::invalid_argument("reduce_step_B: pivot edge not present");
  if (b != a + 1) throw std::invalid_argument("reduce_step_B: pivot labels are not consecutive");
  auto parts = split_word(g.by_label(), static_cast<std::size_t>(a - 1));
  return {LabeledGraph(g.vertex_count(), parts[0]), LabeledGraph(g.vertex_count(), parts[1]),
          LabeledGraph(g.vertex_count(), parts[2])};
}

LabeledGraph commute_B(const LabeledGraph& g, int a) {
  if (a < 1 || a + 1 > static_cast<int>(g.edge_count()))
    throw std::invalid_argument("commute_B: no edges with labels a and a+1");
  std::vector<Edge> word = g.by_label();
  if (!commute(word[a - 1], word[a])) throw std::invalid_argument("commute_B: edges share a vertex");
  std::swap(word[a - 1], word[a]);
  return LabeledGraph(g.vertex_count(), std::move(word));
}

Strategy Strategy::parse(const std::string& name, std::uint64_t seed) {
  if (name == "lex-first") return Strategy(Kind::lex_first, seed);
  if (name == "rightmost") return Strategy(Kind::rightmost, seed);
  if (name == "seeded-random") return Strategy(Kind::seeded_random, seed);
  throw std::invalid_argument("unknown strategy: " + name);
}

std::string Strategy::name() const {
  switch (kind_) {
    case Kind::lex_first: return "lex-first";
    case Kind::rightmost: return "rightmost";
    case Kind::seeded_random: return "seeded-random";
  }
  return "?";
}

std::size_t Strategy::choose(std::size_t count, std::span<const Edge> state) const {
  if (count == 0) throw std::logic_error("Strategy::choose: no candidates");
  switch (kind_) {
    case Kind::lex_first: return 0;
    case Kind::rightmost: return count - 1;
    case Kind::seeded_random: {
      std::uint64_t h = mix(seed_);
      for (Edge e : state) h = mix(h ^ (static_cast<std::uint64_t>(e.i) << 32 | static_cast<std::uint32_t>(e.j)));
      return static_cast<std::size_t>(h % count);
    }
  }
  return 0;
}

std::vector<std::size_t> ReductionTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < nodes.size(); ++x)
    if (nodes[x].children.empty()) out.push_back(x);
  return out;
}

FVector ReductionTree::leaf_census() const {
  const std::size_t size = std::max<std::size_t>(vertex_count, nodes.front().edges.size() + 1);
  FVector f{std::vector<Integer>(size, Integer(0))};
  for (std::size_t leaf : leaves()) f.counts[nodes[leaf].edges.size()] += 1;
  return f;
}

namespace {

ReductionTree build_S(int vertex_count, std::vector<Edge> root, const Strategy& strategy) {
  std::sort(root.begin(), root.end());
  ReductionTree tree{TreeMode::S, vertex_count, {}};
  tree.nodes.push_back({root, 0, std::nullopt, {}, false, {}});
  for (std::size_t x = 0; x < tree.nodes.size(); ++x) {
    const std::vector<Edge> edges = tree.nodes[x].edges;
    const std::vector<Pivot> candidates = pivots_of(edges);
    if (candidates.empty()) continue;
    const Pivot pivot = candidates[strategy.choose(candidates.size(), edges)];
    const int beta = tree.nodes[x].beta;
    auto parts = split_multiset(edges, pivot);
    tree.nodes[x].pivot = pivot;
    for (int c = 0; c < 3; ++c) {
      tree.nodes[x].children.push_back(tree.nodes.size());
      tree.nodes.push_back({parts[c], beta + (c == 2), std::nullopt, {}, false, {}});
    }
  }
  return tree;
}

}  // namespace

ReductionTree build_reduction_tree(const Graph& root, const Strategy& strategy) {
  return build_S(root.vertex_count(), root.edges(), strategy);
}

ReductionTree build_reduction_tree(const LabeledGraph& root, const Strategy& strategy) {
  if (!is_good(root)) throw std::invalid_argument("build_reduction_tree: B-mode root is not good");
  ReductionTree tree{TreeMode::B, root.vertex_count(), {}};
  tree.nodes.push_back({root.by_label(), 0, std::nullopt, {}, false, {}});
  for (std::size_t x = 0; x < tree.nodes.size(); ++x) {
    const std::vector<Edge> word = tree.nodes[x].edges;
    const std::vector<TipSite> sites = tip_sites(word);
    if (sites.empty()) {
      tree.nodes[x].arranged = word;
      continue;
    }
    const TipSite site = sites[strategy.choose(sites.size(), word)];
    Arranged arranged = bring_together(word, site);
    const int beta = tree.nodes[x].beta;
    auto parts = split_word(arranged.word, arranged.position);
    ReductionNode& node = tree.nodes[x];
    node.pivot = Pivot{word[site.first], word[site.second]};
    node.commuted = arranged.word != word;
    node.arranged = std::move(arranged.word);
    for (int c = 0; c < 3; ++c) {
      tree.nodes[x].children.push_back(tree.nodes.size());
      tree.nodes.push_back({parts[c], beta + (c == 2), std::nullopt, {}, false, {}});
    }
  }
  return tree;
}

int vertex_span(std::span<const Letter> word) {
  int top = 1;
  for (Letter x : word) top = std::max(top, x.j);
  return top;
}

Polynomial reduced_form(const Monomial& m, const Strategy& strategy) {
  const int top = vertex_span(m.word());
  if (m.mode() == Mode::commutative) {
    ReductionTree tree = build_S(top, m.word(), strategy);
    Polynomial out(Mode::commutative);
    for (std::size_t leaf : tree.leaves()) {
      const ReductionNode& node = tree.nodes[leaf];
      out.add(Monomial(Mode::commutative, node.edges, m.beta() + node.beta), 1);
    }
    return out;
  }
  LabeledGraph root(top, m.word());  // rejects repeated letters
  ReductionTree tree = build_reduction_tree(root, strategy);
  Polynomial out(Mode::noncommutative);
  for (std::size_t leaf : tree.leaves()) {
    const ReductionNode& node = tree.nodes[leaf];
    out.add(Monomial(Mode::noncommutative, node.edges, m.beta() + node.beta), 1);
  }
  return out;
}

}  // namespace rootpoly
