#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootpoly/combinatorics.hpp"
#include "rootpoly/graph.hpp"
#include "rootpoly/polynomial.hpp"

namespace rootpoly {

/// Reducible pair (i,j), (j,k) with i < j < k.
struct Pivot {
  Edge first;
  Edge second;
  friend auto operator<=>(const Pivot&, const Pivot&) = default;
  friend bool operator==(const Pivot&, const Pivot&) = default;
};

/// G1 = E - (j,k) + (i,k), G2 = E - (i,j) + (i,k), G3 = E - (i,j) - (j,k) + (i,k).
/// Throws std::invalid_argument if the pivot is absent or malformed, or if
/// (i,k) is already an edge.
std::array<Graph, 3> reduce_step_S(const Graph& g, Pivot pivot);

/// Labeled step on (i,j)_a, (j,k)_{a+1}:
/// G1 gets (i,k)_a, (i,j)_{a+1}; G2 gets (j,k)_a, (i,k)_{a+1}; G3 gets (i,k)_a
/// and every label above a+1 drops by one.
std::array<LabeledGraph, 3> reduce_step_B(const LabeledGraph& g, Pivot pivot);

/// Swaps labels a and a+1; the two edges must be vertex-disjoint.
LabeledGraph commute_B(const LabeledGraph& g, int a);

/// Picks one reduction site among the candidates of a node.
class Strategy {
 public:
  enum class Kind { lex_first, rightmost, seeded_random };

  Strategy() = default;
  explicit Strategy(Kind kind, std::uint64_t seed = 0) : kind_(kind), seed_(seed) {}
  /// Accepts lex-first, rightmost, seeded-random.
  static Strategy parse(const std::string& name, std::uint64_t seed = 0);

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  std::string name() const;

  /// Index into `count` candidates listed in increasing order; `state` makes the
  /// random choice a function of the node.
  std::size_t choose(std::size_t count, std::span<const Edge> state) const;

 private:
  Kind kind_ = Kind::lex_first;
  std::uint64_t seed_ = 0;
};

enum class TreeMode { S, B };

struct ReductionNode {
  std::vector<Edge> edges;            // multiset in S mode, label order in B mode
  int beta = 0;                       // number of G3 steps from the root
  std::optional<Pivot> pivot;         // absent on leaves
  std::vector<Edge> arranged;         // B mode: the word after commutations
  bool commuted = false;
  std::vector<std::size_t> children;  // G1, G2, G3
};

struct ReductionTree {
  TreeMode mode = TreeMode::S;
  int vertex_count = 1;
  std::vector<ReductionNode> nodes;  // nodes[0] is the root

  std::vector<std::size_t> leaves() const;
  /// Leaf counts by edge number, indexed 0..max(root edge count, n).
  FVector leaf_census() const;
};

/// Full S-reduction tree. Reductions that create parallel edges are allowed.
ReductionTree build_reduction_tree(const Graph& root, const Strategy& strategy);

/// Full B-reduction tree; the root must be good.
ReductionTree build_reduction_tree(const LabeledGraph& root, const Strategy& strategy);

/// Sum over leaves of beta^(steps) times the leaf monomial. Commutative
/// monomials use the S calculus; noncommutative ones must be simple words
/// forming a good labeled graph and use the B calculus.
Polynomial reduced_form(const Monomial& m, const Strategy& strategy);

/// Vertex count needed for the letters of a word (at least 1).
int vertex_span(std::span<const Letter> word);

}  // namespace rootpoly
