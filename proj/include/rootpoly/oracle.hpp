#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootpoly/arith.hpp"
#include "rootpoly/combinatorics.hpp"
#include "rootpoly/graph.hpp"
#include "rootpoly/monomial.hpp"
#include "rootpoly/reduction.hpp"

namespace rootpoly::oracle {

struct LatticeCountResult {
  long t = 0;
  Integer closed = 0;
  Integer interior = 0;
};

/// Lattice points of t P(g) and of its relative interior, by brute force over
/// a box and exact facet inequalities. Throws on cycles or t <= 0.
LatticeCountResult lattice_count(const Graph& g, long t, int jobs = 1);

/// Counts, by edge number, the forests F inside the closure of t that lie in a
/// noncrossing alternating spanning tree of the closure and whose simplex P(F)
/// is not contained in a facet of P(t). Every subset of closure edges is
/// examined; throws std::length_error above 24 closure edges.
FVector exhaustive_forest_census(const Graph& t);

struct Finding {
  std::string input;
  std::string witness;
};

struct ProbeReport {
  std::string check;
  std::size_t trials = 0;
  std::vector<Finding> failures;

  bool pass() const { return failures.empty(); }
};

/// Random noncommutative monomials on [n+1]; each normal form is recomputed
/// under `orders` random rewrite orders and compared with the deterministic
/// one. Requires n <= 4 and max_length <= 6.
ProbeReport confluence_probe(int n, int trials, std::uint64_t seed, int orders = 5, int max_length = 5);

/// The same comparison for one monomial.
ProbeReport confluence_check(const Monomial& m, int orders, std::uint64_t seed);

/// S-reduction leaf censuses agree across strategies. At most 6 edges.
ProbeReport strategy_invariance_probe(const Graph& t, const std::vector<Strategy>& strategies);

/// Random noncrossing spanning trees on [vertex_count].
std::vector<Graph> random_noncrossing_trees(int vertex_count, int count, std::uint64_t seed);

// ---------------------------------------------------------------------------

struct CheckRecord {
  std::string check;
  std::string input;
  bool pass = false;
  std::string witness;
};

class Report {
 public:
  void add(std::string check, std::string input, bool pass, std::string witness = {});
  void add(const ProbeReport& probe, const std::string& input);

  const std::vector<CheckRecord>& records() const { return records_; }
  bool all_pass() const;
  nlohmann::json json() const;
  std::string text() const;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace rootpoly::oracle
