#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracle_geometry.hpp"
#include "rootpoly/graph_io.hpp"
#include "rootpoly/groebner.hpp"
#include "rootpoly/oracle.hpp"

namespace rootpoly::oracle {

namespace {

std::string census_text(const FVector& f) {
  std::string out = "(";
  for (std::size_t k = 0; k < f.counts.size(); ++k) out += (k ? "," : "") + f.counts[k].str();
  return out + ")";
}

std::string trace_text(const std::vector<RewriteStep>& trace) {
  std::string out;
  for (const auto& step : trace)
    out += step.term + " @(" + std::to_string(step.first) + "," + std::to_string(step.second) + "); ";
  return out;
}

}  // namespace

ProbeReport confluence_check(const Monomial& m, int orders, std::uint64_t seed) {
  ProbeReport report{"confluence", 1, {}};
  const Polynomial reference = normal_form(Polynomial(m));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < orders; ++k) {
    std::vector<RewriteStep> trace;
    const Polynomial other = normal_form(Polynomial(m), SitePolicy::seeded(rng()), &trace);
    if (other != reference) {
      report.failures.push_back({format(m), format(reference) + " vs " + format(other) + " via " + trace_text(trace)});
      break;
    }
  }
  return report;
}

ProbeReport confluence_probe(int n, int trials, std::uint64_t seed, int orders, int max_length) {
  if (n < 1 || n > 4) throw std::invalid_argument("confluence_probe: need 1 <= n <= 4");
  if (max_length < 1 || max_length > 6) throw std::invalid_argument("confluence_probe: need word length 1..6");
  std::vector<Letter> letters;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) letters.push_back({i, j});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<std::size_t> letter(0, letters.size() - 1);
  ProbeReport report{"confluence", 0, {}};
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Letter> word(length(rng));
    for (auto& x : word) x = letters[letter(rng)];
    const ProbeReport one = confluence_check(Monomial(Mode::noncommutative, word), orders, rng());
    ++report.trials;
    report.failures.insert(report.failures.end(), one.failures.begin(), one.failures.end());
  }
  return report;
}

ProbeReport strategy_invariance_probe(const Graph& t, const std::vector<Strategy>& strategies) {
  if (t.edge_count() > 6) throw std::invalid_argument("strategy_invariance_probe: at most 6 edges");
  ProbeReport report{"strategy-invariance", 1, {}};
  if (strategies.empty()) return report;
  const FVector reference = build_reduction_tree(t, strategies.front()).leaf_census();
  for (std::size_t s = 1; s < strategies.size(); ++s) {
    const FVector other = build_reduction_tree(t, strategies[s]).leaf_census();
    if (other != reference)
      report.failures.push_back({format_graph(t), strategies.front().name() + " " + census_text(reference) + " vs " +
                                                      strategies[s].name() + " " + census_text(other)});
  }
  return report;
}

std::vector<Graph> random_noncrossing_trees(int vertex_count, int count, std::uint64_t seed) {
  if (vertex_count < 2) throw std::invalid_argument("random_noncrossing_trees: need two vertices");
  std::vector<Edge> all;
  for (int i = 1; i <= vertex_count; ++i)
    for (int j = i + 1; j <= vertex_count; ++j) all.push_back({i, j});
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Edge> pick(all.begin(), all.begin() + vertex_count - 1);
    if (detail::has_cycle(vertex_count, pick)) continue;
    bool crossing = false;
    for (Edge a : pick)
      for (Edge b : pick) crossing = crossing || detail::pair_crosses(a, b);
    if (!crossing) out.emplace_back(vertex_count, pick);
  }
  return out;
}

}  // namespace rootpoly::oracle
