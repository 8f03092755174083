#include "rootpoly/groebner.hpp"

#include <random>
#include <stdexcept>

#include "rootpoly/trace.hpp"

namespace rootpoly {

namespace {

constexpr std::size_t kRewriteLimit = 5'000'000;

Monomial word(std::vector<Letter> letters, int beta = 0) {
  return Monomial(Mode::noncommutative, std::move(letters), beta);
}

void rewrite(Polynomial& p, const Monomial& m, TipSite site) {
  const Rational c = p.coefficient(m);
  Arranged a = bring_together(m.word(), site);
  const Letter ij = a.word[a.position], jk = a.word[a.position + 1];
  const Letter ik{ij.i, jk.j};
  std::vector<Letter> w1 = a.word, w2 = a.word, w3 = a.word;
  w1[a.position] = ik;
  w1[a.position + 1] = ij;
  w2[a.position] = jk;
  w2[a.position + 1] = ik;
  w3[a.position] = ik;
  w3.erase(w3.begin() + static_cast<std::ptrdiff_t>(a.position) + 1);
  p.add(m, -c);
  p.add(word(std::move(w1), m.beta()), c);
  p.add(word(std::move(w2), m.beta()), c);
  p.add(word(std::move(w3), m.beta() + 1), c);
}

}  // namespace

Polynomial generator(int i, int j, int k) {
  if (!(1 <= i && i < j && j < k)) throw std::invalid_argument("generator: need i < j < k");
  Polynomial g(Mode::noncommutative);
  g.add(word({{i, j}, {j, k}}), 1);
  g.add(word({{i, k}, {i, j}}), -1);
  g.add(word({{j, k}, {i, k}}), -1);
  g.add(word({{i, k}}, 1), -1);
  return g;
}

bool contains_tip(const Monomial& m) { return !tip_sites(m.word()).empty(); }

Polynomial normal_form(const Monomial& m) { return normal_form(Polynomial(m)); }

Polynomial normal_form(const Polynomial& input, const SitePolicy& policy, std::vector<RewriteStep>* trace) {
  if (input.mode() != Mode::noncommutative)
    throw std::invalid_argument("normal_form: needs noncommutative monomials");
  Polynomial p = input;
  std::mt19937_64 rng(policy.seed().value_or(0));
  for (std::size_t steps = 0;; ++steps) {
    if (steps > kRewriteLimit) throw std::logic_error("normal_form: rewrite limit exceeded");
    std::vector<std::pair<Monomial, std::vector<TipSite>>> reducible;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      auto sites = tip_sites(it->first.word());
      if (sites.empty()) continue;
      reducible.emplace_back(it->first, std::move(sites));
      if (!policy.seed()) break;
    }
    if (reducible.empty()) return p;
    std::size_t term = 0, site = 0;
    if (policy.seed()) {
      term = std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng);
      site = std::uniform_int_distribution<std::size_t>(0, reducible[term].second.size() - 1)(rng);
    }
    const auto& [m, sites] = reducible[term];
    if (trace) trace->push_back({format(m), sites[site].first, sites[site].second});
    rewrite(p, m, sites[site]);
  }
}

std::vector<OverlapRelation> overlap_relations(int n) {
  if (n < 1) throw std::invalid_argument("overlap_relations: n must be positive");
  const int top = n + 1;
  std::vector<std::array<int, 3>> triples;
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j)
      for (int k = j + 1; k <= top; ++k) triples.push_back({i, j, k});
  std::vector<Letter> letters;
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) letters.push_back({i, j});

  std::vector<OverlapRelation> out;
  for (const auto& f : triples)
    for (const auto& g : triples)
      for (Letter b : letters)
        for (Letter c : letters) {
          const std::vector<Letter> left{{f[0], f[1]}, {f[1], f[2]}, c};
          const std::vector<Letter> right{b, {g[0], g[1]}, {g[1], g[2]}};
          if (!equivalent(left, right)) continue;
          OverlapRelation r{f, g, b, c, Polynomial(Mode::noncommutative), Polynomial(Mode::noncommutative)};
          r.relation = generator(f[0], f[1], f[2]) * word({c}) - word({b}) * generator(g[0], g[1], g[2]);
          r.remainder = normal_form(r.relation);
          out.push_back(std::move(r));
        }
  return out;
}

bool tips_reduced(int n) {
  std::vector<std::vector<Letter>> tips;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      for (int k = j + 1; k <= n + 1; ++k) tips.push_back({{i, j}, {j, k}});
  for (std::size_t x = 0; x < tips.size(); ++x)
    for (std::size_t y = 0; y < tips.size(); ++y)
      if (x != y && equivalent(tips[x], tips[y])) return false;
  return true;
}

}  // namespace rootpoly
