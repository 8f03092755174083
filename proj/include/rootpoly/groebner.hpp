#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootpoly/polynomial.hpp"

namespace rootpoly {

/// Which term and which tip occurrence to rewrite next. The deterministic policy
/// rewrites the first site of the largest reducible term; the random policy
/// draws both from a seeded generator.
class SitePolicy {
 public:
  SitePolicy() = default;
  static SitePolicy seeded(std::uint64_t seed) {
    SitePolicy p;
    p.seed_ = seed;
    return p;
  }
  const std::optional<std::uint64_t>& seed() const { return seed_; }

 private:
  std::optional<std::uint64_t> seed_;
};

/// One rewrite: the term before the step and the tip positions used.
struct RewriteStep {
  std::string term;
  std::size_t first = 0;
  std::size_t second = 0;
};

/// The generator x_ij x_jk - x_ik x_ij - x_jk x_ik - beta x_ik.
Polynomial generator(int i, int j, int k);

/// True iff some word equivalent to m has a factor x_ij x_jk.
bool contains_tip(const Monomial& m);

/// Remainder modulo the generators; no term of the result contains a tip.
Polynomial normal_form(const Monomial& m);
Polynomial normal_form(const Polynomial& p, const SitePolicy& policy = {},
                       std::vector<RewriteStep>* trace = nullptr);

/// Overlap of two generators: Tip(f) c and b Tip(g) are the same trace for
/// single letters b and c. The relation is f c - b g.
struct OverlapRelation {
  std::array<int, 3> f;
  std::array<int, 3> g;
  Letter b;
  Letter c;
  Polynomial relation;
  Polynomial remainder;
};

/// All overlaps among generators on [n+1] with their remainders.
std::vector<OverlapRelation> overlap_relations(int n);

/// No tip is equivalent to a factor of another tip.
bool tips_reduced(int n);

}  // namespace rootpoly
