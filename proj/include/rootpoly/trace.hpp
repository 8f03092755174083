#pragma once

#include <span>
#include <vector>

#include "rootpoly/monomial.hpp"

namespace rootpoly {

/// Positions p < q with word[p] = x_ij and word[q] = x_jk that some
/// commutation-equivalent word places next to each other.
struct TipSite {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const TipSite&, const TipSite&) = default;
};

/// Sites in increasing (first, second) order. Letters p, q can be made adjacent
/// iff no position r between them has p before r before q in the dependency
/// order of the word.
std::vector<TipSite> tip_sites(std::span<const Letter> word);

/// An equivalent word with the site's letters adjacent, and the new position of
/// the first of them.
struct Arranged {
  std::vector<Letter> word;
  std::size_t position = 0;
};
Arranged bring_together(std::span<const Letter> word, TipSite site);

/// Commutation equivalence of two words.
bool equivalent(std::span<const Letter> a, std::span<const Letter> b);

}  // namespace rootpoly
