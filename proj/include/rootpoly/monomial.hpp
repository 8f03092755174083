#pragma once

#include <span>
#include <string>
#include <vector>

#include "rootpoly/graph.hpp"

namespace rootpoly {

enum class Mode { commutative, noncommutative };

/// The letter x_ij.
using Letter = Edge;

/// x_ij and x_kl commute in the noncommutative algebra iff i, j, k, l are
/// pairwise distinct.
bool commute(Letter a, Letter b);

/// Letter order: x_ij is larger than x_kl iff (i, j) < (k, l).
inline bool letter_less(Letter a, Letter b) { return b < a; }

/// Largest word in the commutation class of `word`, with letters compared by
/// letter_less and words lexicographically.
std::vector<Letter> canonical_word(std::span<const Letter> word);

/// beta^k times a word. The word is stored canonically: sorted ascending in the
/// letter order in commutative mode, the class maximum in noncommutative mode.
class Monomial {
 public:
  Monomial() = default;
  Monomial(Mode mode, std::vector<Letter> word, int beta = 0);

  Mode mode() const { return mode_; }
  const std::vector<Letter>& word() const { return word_; }
  int beta() const { return beta_; }
  std::size_t degree() const { return word_.size(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Mode mode_ = Mode::noncommutative;
  std::vector<Letter> word_;
  int beta_ = 0;
};

/// Product of two monomials of the same mode.
Monomial operator*(const Monomial& a, const Monomial& b);

/// Admissible order: higher degree is bigger, then the lexicographic word
/// order, then the larger beta power.
struct AdmissibleLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Letters render as x<i><j>, or x{i,j} when an index exceeds 9; beta as b or
/// b^k. The empty monomial renders as 1.
std::string format(Letter letter);
std::string format(const Monomial& m);

}  // namespace rootpoly
