#include "rootpoly/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootpoly {

bool commute(Letter a, Letter b) {
  return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
}

std::vector<Letter> canonical_word(std::span<const Letter> word) {
  std::vector<Letter> rest(word.begin(), word.end());
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // A letter can move to the front iff it commutes with everything before it.
    std::size_t best = 0;
    for (std::size_t x = 1; x < rest.size(); ++x) {
      bool free = true;
      for (std::size_t y = 0; y < x && free; ++y) free = commute(rest[y], rest[x]);
      if (free && letter_less(rest[best], rest[x])) best = x;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Monomial::Monomial(Mode mode, std::vector<Letter> word, int beta)
    : mode_(mode), word_(std::move(word)), beta_(beta) {
  if (beta < 0) throw std::invalid_argument("Monomial: negative beta exponent");
  for (Letter x : word_)
    if (x.i < 1 || x.i >= x.j) throw std::invalid_argument("Monomial: letter needs 1 <= i < j");
  if (mode_ == Mode::commutative)
    std::sort(word_.begin(), word_.end(), letter_less);
  else
    word_ = canonical_word(word_);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.mode() != b.mode()) throw std::invalid_argument("Monomial product: modes differ");
  std::vector<Letter> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return Monomial(a.mode(), std::move(word), a.beta() + b.beta());
}

bool AdmissibleLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.word() != b.word())
    return std::lexicographical_compare(a.word().begin(), a.word().end(), b.word().begin(),
                                        b.word().end(), letter_less);
  if (a.beta() != b.beta()) return a.beta() < b.beta();
  return a.mode() < b.mode();
}

std::string format(Letter letter) {
  if (letter.i > 9 || letter.j > 9)
    return "x{" + std::to_string(letter.i) + "," + std::to_string(letter.j) + "}";
  return "x" + std::to_string(letter.i) + std::to_string(letter.j);
}

std::string format(const Monomial& m) {
  std::string out;
  if (m.beta() == 1) out = "b";
  if (m.beta() > 1) out = "b^" + std::to_string(m.beta());
  for (Letter x : m.word()) {
    if (!out.empty()) out += ' ';
    out += format(x);
  }
  return out.empty() ? "1" : out;
}

}  // namespace rootpoly
