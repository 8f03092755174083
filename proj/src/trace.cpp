#include "rootpoly/trace.hpp"

#include <stdexcept>

namespace rootpoly {

namespace {

// Positions r > p reachable from p through a chain of non-commuting letters.
std::vector<char> reachable_after(std::span<const Letter> word, std::size_t p) {
  std::vector<char> reach(word.size(), 0);
  reach[p] = 1;
  for (std::size_t r = p + 1; r < word.size(); ++r)
    for (std::size_t s = p; s < r && !reach[r]; ++s)
      if (reach[s] && !commute(word[s], word[r])) reach[r] = 1;
  return reach;
}

}  // namespace

std::vector<TipSite> tip_sites(std::span<const Letter> word) {
  std::vector<TipSite> out;
  for (std::size_t p = 0; p < word.size(); ++p) {
    std::vector<char> reach;
    for (std::size_t q = p + 1; q < word.size(); ++q) {
      if (word[p].j != word[q].i) continue;
      if (reach.empty()) reach = reachable_after(word, p);
      bool blocked = false;
      for (std::size_t r = p + 1; r < q && !blocked; ++r)
        if (reach[r] && reachable_after(word, r)[q]) blocked = true;
      if (!blocked) out.push_back({p, q});
    }
  }
  return out;
}

Arranged bring_together(std::span<const Letter> word, TipSite site) {
  const auto [p, q] = site;
  if (p >= q || q >= word.size()) throw std::invalid_argument("bring_together: bad site");
  const std::vector<char> reach = reachable_after(word, p);
  Arranged out;
  out.word.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
  for (std::size_t r = p + 1; r < q; ++r)
    if (!reach[r]) out.word.push_back(word[r]);
  out.position = out.word.size();
  out.word.push_back(word[p]);
  out.word.push_back(word[q]);
  for (std::size_t r = p + 1; r < q; ++r)
    if (reach[r]) {
      if (reachable_after(word, r)[q]) throw std::invalid_argument("bring_together: site is blocked");
      out.word.push_back(word[r]);
    }
  out.word.insert(out.word.end(), word.begin() + static_cast<std::ptrdiff_t>(q) + 1, word.end());
  return out;
}

bool equivalent(std::span<const Letter> a, std::span<const Letter> b) {
  return a.size() == b.size() && canonical_word(a) == canonical_word(b);
}

}  // namespace rootpoly
