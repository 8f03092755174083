#include "rootpoly/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "rootpoly/graph_io.hpp"

namespace rootpoly {

Polynomial::Polynomial(const Monomial& m, Rational coefficient) : mode_(m.mode()) {
  add(m, coefficient);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading() const {
  if (terms_.empty()) throw std::logic_error("Polynomial::leading: zero polynomial");
  return terms_.rbegin()->first;
}

void Polynomial::add(const Monomial& m, const Rational& coefficient) {
  if (m.mode() != mode_) throw std::invalid_argument("Polynomial: monomial mode differs");
  if (coefficient == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, coefficient);
  if (fresh) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= scalar;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& p, const Monomial& m) {
  Polynomial out(p.mode());
  for (const auto& [term, c] : p.terms()) out.add(term * m, c);
  return out;
}

Polynomial operator*(const Monomial& m, const Polynomial& p) {
  Polynomial out(p.mode());
  for (const auto& [term, c] : p.terms()) out.add(m * term, c);
  return out;
}

std::vector<Rational> specialize_x_to_one(const Polynomial& p) {
  std::vector<Rational> out;
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<std::size_t>(m.beta()) >= out.size()) out.resize(m.beta() + 1, Rational(0));
    out[m.beta()] += c;
  }
  return out;
}

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational magnitude = negative ? Rational(-c) : c;
    const std::string body = format(m);
    if (magnitude == 1)
      out += body;
    else if (body == "1")
      out += to_string(magnitude);
    else
      out += to_string(magnitude) + " " + body;
  }
  return out;
}

namespace {

class TermLexer {
 public:
  explicit TermLexer(std::string_view text) : text_(text) {}

  Polynomial polynomial(Mode mode) {
    Polynomial out(mode);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek('-') || peek('+')) negative = text_[pos_++] == '-';
    for (;;) {
      auto [m, c] = term(mode);
      out.add(m, negative ? Rational(-c) : c);
      skip_space();
      if (at_end()) break;
      if (!peek('+') && !peek('-')) fail("expected + or -");
      negative = text_[pos_++] == '-';
    }
    return out;
  }

  Monomial monomial(Mode mode) {
    auto [m, c] = term(mode);
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    if (c != 1) fail_at("a monomial literal takes no coefficient", 0);
    return m;
  }

 private:
  std::pair<Monomial, Rational> term(Mode mode) {
    skip_space();
    Rational coefficient = 1;
    bool any = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
      try {
        coefficient = parse_rational(text_.substr(start, pos_ - start));
      } catch (const std::exception&) {
        fail_at("malformed coefficient", start);
      }
      any = true;
    }
    int beta = 0;
    std::vector<Letter> word;
    for (;;) {
      skip_space();
      if (peek('b')) {
        ++pos_;
        int power = 1;
        if (peek('^')) {
          ++pos_;
          power = integer();
        }
        beta += power;
      } else if (peek('x')) {
        word.push_back(letter());
      } else {
        break;
      }
      any = true;
      if (peek('*')) ++pos_;
    }
    if (!any) fail("expected a term");
    return {Monomial(mode, std::move(word), beta), coefficient};
  }

  Letter letter() {
    const std::size_t start = pos_++;
    Letter x;
    if (peek('{')) {
      ++pos_;
      x.i = integer();
      skip_space();
      if (!peek(',')) fail("expected ','");
      ++pos_;
      x.j = integer();
      skip_space();
      if (!peek('}')) fail("expected '}'");
      ++pos_;
    } else {
      if (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
        fail("expected two digits or {i,j} after x");
      x.i = text_[pos_] - '0';
      x.j = text_[pos_ + 1] - '0';
      pos_ += 2;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("use x{i,j} for indices above 9");
    }
    if (x.i < 1 || x.i >= x.j) fail_at("letter needs 1 <= i < j", start);
    return x;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail_at("integer too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t column) const {
    throw ParseError(message, std::string(text_), column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string mode_name(Mode mode) {
  return mode == Mode::commutative ? "commutative" : "noncommutative";
}

Mode mode_from_name(const std::string& name) {
  if (name == "commutative") return Mode::commutative;
  if (name == "noncommutative") return Mode::noncommutative;
  throw std::invalid_argument("unknown mode: " + name);
}

}  // namespace

Monomial parse_monomial(std::string_view text, Mode mode) { return TermLexer(text).monomial(mode); }

Polynomial parse_polynomial(std::string_view text, Mode mode) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return Polynomial(mode);
  return TermLexer(text).polynomial(mode);
}

void to_json(nlohmann::json& j, const Monomial& m) {
  nlohmann::json word = nlohmann::json::array();
  for (Letter x : m.word()) word.push_back({x.i, x.j});
  j = {{"mode", mode_name(m.mode())}, {"beta", m.beta()}, {"word", word}};
}

void from_json(const nlohmann::json& j, Monomial& m) {
  std::vector<Letter> word;
  for (const auto& x : j.at("word")) word.push_back({x.at(0).get<int>(), x.at(1).get<int>()});
  m = Monomial(mode_from_name(j.at("mode").get<std::string>()), std::move(word), j.at("beta").get<int>());
}

void to_json(nlohmann::json& j, const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json word = nlohmann::json::array();
    for (Letter x : it->first.word()) word.push_back({x.i, x.j});
    terms.push_back({{"coefficient", to_string(it->second)}, {"beta", it->first.beta()}, {"word", word}});
  }
  j = {{"mode", mode_name(p.mode())}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, Polynomial& p) {
  const Mode mode = mode_from_name(j.at("mode").get<std::string>());
  p = Polynomial(mode);
  for (const auto& t : j.at("terms")) {
    std::vector<Letter> word;
    for (const auto& x : t.at("word")) word.push_back({x.at(0).get<int>(), x.at(1).get<int>()});
    p.add(Monomial(mode, std::move(word), t.at("beta").get<int>()),
          parse_rational(t.at("coefficient").get<std::string>()));
  }
}

}  // namespace rootpoly
