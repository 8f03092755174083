#include "rootpoly/serialize.hpp"

#include "rootpoly/graph_io.hpp"

namespace rootpoly {

namespace {

template <class T>
nlohmann::json strings(const std::vector<T>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values) {
    if constexpr (std::is_same_v<T, Rational>)
      out.push_back(to_string(v));
    else
      out.push_back(v.str());
  }
  return out;
}

std::vector<Rational> rationals(const nlohmann::json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

std::vector<Integer> integers(const nlohmann::json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.emplace_back(x.get<std::string>());
  return out;
}

}  // namespace

void to_json(nlohmann::json& j, const FVector& f) { j = {{"f", strings(f.counts)}}; }
void from_json(const nlohmann::json& j, FVector& f) { f.counts = integers(j.at("f")); }

void to_json(nlohmann::json& j, const EhrhartPolynomial& p) {
  j = {{"binomial", strings(p.binomial)}, {"monomial", strings(p.monomial)}};
}
void from_json(const nlohmann::json& j, EhrhartPolynomial& p) {
  p.binomial = rationals(j.at("binomial"));
  p.monomial = rationals(j.at("monomial"));
}

void to_json(nlohmann::json& j, const EhrhartSeries& s) {
  j = {{"numerator", strings(s.numerator)}, {"denominator_power", s.denominator_power}};
}
void from_json(const nlohmann::json& j, EhrhartSeries& s) {
  s.numerator = integers(j.at("numerator"));
  s.denominator_power = j.at("denominator_power").get<int>();
}

void to_json(nlohmann::json& j, const ShellingStep& s) {
  j = {{"tree", s.tree}, {"S", s.S_set}, {"M", s.M_set}, {"attach", s.attach_set}};
}
void from_json(const nlohmann::json& j, ShellingStep& s) {
  s.tree = j.at("tree").get<Graph>();
  s.S_set = j.at("S").get<std::vector<Edge>>();
  s.M_set = j.at("M").get<std::vector<Edge>>();
  s.attach_set = j.at("attach").get<std::vector<Edge>>();
}

}  // namespace rootpoly
