#include "rootpoly/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rootpoly/graph_io.hpp"
#include "rootpoly/groebner.hpp"
#include "rootpoly/oracle.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/reduction.hpp"
#include "rootpoly/serialize.hpp"
#include "rootpoly/shelling.hpp"

namespace rootpoly::cli {

namespace {

struct Options {
  std::string input;
  std::string mode = "B";
  std::string strategy = "lex-first";
  std::uint64_t seed = 0;
  std::string format = "text";
  int jobs = 1;
  std::optional<long> eval;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    std::stringstream buffer;
    buffer << file.rdbuf();
    std::string text = buffer.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return text;
  }
  return arg;
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::string out = "{";
  for (std::size_t x = 0; x < edges.size(); ++x)
    out += (x ? "," : "") + std::to_string(edges[x].i) + "-" + std::to_string(edges[x].j);
  return out + "}";
}

std::string list_text(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? ", " : "") + values[k].str();
  return out + "]";
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), json_(o.format == "json") {}

  int reduce() {
    const Mode mode = o_.mode == "S" ? Mode::commutative : Mode::noncommutative;
    const Polynomial p = reduced_form(parse_monomial(o_.input, mode), Strategy::parse(o_.strategy, o_.seed));
    emit_polynomial(p);
    return 0;
  }

  int normal_form_verb() {
    emit_polynomial(normal_form(parse_monomial(o_.input, Mode::noncommutative)));
    return 0;
  }

  int triangulate_verb() {
    const auto simplices = triangulate(graph());
    if (json_) {
      out_ << nlohmann::json(simplices).dump() << "\n";
    } else {
      for (const Graph& s : simplices) out_ << format_graph(s) << "\n";
    }
    return 0;
  }

  int fvector_verb() {
    emit_fvector(f_vector(graph()));
    return 0;
  }

  int census_verb() {
    emit_fvector(oracle::exhaustive_forest_census(graph()));
    return 0;
  }

  int ehrhart_verb() {
    const EhrhartPolynomial L = ehrhart(graph());
    if (o_.eval) {
      const Rational value = L.evaluate(Rational(*o_.eval));
      out_ << (json_ ? nlohmann::json(to_string(value)).dump() : to_string(value)) << "\n";
    } else {
      out_ << (json_ ? nlohmann::json(L).dump() : L.format()) << "\n";
    }
    return 0;
  }

  int volume_verb() {
    const Rational v = volume(graph());
    out_ << (json_ ? nlohmann::json(to_string(v)).dump() : to_string(v)) << "\n";
    return 0;
  }

  int shell_verb() {
    const auto steps = shelling_order(graph());
    if (json_) {
      out_ << nlohmann::json(steps).dump() << "\n";
      return 0;
    }
    for (std::size_t m = 0; m < steps.size(); ++m)
      out_ << "T" << m + 1 << ": " << edges_text(steps[m].tree.edges()) << " S=" << edges_text(steps[m].S_set)
           << " M=" << edges_text(steps[m].M_set) << " S_T=" << edges_text(steps[m].attach_set) << "\n";
    return 0;
  }

  int series_verb() {
    const EhrhartSeries s = ehrhart_series(graph());
    out_ << (json_ ? nlohmann::json(s).dump() : s.format()) << "\n";
    return 0;
  }

  int verify_verb() {
    const Graph g = graph();
    const std::string name = format_graph(g);
    oracle::Report report;
    const EhrhartPolynomial L = ehrhart(g);
    const long l = static_cast<long>(g.edge_count());
    for (long t = 1; t <= 3; ++t) {
      const oracle::LatticeCountResult r = oracle::lattice_count(g, t, o_.jobs);
      Rational open = L.evaluate(Rational(-t));
      if (l % 2) open = -open;
      const bool pass = Rational(r.closed) == L.evaluate(Rational(t)) && Rational(r.interior) == open;
      report.add("lattice-t" + std::to_string(t), name, pass,
                 "closed " + r.closed.str() + ", interior " + r.interior.str());
    }
    const bool noncrossing_tree = is_tree(g) && is_noncrossing(g);
    if (noncrossing_tree && transitive_closure(g).edge_count() <= 24) {
      const FVector census = oracle::exhaustive_forest_census(g);
      report.add("forest-census", name, census == f_vector(g), list_text(census.counts));
    }
    const ValidityReport validity = triangulation_validity(g);
    report.add("triangulation", name, validity.ok(), validity.ok() ? "" : validity.failures.front());
    if (noncrossing_tree) {
      const ShellingReport shelling = shelling_verify(g);
      report.add("shelling", name, shelling.ok, shelling.ok ? "" : shelling.failures.front());
    }
    if (is_tree(g)) {
      const EhrhartSeries series = ehrhart_series(g);
      const auto expanded = series.expand(11);
      bool pass = true;
      for (long t = 0; t <= 10; ++t) pass = pass && Rational(expanded[t]) == L.evaluate(Rational(t));
      report.add("series", name, pass, series.format());
    }
    if (g.edge_count() <= 6) {
      const std::vector<Strategy> strategies{Strategy(Strategy::Kind::lex_first), Strategy(Strategy::Kind::rightmost),
                                             Strategy(Strategy::Kind::seeded_random, o_.seed)};
      report.add(oracle::strategy_invariance_probe(g, strategies), name);
      const FVector leaves = build_reduction_tree(g, strategies.front()).leaf_census();
      report.add("leaf-census", name, leaves == f_vector(g), list_text(leaves.counts));
    }
    out_ << (json_ ? report.json().dump(2) + "\n" : report.text());
    return report.all_pass() ? 0 : 1;
  }

 private:
  Graph graph() const { return parse_graph(o_.input); }

  void emit_polynomial(const Polynomial& p) {
    out_ << (json_ ? nlohmann::json(p).dump() : format(p)) << "\n";
  }

  void emit_fvector(const FVector& f) {
    out_ << (json_ ? nlohmann::json(f).dump() : "f = " + list_text(f.counts)) << "\n";
  }

  const Options& o_;
  std::ostream& out_;
  bool json_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root polytopes and the subdivision algebra"};
  app.require_subcommand(1);
  Options o;
  std::string raw_input;

  struct Verb {
    const char* name;
    const char* help;
    int (Runner::*action)();
  };
  const std::vector<Verb> verbs{
      {"reduce", "reduced form of a monomial", &Runner::reduce},
      {"normal-form", "Groebner normal form of a noncommutative monomial", &Runner::normal_form_verb},
      {"triangulate", "maximal simplices of the canonical triangulation", &Runner::triangulate_verb},
      {"fvector", "admissible forest counts", &Runner::fvector_verb},
      {"ehrhart", "Ehrhart polynomial", &Runner::ehrhart_verb},
      {"volume", "normalized volume", &Runner::volume_verb},
      {"shell", "shelling order with attachment sets", &Runner::shell_verb},
      {"series", "Ehrhart series numerator", &Runner::series_verb},
      {"verify", "run the oracle suite on a graph", &Runner::verify_verb},
      {"census", "brute-force forest census", &Runner::census_verb},
  };
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("input", raw_input, "graph or monomial literal, or a file containing one")->required();
    sub->add_option("--mode", o.mode, "S (commutative) or B (noncommutative)")
        ->check(CLI::IsMember({"S", "B"}));
    sub->add_option("--strategy", o.strategy, "lex-first, rightmost or seeded-random")
        ->check(CLI::IsMember({"lex-first", "rightmost", "seeded-random"}));
    sub->add_option("--seed", o.seed, "seed for seeded-random");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", o.jobs, "worker threads for lattice counting")->check(CLI::PositiveNumber);
    if (std::string(v.name) == "ehrhart") sub->add_option("--eval", o.eval, "evaluate at an integer");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  o.input = read_input(raw_input);
  Runner runner(o, out);
  try {
    for (const Verb& v : verbs)
      if (app.got_subcommand(v.name)) return (runner.*v.action)();
  } catch (const ParseError& e) {
    err << e.annotated() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rootpoly::cli
