#include "forest_turan/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "forest_turan/constructions.hpp"
#include "forest_turan/errors.hpp"
#include "forest_turan/graph6.hpp"
#include "forest_turan/oracle.hpp"
#include "forest_turan/report.hpp"
#include "forest_turan/spectral.hpp"
#include "forest_turan/verify.hpp"

namespace forest_turan {

namespace {

struct Common {
  bool json = false;
  bool timing = false;
  int workers = 1;
  std::optional<std::uint64_t> budget;
  std::optional<int> max_cells;
  std::optional<std::uint64_t> embed_budget;

  OracleOptions oracle() const {
    OracleOptions opts = default_oracle_options();
    opts.workers = workers;
    if (budget) opts.node_budget = *budget;
    if (max_cells) opts.max_cells = *max_cells;
    if (embed_budget) opts.embed_budget = *embed_budget;
    return opts;
  }
};

void emit(std::ostream& out, const Json& j, const Common& c) {
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    out << render_text(j);
  }
}

std::string read_source(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw Error("cannot read graph file '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A graph argument is a file or inline text. Text whose first line is two
// integers is the bipartite "m n" form; anything else is plain graph6.
AnyGraph load_graph(const std::string& arg) {
  const std::string text = read_source(arg);
  const auto nl = text.find('\n');
  if (nl != std::string::npos) {
    std::istringstream first(text.substr(0, nl));
    int m = 0;
    int n = 0;
    std::string rest;
    if (first >> m >> n && !(first >> rest)) return from_bipartite_text(text);
  }
  return from_graph6(text);
}

FamilyDescriptor parse_descriptor(const std::vector<std::string>& words) {
  if (words.empty()) throw ConstructionError("missing family name");
  FamilyDescriptor d{words.front(), {}};
  for (std::size_t i = 1; i < words.size(); ++i) {
    const std::string& w = words[i];
    int v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
      throw ParseError("family parameter '" + w + "' is not an integer", static_cast<std::size_t>(ptr - w.data()));
    }
    d.params.push_back(v);
  }
  return d;
}

Json graph_json(const AnyGraph& g) {
  Json j;
  Json edges = Json::array();
  if (const auto* b = std::get_if<BipartiteGraph>(&g)) {
    j["bipartite"] = true;
    j["m"] = b->m();
    j["n"] = b->n();
    j["edges"] = b->edge_count();
    for (auto [x, y] : b->edges()) edges.push_back(Json::array({x, y}));
    j["edge_list"] = edges;
    j["graph6"] = to_graph6(*b);
  } else {
    const auto& h = std::get<GeneralGraph>(g);
    j["bipartite"] = false;
    j["order"] = h.order();
    j["edges"] = h.edge_count();
    for (auto [u, v] : h.edges()) edges.push_back(Json::array({u, v}));
    j["edge_list"] = edges;
    j["graph6"] = to_graph6(h);
  }
  return j;
}

void write_graph(std::ostream& out, const AnyGraph& g, const std::string& format, const FamilyDescriptor& d) {
  if (format == "graph6") {
    if (const auto* b = std::get_if<BipartiteGraph>(&g)) {
      out << to_bipartite_text(*b);
    } else {
      out << to_graph6(std::get<GeneralGraph>(g)) << '\n';
    }
  } else if (format == "edgelist") {
    if (const auto* b = std::get_if<BipartiteGraph>(&g)) {
      out << b->m() << ' ' << b->n() << '\n';
      for (auto [x, y] : b->edges()) out << x << ' ' << y << '\n';
    } else {
      const auto& h = std::get<GeneralGraph>(g);
      out << h.order() << '\n';
      for (auto [u, v] : h.edges()) out << u << ' ' << v << '\n';
    }
  } else {
    Json j{{"family", d.to_string()}};
    j.update(graph_json(g));
    out << j.dump(2) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite Turán numbers and spectral bounds for linear forests", "forest-turan"};
  app.fallthrough();
  app.require_subcommand(1);

  Common c;
  app.add_flag("--json", c.json, "Emit JSON instead of text tables");
  app.add_flag("--timing", c.timing, "Include wall-clock time in reports");
  app.add_option("--workers", c.workers, "Oracle worker threads")->check(CLI::Range(1, 256));
  app.add_option("--budget", c.budget, "Oracle node budget (overrides FOREST_TURAN_BUDGET)");
  app.add_option("--max-cells", c.max_cells, "Largest m*n the bipartite oracle accepts");
  app.add_option("--embed-budget", c.embed_budget, "Step budget for one containment check");

  // formula
  std::string spec_text;
  std::vector<int> sizes;
  bool general = false;
  auto* formula = app.add_subcommand("formula", "Closed-form extremal number with case label");
  formula->add_option("spec", spec_text, "Forest, e.g. 5,3,2 or P5+P3+P2")->required();
  formula->add_option("sizes", sizes, "m n (bipartite) or n (--general)")->required();
  formula->add_flag("--general", general, "Use the non-bipartite formula");

  // construct
  std::vector<std::string> family_words;
  std::string format = "graph6";
  bool list_families = false;
  auto* construct = app.add_subcommand("construct", "Build a named extremal graph");
  construct->add_option("family", family_words, "Family name followed by its integer parameters");
  construct->add_option("--format", format, "graph6, edgelist or json")
      ->check(CLI::IsMember({"graph6", "edgelist", "json"}));
  construct->add_flag("--list", list_families, "List the known families");

  // embed
  std::string graph_arg;
  std::uint64_t step_budget = kDefaultStepBudget;
  auto* embed = app.add_subcommand("embed", "Search a graph for the forest");
  embed->add_option("spec", spec_text, "Forest")->required();
  embed->add_option("--graph", graph_arg, "graph6 file, \"m n\" bipartite file, or inline graph6")->required();
  embed->add_option("--steps", step_budget, "Extension step budget");

  // brute
  auto* brute = app.add_subcommand("brute", "Exact extremal number by exhaustive search");
  brute->add_option("spec", spec_text, "Forest")->required();
  brute->add_option("sizes", sizes, "m n (bipartite) or n (--general)")->required();
  brute->add_flag("--general", general, "Search all simple graphs of order n");

  // scan
  int scan_m = 0;
  int n_max = 8;
  auto* scan = app.add_subcommand("scan", "Compare oracle and formula for n = m..n_max");
  scan->add_option("spec", spec_text, "Forest")->required();
  scan->add_option("m", scan_m, "Smaller side")->required();
  scan->add_option("n_max", n_max, "Largest n")->required();

  // brute-spectral
  int order = 0;
  auto* brute_spec = app.add_subcommand("brute-spectral", "Spectral extremum over F-free graphs of order n");
  brute_spec->add_option("spec", spec_text, "Forest")->required();
  brute_spec->add_option("n", order, "Order")->required();
  brute_spec->add_flag("--general", general, "Minimum least eigenvalue over all graphs");

  // spectral
  std::vector<std::string> construct_words;
  double tol = kDefaultSpectralTol;
  auto* spectral = app.add_subcommand("spectral", "Largest and least adjacency eigenvalue");
  spectral->add_option("graph", graph_arg, "graph6 file, \"m n\" bipartite file, or inline graph6");
  spectral->add_option("--construct", construct_words, "Family name and parameters")->expected(1, -1);
  spectral->add_option("--tol", tol, "Rayleigh residual tolerance")->check(CLI::PositiveNumber);

  // verify
  std::string theorem;
  int max_mn = 25;
  int kmin = 2;
  int kmax = 8;
  std::optional<int> verify_m;
  int p = 3;
  int limit = 15;
  int n_min = 4;
  auto* verify = app.add_subcommand("verify", "Check a statement against the oracle over a grid");
  verify->add_option("theorem", theorem, "thm1.1, thm1.2, thm1.5, lemma2.1, lemma2.2, thm1.7 or cor1.8")
      ->required()
      ->check(CLI::IsMember({"thm1.1", "thm1.2", "thm1.5", "lemma2.1", "lemma2.2", "thm1.7", "cor1.8"}));
  verify->add_option("--max-mn", max_mn, "thm1.2: largest m*n");
  verify->add_option("--kmin", kmin, "thm1.1/thm1.2: smallest path order");
  verify->add_option("--kmax", kmax, "thm1.1/thm1.2: largest path order");
  verify->add_option("--spec", spec_text, "thm1.5/thm1.7/cor1.8: forest");
  verify->add_option("--m", verify_m, "thm1.5: smaller side; lemma2.2: m (default: every m in 3p+1..limit)");
  verify->add_option("--nmin", n_min, "thm1.1/thm1.7/cor1.8: smallest order");
  verify->add_option("--nmax", n_max, "largest n");
  verify->add_option("--p", p, "lemma2.1/lemma2.2: p");
  verify->add_option("--limit", limit, "lemma2.1/lemma2.2: range limit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;  // --help is the only successful "error"
  }

  try {
    if (formula->parsed()) {
      const LinearForestSpec spec = LinearForestSpec::parse(spec_text);
      Json j{{"spec", spec.to_string()}, {"p", spec.p()}};
      FormulaResult r;
      if (general) {
        if (sizes.size() != 1) throw DomainError("formula --general takes one size n");
        j["n"] = sizes[0];
        r = ex_forest_general(sizes[0], spec);
      } else {
        if (sizes.size() != 2) throw DomainError("formula takes two sizes m n");
        int m = sizes[0];
        int n = sizes[1];
        const bool swapped = m > n;
        if (swapped) std::swap(m, n);
        j["m"] = m;
        j["n"] = n;
        r = ex_forest_bipartite(m, n, spec);
        if (swapped) r.case_label += " [sides swapped]";
      }
      j.update(to_json(r));
      emit(out, j, c);
      return 0;
    }

    if (construct->parsed()) {
      if (list_families) {
        Json rows = Json::array();
        for (const auto& [name, params] : family_catalogue()) rows.push_back(Json{{"family", name}, {"params", params}});
        emit(out, Json{{"families", rows}}, c);
        return 0;
      }
      const FamilyDescriptor d = parse_descriptor(family_words);
      write_graph(out, build_family(d), c.json ? "json" : format, d);
      return 0;
    }

    if (embed->parsed()) {
      const LinearForestSpec spec = LinearForestSpec::parse(spec_text);
      const AnyGraph g = load_graph(graph_arg);
      EmbedResult r;
      std::optional<int> bm;
      if (const auto* b = std::get_if<BipartiteGraph>(&g)) {
        r = contains_forest(*b, spec, step_budget);
        bm = b->m();
      } else {
        r = contains_forest(std::get<GeneralGraph>(g), spec, step_budget);
      }
      Json j{{"spec", spec.to_string()}};
      j.update(to_json(r, bm));
      emit(out, j, c);
      return r.status == EmbedStatus::budget_exceeded ? 3 : 0;
    }

    if (brute->parsed()) {
      const LinearForestSpec spec = LinearForestSpec::parse(spec_text);
      const OracleOptions opts = c.oracle();
      OracleReport r;
      if (general) {
        if (sizes.size() != 1) throw DomainError("brute --general takes one size n");
        r = brute_ex_general(sizes[0], spec, opts);
      } else {
        if (sizes.size() != 2) throw DomainError("brute takes two sizes m n");
        r = brute_ex_bipartite(sizes[0], sizes[1], spec, opts);
      }
      emit(out, to_json(r, c.timing), c);
      return 0;
    }

    if (scan->parsed()) {
      const LinearForestSpec spec = LinearForestSpec::parse(spec_text);
      emit(out, to_json(threshold_scan(scan_m, spec, n_max, c.oracle()), c.timing), c);
      return 0;
    }

    if (brute_spec->parsed()) {
      const LinearForestSpec spec = LinearForestSpec::parse(spec_text);
      emit(out, to_json(brute_spectral_max(order, spec, !general, c.oracle()), c.timing), c);
      return 0;
    }

    if (spectral->parsed()) {
      AnyGraph g;
      if (!construct_words.empty()) {
        g = build_family(parse_descriptor(construct_words));
      } else if (!graph_arg.empty()) {
        g = load_graph(graph_arg);
      } else {
        throw DomainError("spectral needs a graph argument or --construct");
      }
      const SpectralResult r = std::visit([&](const auto& h) { return spectral_radius(h, tol); }, g);
      emit(out, to_json(r), c);
      return 0;
    }

    if (verify->parsed()) {
      const OracleOptions opts = c.oracle();
      VerifyReport r;
      if (theorem == "thm1.2") {
        r = verify_path_table(max_mn, kmin, kmax, opts);
      } else if (theorem == "thm1.5") {
        if (spec_text.empty() || !verify_m) throw DomainError("verify thm1.5 needs --spec and --m");
        r = verify_forest_table(LinearForestSpec::parse(spec_text), *verify_m, n_max, opts);
      } else if (theorem == "lemma2.1") {
        r = verify_first_p7_lemma(p, limit);
      } else if (theorem == "lemma2.2") {
        r = verify_second_p7_lemma(p, verify_m, limit);
      } else if (theorem == "thm1.7" || theorem == "cor1.8") {
        const LinearForestSpec spec = LinearForestSpec::parse(spec_text.empty() ? "2,2" : spec_text);
        r = verify_spectral_bound(spec, n_min, n_max, theorem == "cor1.8", opts);
      } else {
        r = verify_path_bound(std::max(n_min, 2), n_max, kmin, kmax, opts);
      }
      emit(out, to_json(r, c.timing), c);
      return r.failed ? 1 : 0;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (best estimate " << fixed9(e.best_estimate()) << ")\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace forest_turan
