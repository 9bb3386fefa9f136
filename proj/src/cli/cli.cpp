#include "drg/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "drg/classify/classify.hpp"
#include "drg/classify/identities.hpp"
#include "drg/cli/format.hpp"
#include "drg/graphs/graph.hpp"
#include "drg/spectral/qpoly.hpp"

namespace drg::cli {

namespace {

using classify::Classification;
using exact::AlgebraicReal;
using exact::BigInt;
using exact::Rational;
using graphs::Graph;
using spectral::IntersectionArray;
using spectral::SpectralData;

constexpr std::size_t kSpectrumCap = 512;

/// Emits either key=value lines or one JSON document.
class Report {
 public:
  Report(std::ostream& out, bool json) : out_(out), json_(json) {}
  bool json() const { return json_; }
  void line(const ReportLine& l) {
    if (!json_) out_ << format_line(l) << '\n';
  }
  Json& doc() { return doc_; }
  void finish() {
    if (json_) out_ << doc_.dump(2) << '\n';
  }

 private:
  std::ostream& out_;
  bool json_;
  Json doc_ = Json::object();
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<std::string> texts(const std::vector<AlgebraicReal>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(exact_text(x));
  return out;
}

Json spectrum_json(const std::vector<std::pair<std::string, std::string>>& entries) {
  Json a = Json::array();
  for (const auto& [v, m] : entries) a.push_back({{"eigenvalue", v}, {"multiplicity", m}});
  return a;
}

void emit_spectrum(Report& rep, const std::vector<std::pair<std::string, std::string>>& entries) {
  for (const auto& [v, m] : entries) rep.line({{"eigenvalue", v}, {"multiplicity", m}});
  rep.doc()["spectrum"] = spectrum_json(entries);
}

std::vector<std::pair<std::string, std::string>> graph_spectrum_text(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : graphs::graph_spectrum(g, kSpectrumCap))
    out.emplace_back(exact_text(e.value), std::to_string(e.multiplicity));
  return out;
}

int max_field_degree(const SpectralData& s) {
  int out = 1;
  for (const auto& t : s.eigenvalues()) out = std::max(out, t.defining_polynomial().degree());
  return out;
}

void analyze_array(Report& rep, const IntersectionArray& arr) {
  SpectralData s(arr);
  rep.line({{"array", arr.to_string()}, {"D", std::to_string(arr.diameter())}, {"n", exact_text(s.order())}});
  rep.doc()["array"] = arr.to_string();
  rep.doc()["D"] = arr.diameter();
  rep.doc()["n"] = exact_text(s.order());

  std::vector<std::pair<std::string, std::string>> spec;
  for (int i = 0; i <= arr.diameter(); ++i)
    spec.emplace_back(exact_text(s.eigenvalues()[static_cast<std::size_t>(i)]), exact_text(s.multiplicity_value(i)));
  emit_spectrum(rep, spec);

  const bool ab = spectral::is_almost_bipartite(arr);
  rep.line({{"almost_bipartite", yes_no(ab)}});
  rep.doc()["almost_bipartite"] = ab;

  Classification c = classify::classify(s);
  std::vector<spectral::QPolyOrdering> orderings = c.orderings;
  bool enumerated = c.orderings_computed;
  if (!enumerated && !c.matched_family && max_field_degree(s) <= classify::kOrderingFieldDegreeCap) {
    orderings = spectral::q_polynomial_orderings(s);
    enumerated = true;
  }
  Json ords = Json::array();
  if (!enumerated) {
    rep.line({{"orderings", "not_enumerated"}});
    rep.doc()["orderings"] = nullptr;
  } else {
    for (const auto& o : orderings) {
      auto t = o.ordered_eigenvalues(s);
      ReportLine l{{"ordering", join(texts(t), ",")}};
      Json jo{{"ordering", texts(t)}};
      if (arr.diameter() >= 3 && t[1] != t[2]) {
        const std::string beta = exact_text(classify::beta_of(t[0], t[1], t[2], t[3]));
        l.emplace_back("beta", beta);
        jo["beta"] = beta;
      }
      if (arr.diameter() >= 2) {
        l.emplace_back("mu", arr.c(2).get_str());
        jo["mu"] = arr.c(2).get_str();
      }
      rep.line(l);
      ords.push_back(jo);
    }
    rep.doc()["orderings"] = ords;
  }
  if (!c.flags.empty()) {
    ReportLine l;
    for (const auto& f : c.flags) {
      l.emplace_back(f.name, classify::tri_name(f.verdict));
      rep.doc()[f.name] = classify::tri_name(f.verdict);
    }
    rep.line(l);
  }
  rep.line({{"verdict", c.to_string()}});
  rep.doc()["verdict"] = c.to_string();
}

int cmd_construct(Report& rep, const std::string& family, int n, const std::string& out_path,
                  const std::string& labels_path) {
  auto f = graphs::parse_family(family);
  if (!f) throw graphs::ParameterError("unknown family '" + family + "'");
  Graph g = graphs::construct_family(*f, n);
  if (!out_path.empty()) graphs::save_graph(g, out_path, labels_path);
  auto reg = g.regular_degree();
  rep.line({{"family", std::string(graphs::family_name(*f))},
            {"n", std::to_string(n)},
            {"vertices", std::to_string(g.order())},
            {"edges", std::to_string(g.size())},
            {"regular", reg ? std::to_string(*reg) : "no"}});
  auto& d = rep.doc();
  d["family"] = std::string(graphs::family_name(*f));
  d["n"] = n;
  d["vertices"] = g.order();
  d["edges"] = g.size();
  d["regular"] = reg ? Json(*reg) : Json(nullptr);
  return kOk;
}

int cmd_analyze(Report& rep, const std::string& path, const std::string& labels, const std::string& array,
                bool strict) {
  if (!array.empty()) {
    analyze_array(rep, IntersectionArray::parse(array));
    return kOk;
  }
  Graph g = graphs::load_graph(path, labels);
  auto check = graphs::intersection_array(g, strict);
  rep.line({{"vertices", std::to_string(g.order())},
            {"edges", std::to_string(g.size())},
            {"distance_regular", yes_no(check.is_distance_regular())}});
  rep.doc()["vertices"] = g.order();
  rep.doc()["edges"] = g.size();
  rep.doc()["distance_regular"] = check.is_distance_regular();
  if (check.array) {
    analyze_array(rep, *check.array);
    return kOk;
  }
  const auto& w = *check.witness;
  std::string param = w.what == "p^h_ij" ? "p^" + std::to_string(w.distance) + "_" + std::to_string(w.i) + "," +
                                               std::to_string(w.j)
                                         : w.what + "_" + std::to_string(w.distance);
  ReportLine wl{{"witness_x", g.label(w.x)},
                {"witness_y", g.label(w.y)},
                {"distance", std::to_string(w.distance)},
                {"parameter", param},
                {"found", std::to_string(w.found)},
                {"expected", std::to_string(w.expected)}};
  rep.line(wl);
  Json jw = Json::object();
  for (const auto& [k, v] : wl) jw[k] = v;
  rep.doc()["witness"] = jw;
  if (g.order() <= kSpectrumCap) emit_spectrum(rep, graph_spectrum_text(g));
  rep.line({{"verdict", "NotDistanceRegular"}});
  rep.doc()["verdict"] = "NotDistanceRegular";
  return kOk;
}

int cmd_double(Report& rep, const std::string& path, const std::string& labels, const std::string& out_path) {
  Graph g = graphs::load_graph(path, labels);
  const auto dd_in = graphs::distance_data(g);
  Graph d = graphs::bipartite_double(g);
  if (!out_path.empty()) graphs::save_graph(d, out_path);
  auto in_check = graphs::intersection_array(g);
  const auto dd = graphs::distance_data(d);
  auto out_check = graphs::intersection_array(d);

  ReportLine l{{"vertices", std::to_string(d.order())},
               {"edges", std::to_string(d.size())},
               {"input_diameter", std::to_string(dd_in.diameter)},
               {"diameter", std::to_string(dd.diameter)},
               {"bipartite", yes_no(d.is_bipartite())}};
  auto rk = g.regular_degree();
  l.emplace_back("k_preserved", rk && d.regular_degree() == rk ? "true" : "false");
  std::string c2 = "na";
  if (in_check.array && out_check.array && in_check.array->diameter() >= 2 && out_check.array->diameter() >= 2)
    c2 = yes_no(in_check.array->c(2) == out_check.array->c(2));
  l.emplace_back("c2_preserved", c2);

  std::string negation = "skipped";
  if (d.order() <= kSpectrumCap) {
    std::vector<std::pair<AlgebraicReal, std::size_t>> expected;
    for (const auto& e : graphs::graph_spectrum(g, kSpectrumCap)) {
      expected.emplace_back(e.value, e.multiplicity);
      expected.emplace_back(-e.value, e.multiplicity);
    }
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::pair<AlgebraicReal, std::size_t>> merged;
    for (auto& e : expected) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(e);
    }
    auto actual = graphs::graph_spectrum(d, kSpectrumCap);
    bool same = actual.size() == merged.size();
    for (std::size_t i = 0; same && i < actual.size(); ++i)
      same = actual[i].value == merged[i].first && actual[i].multiplicity == merged[i].second;
    negation = yes_no(same);
  }
  l.emplace_back("spectrum_negation", negation);
  if (out_check.array) l.emplace_back("array", out_check.array->to_string());
  rep.line(l);
  for (const auto& [k, v] : l) rep.doc()[k] = v;
  return kOk;
}

int cmd_family(Report& rep, const std::string& beta_text, const std::string& mu_text) {
  AlgebraicReal beta = parse_exact(beta_text);
  BigInt mu;
  if (mu.set_str(mu_text, 10) != 0) throw std::invalid_argument("mu must be an integer");
  classify::D3FamilyPoint p = classify::d3_family(beta, mu);
  std::vector<std::string> th;
  for (const auto& t : p.theta) th.push_back(exact_text(t.value()));
  ReportLine l{{"beta", exact_text(beta)},
               {"mu", mu.get_str()},
               {"k", exact_text(p.k.value())},
               {"c2", exact_text(p.c2.value())},
               {"c3", exact_text(p.c3.value())},
               {"b2", exact_text(p.b2.value())},
               {"b2_closed_form", yes_no(p.b2_consistent)},
               {"thetas", join(th, ",")}};
  auto arr = p.array();
  l.emplace_back("array", arr ? arr->to_string() : "none");
  rep.line(l);
  for (const auto& [k, v] : l) rep.doc()[k] = v;
  rep.doc()["thetas"] = th;
  rep.doc()["b2_closed_form"] = p.b2_consistent;
  if (auto b = beta.as_integer()) {
    classify::CandidateRecord r = classify::evaluate_candidate(*b, mu);
    ReportLine fl;
    for (const auto& f : r.filters) {
      fl.emplace_back(f.name, classify::tri_name(f.verdict));
      rep.doc()[f.name] = classify::tri_name(f.verdict);
    }
    if (r.n) {
      fl.emplace_back("n", r.n->get_str());
      rep.doc()["n"] = r.n->get_str();
    }
    fl.emplace_back("verdict", r.verdict);
    rep.doc()["verdict"] = r.verdict;
    if (!r.first_failure.empty()) {
      fl.emplace_back("first_failure", r.first_failure);
      rep.doc()["first_failure"] = r.first_failure;
    }
    rep.line(fl);
  } else {
    rep.line({{"filters", "na"}, {"reason", "beta_not_integral"}});
    rep.doc()["filters"] = nullptr;
  }
  return kOk;
}

int cmd_sieve(std::ostream& out, bool json, const classify::SieveOptions& opts, const std::string& out_path) {
  auto records = classify::sieve(opts);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
  }
  std::ostream& rec_out = out_path.empty() ? out : file;
  for (const auto& r : records) {
    if (json)
      rec_out << record_json(r).dump() << '\n';
    else
      rec_out << r.to_line() << '\n';
  }
  auto summary = classify::summarize(records);
  if (json) {
    Json s{{"summary", "sieve"}, {"total", summary.total}, {"survivors", summary.survivors}, {"known", summary.known}};
    for (const auto& [name, count] : summary.first_failures) s["fail_" + name] = count;
    out << s.dump() << '\n';
  } else {
    out << summary.to_line() << '\n';
  }
  return kOk;
}

int cmd_identities(Report& rep, std::ostream& err, std::size_t trials, std::uint64_t seed, int dmax) {
  if (trials == 0) err << "warning: zero trials requested; identities pass vacuously\n";
  classify::IdentityOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  opts.dmax = dmax;
  auto results = classify::run_identities(opts);
  std::size_t failed = 0;
  Json arr = Json::array();
  for (const auto& r : results) {
    rep.line({{"identity", r.name},
              {"samples", std::to_string(r.samples)},
              {"failures", std::to_string(r.failures)},
              {"result", r.passed() ? "pass" : "fail"}});
    Json j{{"identity", r.name}, {"samples", r.samples}, {"failures", r.failures},
           {"result", r.passed() ? "pass" : "fail"}};
    if (!r.passed()) {
      ++failed;
      err << r.name << ": first failure: " << r.first_failure << '\n';
      j["first_failure"] = r.first_failure;
    }
    arr.push_back(j);
  }
  rep.line({{"identities", std::to_string(results.size())}, {"failed", std::to_string(failed)}});
  rep.doc()["identities"] = arr;
  rep.doc()["failed"] = failed;
  return failed == 0 ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectral analysis of almost-bipartite Q-polynomial distance-regular graphs", "drg_spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Structured JSON output");

  auto* construct = app.add_subcommand("construct", "Build a family graph and write it as an edge list");
  std::string family, out_path, labels_path;
  int n = 0;
  construct->add_option("--family", family, "cycle, odd, folded_cube or hypercube")->required();
  construct->add_option("--n", n, "Number of points (2D+1 for the odd families)")->required();
  construct->add_option("--out", out_path, "Edge-list output path");
  construct->add_option("--labels", labels_path, "Vertex label output path");

  auto* analyze = app.add_subcommand("analyze", "Intersection array, spectrum, Q-polynomial orderings and verdict");
  std::string path, array, in_labels;
  bool strict = false;
  auto* path_opt = analyze->add_option("path", path, "Edge-list file");
  auto* array_opt = analyze->add_option("--array", array, "Intersection array, e.g. \"{4,3,3;1,1,2}\"");
  analyze->add_option("--labels", in_labels, "Vertex label file");
  analyze->add_flag("--strict-drg", strict, "Also check every p^h_ij");
  path_opt->excludes(array_opt);

  auto* dbl = app.add_subcommand("double", "Bipartite double of a graph");
  std::string dbl_path, dbl_labels, dbl_out;
  dbl->add_option("path", dbl_path, "Edge-list file")->required();
  dbl->add_option("--labels", dbl_labels, "Vertex label file");
  dbl->add_option("--out", dbl_out, "Edge-list output path");

  auto* fam = app.add_subcommand("family", "Diameter-3 family point (beta, mu)");
  std::string beta_text, mu_text;
  fam->add_option("--beta", beta_text, "Integer, p/q or root(poly)~decimal")->required();
  fam->add_option("--mu", mu_text, "Positive integer")->required();

  auto* sv = app.add_subcommand("sieve", "Sieve the diameter-3 family over a (beta, mu) grid");
  long long beta_min = -10, beta_max = -3, mu_max = 50;
  bool wide = false;
  unsigned threads = 0;
  std::string sieve_out;
  sv->add_option("--beta-min", beta_min, "Smallest beta")->capture_default_str();
  sv->add_option("--beta-max", beta_max, "Largest beta")->capture_default_str();
  sv->add_option("--mu-max", mu_max, "Largest mu")->capture_default_str();
  sv->add_flag("--wide", wide, "Allow beta >= -2");
  sv->add_option("--threads", threads, "Worker threads (0: automatic)");
  sv->add_option("--out", sieve_out, "Record output path (summary still goes to stdout)");

  auto* ids = app.add_subcommand("check-identities", "Exact identity suites");
  std::size_t trials = 500;
  std::uint64_t seed = 42;
  int dmax = 8;
  ids->add_option("--trials", trials, "Samples per identity")->capture_default_str();
  ids->add_option("--seed", seed, "Random seed")->capture_default_str();
  ids->add_option("--dmax", dmax, "Largest diameter sampled")->capture_default_str()->check(CLI::Range(3, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (*analyze && path.empty() && array.empty()) {
    err << "analyze: give an edge-list PATH or --array\n";
    return kUsageError;
  }

  try {
    Report rep(out, json);
    int code = kOk;
    if (*construct) {
      code = cmd_construct(rep, family, n, out_path, labels_path);
    } else if (*analyze) {
      code = cmd_analyze(rep, path, in_labels, array, strict);
    } else if (*dbl) {
      code = cmd_double(rep, dbl_path, dbl_labels, dbl_out);
    } else if (*fam) {
      code = cmd_family(rep, beta_text, mu_text);
    } else if (*sv) {
      classify::SieveOptions opts;
      opts.beta_min = BigInt(std::to_string(beta_min));
      opts.beta_max = BigInt(std::to_string(beta_max));
      opts.mu_max = BigInt(std::to_string(mu_max));
      opts.wide = wide;
      opts.threads = threads;
      return cmd_sieve(out, json, opts, sieve_out);
    } else if (*ids) {
      code = cmd_identities(rep, err, trials, seed, dmax);
    }
    rep.finish();
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace drg::cli
