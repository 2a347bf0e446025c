#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hmr/bounds.hpp"
#include "hmr/clique.hpp"
#include "hmr/coloring.hpp"
#include "hmr/error.hpp"
#include "hmr/f2.hpp"
#include "hmr/graph6.hpp"
#include "hmr/halfmult.hpp"
#include "hmr/parallel.hpp"
#include "hmr/search.hpp"
#include "json.hpp"

#ifndef HMR_VERSION
#define HMR_VERSION "dev"
#endif

namespace hmr::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  int code = 0;
  Json result;
};

Json dec(double x) {
  if (!std::isfinite(x)) return format_decimal(x);
  return std::stod(format_decimal(x));
}

Json prob_json(const RationalProb& p) {
  Json j;
  j["exact"] = p.str();
  j["decimal"] = dec(p.to_double());
  return j;
}

std::string join_vertices(const std::vector<std::size_t>& vs) {
  std::string s;
  for (auto v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

// ---------------------------------------------------------------------------
// Rendering

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_decimal(v.get<double>());
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat_object(const Json& v) {
  if (!v.is_object()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
}

void render_table(const Json& rows, std::ostream& out) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, _] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  std::vector<std::size_t> width(columns.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? scalar_text(row[columns[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text = " ";
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += " " + line[c];
      if (c + 1 < line.size()) text += std::string(width[c] - line[c].size(), ' ') + " ";
    }
    out << text << '\n';
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
}

void render_text(const Json& obj, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix + key;
    if (value.is_object()) {
      render_text(value, out, name + ".");
    } else if (value.is_array()) {
      if (value.empty()) {
        out << name << ": (none)\n";
      } else if (std::all_of(value.begin(), value.end(), is_flat_object)) {
        out << name << ":\n";
        render_table(value, out);
      } else {
        std::string joined;
        for (const auto& x : value) joined += (joined.empty() ? "" : ", ") + scalar_text(x);
        out << name << ": " << joined << '\n';
      }
    } else {
      out << name << ": " << scalar_text(value) << '\n';
    }
  }
}

std::string shell_quote(const std::string& arg) {
  const bool plain = !arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || std::string_view("_./:=,+-@%").find(c) != std::string_view::npos;
  });
  if (plain) return arg;
  std::string q = "'";
  for (char c : arg) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ---------------------------------------------------------------------------
// Inputs

std::vector<Graph> load_graphs(const std::string& path) { return read_graph6_file(path); }

struct BaseGraph {
  Graph graph;
  std::string label;
};

BaseGraph load_base_graph(const std::string& spec) {
  if (spec.rfind("cf:", 0) == 0) {
    std::size_t used = 0;
    std::size_t t = 0;
    try {
      t = std::stoul(spec.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != spec.size() - 3) throw ArgumentError("bad graph descriptor " + spec);
    return {build_cf_graph(t), spec};
  }
  auto graphs = load_graphs(spec);
  return {std::move(graphs.front()), ""};
}

// ---------------------------------------------------------------------------
// Subcommands

struct Common {
  unsigned threads = 0;
};

Outcome run_cf(std::size_t t, std::optional<std::size_t> isotropic_k, const std::string& out_path,
               std::uint64_t budget, bool skip_clique) {
  const Graph g = build_cf_graph(t, budget);
  Outcome o;
  o.result["t"] = t;
  o.result["dimension"] = t - 2;
  o.result["vertices"] = g.size();
  o.result["edges"] = g.edge_count();
  if (!skip_clique) {
    const auto clique = maximum_clique(g);
    o.result["clique_number"] = clique.size();
    o.result["kt_free"] = clique.size() < t;
  }
  if (isotropic_k) {
    o.result["isotropic_subspaces"]["k"] = *isotropic_k;
    o.result["isotropic_subspaces"]["count"] = count_isotropic_subspaces(t, *isotropic_k).str();
  }
  if (!out_path.empty()) {
    write_graph6_file(out_path, {g});
    o.result["written"] = out_path;
  } else if (g.size() <= 256) {
    o.result["graph6"] = to_graph6(g);
  }
  return o;
}

Outcome run_sample(std::size_t n, double p, std::uint64_t seed, const std::string& out_path) {
  const Graph g = sample_er_graph(n, p, seed);
  Outcome o;
  o.result["n"] = n;
  o.result["p"] = dec(p);
  o.result["seed"] = seed;
  o.result["edges"] = g.edge_count();
  if (!out_path.empty()) {
    write_graph6_file(out_path, {g});
    o.result["written"] = out_path;
  } else {
    o.result["graph6"] = to_graph6(g);
  }
  return o;
}

Outcome run_clique(const std::string& in, std::optional<std::size_t> t) {
  Outcome o;
  Json rows = Json::array();
  std::size_t index = 0;
  for (const auto& g : load_graphs(in)) {
    Json row;
    row["index"] = index++;
    row["n"] = g.size();
    if (t) {
      const auto witness = find_clique(g, *t);
      row["t"] = *t;
      row["has_clique"] = witness.has_value();
      row["witness"] = witness ? join_vertices(*witness) : "-";
    } else {
      const auto clique = maximum_clique(g);
      row["clique_number"] = clique.size();
      row["witness"] = join_vertices(clique);
    }
    rows.push_back(row);
  }
  o.result["graphs"] = rows;
  return o;
}

Outcome run_exact(const std::string& in, std::size_t s) {
  Outcome o;
  Json rows = Json::array();
  std::size_t index = 0;
  for (const auto& g : load_graphs(in)) {
    const auto p = exact_independence_prob(g, s);
    rows.push_back({{"index", index++}, {"n", g.size()}, {"s", s}, {"probability", p.str()},
                    {"decimal", dec(p.to_double())}});
  }
  o.result["graphs"] = rows;
  return o;
}

Outcome run_estimate(const std::string& in, std::size_t s, std::uint64_t trials, std::uint64_t seed,
                     const Common& common) {
  Outcome o;
  Json rows = Json::array();
  std::size_t index = 0;
  for (const auto& g : load_graphs(in)) {
    const auto e = mc_independence_prob(g, s, trials, seed, common.threads);
    rows.push_back({{"index", index++}, {"n", g.size()}, {"s", s}, {"trials", e.trials},
                    {"successes", e.successes}, {"estimate", dec(e.estimate)},
                    {"std_error", dec(e.std_error)}, {"seed", e.seed}});
  }
  o.result["graphs"] = rows;
  return o;
}

Outcome run_bounds(int s, int t, std::optional<int> ell, const std::string& table_path, double tol) {
  KnownRamseyTable table;
  if (!table_path.empty()) table.merge_tsv(table_path);
  Outcome o;
  o.result["s"] = s;
  o.result["t"] = t;
  if (ell) o.result["ell"] = *ell;
  Json rows = Json::array();
  for (const auto& r : collect_bounds({s, t, ell, tol}, table)) {
    std::string params;
    for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : " ") + k + "=" + v;
    rows.push_back({{"bound", r.name}, {"parameters", params}, {"value", dec(r.as_double())},
                    {"exact", r.exact_string().empty() ? "-" : r.exact_string()},
                    {"units", units_name(r.units)}, {"provenance", r.provenance}});
  }
  o.result["bounds"] = rows;
  Json missing = Json::array();
  if (!table.lookup(s, t)) missing.push_back("R(" + std::to_string(s) + "," + std::to_string(t) + ")");
  for (int a = 2; a <= s; ++a)
    if (!table.lookup(a, t)) missing.push_back("R(" + std::to_string(a) + "," + std::to_string(t) + ")");
  if (!missing.empty()) {
    o.result["missing_ramsey_values"] = missing;
    o.result["note"] = "bounds needing missing values were skipped; supply them with --ramsey-table";
  }
  return o;
}

Outcome run_optimize(double s, double t, double tol) {
  const auto r = optimize_p(s, t, tol);
  Outcome o;
  o.result["s"] = dec(s);
  o.result["t"] = dec(t);
  o.result["tol"] = dec(tol);
  o.result["p_star"] = dec(r.p_star);
  o.result["exponent"] = dec(r.value);
  o.result["exponent_per_t2"] = dec(r.value_per_t2);
  o.result["residual"] = dec(r.residual);
  o.result["units"] = "natural-log exponent (exponent_per_t2 divides by t^2)";
  return o;
}

Outcome run_nrec(int s, int t, double tol) {
  NeighborhoodRecursion nrec(tol);
  Outcome o;
  o.result["s"] = s;
  o.result["t"] = t;
  o.result["tol"] = dec(tol);
  const double value = nrec(s, t);
  o.result["n_recursion"] = dec(value);
  o.result["ln_n_recursion"] = dec(std::log(value));
  if (s > 1 && t > 2) o.result["crossing_x"] = dec(nrec.crossing(s, t).x);
  o.result["n_binomial_lower"] = dec(n_binomial_lower(s, t));
  if (auto exact = n_binomial_lower_exact(s, t)) o.result["n_binomial_lower_exact"] = to_fraction_string(*exact);
  o.result["ln_n_binomial_lower"] = dec(n_binomial_lower_log(s, t));
  o.result["units"] = "probability";
  return o;
}

Outcome run_color(int ell, std::size_t t, std::size_t n, const std::string& graph_spec,
                  std::uint64_t seed, std::uint64_t attempts, const std::string& out_path,
                  const Common& common) {
  const auto base = load_base_graph(graph_spec);
  ConstructionOptions opts;
  opts.ell = ell;
  opts.t = t;
  opts.n = n;
  opts.seed = seed;
  opts.max_attempts = attempts;
  opts.threads = common.threads;
  opts.base_label = base.label;

  Outcome o;
  o.result["ell"] = ell;
  o.result["t"] = t;
  o.result["n"] = n;
  o.result["base_graph_vertices"] = base.graph.size();
  o.result["seed"] = seed;
  o.result["max_attempts"] = attempts;
  if (ell == 2 || base.graph.size() <= kExactCountingBudget) {
    const double p = ell == 2 ? 1.0 : exact_independence_prob(base.graph, t).to_double();
    const auto size = sizing(t, ell, p);
    o.result["sizing"]["p_value"] = dec(p);
    if (size.n) {
      o.result["sizing"]["n"] = *size.n;
      o.result["sizing"]["n_exceeds_sizing"] = n > *size.n;
    }
    o.result["sizing"]["log2_n"] = dec(size.log2_n);
  }

  const auto result = construct_coloring(base.graph, opts);
  if (const auto* cert = std::get_if<ColoringCertificate>(&result)) {
    o.result["success"] = true;
    o.result["attempts_used"] = cert->attempts_used;
    o.result["base_graph"] = cert->base_graph;
    if (!out_path.empty()) {
      write_certificate(out_path, *cert);
      o.result["certificate"] = out_path;
    }
    return o;
  }
  const auto& failure = std::get<FailureReport>(result);
  o.code = 1;
  o.result["success"] = false;
  o.result["attempts"] = failure.attempts;
  o.result["violations_by_color"] = failure.violations_by_color;
  o.result["pullback_violations"] = failure.pullback_violations;
  return o;
}

Outcome run_verify(const std::string& path) {
  const auto cert = read_certificate(path);
  const auto verdict = verify_certificate(cert);
  Outcome o;
  o.result["certificate"] = path;
  o.result["n"] = cert.n;
  o.result["ell"] = cert.ell;
  o.result["t"] = cert.t;
  o.result["valid"] = verdict.valid;
  if (verdict.violation) {
    o.result["violating_color"] = verdict.violation->color;
    o.result["clique"] = join_vertices(verdict.violation->clique);
    o.code = 1;
  }
  return o;
}

Outcome run_search(std::size_t s, std::size_t t, std::size_t max_n, bool dedup, std::size_t cap,
                   const std::string& out_path, bool turan, const Common& common) {
  SearchOptions opts;
  opts.threads = common.threads;
  opts.dedup_iso = dedup;
  opts.witness_cap = cap;
  const auto r = min_independence_prob(s, t, max_n, opts);
  Outcome o;
  o.result["s"] = s;
  o.result["t"] = t;
  o.result["n_max"] = max_n;
  o.result["scope"] = "restricted to K_t-free graphs with 1 <= n <= " + std::to_string(max_n);
  o.result["min_prob"] = prob_json(r.min_prob);
  if (r.proven_lower) o.result["proven_lower"] = r.proven_lower->str();
  o.result["matches_proven_lower"] = r.exact();
  o.result["graphs_scanned"] = r.graphs_scanned;
  o.result["witness_count"] = r.witness_count;
  o.result["witnesses"] = r.witnesses;
  if (!out_path.empty()) {
    std::vector<Graph> graphs;
    for (const auto& w : r.witnesses) graphs.push_back(from_graph6(w));
    write_graph6_file(out_path, graphs);
    o.result["written"] = out_path;
  }
  if (turan) {
    const auto tr = turan_check(max_n, t, opts);
    o.result["turan"]["all_pass"] = tr.all_pass;
    o.result["turan"]["graphs_checked"] = tr.graphs_checked;
    o.result["turan"]["violations"] = tr.violations;
    o.result["turan"]["extremal_count"] = tr.extremal_count;
    o.result["turan"]["extremal"] = tr.extremal;
  }
  return o;
}

unsigned threads_from_env() {
  const char* env = std::getenv("RAMSEY_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size()) throw CLI::ValidationError("RAMSEY_THREADS", "must be a non-negative integer");
  return static_cast<unsigned>(value);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Half-multiplicity Ramsey toolkit", "hmr"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", HMR_VERSION);

  bool json = false;
  Common common;
  std::optional<unsigned> threads_flag;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--threads", threads_flag, "Worker threads (0 = all cores; default $RAMSEY_THREADS or 0)");

  std::function<Outcome()> action;

  // cf
  auto* cf = app.add_subcommand("cf", "Symplectic graph over F2^(t-2)");
  std::size_t cf_t = 0;
  std::optional<std::size_t> cf_k;
  std::string cf_out;
  std::uint64_t cf_budget = kDefaultVertexBudget;
  bool cf_skip = false;
  cf->add_option("--t", cf_t, "Even clique size t >= 4")->required();
  cf->add_option("--count-isotropic", cf_k, "Count k-dimensional isotropic subspaces");
  cf->add_option("--out", cf_out, "Write the graph in graph6");
  cf->add_option("--budget", cf_budget, "Vertex budget")->capture_default_str();
  cf->add_flag("--skip-clique-check", cf_skip, "Do not compute the clique number");
  cf->callback([&] { action = [&] { return run_cf(cf_t, cf_k, cf_out, cf_budget, cf_skip); }; });

  // graph sample / clique
  auto* graph = app.add_subcommand("graph", "Graph utilities");
  graph->require_subcommand(1);
  auto* sample = graph->add_subcommand("sample", "Seeded Erdos-Renyi G(n, p)");
  std::size_t sample_n = 0;
  double sample_p = 0.5;
  std::uint64_t sample_seed = 1;
  std::string sample_out;
  sample->add_option("--n", sample_n, "Vertices")->required();
  sample->add_option("--p", sample_p, "Edge probability")->capture_default_str();
  sample->add_option("--seed", sample_seed, "Seed")->capture_default_str();
  sample->add_option("--out", sample_out, "Write graph6 here");
  sample->callback([&] { action = [&] { return run_sample(sample_n, sample_p, sample_seed, sample_out); }; });
  auto* clique = graph->add_subcommand("clique", "Clique search");
  std::string clique_in;
  std::optional<std::size_t> clique_t;
  clique->add_option("--in", clique_in, "graph6 file")->required();
  clique->add_option("--t", clique_t, "Look for a clique of this size (default: maximum clique)");
  clique->callback([&] { action = [&] { return run_clique(clique_in, clique_t); }; });

  // exact / estimate
  auto* exact = app.add_subcommand("exact", "Exact independence probability");
  std::string exact_in;
  std::size_t exact_s = 0;
  exact->add_option("--in", exact_in, "graph6 file")->required();
  exact->add_option("--s", exact_s, "Sample size")->required();
  exact->callback([&] { action = [&] { return run_exact(exact_in, exact_s); }; });

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo independence probability");
  std::string est_in;
  std::size_t est_s = 0;
  std::uint64_t est_trials = 100000;
  std::uint64_t est_seed = 1;
  estimate->add_option("--in", est_in, "graph6 file")->required();
  estimate->add_option("--s", est_s, "Sample size")->required();
  estimate->add_option("--trials", est_trials, "Trials")->capture_default_str();
  estimate->add_option("--seed", est_seed, "Seed")->capture_default_str();
  estimate->callback([&] { action = [&] { return run_estimate(est_in, est_s, est_trials, est_seed, common); }; });

  // bounds / optimize-p / nrec
  auto* bounds = app.add_subcommand("bounds", "All bounds on P(s,t)");
  int b_s = 0;
  int b_t = 0;
  std::optional<int> b_ell;
  std::string b_table;
  double b_tol = 1e-7;
  bounds->add_option("--s", b_s, "s")->required();
  bounds->add_option("--t", b_t, "t")->required();
  bounds->add_option("--ell", b_ell, "Number of colours for the multicolour bound");
  bounds->add_option("--ramsey-table", b_table, "TSV of known Ramsey numbers");
  bounds->add_option("--tol", b_tol, "Optimiser tolerance")->capture_default_str();
  bounds->callback([&] { action = [&] { return run_bounds(b_s, b_t, b_ell, b_table, b_tol); }; });

  auto* optimize = app.add_subcommand("optimize-p", "Minimise the random-graph exponent over p");
  double o_s = 0;
  double o_t = 0;
  double o_tol = 1e-7;
  bool o_diag = false;
  auto* o_s_opt = optimize->add_option("--s", o_s, "s (real)");
  auto* o_t_opt = optimize->add_option("--t", o_t, "t (real)");
  auto* o_diag_flag = optimize->add_flag("--s-equals-t", o_diag, "Normalised diagonal case s = t = 1");
  o_diag_flag->excludes(o_s_opt)->excludes(o_t_opt);
  optimize->add_option("--tol", o_tol, "Tolerance")->capture_default_str();
  optimize->callback([&] {
    if (!o_diag && (o_s_opt->count() == 0 || o_t_opt->count() == 0))
      throw CLI::RequiredError("--s and --t (or --s-equals-t)");
    action = [&] { return o_diag ? run_optimize(1, 1, o_tol) : run_optimize(o_s, o_t, o_tol); };
  });

  auto* nrec = app.add_subcommand("nrec", "Neighbourhood recursion N(s,t)");
  int n_s = 0;
  int n_t = 0;
  double n_tol = 1e-12;
  nrec->add_option("--s", n_s, "s")->required();
  nrec->add_option("--t", n_t, "t")->required();
  nrec->add_option("--tol", n_tol, "Bisection tolerance")->capture_default_str();
  nrec->callback([&] { action = [&] { return run_nrec(n_s, n_t, n_tol); }; });

  // color / verify
  auto* color = app.add_subcommand("color", "Random-homomorphism colouring of K_n");
  int c_ell = 0;
  std::size_t c_t = 0;
  std::size_t c_n = 0;
  std::string c_graph;
  std::uint64_t c_seed = 1;
  std::uint64_t c_attempts = 1000;
  std::string c_out;
  color->add_option("--ell", c_ell, "Colours")->required();
  color->add_option("--t", c_t, "Forbidden clique size")->required();
  color->add_option("--n", c_n, "Vertices of K_n")->required();
  color->add_option("--graph", c_graph, "Base graph: graph6 file or cf:<t>")->required();
  color->add_option("--seed", c_seed, "Seed")->capture_default_str();
  color->add_option("--attempts", c_attempts, "Maximum attempts")->capture_default_str();
  color->add_option("--out", c_out, "Certificate output file");
  color->callback([&] {
    action = [&] { return run_color(c_ell, c_t, c_n, c_graph, c_seed, c_attempts, c_out, common); };
  });

  auto* verify = app.add_subcommand("verify", "Check a colouring certificate");
  std::string v_path;
  verify->add_option("certificate", v_path, "Certificate file")->required();
  verify->callback([&] { action = [&] { return run_verify(v_path); }; });

  // search
  auto* search = app.add_subcommand("search", "Exhaustive minimum over small K_t-free graphs");
  std::size_t s_s = 0;
  std::size_t s_t = 0;
  std::size_t s_max = 0;
  bool s_dedup = false;
  bool s_turan = false;
  std::size_t s_cap = 10000;
  std::string s_out;
  search->add_option("--s", s_s, "s")->required();
  search->add_option("--t", s_t, "t")->required();
  search->add_option("--max-n", s_max, "Largest vertex count (<= 8)")->required();
  search->add_flag("--dedup-iso", s_dedup, "Keep one witness per isomorphism class");
  search->add_option("--witness-cap", s_cap, "Maximum witnesses reported")->capture_default_str();
  search->add_option("--out", s_out, "Write witnesses as graph6");
  search->add_flag("--turan", s_turan, "Also check Turan's edge bound");
  search->callback([&] {
    action = [&] { return run_search(s_s, s_t, s_max, s_dedup, s_cap, s_out, s_turan, common); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    common.threads = threads_flag ? *threads_flag : threads_from_env();
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_out;
    const int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? 0 : 2;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::string command = "hmr";
  for (const auto& a : args) command += " " + shell_quote(a);
  const std::string name = app.get_subcommands().front()->get_name();
  if (json) {
    Json doc;
    doc["generated"] = utc_timestamp();
    doc["version"] = HMR_VERSION;
    doc["reproduce"] = command;
    doc["command"] = name;
    doc["result"] = outcome.result;
    out << doc.dump(2) << '\n';
  } else {
    out << "# hmr " << HMR_VERSION << " " << utc_timestamp() << " reproduce: " << command << '\n';
    render_text(outcome.result, out);
  }
  return outcome.code;
}

}  // namespace hmr::cli
