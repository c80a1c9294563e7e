// indpath: induced-path search, random-graph experiments, guarantee checkers,
// union-bound evaluation and exact oracles behind one reproducible CLI.
//
// Exit codes: 0 success, 1 verdict failure under --strict, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "indpath/bounds.hpp"
#include "indpath/colouring.hpp"
#include "indpath/dfs.hpp"
#include "indpath/experiments.hpp"
#include "indpath/graph_io.hpp"
#include "indpath/guarantees.hpp"
#include "indpath/oracle.hpp"
#include "indpath/query_source.hpp"
#include "indpath/random.hpp"

using nlohmann::json;
using namespace indpath;

namespace {

// Numeric flags accept absolute values ("50") and n-relative expressions
// ("7e-7*n", "0.5n", "n").
struct ScaledValue {
  double factor = 0.0;
  bool relative = false;

  static ScaledValue parse(std::string text) {
    ScaledValue v;
    text.erase(std::remove_if(text.begin(), text.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               text.end());
    if (text.empty()) throw CLI::ValidationError("empty numeric value");
    if (text == "n") {
      v.factor = 1.0;
      v.relative = true;
      return v;
    }
    if (text.size() >= 2 && text.substr(text.size() - 2) == "*n") {
      v.relative = true;
      text = text.substr(0, text.size() - 2);
    } else if (text.back() == 'n') {
      v.relative = true;
      text.pop_back();
    }
    std::size_t used = 0;
    v.factor = std::stod(text, &used);
    if (used != text.size())
      throw CLI::ValidationError("cannot parse numeric value '" + text + "'");
    return v;
  }

  double resolve(double n) const { return relative ? factor * n : factor; }
  std::uint64_t resolve_count(double n) const {
    const double x = resolve(n);
    if (x < 0) throw CLI::ValidationError("negative count");
    return static_cast<std::uint64_t>(std::llround(x));
  }
};

std::optional<std::uint64_t> opt_count(const std::string& text, double n) {
  if (text.empty()) return std::nullopt;
  return ScaledValue::parse(text).resolve_count(n);
}

json metadata_json() {
  return json{{"generator", std::string(kGeneratorName)},
              {"generator_version", std::string(kGeneratorVersion)}};
}

void print_csv_metadata(std::ostream& os, const json& config) {
  os << "# generator=" << kGeneratorName << " version=" << kGeneratorVersion << '\n';
  os << "# config=" << config.dump() << '\n';
}

json to_json(const RunRecord& rec) {
  return json{{"max_u", rec.max_u},
              {"path_length", rec.path_length()},
              {"best_path", rec.best_path},
              {"final_u", rec.final_u},
              {"s1_final", rec.s1_final},
              {"s2_final", rec.s2_final},
              {"ut_queries", rec.ut_queries},
              {"new_queries", rec.new_queries},
              {"ut_queries_at_peak", rec.ut_queries_at_peak},
              {"rounds", rec.rounds},
              {"stop_reason", std::string(to_string(rec.stop_reason))},
              {"s2_excess_ok", rec.s2_excess_ok}};
}

json to_json(const SupercriticalTrial& t) {
  return json{{"seed", t.seed},
              {"n", t.n},
              {"epsilon", t.epsilon},
              {"max_u", t.max_u},
              {"path_length", t.path_length},
              {"s1_final", t.s1_final},
              {"s2_final", t.s2_final},
              {"excess_final", t.excess_final},
              {"edge_count", t.edge_count},
              {"ut_queries_at_peak", t.ut_queries_at_peak},
              {"ut_queries", t.ut_queries},
              {"new_queries", t.new_queries},
              {"rounds", t.rounds},
              {"s2_le_excess_every_round", t.s2_le_excess_every_round},
              {"verdicts",
               {{"length", t.verdict_length},
                {"s2_le_excess", t.verdict_s2_excess},
                {"excess", t.verdict_excess}}},
              {"audit_ok", t.audit_ok}};
}

json to_json(const RamseyTrial& t) {
  json j = json::parse(pipeline_diagnostics_json(t.pipeline));
  j["seed"] = t.seed;
  j["host_n"] = t.host_n;
  j["k"] = t.k;
  if (t.c > 0) j["c"] = t.c;
  j["strategy"] = t.strategy;
  j["scale"] = t.scale;
  j["host_edges_zscore"] = t.host_edges_zscore;
  j["host_edges_within_5sigma"] = t.host_edges_within_5sigma;
  j["densest_ge_mean_fraction"] = t.densest_ge_mean_fraction;
  return j;
}

struct CommonFlags {
  std::string format = "json";
  bool strict = false;
};

void add_format_flag(CLI::App* cmd, CommonFlags& flags, const std::string& def) {
  flags.format = def;
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--strict", flags.strict, "Exit 1 when any verdict fails");
}

// ---------------------------------------------------------------------------

int run_oracle(const std::string& input, const std::string& gprime_file,
               const std::string& mode, std::uint64_t cap) {
  const Graph host = load_graph(input);
  json out = metadata_json();
  if (mode == "max-edges") {
    const auto r = exact_max_edges_bounded_set(host, cap);
    out["mode"] = "max-edges";
    out["size_cap"] = cap;
    out["edges"] = r.edges;
    out["vertices"] = r.vertices.to_vector();
  } else if (!gprime_file.empty()) {
    const Graph sub = load_graph(gprime_file);
    const auto r = exact_longest_induced_path(sub, host);
    out["mode"] = "two-graph";
    out["length"] = r.length;
    out["witness"] = r.path;
  } else {
    const auto r = exact_longest_induced_path(host);
    out["mode"] = "path";
    out["length"] = r.length;
    out["witness"] = r.path;
  }
  std::cout << out.dump() << '\n';
  return 0;
}

json check_to_json(const CheckResult& r) {
  json j{{"status", std::string(to_string(r.status))}};
  if (r.witness) j["witness"] = r.witness->to_vector();
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

int run_check(const std::string& input, const std::string& gprime_file,
              const std::string& s1_text, const std::string& s2_text,
              const std::string& ell_text, bool strict) {
  const Graph host = load_graph(input);
  const Graph sub = gprime_file.empty() ? host : load_graph(gprime_file);
  if (!sub.is_subgraph_of(host))
    throw CLI::ValidationError(
        "--gprime must be a subgraph of --input on the same vertex set");
  const double n = static_cast<double>(host.vertex_count());
  const std::uint64_t s1 = ScaledValue::parse(s1_text).resolve_count(n);
  const std::uint64_t s2 = ScaledValue::parse(s2_text).resolve_count(n);
  const std::uint64_t ell = ScaledValue::parse(ell_text).resolve_count(n);

  const auto density = check_local_density(host, s1 + s2 + ell, 2 * s2);
  const auto expansion = check_expansion(sub, s1, s2 + ell);

  json out = metadata_json();
  out["params"] = {{"s1", s1}, {"s2", s2}, {"ell", ell}};
  out["vertex_count_ok"] = host.vertex_count() >= ell + s1 + s2;
  out["local_density"] = check_to_json(density);
  out["expansion"] = check_to_json(expansion);
  std::cout << out.dump() << '\n';
  const bool all_pass = density.status == CheckStatus::pass &&
                        expansion.status == CheckStatus::pass &&
                        host.vertex_count() >= ell + s1 + s2;
  return (strict && !all_pass) ? 1 : 0;
}

struct RunDfsOptions {
  std::string input, gprime_file;
  std::uint64_t gnp_n = 0;
  double gnp_p = -1.0;
  std::uint64_t seed = 1;
  std::string pi = "identity";
  std::string stop_u, stop_s1, stop_s2, stop_queries;
  std::uint64_t trace_every = 0;
  bool audit = false;
  std::string ledger = "auto";
};

int run_dfs_cmd(const RunDfsOptions& opt, const CommonFlags& flags) {
  LedgerMode ledger = LedgerMode::automatic;
  if (opt.ledger == "on" || opt.audit) ledger = LedgerMode::on;
  if (opt.ledger == "off") ledger = LedgerMode::off;

  std::optional<QuerySource> src;
  if (!opt.input.empty()) {
    const Graph host = load_graph(opt.input);
    const Graph sub = opt.gprime_file.empty() ? host : load_graph(opt.gprime_file);
    src.emplace(QuerySource::fixed(sub, host, ledger));
  } else if (opt.gnp_p >= 0.0) {
    src.emplace(QuerySource::generative(opt.gnp_n, opt.gnp_p, opt.seed, ledger));
  } else {
    throw CLI::ValidationError("run-dfs needs --input or --gnp-n/--gnp-p");
  }

  const double n = static_cast<double>(src->vertex_count());
  StopRule stop;
  if (auto v = opt_count(opt.stop_u, n)) stop.path_vertices = v;
  if (auto v = opt_count(opt.stop_s1, n)) stop.s1_cap = v;
  if (auto v = opt_count(opt.stop_s2, n)) stop.s2_cap = v;
  if (auto v = opt_count(opt.stop_queries, n)) stop.query_budget = v;

  const auto pi = opt.pi == "identity"
                      ? VertexOrdering::identity(src->vertex_count())
                      : VertexOrdering::shuffled(src->vertex_count(),
                                                 derive_seed(opt.seed, "pi"));
  InducedDfs dfs(*src, pi);
  AuditReport audit;
  if (opt.audit) dfs.enable_audit(&audit);
  if (opt.trace_every > 0)
    dfs.set_trace(opt.trace_every, [](const TraceEvent& ev) {
      json line{{"round", ev.round},
                {"step", std::string(to_string(ev.tag))},
                {"vertex", ev.vertex},
                {"sizes",
                 {{"U", ev.u_size}, {"T", ev.t_size}, {"S1", ev.s1_size}, {"S2", ev.s2_size}}},
                {"ut_queries", ev.ut_queries},
                {"new_queries", ev.new_queries}};
      std::cout << line.dump() << '\n';
    });

  const RunRecord rec = dfs.run(stop);
  json out = metadata_json();
  out["seed"] = opt.seed;
  out["n"] = src->vertex_count();
  out["mode"] = src->generative_mode() ? "generative" : "fixed";
  if (src->generative_mode()) out["p"] = src->p();
  out["config"] = {{"pi", opt.pi},
                   {"ledger", src->ledger_enabled() ? "on" : "off"},
                   {"audit", opt.audit},
                   {"trace_every", opt.trace_every},
                   {"stop",
                    {{"u", opt.stop_u}, {"s1", opt.stop_s1}, {"s2", opt.stop_s2},
                     {"queries", opt.stop_queries}}}};
  out["record"] = to_json(rec);
  if (opt.audit)
    out["audit"] = {{"ok", audit.ok},
                    {"rounds_checked", audit.rounds_checked},
                    {"failures", audit.failures}};
  std::cout << out.dump() << '\n';
  const bool ok = rec.s2_excess_ok && (!opt.audit || audit.ok);
  return (flags.strict && !ok) ? 1 : 0;
}

int run_supercritical(std::uint64_t n, double eps, std::uint64_t seeds,
                      std::uint64_t base_seed, const std::string& pi, bool audit,
                      const CommonFlags& flags) {
  SupercriticalConfig cfg;
  cfg.n = n;
  cfg.epsilon = eps;
  cfg.pi_mode = parse_pi_mode(pi);
  cfg.audit = audit;

  const json config{{"command", "supercritical"}, {"n", n},       {"eps", eps},
                    {"seeds", seeds},             {"seed", base_seed}, {"pi", pi},
                    {"audit", audit}};
  bool all_ok = true;
  if (flags.format == "csv") {
    print_csv_metadata(std::cout, config);
    std::cout << supercritical_csv_header() << '\n';
  }
  json rows = json::array();
  for (std::uint64_t i = 0; i < seeds; ++i) {
    const auto t = supercritical_trial(cfg, base_seed + i);
    all_ok = all_ok && t.verdict_length && t.verdict_s2_excess && t.verdict_excess &&
             t.s2_le_excess_every_round && t.audit_ok;
    if (flags.format == "csv")
      std::cout << to_csv_row(t) << '\n';
    else
      rows.push_back(to_json(t));
  }
  if (flags.format == "json") {
    json out = metadata_json();
    out["config"] = config;
    out["trials"] = std::move(rows);
    std::cout << out.dump() << '\n';
  }
  return (flags.strict && !all_ok) ? 1 : 0;
}

struct RamseyCliOptions {
  std::uint64_t n = 100000;
  std::uint64_t seeds = 1;
  std::uint64_t base_seed = 1;
  std::string strategy = "uniform";
  double scale = 1.0;
  std::string ell, s1, s2;
  std::string pi = "identity";
  // multicolour
  std::uint64_t k = 2;
  double c = 200.0;
};

int run_ramsey(const RamseyCliOptions& opt, bool multicolour, const CommonFlags& flags) {
  const double n = static_cast<double>(opt.n);
  json config{{"command", multicolour ? "ramseyk" : "ramsey2"},
              {"n", opt.n},
              {"seeds", opt.seeds},
              {"seed", opt.base_seed},
              {"strategy", opt.strategy},
              {"scale", opt.scale},
              {"pi", opt.pi}};
  if (multicolour) {
    config["k"] = opt.k;
    config["c"] = opt.c;
  }

  bool all_ok = true;
  if (flags.format == "csv") {
    print_csv_metadata(std::cout, config);
    std::cout << ramsey_csv_header() << '\n';
  }
  json rows = json::array();
  for (std::uint64_t i = 0; i < opt.seeds; ++i) {
    RamseyTrial t;
    if (multicolour) {
      RamseyKConfig cfg;
      cfg.n = opt.n;
      cfg.k = static_cast<std::uint32_t>(opt.k);
      cfg.c = opt.c;
      cfg.strategy = parse_colouring_kind(opt.strategy);
      cfg.scale = opt.scale;
      cfg.ell = opt_count(opt.ell, n);
      cfg.s1 = opt_count(opt.s1, n);
      cfg.s2 = opt_count(opt.s2, n);
      cfg.pi_mode = parse_pi_mode(opt.pi);
      t = ramseyk_trial(cfg, opt.base_seed + i);
    } else {
      Ramsey2Config cfg;
      cfg.n = opt.n;
      cfg.strategy = parse_colouring_kind(opt.strategy);
      cfg.scale = opt.scale;
      cfg.ell = opt_count(opt.ell, n);
      cfg.s1 = opt_count(opt.s1, n);
      cfg.s2 = opt_count(opt.s2, n);
      cfg.pi_mode = parse_pi_mode(opt.pi);
      t = ramsey2_trial(cfg, opt.base_seed + i);
    }
    all_ok = all_ok && t.pipeline.certified() && t.host_edges_within_5sigma;
    if (flags.format == "csv")
      std::cout << to_csv_row(t) << '\n';
    else
      rows.push_back(to_json(t));
  }
  if (flags.format == "json") {
    json out = metadata_json();
    out["config"] = config;
    out["trials"] = std::move(rows);
    std::cout << out.dump() << '\n';
  }
  return (flags.strict && !all_ok) ? 1 : 0;
}

int run_bounds(const std::string& lemma, std::uint64_t n, double c, double k,
               const CommonFlags& flags) {
  json out = metadata_json();
  out["lemma"] = lemma;
  bool verdicts_ok = true;

  auto emit_sparse_table = [&](const SparseSetsBound& b) {
    if (flags.format == "csv") {
      std::cout << "# coefficient=" << format_double(b.coefficient)
                << " tail_base=" << format_double(b.tail_base)
                << " small_regime_base=" << format_double(b.small_regime_base) << '\n';
      std::cout << "i,log_exact,log_simplified,base\n";
      for (const auto& row : b.rows)
        std::cout << row.i << ',' << format_double(row.log_exact) << ','
                  << format_double(row.log_simplified) << ',' << format_double(row.base)
                  << '\n';
    } else {
      json rows = json::array();
      for (const auto& row : b.rows)
        rows.push_back({{"i", row.i},
                        {"log_exact", row.log_exact},
                        {"log_simplified", row.log_simplified},
                        {"base", row.base}});
      out["rows"] = std::move(rows);
    }
  };

  if (lemma == "4.1.1") {
    const auto constants = lemmas::two_colour_sparse_constants();
    const auto table = sparse_sets_bound(lemmas::two_colour_sparse_params(n));
    out["coefficient"] = constants.coefficient;
    out["tail_base"] = constants.tail_base;
    out["verdicts"] = {{"coefficient_le_2280", constants.coefficient <= 2280.0},
                       {"coefficient_ge_2000", constants.coefficient >= 2000.0},
                       {"tail_base_le_0.99", constants.tail_base <= 0.99}};
    verdicts_ok = constants.coefficient <= 2280.0 && constants.coefficient >= 2000.0 &&
                  constants.tail_base <= 0.99;
    emit_sparse_table(table);
  } else if (lemma == "4.1.2") {
    const double base = lemmas::two_colour_cut_base();
    out["per_n_base"] = base;
    out["verdicts"] = {{"base_lt_1_minus_1e-7", base < 1.0 - 1e-7}};
    verdicts_ok = base < 1.0 - 1e-7;
  } else if (lemma == "4.3.1") {
    const auto constants = lemmas::multicolour_sparse_constants(c, k);
    const auto table = sparse_sets_bound(lemmas::multicolour_sparse_params(n, c, k));
    out["c"] = c;
    out["k"] = k;
    out["alpha"] = constants.alpha;
    out["coefficient"] = constants.coefficient;
    out["tail_base"] = constants.tail_base;
    out["feasible_c"] = lemmas::multicolour_feasible_c(k);
    out["verdicts"] = {{"tail_base_le_half", constants.tail_base <= 0.5}};
    verdicts_ok = constants.tail_base <= 0.5;
    emit_sparse_table(table);
  } else if (lemma == "4.3.2") {
    const double base = lemmas::multicolour_cut_base(c, k);
    out["c"] = c;
    out["k"] = k;
    out["bracket_base"] = base;
    out["verdicts"] = {{"base_lt_1", base < 1.0}};
    verdicts_ok = base < 1.0;
  } else {
    throw CLI::ValidationError("unknown lemma id: " + lemma);
  }

  if (flags.format == "json")
    std::cout << out.dump() << '\n';
  else if (lemma == "4.1.2" || lemma == "4.3.2")
    std::cout << out.dump() << '\n';  // no table; emit the summary object
  else
    std::cout << "# summary=" << out.dump() << '\n';
  return (flags.strict && !verdicts_ok) ? 1 : 0;
}

int run_sweep_cmd(const std::string& config_file, const std::string& summary_file) {
  std::ifstream in(config_file);
  if (!in) throw CLI::ValidationError("cannot open config file: " + config_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string config_text = buffer.str();
  const auto result = run_sweep(config_text);

  // output targets: flags first, then the config's optional "output" object
  std::string csv_file, summary_target = summary_file;
  try {
    const json cfg = json::parse(config_text);
    if (cfg.contains("output")) {
      const json& o = cfg.at("output");
      csv_file = o.value("csv", std::string());
      if (summary_target.empty()) summary_target = o.value("summary", std::string());
    }
  } catch (const json::parse_error&) {
    // run_sweep already rejected truly malformed configs
  }

  if (csv_file.empty()) {
    std::cout << result.csv;
  } else {
    std::ofstream cf(csv_file);
    if (!cf) throw CLI::ValidationError("cannot open csv file: " + csv_file);
    cf << result.csv;
  }
  if (summary_target.empty()) {
    std::cerr << result.summary_json << '\n';
  } else {
    std::ofstream sf(summary_target);
    if (!sf) throw CLI::ValidationError("cannot open summary file: " + summary_target);
    sf << result.summary_json << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced-path DFS toolkit: search, experiments, checkers, bounds"};
  app.require_subcommand(1);

  // oracle --------------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact longest induced path / densest set");
  std::string oracle_input, oracle_gprime, oracle_mode = "path";
  std::uint64_t oracle_cap = 0;
  oracle_cmd->add_option("--input", oracle_input, "Graph file (edge list or .json)")
      ->required();
  oracle_cmd->add_option("--gprime", oracle_gprime, "Subgraph file for the two-graph search");
  oracle_cmd->add_option("--mode", oracle_mode, "path | max-edges")
      ->check(CLI::IsMember({"path", "max-edges"}));
  oracle_cmd->add_option("--cap", oracle_cap, "Size cap for max-edges mode");

  // check ---------------------------------------------------------------
  auto* check_cmd = app.add_subcommand("check", "Local-density and expansion hypotheses");
  std::string check_input, check_gprime, check_s1 = "1", check_s2 = "1", check_ell = "1";
  CommonFlags check_flags;
  check_cmd->add_option("--input", check_input, "Host graph file")->required();
  check_cmd->add_option("--gprime", check_gprime, "Subgraph file (defaults to the host)");
  check_cmd->add_option("--s1", check_s1, "s1 (absolute or n-relative)");
  check_cmd->add_option("--s2", check_s2, "s2");
  check_cmd->add_option("--ell", check_ell, "Path length target");
  check_cmd->add_flag("--strict", check_flags.strict, "Exit 1 unless both checks pass");

  // run-dfs ---------------------------------------------------------------
  auto* dfs_cmd = app.add_subcommand("run-dfs", "Single search run on a fixed or G(n,p) source");
  RunDfsOptions dfs_opt;
  CommonFlags dfs_flags;
  dfs_cmd->add_option("--input", dfs_opt.input, "Host graph file (fixed mode)");
  dfs_cmd->add_option("--gprime", dfs_opt.gprime_file, "Subgraph file (fixed mode)");
  dfs_cmd->add_option("--gnp-n", dfs_opt.gnp_n, "Generative mode: vertex count");
  dfs_cmd->add_option("--gnp-p", dfs_opt.gnp_p, "Generative mode: edge probability");
  dfs_cmd->add_option("--seed", dfs_opt.seed, "Seed (generative mode and shuffled pi)");
  dfs_cmd->add_option("--pi", dfs_opt.pi, "identity | shuffled")
      ->check(CLI::IsMember({"identity", "shuffled"}));
  dfs_cmd->add_option("--stop-u", dfs_opt.stop_u, "Stop when |U| reaches this");
  dfs_cmd->add_option("--stop-s1", dfs_opt.stop_s1, "Stop when |S1| reaches this");
  dfs_cmd->add_option("--stop-s2", dfs_opt.stop_s2, "Stop when |S2| reaches this");
  dfs_cmd->add_option("--stop-queries", dfs_opt.stop_queries, "Stop at this many new queries");
  dfs_cmd->add_option("--trace-every", dfs_opt.trace_every, "Emit a trace line every N rounds");
  dfs_cmd->add_flag("--audit", dfs_opt.audit, "Audit invariants every round");
  dfs_cmd->add_option("--ledger", dfs_opt.ledger, "auto | on | off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  add_format_flag(dfs_cmd, dfs_flags, "json");

  // supercritical ---------------------------------------------------------
  auto* sc_cmd = app.add_subcommand("supercritical", "G(n,(1+eps)/n) trials");
  std::uint64_t sc_n = 1000, sc_seeds = 1, sc_seed = 1;
  double sc_eps = 0.1;
  std::string sc_pi = "identity";
  bool sc_audit = false;
  CommonFlags sc_flags;
  sc_cmd->add_option("--n", sc_n, "Vertex count")->required();
  sc_cmd->add_option("--eps", sc_eps, "Supercritical epsilon")->required();
  sc_cmd->add_option("--seeds", sc_seeds, "Number of seeds");
  sc_cmd->add_option("--seed", sc_seed, "First seed");
  sc_cmd->add_option("--pi", sc_pi, "identity | shuffled")
      ->check(CLI::IsMember({"identity", "shuffled"}));
  sc_cmd->add_flag("--audit", sc_audit, "Per-round invariant audit (slow, needs ledger)");
  add_format_flag(sc_cmd, sc_flags, "csv");

  // ramsey2 / ramseyk -------------------------------------------------------
  auto* r2_cmd = app.add_subcommand("ramsey2", "Two-colour pipeline on G(n, 64/n)");
  RamseyCliOptions r2_opt;
  CommonFlags r2_flags;
  r2_cmd->add_option("--n", r2_opt.n, "Host vertex count")->required();
  r2_cmd->add_option("--seeds", r2_opt.seeds, "Number of seeds");
  r2_cmd->add_option("--seed", r2_opt.base_seed, "First seed");
  r2_cmd->add_option("--strategy", r2_opt.strategy, "Colouring strategy")
      ->check(CLI::IsMember({"uniform", "alternating", "greedy", "roundrobin"}));
  r2_cmd->add_option("--scale", r2_opt.scale, "Multiplier on the default ell = 7n/1e7");
  r2_cmd->add_option("--ell", r2_opt.ell, "Explicit ell (absolute or n-relative)");
  r2_cmd->add_option("--s1", r2_opt.s1, "Explicit s1");
  r2_cmd->add_option("--s2", r2_opt.s2, "Explicit s2");
  r2_cmd->add_option("--pi", r2_opt.pi, "identity | shuffled")
      ->check(CLI::IsMember({"identity", "shuffled"}));
  add_format_flag(r2_cmd, r2_flags, "csv");

  auto* rk_cmd = app.add_subcommand("ramseyk", "k-colour pipeline on G(kn, c log k / n)");
  RamseyCliOptions rk_opt;
  CommonFlags rk_flags;
  rk_cmd->add_option("--n", rk_opt.n, "Per-colour scale (host has k*n vertices)")->required();
  rk_cmd->add_option("--k", rk_opt.k, "Colour count")->required();
  rk_cmd->add_option("--c", rk_opt.c, "Density constant");
  rk_cmd->add_option("--seeds", rk_opt.seeds, "Number of seeds");
  rk_cmd->add_option("--seed", rk_opt.base_seed, "First seed");
  rk_cmd->add_option("--strategy", rk_opt.strategy, "Colouring strategy")
      ->check(CLI::IsMember({"uniform", "alternating", "greedy", "roundrobin"}));
  rk_cmd->add_option("--scale", rk_opt.scale, "Multiplier on the default ell");
  rk_cmd->add_option("--ell", rk_opt.ell, "Explicit ell");
  rk_cmd->add_option("--s1", rk_opt.s1, "Explicit s1");
  rk_cmd->add_option("--s2", rk_opt.s2, "Explicit s2");
  rk_cmd->add_option("--pi", rk_opt.pi, "identity | shuffled")
      ->check(CLI::IsMember({"identity", "shuffled"}));
  add_format_flag(rk_cmd, rk_flags, "csv");

  // bounds -----------------------------------------------------------------
  auto* bounds_cmd = app.add_subcommand("bounds", "Union-bound evaluation");
  std::string bounds_lemma = "4.1.1";
  std::uint64_t bounds_n = 10000000;
  double bounds_c = 200.0, bounds_k = std::exp(13.0);
  CommonFlags bounds_flags;
  bounds_cmd->add_option("--lemma", bounds_lemma, "4.1.1 | 4.1.2 | 4.3.1 | 4.3.2");
  bounds_cmd->add_option("--n", bounds_n, "Scale for the per-i table");
  bounds_cmd->add_option("--c", bounds_c, "Density constant (4.3.x)");
  bounds_cmd->add_option("--k", bounds_k, "Colour count (4.3.x); defaults to e^13");
  add_format_flag(bounds_cmd, bounds_flags, "csv");

  // sweep --------------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a (parameter x seed) grid from JSON config");
  std::string sweep_config, sweep_summary;
  sweep_cmd->add_option("--config", sweep_config, "Config JSON file")->required();
  sweep_cmd->add_option("--summary", sweep_summary,
                        "Write the JSON summary here (stderr otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (oracle_cmd->parsed())
      return run_oracle(oracle_input, oracle_gprime, oracle_mode, oracle_cap);
    if (check_cmd->parsed())
      return run_check(check_input, check_gprime, check_s1, check_s2, check_ell,
                       check_flags.strict);
    if (dfs_cmd->parsed()) return run_dfs_cmd(dfs_opt, dfs_flags);
    if (sc_cmd->parsed())
      return run_supercritical(sc_n, sc_eps, sc_seeds, sc_seed, sc_pi, sc_audit, sc_flags);
    if (r2_cmd->parsed()) return run_ramsey(r2_opt, false, r2_flags);
    if (rk_cmd->parsed()) return run_ramsey(rk_opt, true, rk_flags);
    if (bounds_cmd->parsed())
      return run_bounds(bounds_lemma, bounds_n, bounds_c, bounds_k, bounds_flags);
    if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_config, sweep_summary);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
