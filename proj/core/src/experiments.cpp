#include "indpath/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "indpath/random.hpp"

namespace indpath {

std::string_view to_string(PiMode mode) {
  return mode == PiMode::identity ? "identity" : "shuffled";
}

PiMode parse_pi_mode(std::string_view name) {
  if (name == "identity") return PiMode::identity;
  if (name == "shuffled") return PiMode::shuffled;
  throw std::invalid_argument("unknown ordering mode: " + std::string(name));
}

namespace {

VertexOrdering make_ordering(std::size_t n, PiMode mode, std::uint64_t seed) {
  return mode == PiMode::identity ? VertexOrdering::identity(n)
                                  : VertexOrdering::shuffled(n, derive_seed(seed, "pi"));
}

}  // namespace

SupercriticalTrial supercritical_trial(const SupercriticalConfig& cfg, std::uint64_t seed) {
  if (cfg.n == 0) throw std::invalid_argument("supercritical trial needs n >= 1");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0,1)");
  const double p = std::min(1.0, (1.0 + cfg.epsilon) / static_cast<double>(cfg.n));
  const LedgerMode ledger = cfg.audit ? LedgerMode::on : cfg.ledger;
  QuerySource src = QuerySource::generative(cfg.n, p, seed, ledger);
  InducedDfs dfs(src, make_ordering(cfg.n, cfg.pi_mode, seed));
  AuditReport audit;
  if (cfg.audit) dfs.enable_audit(&audit);
  const RunRecord rec = dfs.run(StopRule::never());

  const Graph& exposed = src.finalize();
  SupercriticalTrial t;
  t.seed = seed;
  t.n = cfg.n;
  t.epsilon = cfg.epsilon;
  t.max_u = rec.max_u;
  t.path_length = rec.path_length();
  t.s1_final = rec.s1_final;
  t.s2_final = rec.s2_final;
  t.excess_final = excess(exposed);
  t.edge_count = exposed.edge_count();
  t.ut_queries_at_peak = rec.ut_queries_at_peak;
  t.ut_queries = rec.ut_queries;
  t.new_queries = rec.new_queries;
  t.rounds = rec.rounds;
  t.s2_le_excess_every_round = rec.s2_excess_ok;
  const double n = static_cast<double>(cfg.n);
  t.verdict_length =
      static_cast<double>(t.path_length) >= cfg.epsilon * cfg.epsilon * n / 5.0;
  t.verdict_s2_excess = t.s2_final <= t.excess_final;
  t.verdict_excess =
      static_cast<double>(t.excess_final) <= cfg.epsilon * cfg.epsilon * cfg.epsilon * n;
  t.audit_ok = !cfg.audit || audit.ok;
  return t;
}

namespace {

RamseyTrial run_ramsey(std::size_t host_n, double p, std::uint32_t k, double c,
                       ColouringKind strategy, double scale, const GuaranteeParams& params,
                       double prune_threshold, PiMode pi_mode, std::uint64_t seed) {
  const Graph host = sample_gnp(host_n, p, derive_seed(seed, "host"));

  ColouringStrategy cs;
  cs.kind = strategy;
  cs.k = k;
  cs.seed = seed;
  const EdgeColouring colouring = colour_edges(host, cs);

  PipelineParams pp;
  pp.params = params;
  pp.prune_threshold = prune_threshold;
  if (pi_mode == PiMode::shuffled) pp.shuffle_seed = derive_seed(seed, "pi");

  RamseyTrial t;
  t.seed = seed;
  t.host_n = host_n;
  t.k = k;
  t.c = c;
  t.strategy = std::string(to_string(strategy));
  t.scale = scale;
  t.pipeline = ramsey_pipeline(host, colouring, pp);

  const double pairs =
      host_n < 2 ? 0.0
                 : 0.5 * static_cast<double>(host_n) * (static_cast<double>(host_n) - 1);
  t.host_edge_mean = pairs * p;
  t.host_edge_sigma = std::sqrt(pairs * p * (1.0 - p));
  t.host_edges_zscore =
      t.host_edge_sigma > 0
          ? (static_cast<double>(host.edge_count()) - t.host_edge_mean) / t.host_edge_sigma
          : 0.0;
  t.host_edges_within_5sigma = std::abs(t.host_edges_zscore) <= 5.0;
  t.densest_ge_mean_fraction =
      t.pipeline.class_m * k >= host.edge_count();
  return t;
}

std::uint64_t scaled_count(double value, double scale) {
  return static_cast<std::uint64_t>(std::max<long long>(1, std::llround(value * scale)));
}

}  // namespace

RamseyTrial ramsey2_trial(const Ramsey2Config& cfg, std::uint64_t seed) {
  if (cfg.n < 2) throw std::invalid_argument("ramsey2 trial needs n >= 2");
  const double p = std::min(1.0, 64.0 / static_cast<double>(cfg.n));
  GuaranteeParams params;
  params.ell = cfg.ell ? *cfg.ell : scaled_count(7e-7 * static_cast<double>(cfg.n), cfg.scale);
  params.s1 = cfg.s1 ? *cfg.s1 : 3 * params.ell;
  params.s2 = cfg.s2 ? *cfg.s2 : 24 * params.ell;
  return run_ramsey(cfg.n, p, 2, 0.0, cfg.strategy, cfg.scale, params,
                    16.0, cfg.pi_mode, seed);
}

RamseyTrial ramseyk_trial(const RamseyKConfig& cfg, std::uint64_t seed) {
  if (cfg.n < 2 || cfg.k < 2) throw std::invalid_argument("ramseyk trial needs n, k >= 2");
  if (!(cfg.c > 0)) throw std::invalid_argument("ramseyk trial needs c > 0");
  const double lk = std::log(static_cast<double>(cfg.k));
  const std::size_t host_n = cfg.n * cfg.k;
  const double p = std::min(1.0, cfg.c * lk / static_cast<double>(cfg.n));
  const double denom = cfg.c * cfg.c * cfg.c * static_cast<double>(cfg.k);
  GuaranteeParams params;
  params.ell = cfg.ell ? *cfg.ell
                       : scaled_count(static_cast<double>(cfg.n) / (denom * lk * lk * lk),
                                      cfg.scale);
  params.s1 = cfg.s1 ? *cfg.s1 : params.ell;
  params.s2 = cfg.s2 ? *cfg.s2
                     : scaled_count(static_cast<double>(cfg.n) / (denom * lk * lk), cfg.scale);
  const double prune_threshold = cfg.c * lk / 8.0;  // quarter of the average degree bound
  return run_ramsey(host_n, p, cfg.k, cfg.c, cfg.strategy, cfg.scale, params,
                    prune_threshold, cfg.pi_mode, seed);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string supercritical_csv_header() {
  return "seed,n,epsilon,max_u,path_length,s1_final,s2_final,excess_final,edge_count,"
         "ut_queries_at_peak,ut_queries,new_queries,rounds,s2_le_excess_every_round,"
         "verdict_length,verdict_s2_excess,verdict_excess,audit_ok,generator,"
         "generator_version";
}

std::string to_csv_row(const SupercriticalTrial& t) {
  std::ostringstream os;
  os << t.seed << ',' << t.n << ',' << format_double(t.epsilon) << ',' << t.max_u << ','
     << t.path_length << ',' << t.s1_final << ',' << t.s2_final << ',' << t.excess_final
     << ',' << t.edge_count << ',' << t.ut_queries_at_peak << ',' << t.ut_queries << ','
     << t.new_queries << ',' << t.rounds << ',' << int{t.s2_le_excess_every_round} << ','
     << int{t.verdict_length} << ',' << int{t.verdict_s2_excess} << ','
     << int{t.verdict_excess} << ',' << int{t.audit_ok} << ',' << kGeneratorName << ','
     << kGeneratorVersion;
  return os.str();
}

std::string ramsey_csv_header() {
  return "seed,host_n,host_m,k,c,strategy,scale,ell,s1,s2,prune_threshold,colour,"
         "class_m,g1_n,gprime_n,gprime_m,found,path_length,cert_monochromatic,"
         "cert_path_in_gprime,cert_induced_in_host,certified,stop_reason,"
         "host_edges_zscore,host_edges_within_5sigma,densest_ge_mean_fraction,"
         "diagnostic,generator,generator_version";
}

std::string to_csv_row(const RamseyTrial& t) {
  const PipelineResult& p = t.pipeline;
  std::ostringstream os;
  os << t.seed << ',' << t.host_n << ',' << p.host_m << ',' << t.k << ','
     << format_double(t.c) << ',' << t.strategy << ',' << format_double(t.scale) << ','
     << p.params.ell << ',' << p.params.s1 << ',' << p.params.s2 << ','
     << format_double(p.prune_threshold) << ',' << p.colour << ',' << p.class_m << ','
     << p.g1_n << ',' << p.gprime_n << ',' << p.gprime_m << ',' << int{p.found} << ','
     << p.path_length << ',' << int{p.cert_monochromatic} << ','
     << int{p.cert_path_in_gprime} << ',' << int{p.cert_induced_in_host} << ','
     << int{p.certified()} << ',' << to_string(p.stop_reason) << ','
     << format_double(t.host_edges_zscore) << ',' << int{t.host_edges_within_5sigma}
     << ',' << int{t.densest_ge_mean_fraction} << ',' << csv_escape(p.diagnostic) << ','
     << kGeneratorName << ',' << kGeneratorVersion;
  return os.str();
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

using nlohmann::json;

std::vector<std::uint64_t> seeds_from_config(const json& cfg) {
  std::vector<std::uint64_t> seeds;
  const std::uint64_t base = cfg.value("base_seed", std::uint64_t{1});
  if (!cfg.contains("seeds")) {
    seeds.push_back(base);
    return seeds;
  }
  const json& s = cfg.at("seeds");
  if (s.is_number_unsigned() || s.is_number_integer()) {
    const std::uint64_t count = s.get<std::uint64_t>();
    for (std::uint64_t i = 0; i < count; ++i) seeds.push_back(base + i);
  } else if (s.is_array()) {
    for (const auto& v : s) seeds.push_back(v.get<std::uint64_t>());
  } else {
    throw std::runtime_error("sweep config: 'seeds' must be a count or a list");
  }
  return seeds;
}

double median_of(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

SweepOutput run_sweep(const std::string& config_json_text) {
  json cfg;
  try {
    cfg = json::parse(config_json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("sweep config: malformed JSON: ") + e.what());
  }
  if (!cfg.is_object() || !cfg.contains("experiment"))
    throw std::runtime_error("sweep config: required field 'experiment' missing");
  const std::string experiment = cfg.at("experiment").get<std::string>();
  if (experiment != "supercritical" && experiment != "ramsey2" && experiment != "ramseyk")
    throw std::runtime_error("sweep config: unknown experiment '" + experiment + "'");

  static const std::vector<std::string> kKnown = {
      "experiment", "grid",  "seeds",  "base_seed", "scale",
      "pi",         "audit", "params", "output"};
  for (const auto& [key, value] : cfg.items()) {
    static_cast<void>(value);
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end())
      throw std::runtime_error("sweep config: unknown field '" + key + "'");
  }

  // Expand the grid: keys sorted, values in the given order, odometer order.
  std::vector<std::string> keys;
  std::vector<std::vector<json>> values;
  if (cfg.contains("grid")) {
    const json& grid = cfg.at("grid");
    if (!grid.is_object()) throw std::runtime_error("sweep config: 'grid' must be an object");
    for (const auto& [key, vals] : grid.items()) {
      if (!vals.is_array())
        throw std::runtime_error("sweep config: grid entry '" + key + "' must be a list");
      keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    for (const auto& key : keys)
      values.push_back(std::vector<json>(grid.at(key).begin(), grid.at(key).end()));
  }

  std::vector<json> cells;
  if (!keys.empty() &&
      std::none_of(values.begin(), values.end(), [](const auto& v) { return v.empty(); })) {
    std::vector<std::size_t> idx(keys.size(), 0);
    bool done = false;
    while (!done) {
      json cell = json::object();
      for (std::size_t i = 0; i < keys.size(); ++i) cell[keys[i]] = values[i][idx[i]];
      cells.push_back(std::move(cell));
      done = true;
      for (std::size_t i = keys.size(); i-- > 0;) {
        if (++idx[i] < values[i].size()) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
    }
  }

  const auto seeds = seeds_from_config(cfg);
  const double scale = cfg.value("scale", 1.0);
  const PiMode pi = parse_pi_mode(cfg.value("pi", std::string("identity")));
  const bool audit = cfg.value("audit", false);
  const json params_override = cfg.value("params", json::object());

  std::ostringstream csv;
  json summary;
  summary["experiment"] = experiment;
  summary["generator"] = std::string(kGeneratorName);
  summary["generator_version"] = std::string(kGeneratorVersion);
  summary["seeds"] = seeds;
  summary["config"] = cfg;
  summary["cells"] = json::array();

  const bool supercritical = experiment == "supercritical";
  csv << (supercritical ? supercritical_csv_header() : ramsey_csv_header()) << '\n';

  for (const auto& cell : cells) {
    json cell_summary;
    cell_summary["params"] = cell;
    std::vector<double> lengths;
    std::uint64_t pass_length = 0, pass_s2 = 0, pass_excess = 0, pass_cert = 0,
                  pass_found = 0;
    for (const std::uint64_t seed : seeds) {
      if (supercritical) {
        SupercriticalConfig sc;
        sc.n = cell.value("n", std::size_t{1000});
        sc.epsilon = cell.value("eps", cell.value("epsilon", 0.1));
        sc.pi_mode = pi;
        sc.audit = audit;
        const auto t = supercritical_trial(sc, seed);
        csv << to_csv_row(t) << '\n';
        lengths.push_back(static_cast<double>(t.path_length));
        pass_length += t.verdict_length;
        pass_s2 += t.verdict_s2_excess && t.s2_le_excess_every_round;
        pass_excess += t.verdict_excess;
      } else if (experiment == "ramsey2") {
        Ramsey2Config rc;
        rc.n = cell.value("n", std::size_t{100000});
        rc.strategy = parse_colouring_kind(cell.value("strategy", std::string("uniform")));
        rc.scale = cell.value("scale", scale);
        if (params_override.contains("ell"))
          rc.ell = params_override.at("ell").get<std::uint64_t>();
        if (params_override.contains("s1"))
          rc.s1 = params_override.at("s1").get<std::uint64_t>();
        if (params_override.contains("s2"))
          rc.s2 = params_override.at("s2").get<std::uint64_t>();
        rc.pi_mode = pi;
        const auto t = ramsey2_trial(rc, seed);
        csv << to_csv_row(t) << '\n';
        lengths.push_back(static_cast<double>(t.pipeline.path_length));
        pass_cert += t.pipeline.certified();
        pass_found += t.pipeline.found;
      } else {
        RamseyKConfig rc;
        rc.n = cell.value("n", std::size_t{100000});
        rc.k = cell.value("k", std::uint32_t{2});
        rc.c = cell.value("c", 200.0);
        rc.strategy = parse_colouring_kind(cell.value("strategy", std::string("uniform")));
        rc.scale = cell.value("scale", scale);
        if (params_override.contains("ell"))
          rc.ell = params_override.at("ell").get<std::uint64_t>();
        if (params_override.contains("s1"))
          rc.s1 = params_override.at("s1").get<std::uint64_t>();
        if (params_override.contains("s2"))
          rc.s2 = params_override.at("s2").get<std::uint64_t>();
        rc.pi_mode = pi;
        const auto t = ramseyk_trial(rc, seed);
        csv << to_csv_row(t) << '\n';
        lengths.push_back(static_cast<double>(t.pipeline.path_length));
        pass_cert += t.pipeline.certified();
        pass_found += t.pipeline.found;
      }
    }
    const double trials = static_cast<double>(seeds.size());
    cell_summary["trials"] = seeds.size();
    cell_summary["median_path_length"] = median_of(lengths);
    if (supercritical) {
      cell_summary["fraction_length"] = trials ? pass_length / trials : 0.0;
      cell_summary["fraction_s2_le_excess"] = trials ? pass_s2 / trials : 0.0;
      cell_summary["fraction_excess"] = trials ? pass_excess / trials : 0.0;
    } else {
      cell_summary["fraction_found"] = trials ? pass_found / trials : 0.0;
      cell_summary["fraction_certified"] = trials ? pass_cert / trials : 0.0;
    }
    summary["cells"].push_back(std::move(cell_summary));
  }

  SweepOutput out;
  out.csv = csv.str();
  out.summary_json = summary.dump(2);
  return out;
}

}  // namespace indpath
