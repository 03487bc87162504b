// Copyright 2026 The giantlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// giantlab: command-line front end. Exit codes: 0 success or no
// counterexample, 2 verified counterexample, 1 any error.

#include <omp.h>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "giantlab/connected_sets.hpp"
#include "giantlab/expander_extract.hpp"
#include "giantlab/expansion_audit.hpp"
#include "giantlab/experiment.hpp"
#include "giantlab/generators.hpp"
#include "giantlab/metrics.hpp"
#include "giantlab/percolation.hpp"
#include "giantlab/spectral.hpp"

namespace giantlab {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

struct Globals {
  std::string graph;
  std::uint64_t seed = 1;
  double epsilon = 0.2;
  std::size_t trials = 1;
  int threads = 0;
  bool json = false;
  bool csv = false;
  std::string out;
  bool no_timestamp = false;
  std::size_t samples = 10000;
  ExpansionConstants constants;
};

Json SetJson(const VertexSet& s) { return Json(std::vector<Vertex>(s.begin(), s.end())); }

Json RecordJson(const SetRecord& r) {
  return {{"size", r.set.size()},
          {"internal_edges", r.internal_edges},
          {"boundary_edges", r.boundary_edges},
          {"external_neighbors", r.external_neighbors},
          {"ratio", JsonNumber(r.ratio)},
          {"violates", r.violates},
          {"set", SetJson(r.set)}};
}

Json OptionalRecord(const std::optional<SetRecord>& r) { return r ? RecordJson(*r) : Json(); }

Json ExpansionJson(const ExpansionReport& r) {
  Json violations = Json::array();
  for (const SetRecord& v : r.violations) violations.push_back(RecordJson(v));
  return {{"measure", r.edge ? "edge" : "vertex"},
          {"mode", ModeName(r.mode)},
          {"band", BandName(r.band)},
          {"size_lo", r.sizes.lo},
          {"size_hi", r.sizes.hi},
          {"band_empty", r.band_empty},
          {"factor", JsonNumber(r.factor)},
          {"sets_checked", r.sets_checked},
          {"violation_count", r.violation_count},
          {"witness", OptionalRecord(r.witness)},
          {"violations", std::move(violations)}};
}

Json ThresholdsJson(const ExpansionThresholds& t) {
  return {{"s_min", t.s_min},
          {"s_mid", t.s_mid},
          {"s_max", t.s_max},
          {"factor_connected", t.factor_connected},
          {"factor_linear", t.factor_linear},
          {"edge_factor", t.edge_factor},
          {"valid", t.valid()}};
}

Json ViolatorJson(const std::optional<Violator>& v) {
  if (!v) return Json();
  return {{"stage", v->stage},
          {"size", v->set.size()},
          {"neighbors", v->neighbors},
          {"ratio", JsonNumber(v->ratio)},
          {"set", SetJson(v->set)}};
}

// "metric,value" rows for subcommands without a natural table. Nested keys
// are joined with '.', scalar arrays with ' '.
void Flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      Flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (j.is_array()) {
    const bool scalars =
        std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (!scalars) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        Flatten(j[i], prefix + "." + std::to_string(i), out);
      }
      return;
    }
    out << prefix << ',';
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? " " : "") << j[i].dump();
    out << '\n';
    return;
  }
  out << prefix << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

std::string FlatCsv(const Json& j) {
  std::ostringstream out;
  out << "metric,value\n";
  Flatten(j, "", out);
  return out.str();
}

void Emit(const Globals& g, Json j, const std::string& csv) {
  if (g.csv) {
    write_output(csv.empty() ? FlatCsv(j) : csv, g.out);
    return;
  }
  if (!g.no_timestamp) {
    Json stamped = to_json(ExperimentReport{}, true);
    Json wrapped;
    wrapped["generated_at"] = stamped["generated_at"];
    for (auto& [key, value] : j.items()) wrapped[key] = value;
    j = std::move(wrapped);
  }
  write_output(j.dump(2) + "\n", g.out);
}

std::shared_ptr<const RegularGraph> Host(const Globals& g) { return build_graph(g.graph, g.seed); }

Json InstanceJson(const Globals& g, const RegularGraph& host) {
  const SupercriticalParams params = supercritical_params(g.epsilon, host.d());
  return {{"graph", host.describe()}, {"n", host.n()},   {"d", host.d()},
          {"epsilon", g.epsilon},     {"p", params.p},   {"seed", g.seed}};
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t q = 0;
  std::size_t d = 0;
};

int RunGenerate(const Globals& g, const GenerateArgs& a) {
  RegularGraph graph = a.kind == "complete" ? gen_complete(a.n)
                       : a.kind == "paley"  ? gen_paley(a.q)
                                            : gen_random_regular(a.n, a.d, g.seed);
  std::ostringstream out;
  write_graph(graph, out);
  write_output(out.str(), g.out);
  return kExitOk;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  double tol = 1e-6;
  std::size_t max_iter = 10000;
  std::size_t restarts = 3;
  bool force_iterative = false;
  bool exhaustive_eml = false;
  std::size_t eml_samples = 1000;
};

int RunSpectrum(const Globals& g, const SpectrumArgs& a) {
  const auto host = Host(g);
  SpectralOptions opt;
  opt.tol = a.tol;
  opt.max_iter = a.max_iter;
  opt.restarts = a.restarts;
  opt.seed = g.seed;
  opt.force_iterative = a.force_iterative;
  const SpectralEstimate est = estimate_lambda(*host, opt);
  const bool trusted = est.certified || est.converged;
  Json j = {{"graph", host->describe()},
            {"n", host->n()},
            {"d", host->d()},
            {"lambda", trusted ? JsonNumber(est.lambda_hat) : Json()},
            {"ratio", trusted ? JsonNumber(est.ratio) : Json()},
            {"certified", est.certified},
            {"converged", est.converged},
            {"iterations", est.iterations},
            {"residual", JsonNumber(est.residual)}};
  int code = kExitOk;
  if (a.exhaustive_eml || a.eml_samples > 0) {
    const EmlAuditResult eml = a.exhaustive_eml
                                   ? eml_exhaustive(*host, est.lambda_hat)
                                   : eml_audit(*host, est.lambda_hat, a.eml_samples, g.seed);
    j["eml_mode"] = a.exhaustive_eml ? "exhaustive" : "sampled";
    j["worst_eml_ratio"] = JsonNumber(eml.worst_ratio);
    j["eml_pairs"] = eml.pairs_checked;
    j["eml_skipped_zero_bound"] = eml.skipped_zero_bound;
    j["eml_violations"] = eml.violations;
    if (eml.violations > 0) {
      j["eml_worst_a"] = SetJson(eml.worst_a);
      j["eml_worst_b"] = SetJson(eml.worst_b);
      // An estimate below the true lambda can produce spurious violations.
      if (est.certified) code = kExitCounterexample;
    }
  }
  Emit(g, std::move(j), "");
  return code;
}

// ------------------------------------------------- percolate, diameter, sweep

struct ExperimentArgs {
  bool spectrum = false;
  bool diameter = false;
};

int RunExperiment(const Globals& g, const ExperimentArgs& a) {
  ExperimentConfig cfg;
  cfg.graph = g.graph;
  cfg.epsilon = g.epsilon;
  cfg.trials = g.trials;
  cfg.seed = g.seed;
  cfg.spectrum = a.spectrum;
  cfg.diameter = a.diameter;
  cfg.constants = g.constants;
  const ExperimentReport report = run_experiment(cfg);
  for (const std::string& w : report.warnings) std::cerr << "warning: " << w << '\n';
  emit_report(report, g.csv ? OutputFormat::kCsv : OutputFormat::kJson, g.out, !g.no_timestamp);
  return report.counterexample ? kExitCounterexample : kExitOk;
}

inline constexpr const char* kSweepCsvHeader =
    "epsilon,trials,theory_fraction,mean_L1_fraction,stddev_L1_fraction,min_L1_fraction,"
    "max_L1_fraction,mean_second_size,max_second_size";

int RunSweep(const Globals& g, const std::vector<double>& epsilons) {
  if (epsilons.empty()) throw InputError("epsilons: at least one value required");
  Json rows = Json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << kSweepCsvHeader << '\n';
  for (double eps : epsilons) {
    ExperimentConfig cfg;
    cfg.graph = g.graph;
    cfg.epsilon = eps;
    cfg.trials = g.trials;
    cfg.seed = g.seed;
    cfg.constants = g.constants;
    const ExperimentReport report = run_experiment(cfg);
    std::map<std::string, MetricSummary> by_name;
    for (const MetricSummary& s : report.aggregates) by_name[s.name] = s;
    const MetricSummary& f = by_name.at("L1_fraction");
    const MetricSummary& s2 = by_name.at("second_size");
    const double theory = report.theory["theory_fraction"].get<double>();
    rows.push_back({{"epsilon", eps},
                    {"trials", g.trials},
                    {"theory_fraction", theory},
                    {"mean_L1_fraction", f.mean},
                    {"stddev_L1_fraction", f.stddev},
                    {"min_L1_fraction", f.min},
                    {"max_L1_fraction", f.max},
                    {"mean_second_size", s2.mean},
                    {"max_second_size", s2.max}});
    csv << eps << ',' << g.trials << ',' << theory << ',' << f.mean << ',' << f.stddev << ','
        << f.min << ',' << f.max << ',' << s2.mean << ',' << s2.max << '\n';
  }
  Json j = {{"graph", g.graph}, {"seed", g.seed}, {"rows", std::move(rows)}};
  Emit(g, std::move(j), csv.str());
  return kExitOk;
}

// ------------------------------------------------------------------ census

int RunCensus(const Globals& g) {
  const auto host = Host(g);
  const PercolatedGraph perc = percolate(host, g.epsilon, g.seed);
  const GiantCensus c = giant_census(perc, g.epsilon);
  const ComponentCensus comps = connected_components(perc);
  std::map<std::size_t, std::size_t, std::greater<>> histogram;
  for (std::size_t s : comps.sizes) ++histogram[s];
  Json hist = Json::array();
  std::ostringstream csv;
  csv << "size,count\n";
  for (const auto& [size, count] : histogram) {
    hist.push_back({{"size", size}, {"count", count}});
    csv << size << ',' << count << '\n';
  }
  Json j = InstanceJson(g, *host);
  j["retained_edges"] = perc.num_retained_edges();
  j["L1_size"] = c.L1_size;
  j["L1_fraction"] = c.L1_fraction;
  j["theory_fraction"] = c.theory_fraction;
  j["second_size"] = c.second_size;
  j["excess_L1"] = c.excess_L1;
  j["num_components"] = c.num_components;
  j["size_histogram"] = std::move(hist);
  Emit(g, std::move(j), csv.str());
  return kExitOk;
}

// --------------------------------------------------------------- trace-bfs

struct TraceArgs {
  bool random_order = false;
  bool interval_report = false;
  std::optional<std::uint64_t> switch_step;
};

Json LayeredJson(const LayeredPhase& l) {
  return {{"switch_reached", l.switch_reached},
          {"switch_step", l.switch_step},
          {"q_empty_at_switch", l.q_empty_at_switch},
          {"q0", l.q0},
          {"q0_threshold", l.q0_threshold},
          {"q0_meets_threshold", l.q0_meets_threshold},
          {"q", l.q},
          {"n_cum", l.n_cum},
          {"cutoff", l.cutoff},
          {"cutoff_index", l.cutoff_index ? Json(*l.cutoff_index) : Json()},
          {"component_at_switch", l.component_at_switch},
          {"discovered_at_cutoff", l.discovered_at_cutoff},
          {"discovered_total", l.discovered_total},
          {"claim_size", l.claim_size},
          {"exceeds_claim", l.exceeds_claim}};
}

int RunTrace(const Globals& g, const TraceArgs& a) {
  const auto host = Host(g);
  Json trials = Json::array();
  std::ostringstream csv;
  csv << "trial,step,S,Q,T\n";
  std::size_t emptied = 0, q0_ok = 0, claim = 0;
  for (std::size_t i = 0; i < g.trials; ++i) {
    BfsOptions opt;
    opt.random_order = a.random_order;
    opt.order_seed = g.seed + i;
    opt.switch_step = a.switch_step;
    opt.record_steps = g.csv;
    const BfsTrace t = randomized_bfs(*host, g.epsilon, g.seed + i, opt);
    for (std::size_t s = 0; s < t.s_size.size(); ++s) {
      csv << i << ',' << s << ',' << t.s_size[s] << ',' << t.q_size[s] << ',' << t.t_size[s]
          << '\n';
    }
    emptied += t.emptied_in_interval;
    q0_ok += t.layered.q0_meets_threshold;
    claim += t.layered.exceeds_claim;
    Json row = {{"trial", i},
                {"seed", g.seed + i},
                {"queries", t.queries},
                {"positives", t.positives},
                {"components", t.components.size()},
                {"largest_component",
                 t.components.empty()
                     ? std::size_t{0}
                     : std::max_element(t.components.begin(), t.components.end(),
                                        [](const BfsComponent& x, const BfsComponent& y) {
                                          return x.size < y.size;
                                        })->size}};
    if (a.interval_report) {
      row["interval_lo"] = t.interval_lo;
      row["interval_hi"] = t.interval_hi;
      row["emptied_in_interval"] = t.emptied_in_interval;
      row["layered"] = LayeredJson(t.layered);
    }
    trials.push_back(std::move(row));
  }
  Json j = InstanceJson(g, *host);
  j["trials"] = std::move(trials);
  if (a.interval_report) {
    const double tr = static_cast<double>(g.trials);
    j["summary"] = {{"emptied_in_interval_rate", emptied / tr},
                    {"q0_meets_threshold_rate", q0_ok / tr},
                    {"exceeds_claim_rate", claim / tr}};
  }
  Emit(g, std::move(j), csv.str());
  return kExitOk;
}

// --------------------------------------------------------- audit-expansion

struct AuditArgs {
  std::string mode = "sampled";
  std::string band = "connected";
  std::string measure = "both";
  std::optional<std::size_t> band_lo;
  std::optional<std::size_t> band_hi;
  std::uint64_t budget = kEnumerationBudget;
};

int RunAuditExpansion(const Globals& g, const AuditArgs& a) {
  const auto host = Host(g);
  const PercolatedGraph perc = percolate(host, g.epsilon, g.seed);
  const ExpansionThresholds t = expansion_thresholds(host->n(), g.epsilon, g.constants);
  AuditOptions opt;
  opt.mode = a.mode == "exhaustive" ? AuditMode::kExhaustive : AuditMode::kSampled;
  opt.band = a.band == "linear" ? AuditBand::kLinear : AuditBand::kConnected;
  opt.samples = g.samples;
  opt.seed = g.seed;
  opt.budget = a.budget;
  if (a.band_lo || a.band_hi) {
    if (!a.band_lo || !a.band_hi) throw InputError("band-lo/band-hi: give both or neither");
    opt.band_override = SizeBand{*a.band_lo, *a.band_hi};
  }
  Json j = InstanceJson(g, *host);
  j["thresholds"] = ThresholdsJson(t);
  std::uint64_t violations = 0;
  if (a.measure != "edge") {
    const ExpansionReport r = vertex_expansion_audit(perc, t, opt);
    violations += r.violation_count;
    j["vertex"] = ExpansionJson(r);
  }
  if (a.measure != "vertex") {
    const ExpansionReport r = edge_expansion_audit(perc, t, opt);
    violations += r.violation_count;
    j["edge"] = ExpansionJson(r);
  }
  j["counterexample"] = violations > 0;
  Emit(g, std::move(j), "");
  return violations > 0 ? kExitCounterexample : kExitOk;
}

// ------------------------------------------------------------ audit-lemmas

struct LemmaArgs {
  std::vector<std::string> which;
  std::size_t k = 4;
  double alpha = 0.5;
  std::optional<std::size_t> set_size;
  double bad_c = 1.0 / 70.0;
  double big_c = 1.0;
  double small_c = 1.0;
};

int RunAuditLemmas(const Globals& g, const LemmaArgs& a) {
  const auto host = Host(g);
  Json j = InstanceJson(g, *host);
  bool failed = false;
  std::optional<PercolatedGraph> perc;
  std::optional<InducedSubgraph> giant;
  auto percolated = [&]() -> const PercolatedGraph& {
    if (!perc) perc.emplace(percolate(host, g.epsilon, g.seed));
    return *perc;
  };
  auto giant_graph = [&]() -> const SparseGraph& {
    if (!giant) {
      giant.emplace(induce(percolated().graph(), giant_census(percolated(), g.epsilon).L1));
    }
    return giant->graph;
  };
  Json results = Json::object();
  for (const std::string& w : a.which) {
    Json r;
    bool violated = false;
    if (w == "tree-count") {
      const TreeCount c = tree_count_bound(*host, a.k);
      violated = !c.within;
      r = {{"k", c.k}, {"bound", c.bound}, {"exact", c.exact ? Json(*c.exact) : Json()},
           {"within", c.within}};
    } else if (w == "high-degree") {
      const HighDegreeMass h = high_degree_mass(percolated(), g.epsilon);
      violated = !h.within_ceiling;
      r = {{"mass", h.mass}, {"vertices", h.vertices}, {"threshold", h.threshold},
           {"ceiling", h.ceiling}, {"within_ceiling", h.within_ceiling}};
    } else if (w == "incident-edges") {
      const IncidentEdgeReport ie = incident_edge_audit(percolated(), g.samples, g.seed);
      violated = !ie.violations.empty();
      Json vs = Json::array();
      for (const SetRecord& v : ie.violations) vs.push_back(RecordJson(v));
      r = {{"min_size", ie.min_size}, {"sets_checked", ie.sets_checked},
           {"max_ratio", JsonNumber(ie.max_ratio)}, {"at_least_ten", ie.at_least_ten},
           {"witness", OptionalRecord(ie.witness)}, {"violations", std::move(vs)}};
    } else if (w == "low-degree") {
      SpectralOptions so;
      so.seed = g.seed;
      const SpectralEstimate est = estimate_lambda(*host, so);
      const std::size_t size = a.set_size.value_or(host->n() / 2);
      if (size == 0 || size > host->n()) throw InputError("set-size: must lie in [1, n]");
      Rng rng(DeriveSeed(g.seed, 0x10u));
      std::vector<Vertex> all(host->n());
      std::iota(all.begin(), all.end(), Vertex{0});
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(size);
      const LowDegreeSet low = low_degree_set(*host, est.lambda_hat, VertexSet(all), a.alpha);
      // Only a certified lambda makes the ceiling binding.
      violated = est.certified && !low.within_ceiling;
      r = {{"lambda", JsonNumber(est.lambda_hat)}, {"lambda_certified", est.certified},
           {"set_size", size}, {"alpha", a.alpha}, {"members", low.members.size()},
           {"threshold", low.threshold}, {"ceiling", low.ceiling},
           {"within_ceiling", low.within_ceiling}};
    } else if (w == "bad-volume") {
      BadVolumeOptions bo;
      bo.c = a.bad_c;
      bo.samples = g.samples;
      bo.seed = g.seed;
      const BadVolume b = bad_volume(percolated(), g.epsilon, bo);
      violated = static_cast<double>(b.volume) > b.ceiling;
      Json packed = Json::array();
      for (const VertexSet& s : b.packed) packed.push_back(SetJson(s));
      r = {{"lo", b.lo}, {"hi", b.hi}, {"band_empty", b.band_empty},
           {"mode", ModeName(b.mode)}, {"candidates", b.candidates},
           {"poor_sets", b.poor_sets}, {"volume", b.volume}, {"ceiling", b.ceiling},
           {"packed", std::move(packed)}};
    } else if (w == "small-set-mass") {
      const MassAuditReport m =
          small_set_mass_audit(giant_graph(), host->n(), g.epsilon, g.samples, g.seed);
      violated = m.violation_count > 0;
      r = {{"mass_threshold", m.mass_threshold}, {"size_threshold", m.size_threshold},
           {"sets_checked", m.sets_checked}, {"violation_count", m.violation_count},
           {"witness", OptionalRecord(m.witness)}};
    } else if (w == "phi-floor") {
      const PhiFloorReport p = phi_floor_audit(giant_graph(), host->n(), g.epsilon, a.big_c,
                                               a.small_c, g.samples, g.seed);
      violated = p.violation_count > 0;
      r = {{"pi_lo", p.pi_lo}, {"floor", p.floor}, {"sets_checked", p.sets_checked},
           {"violation_count", p.violation_count}, {"min_phi", JsonNumber(p.min_phi)},
           {"witness", OptionalRecord(p.witness)}};
    } else {
      throw InputError("which: unknown audit \"" + w + "\"");
    }
    r["violated"] = violated;
    failed = failed || violated;
    results[w] = std::move(r);
  }
  j["audits"] = std::move(results);
  j["counterexample"] = failed;
  Emit(g, std::move(j), "");
  return failed ? kExitCounterexample : kExitOk;
}

// ----------------------------------------------------------------- extract

struct ExtractArgs {
  std::optional<double> factor;
  std::string verify = "none";
  std::optional<double> budget;
  std::size_t search_samples = 2000;
};

int RunExtract(const Globals& g, const ExtractArgs& a) {
  const auto host = Host(g);
  const PercolatedGraph perc = percolate(host, g.epsilon, g.seed);
  const double factor = a.factor.value_or(default_target_factor(g.epsilon));
  ExtractOptions opt;
  opt.search.samples = a.search_samples;
  opt.search.seed = g.seed;
  opt.budget_override = a.budget;
  const PeelState st = extract_expander(perc, g.epsilon, factor, opt);

  Json history = Json::array();
  for (const PeelStep& s : st.history) {
    history.push_back({{"stage", s.stage},
                       {"size", s.removed.size()},
                       {"neighbors", s.neighbors},
                       {"ratio", JsonNumber(s.ratio)},
                       {"removed", SetJson(s.removed)}});
  }
  Json j = InstanceJson(g, *host);
  j["target_factor"] = factor;
  j["budget"] = st.budget;
  j["L1_size"] = st.L1.size();
  j["M_size"] = st.M.size();
  j["L1_prime_size"] = st.L1_prime.size();
  j["size_claim"] = st.size_claim;
  j["size_claim_met"] = st.size_claim_met;
  j["budget_exceeded"] = st.budget_exceeded;
  j["M"] = SetJson(st.M);
  j["history"] = std::move(history);

  int code = kExitOk;
  if (a.verify != "none") {
    bool exhaustive = a.verify == "exhaustive";
    std::size_t samples = 0;
    if (!exhaustive) {
      if (a.verify.rfind("sampled:", 0) != 0) {
        throw InputError("verify: expected exhaustive, sampled:N, or none");
      }
      samples = std::stoull(a.verify.substr(8));
    }
    const InducedSubgraph core = induce(perc.graph(), st.L1_prime);
    const Verdict v = verify_expander(core.graph, factor, exhaustive, samples, g.seed);
    std::optional<Violator> mapped = v.counterexample;
    if (mapped) mapped->set = core.ToParent(mapped->set.members());
    j["verdict"] = {{"kind", VerdictName(v.kind)},
                    {"samples", v.samples},
                    {"counterexample", ViolatorJson(mapped)}};
    if (v.kind == VerdictKind::kCounterexample) code = kExitCounterexample;
  }
  Emit(g, std::move(j), "");
  return code;
}

// ------------------------------------------------------------------ mixing

int RunMixing(const Globals& g, const std::string& starts) {
  const auto host = Host(g);
  StartMode mode;
  if (starts != "all") {
    mode.all = false;
    try {
      mode.count = std::stoull(starts);
    } catch (const std::exception&) {
      throw InputError("starts: expected all or a positive count");
    }
    if (mode.count == 0) throw InputError("starts: expected all or a positive count");
  }
  Json trials = Json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "trial,seed,t,d\n";
  for (std::size_t i = 0; i < g.trials; ++i) {
    const std::uint64_t seed = g.seed + i;
    const PercolatedGraph perc = percolate(host, g.epsilon, seed);
    const GiantCensus c = giant_census(perc, g.epsilon);
    const InducedSubgraph giant = induce(perc.graph(), c.L1);
    mode.seed = seed;
    const MixingResult m = mixing_time_exact(giant.graph, mode);
    for (std::size_t t = 0; t < m.d.size(); ++t) {
      csv << i << ',' << seed << ',' << t << ',' << m.d[t] << '\n';
    }
    const double ln_n = std::log(static_cast<double>(host->n()));
    trials.push_back({{"trial", i},
                      {"seed", seed},
                      {"L1_size", c.L1_size},
                      {"t_mix", m.t_mix},
                      {"t_mix_over_ln2n", static_cast<double>(m.t_mix) / (ln_n * ln_n)},
                      {"starts", m.starts},
                      {"lower_bound", m.lower_bound},
                      {"d", m.d}});
  }
  Json j = InstanceJson(g, *host);
  j["trials"] = std::move(trials);
  Emit(g, std::move(j), csv.str());
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"giantlab: percolation on pseudo-random regular graphs"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file; flags override it");
  Globals g;
  app.add_option("--graph", g.graph,
                 "complete:N, paley:Q, random-regular:N:D[:SEED], or a graph file");
  app.add_option("--seed", g.seed, "base seed; trial i uses seed + i");
  app.add_option("--epsilon", g.epsilon, "supercritical offset, p = (1 + eps)/d");
  app.add_option("--trials", g.trials, "number of trials")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads (0: all available)")
      ->check(CLI::NonNegativeNumber);
  auto* json_flag = app.add_flag("--json", g.json, "JSON output (default)");
  app.add_flag("--csv", g.csv, "CSV output")->excludes(json_flag);
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_flag("--no-timestamp", g.no_timestamp, "omit the generated_at field");
  app.add_option("--samples", g.samples, "sample count for sampled audits");
  app.add_option("--c1", g.constants.c1, "connected-band vertex expansion constant");
  app.add_option("--c2", g.constants.c2, "linear-band vertex expansion constant");
  app.add_option("--c3", g.constants.c3, "edge expansion constant");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a host graph file")->fallthrough();
  generate->add_option("--kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"complete", "paley", "random-regular"}));
  generate->add_option("--n", gen.n);
  generate->add_option("--q", gen.q);
  generate->add_option("--d", gen.d);

  SpectrumArgs spec_args;
  auto* spectrum = app.add_subcommand("spectrum", "second eigenvalue and EML audit")->fallthrough();
  spectrum->add_option("--tol", spec_args.tol);
  spectrum->add_option("--max-iter", spec_args.max_iter);
  spectrum->add_option("--restarts", spec_args.restarts);
  spectrum->add_flag("--force-iterative", spec_args.force_iterative);
  spectrum->add_flag("--exhaustive-eml", spec_args.exhaustive_eml);
  spectrum->add_option("--eml-samples", spec_args.eml_samples, "0 disables the EML audit");

  ExperimentArgs exp_args;
  auto* perc_cmd =
      app.add_subcommand("percolate", "percolation trials with aggregates")->fallthrough();
  perc_cmd->add_flag("--spectrum", exp_args.spectrum, "add the host spectral ratio");
  auto* census = app.add_subcommand("census", "component census of one instance")->fallthrough();

  TraceArgs trace_args;
  std::uint64_t switch_step = 0;
  auto* trace = app.add_subcommand("trace-bfs", "randomized BFS exploration")->fallthrough();
  trace->add_flag("--random-order", trace_args.random_order);
  trace->add_flag("--interval-report", trace_args.interval_report);
  auto* switch_opt = trace->add_option("--switch-step", switch_step);

  AuditArgs audit_args;
  std::size_t band_lo = 0, band_hi = 0;
  auto* audit = app.add_subcommand("audit-expansion", "expansion audits on L1")->fallthrough();
  audit->add_option("--mode", audit_args.mode)
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  audit->add_option("--band", audit_args.band)->check(CLI::IsMember({"connected", "linear"}));
  audit->add_option("--measure", audit_args.measure)
      ->check(CLI::IsMember({"vertex", "edge", "both"}));
  auto* lo_opt = audit->add_option("--band-lo", band_lo);
  auto* hi_opt = audit->add_option("--band-hi", band_hi);
  audit->add_option("--budget", audit_args.budget);

  LemmaArgs lemma_args;
  std::size_t set_size = 0;
  auto* lemmas = app.add_subcommand("audit-lemmas", "auxiliary structural audits")->fallthrough();
  lemmas->add_option("--which", lemma_args.which)
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember({"tree-count", "high-degree", "incident-edges", "low-degree",
                             "bad-volume", "small-set-mass", "phi-floor"}));
  lemmas->add_option("--k", lemma_args.k);
  lemmas->add_option("--alpha", lemma_args.alpha);
  auto* set_size_opt = lemmas->add_option("--set-size", set_size);
  lemmas->add_option("--bad-c", lemma_args.bad_c);
  lemmas->add_option("--big-c", lemma_args.big_c);
  lemmas->add_option("--small-c", lemma_args.small_c);

  ExtractArgs extract_args;
  double factor = 0.0, budget = 0.0;
  auto* extract = app.add_subcommand("extract", "peel L1 down to an expander")->fallthrough();
  auto* factor_opt = extract->add_option("--factor", factor);
  extract->add_option("--verify", extract_args.verify, "exhaustive, sampled:N, or none");
  auto* budget_opt = extract->add_option("--budget", budget);
  extract->add_option("--search-samples", extract_args.search_samples);

  ExperimentArgs diam_args;
  diam_args.diameter = true;
  auto* diameter = app.add_subcommand("diameter", "exact diameter of L1")->fallthrough();

  std::string starts = "all";
  auto* mixing = app.add_subcommand("mixing", "lazy-walk mixing time on L1")->fallthrough();
  mixing->add_option("--starts", starts, "all or a sampled count");

  std::vector<double> epsilons;
  auto* sweep = app.add_subcommand("sweep", "census over several epsilons")->fallthrough();
  sweep->add_option("--epsilons", epsilons)->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  if (g.threads > 0) omp_set_num_threads(g.threads);
  if (*switch_opt) trace_args.switch_step = switch_step;
  if (*lo_opt) audit_args.band_lo = band_lo;
  if (*hi_opt) audit_args.band_hi = band_hi;
  if (*set_size_opt) lemma_args.set_size = set_size;
  if (*factor_opt) extract_args.factor = factor;
  if (*budget_opt) extract_args.budget = budget;

  if (*generate) return RunGenerate(g, gen);
  if (*spectrum) return RunSpectrum(g, spec_args);
  if (*perc_cmd) return RunExperiment(g, exp_args);
  if (*census) return RunCensus(g);
  if (*trace) return RunTrace(g, trace_args);
  if (*audit) return RunAuditExpansion(g, audit_args);
  if (*lemmas) return RunAuditLemmas(g, lemma_args);
  if (*extract) return RunExtract(g, extract_args);
  if (*diameter) return RunExperiment(g, diam_args);
  if (*mixing) return RunMixing(g, starts);
  return RunSweep(g, epsilons);
}

}  // namespace
}  // namespace giantlab

int main(int argc, char** argv) {
  try {
    return giantlab::Main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "giantlab: " << e.what() << '\n';
    return giantlab::kExitError;
  }
}
