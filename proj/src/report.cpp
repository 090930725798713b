#include "cayley/report.hpp"

#include <chrono>
#include <ostream>

#include "cayley/hamiltonian.hpp"
#include "cayley/oracles.hpp"
#include "cayley/parameters.hpp"

namespace cayley {

namespace {

using ordered_json = nlohmann::ordered_json;

// Above this certificate size the independence check walks neighbors instead
// of scanning all pairs.
constexpr std::int64_t kPairScanLimit = 5'000;

class Stopwatch {
public:
  explicit Stopwatch(std::optional<std::vector<std::pair<std::string, double>>>& sink) : sink_(sink) {}

  template <class F>
  auto time(const char* label, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(label, start);
    } else {
      auto result = f();
      record(label, start);
      return result;
    }
  }

private:
  void record(const char* label, std::chrono::steady_clock::time_point start) {
    if (!sink_) return;
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    sink_->emplace_back(label, ms.count());
  }
  std::optional<std::vector<std::pair<std::string, double>>>& sink_;
};

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json block_ids(const std::vector<BlockId>& ids) {
  ordered_json arr = ordered_json::array();
  for (const auto& b : ids) arr.push_back({b.i, b.j, b.k});
  return arr;
}

}  // namespace

CertificateReport build_report(const PrimeTriple& t, const ReportOptions& opts) {
  const RunConfig& cfg = opts.config;
  CertificateReport r;
  if (opts.timings) r.timings_ms.emplace();
  Stopwatch sw(r.timings_ms);

  const CayleyGraph g = sw.time("build", [&] { return CayleyGraph(t); });
  const bool exhaustive = t.n() <= cfg.exhaustive_cap;
  const bool materializable = t.n() <= cfg.materialization_cap;

  r.primes = t.primes();
  r.n = t.n();
  r.c_size = g.cset().size();
  r.c_size_formula = c_size_formula(t);
  r.degree = static_cast<std::int64_t>(g.neighbors(0).size());
  r.mode = exhaustive ? "exhaustive" : "sampled";
  r.oracle_seed = cfg.budget.seed;

  sw.time("connectivity", [&] {
    const auto c = is_connected(g);
    r.connected = {c.connected(), c.bezout, c.bezout_holds, c.bfs_reached};
    r.eulerian = c.connected() && r.degree % 2 == 0;
  });

  sw.time("girth", [&] {
    const auto tri = girth_certificate(g);
    r.girth.value = kGirth;
    r.girth.triangle.assign(tri.begin(), tri.end());
    r.girth.verified = pairwise_adjacent(g, r.girth.triangle);
    if (const auto found = find_triangle(g)) r.girth.oracle_triangle.assign(found->begin(), found->end());

    const auto k5 = nonplanarity_certificate(g);
    r.nonplanar.k5.assign(k5.begin(), k5.end());
    r.nonplanar.verified = pairwise_adjacent(g, r.nonplanar.k5);
    r.nonplanar.value = r.nonplanar.verified;
  });

  sw.time("clique", [&] {
    r.clique.value = t.gamma();
    r.clique.certificate = clique_certificate(t);
    r.clique.verified = pairwise_adjacent(g, r.clique.certificate) &&
                        static_cast<std::int64_t>(r.clique.certificate.size()) == t.gamma();
    std::vector<std::int64_t> closed_nbhd = g.neighbors(0);
    closed_nbhd.insert(closed_nbhd.begin(), 0);
    if (static_cast<std::int64_t>(closed_nbhd.size()) <= cfg.budget.max_clique_vertices) {
      const auto best = exact_max_clique(
          closed_nbhd, [&](std::int64_t u, std::int64_t v) { return g.adjacent(u, v); }, cfg.budget);
      r.clique.oracle_max = static_cast<std::int64_t>(best.size());
    }
  });

  sw.time("chromatic", [&] {
    ColoringOptions co;
    co.exhaustive_cap = cfg.exhaustive_cap;
    co.sample_edges = cfg.budget.sample_edges;
    co.seed = cfg.budget.seed;
    const auto v = verify_coloring(g, co);
    r.chromatic = {v.chromatic, v.proper, v.edges_checked, v.monochromatic, v.sampled};
  });

  sw.time("independence", [&] {
    const auto cert = independence_certificate(t);
    r.independence.value = cert.size();
    r.independence.index_set = cert.index_set;
    r.independence.index_set_size = static_cast<std::int64_t>(cert.index_set.size());
    if (cert.size() <= kPairScanLimit) {
      const auto scan = count_internal_edges(g, cert.vertices);
      r.independence.internal_edges = scan.internal_edges;
      r.independence.pairs_checked = scan.pairs_checked;
    } else {
      const auto scan = count_internal_edges_by_neighbors(g, cert.vertices);
      r.independence.internal_edges = scan.internal_edges;
      r.independence.pairs_checked = scan.pairs_checked;
    }
    if (t.alpha() * t.beta() * t.gamma() <= cfg.budget.max_index_ids) {
      const auto lemmas = verify_index_lemmas(t, cfg.budget);
      r.index_graph_mis = CertificateReport::IndexMis{lemmas.max_independent, t.alpha() * t.beta(), lemmas.all()};
    }
  });

  sw.time("diameter", [&] {
    const auto d = diameter(g);
    r.diameter.value = d.value;
    r.diameter.witness_pair = {d.witness_u, d.witness_v};
    r.diameter.witness_distance = d.witness_distance;
    r.diameter.bfs_eccentricity = d.bfs_eccentricity;
    if (opts.oracle) {
      OracleBudget b = cfg.budget;
      if (exhaustive) b.bfs_sources = t.n();  // every source
      const auto s = distance_sweep(g, b);
      r.diameter.sweep = CertificateReport::Sweep{static_cast<std::int64_t>(s.sources.size()),
                                                  s.pairs_compared, s.max_distance, s.mismatches,
                                                  s.eccentricity_uniform};
    }
  });

  sw.time("hamiltonian", [&] {
    const auto w = snake_walk(t);
    r.hamiltonian.kind = w.kind == WalkKind::Cycle ? "cycle" : "path";
    r.hamiltonian.verified = verify_walk(w, g, cfg.budget.workers);
    r.hamiltonian.endpoints = {w.vertices.front(), w.vertices.back()};
    r.hamiltonian.cycle_existence = w.kind == WalkKind::Cycle ? "constructed" : "not determined";
  });

  if (materializable) {
    sw.time("structure", [&] {
      r.prop23 = verify_prop23(g, cfg.materialization_cap).items;
      r.block_partition = verify_partition(t, cfg.materialization_cap) &&
                          verify_blocks_independent(g, cfg.materialization_cap);
      r.block_adjacency_consistent = verify_block_adjacency(g, cfg.materialization_cap).consistent;
    });
  }
  return r;
}

nlohmann::ordered_json to_json(const CertificateReport& r) {
  ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["primes"] = r.primes;
  j["n"] = r.n;
  j["mode"] = r.mode;
  j["cSize"] = r.c_size;
  j["cSizeFormula"] = r.c_size_formula;
  j["degree"] = r.degree;
  j["connected"] = {{"value", r.connected.value},
                    {"bezout", {r.connected.bezout.u, r.connected.bezout.v, r.connected.bezout.w}},
                    {"bezoutHolds", r.connected.bezout_holds},
                    {"bfsReached", r.connected.bfs_reached}};
  j["eulerian"] = r.eulerian;
  j["girth"] = {{"value", r.girth.value},
                {"triangle", r.girth.triangle},
                {"verified", r.girth.verified},
                {"oracleTriangle", r.girth.oracle_triangle}};
  j["nonplanar"] = {{"value", r.nonplanar.value}, {"k5", r.nonplanar.k5}, {"verified", r.nonplanar.verified}};
  j["clique"] = {{"value", r.clique.value},
                 {"certificate", r.clique.certificate},
                 {"verified", r.clique.verified},
                 {"oracleMaxClique", opt(r.clique.oracle_max)}};
  j["chromatic"] = {{"value", r.chromatic.value},
                    {"coloringProper", r.chromatic.coloring_proper},
                    {"edgesChecked", r.chromatic.edges_checked},
                    {"monochromaticEdges", r.chromatic.monochromatic},
                    {"sampled", r.chromatic.sampled}};
  j["independence"] = {{"value", r.independence.value},
                       {"indexSetSize", r.independence.index_set_size},
                       {"indexSet", block_ids(r.independence.index_set)},
                       {"internalEdges", r.independence.internal_edges},
                       {"pairsChecked", r.independence.pairs_checked}};
  if (r.index_graph_mis) {
    j["indexGraphMIS"] = {{"value", r.index_graph_mis->value},
                          {"expected", r.index_graph_mis->expected},
                          {"lemmasHold", r.index_graph_mis->lemmas_hold}};
  } else {
    j["indexGraphMIS"] = nullptr;
  }
  ordered_json sweep = nullptr;
  if (r.diameter.sweep) {
    const auto& s = *r.diameter.sweep;
    sweep = {{"sources", s.sources},
             {"pairsCompared", s.pairs_compared},
             {"maxDistance", s.max_distance},
             {"mismatches", s.mismatches},
             {"eccentricityUniform", s.eccentricity_uniform}};
  }
  j["diameter"] = {{"value", r.diameter.value},
                   {"witnessPair", r.diameter.witness_pair},
                   {"witnessDistance", r.diameter.witness_distance},
                   {"bfsEccentricity", r.diameter.bfs_eccentricity},
                   {"sweep", sweep}};
  j["hamiltonian"] = {{"kind", r.hamiltonian.kind},
                      {"verified", r.hamiltonian.verified},
                      {"endpoints", r.hamiltonian.endpoints},
                      {"cycleExistence", r.hamiltonian.cycle_existence}};
  j["prop23"] = opt(r.prop23);
  j["blockPartition"] = opt(r.block_partition);
  j["blockAdjacencyConsistent"] = opt(r.block_adjacency_consistent);
  j["oracleSeed"] = r.oracle_seed;
  if (r.timings_ms) {
    ordered_json tm = ordered_json::object();
    for (const auto& [label, ms] : *r.timings_ms) tm[label] = ms;
    j["timings"] = tm;
  }
  return j;
}

namespace {

template <class T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

CertificateReport report_from_json(const nlohmann::json& j) {
  if (j.at("schemaVersion").get<int>() != kReportSchemaVersion) {
    throw Error(ErrorCode::BadConfig, "unsupported report schema version");
  }
  CertificateReport r;
  r.primes = j.at("primes").get<std::array<std::int64_t, 3>>();
  r.n = j.at("n").get<std::int64_t>();
  r.mode = j.at("mode").get<std::string>();
  r.c_size = j.at("cSize").get<std::int64_t>();
  r.c_size_formula = j.at("cSizeFormula").get<std::int64_t>();
  r.degree = j.at("degree").get<std::int64_t>();

  const auto& c = j.at("connected");
  const auto bz = c.at("bezout").get<std::array<std::int64_t, 3>>();
  r.connected = {c.at("value").get<bool>(), {bz[0], bz[1], bz[2]}, c.at("bezoutHolds").get<bool>(),
                 c.at("bfsReached").get<std::int64_t>()};
  r.eulerian = j.at("eulerian").get<bool>();

  const auto& gi = j.at("girth");
  r.girth = {gi.at("value").get<std::int64_t>(), gi.at("triangle").get<std::vector<Exponent>>(),
             gi.at("verified").get<bool>(), gi.at("oracleTriangle").get<std::vector<Exponent>>()};
  const auto& np = j.at("nonplanar");
  r.nonplanar = {np.at("value").get<bool>(), np.at("k5").get<std::vector<Exponent>>(),
                 np.at("verified").get<bool>()};
  const auto& cl = j.at("clique");
  r.clique = {cl.at("value").get<std::int64_t>(), cl.at("certificate").get<std::vector<Exponent>>(),
              cl.at("verified").get<bool>(), get_opt<std::int64_t>(cl, "oracleMaxClique")};
  const auto& ch = j.at("chromatic");
  r.chromatic = {ch.at("value").get<std::int64_t>(), ch.at("coloringProper").get<bool>(),
                 ch.at("edgesChecked").get<std::int64_t>(), ch.at("monochromaticEdges").get<std::int64_t>(),
                 ch.at("sampled").get<bool>()};
  const auto& in = j.at("independence");
  r.independence.value = in.at("value").get<std::int64_t>();
  r.independence.index_set_size = in.at("indexSetSize").get<std::int64_t>();
  for (const auto& b : in.at("indexSet")) {
    r.independence.index_set.push_back({b.at(0).get<std::int64_t>(), b.at(1).get<std::int64_t>(),
                                        b.at(2).get<std::int64_t>()});
  }
  r.independence.internal_edges = in.at("internalEdges").get<std::int64_t>();
  r.independence.pairs_checked = in.at("pairsChecked").get<std::int64_t>();
  if (const auto& m = j.at("indexGraphMIS"); !m.is_null()) {
    r.index_graph_mis = CertificateReport::IndexMis{m.at("value").get<std::int64_t>(),
                                                    m.at("expected").get<std::int64_t>(),
                                                    m.at("lemmasHold").get<bool>()};
  }
  const auto& d = j.at("diameter");
  r.diameter.value = d.at("value").get<std::int64_t>();
  r.diameter.witness_pair = d.at("witnessPair").get<std::array<Exponent, 2>>();
  r.diameter.witness_distance = d.at("witnessDistance").get<std::int64_t>();
  r.diameter.bfs_eccentricity = d.at("bfsEccentricity").get<std::int64_t>();
  if (const auto& s = d.at("sweep"); !s.is_null()) {
    r.diameter.sweep = CertificateReport::Sweep{s.at("sources").get<std::int64_t>(),
                                                s.at("pairsCompared").get<std::int64_t>(),
                                                s.at("maxDistance").get<std::int64_t>(),
                                                s.at("mismatches").get<std::int64_t>(),
                                                s.at("eccentricityUniform").get<bool>()};
  }
  const auto& h = j.at("hamiltonian");
  r.hamiltonian = {h.at("kind").get<std::string>(), h.at("verified").get<bool>(),
                   h.at("endpoints").get<std::array<Exponent, 2>>(), h.at("cycleExistence").get<std::string>()};
  r.prop23 = get_opt<std::array<bool, 8>>(j, "prop23");
  r.block_partition = get_opt<bool>(j, "blockPartition");
  r.block_adjacency_consistent = get_opt<bool>(j, "blockAdjacencyConsistent");
  r.oracle_seed = j.at("oracleSeed").get<std::uint64_t>();
  if (j.contains("timings")) {
    r.timings_ms.emplace();
    for (const auto& [k, v] : j.at("timings").items()) r.timings_ms->emplace_back(k, v.get<double>());
  }
  return r;
}

void write_report(const CertificateReport& r, std::ostream& out) {
  out << to_json(r).dump(2) << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::SinkFailure, "could not write report");
}

std::vector<std::string> failed_checks(const CertificateReport& r) {
  std::vector<std::string> bad;
  auto need = [&](bool ok, const std::string& name) {
    if (!ok) bad.push_back(name);
  };
  need(r.c_size == r.c_size_formula, "cSize");
  need(r.degree == r.c_size, "degree");
  need(r.connected.value && r.connected.bezout_holds && r.connected.bfs_reached == r.n, "connected");
  need(r.eulerian, "eulerian");
  need(r.girth.verified && !r.girth.oracle_triangle.empty(), "girth");
  need(r.nonplanar.verified, "nonplanar");
  need(r.clique.verified && (!r.clique.oracle_max || *r.clique.oracle_max == r.clique.value), "clique");
  need(r.chromatic.coloring_proper && r.chromatic.value == r.primes[2], "chromatic");
  need(r.independence.internal_edges == 0 &&
           r.independence.value == r.primes[0] * r.primes[0] * r.primes[1] * r.primes[1] * r.primes[2],
       "independence");
  if (r.index_graph_mis) {
    need(r.index_graph_mis->lemmas_hold && r.index_graph_mis->value == r.index_graph_mis->expected,
         "indexGraphMIS");
  }
  need(r.diameter.witness_distance == r.diameter.value && r.diameter.bfs_eccentricity == r.diameter.value,
       "diameter");
  if (r.diameter.sweep) {
    need(r.diameter.sweep->mismatches == 0 && r.diameter.sweep->max_distance == r.diameter.value &&
             r.diameter.sweep->eccentricity_uniform,
         "distanceSweep");
  }
  need(r.hamiltonian.verified, "hamiltonian");
  if (r.prop23) {
    for (std::size_t i = 0; i < 8; ++i) need((*r.prop23)[i], "prop23[" + std::to_string(i + 1) + "]");
  }
  if (r.block_partition) need(*r.block_partition, "blockPartition");
  if (r.block_adjacency_consistent) need(*r.block_adjacency_consistent, "blockAdjacencyConsistent");
  return bad;
}

}  // namespace cayley
