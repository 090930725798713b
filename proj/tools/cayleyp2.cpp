// cayleyp2 - command-line front end for the prime-square Cayley graph toolkit.
//
//   cayleyp2 build       --primes 2,3,5
//   cayleyp2 params      --primes 2,3,5 [--oracle] [--budget-sources N] [--seed S] [--out FILE]
//   cayleyp2 verify      --primes 2,3,5
//   cayleyp2 export      --primes 2,3,5 --format edges|dot|walk|independent-set --out FILE
//   cayleyp2 hamiltonian --primes 2,3,5 [--check]
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cayley/config.hpp"
#include "cayley/graph.hpp"
#include "cayley/hamiltonian.hpp"
#include "cayley/kernels/kernels.hpp"
#include "cayley/parameters.hpp"
#include "cayley/report.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
  std::vector<std::int64_t> primes;
  std::string config_file;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> budget_sources;
  std::optional<unsigned> workers;
  std::optional<std::int64_t> exhaustive_cap;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--primes", args.primes, "alpha,beta,gamma")->required()->delimiter(',')->expected(3);
  cmd->add_option("--config", args.config_file, "key = value file with budgets and seed");
  cmd->add_option("--seed", args.seed, "oracle sampling seed");
  cmd->add_option("--budget-sources", args.budget_sources, "extra BFS sources for the distance sweep");
  cmd->add_option("--workers", args.workers, "threads for oracle sweeps");
  cmd->add_option("--exhaustive-cap", args.exhaustive_cap, "largest n checked exhaustively (default 2000)");
}

cayley::RunConfig resolve_config(const CommonArgs& args) {
  cayley::RunConfig cfg;
  if (!args.config_file.empty()) cfg = cayley::load_config(args.config_file, cfg);
  if (args.seed) cfg.budget.seed = *args.seed;
  if (args.budget_sources) cfg.budget.bfs_sources = *args.budget_sources;
  if (args.workers) cfg.budget.workers = *args.workers;
  if (args.exhaustive_cap) cfg.exhaustive_cap = *args.exhaustive_cap;
  return cfg;
}

cayley::PrimeTriple triple_of(const CommonArgs& args) {
  return cayley::make_prime_triple(args.primes.at(0), args.primes.at(1), args.primes.at(2));
}

std::ofstream open_out(const std::string& path, const cayley::RunConfig& cfg) {
  const auto resolved = cayley::resolve_output(path, cfg);
  std::ofstream out(resolved);
  if (!out) throw cayley::Error(cayley::ErrorCode::SinkFailure, "cannot open " + resolved.string());
  return out;
}

int exit_code_for(cayley::ErrorCode code) {
  switch (code) {
    case cayley::ErrorCode::SinkFailure:
    case cayley::ErrorCode::LengthMismatch:
      return kExitMismatch;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates and oracles for the prime-square Cayley graph of Z_(abc)^2"};
  app.require_subcommand(1);

  CommonArgs build_args, params_args, verify_args, export_args, ham_args;

  auto* build = app.add_subcommand("build", "validate a triple and print n, |C| and the degree");
  add_common(build, build_args);

  auto* params = app.add_subcommand("params", "emit the certificate report as JSON");
  add_common(params, params_args);
  bool params_oracle = false, params_timings = false;
  std::string params_out;
  params->add_flag("--oracle", params_oracle, "run the BFS distance sweep");
  params->add_flag("--timings", params_timings, "append wall-clock timings (not byte-stable)");
  params->add_option("--out", params_out, "write JSON here instead of stdout");

  auto* verify = app.add_subcommand("verify", "run every certificate and oracle; exit 1 on a mismatch");
  add_common(verify, verify_args);

  auto* exporter = app.add_subcommand("export", "write the graph or a certificate to a file");
  add_common(exporter, export_args);
  std::string format, export_out;
  std::int64_t cap = cayley::kDefaultMaterializationCap;
  exporter->add_option("--format", format, "edges|dot|walk|independent-set")
      ->required()
      ->check(CLI::IsMember({"edges", "dot", "walk", "independent-set"}));
  exporter->add_option("--out", export_out, "output file")->required();
  exporter->add_option("--cap", cap, "largest n that may be materialized");

  auto* ham = app.add_subcommand("hamiltonian", "construct the snake walk");
  add_common(ham, ham_args);
  bool ham_check = false;
  std::string ham_out;
  ham->add_flag("--check", ham_check, "verify the walk against the adjacency test");
  ham->add_option("--out", ham_out, "also write the walk to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) {
      const auto t = triple_of(build_args);
      const cayley::CayleyGraph g(t);
      std::cout << "primes " << t.to_string() << "\n"
                << "n " << t.n() << "\n"
                << "cSize " << g.cset().size() << "\n"
                << "degree " << g.degree() << "\n";
      return 0;
    }

    if (*params) {
      const auto t = triple_of(params_args);
      cayley::ReportOptions opts;
      opts.config = resolve_config(params_args);
      opts.oracle = params_oracle;
      opts.timings = params_timings;
      const auto report = cayley::build_report(t, opts);
      if (params_out.empty()) {
        cayley::write_report(report, std::cout);
      } else {
        auto out = open_out(params_out, opts.config);
        cayley::write_report(report, out);
      }
      return 0;
    }

    if (*verify) {
      const auto t = triple_of(verify_args);
      cayley::ReportOptions opts;
      opts.config = resolve_config(verify_args);
      opts.oracle = true;
      const auto report = cayley::build_report(t, opts);
      const auto bad = cayley::failed_checks(report);
      std::cout << "primes " << t.to_string() << " n " << t.n() << " mode " << report.mode << " isa "
                << cayley::kernels::isa_name(cayley::kernels::active().isa) << "\n";
      for (const auto& name : bad) std::cout << "FAIL " << name << "\n";
      std::cout << (bad.empty() ? "all checks passed" : std::to_string(bad.size()) + " check(s) failed")
                << "\n";
      return bad.empty() ? 0 : kExitMismatch;
    }

    if (*exporter) {
      const auto t = triple_of(export_args);
      const auto cfg = resolve_config(export_args);
      auto out = open_out(export_out, cfg);
      if (format == "edges" || format == "dot") {
        const cayley::CayleyGraph g(t);
        cayley::export_graph(g, format == "edges" ? cayley::ExportFormat::EdgeList : cayley::ExportFormat::Dot,
                             out, cap);
      } else if (format == "walk") {
        cayley::write_walk(cayley::snake_walk(t), out);
      } else {
        for (auto v : cayley::independence_certificate(t).vertices) out << v << '\n';
        if (!out) throw cayley::Error(cayley::ErrorCode::SinkFailure, "write failed");
      }
      return 0;
    }

    if (*ham) {
      const auto t = triple_of(ham_args);
      const auto cfg = resolve_config(ham_args);
      const auto walk = cayley::snake_walk(t);
      const auto first = cayley::crt_components(walk.vertices.front(), t);
      const auto last = cayley::crt_components(walk.vertices.back(), t);
      std::cout << "kind " << (walk.kind == cayley::WalkKind::Cycle ? "cycle" : "path") << "\n"
                << "length " << walk.vertices.size() << "\n"
                << "start (" << first.a << "," << first.b << "," << first.c << ")\n"
                << "end (" << last.a << "," << last.b << "," << last.c << ")\n";
      if (walk.kind == cayley::WalkKind::Path) {
        std::cout << "note Hamiltonian path constructed; cycle existence not determined\n";
      }
      if (!ham_out.empty()) {
        auto out = open_out(ham_out, cfg);
        cayley::write_walk(walk, out);
      }
      if (ham_check) {
        const bool ok = cayley::verify_walk(walk, cayley::CayleyGraph(t), cfg.budget.workers);
        std::cout << "verified " << (ok ? "true" : "false") << "\n";
        return ok ? 0 : kExitMismatch;
      }
      return 0;
    }
  } catch (const cayley::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
