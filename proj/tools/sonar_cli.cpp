// Command-line front end: construct, fold, verify, search, compare, relations.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sonar/sonar.hpp"

namespace {

using sonar::Errc;
using sonar::Error;
using sonar::FieldElem;
using sonar::io::Json;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return sonar::io::read_text(path);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    sonar::io::write_text(out, text);
}

struct ConstructArgs {
  std::string name;
  std::optional<std::int64_t> p, q, theta, alpha, beta;
  std::int64_t a = 1, b = 0, c = 0, s = 0;
  std::string out;
};

FieldElem elem_or(const std::optional<std::int64_t>& v, FieldElem fallback) {
  return v ? FieldElem{static_cast<std::uint64_t>(*v)} : fallback;
}

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw Error(Errc::InvalidArgument, std::string("missing ") + flag);
  return *v;
}

Json construct(const ConstructArgs& args) {
  using namespace sonar;
  const auto& n = args.name;
  auto prime_root = [&](std::int64_t p, const std::optional<std::int64_t>& v) {
    return v ? *v : static_cast<std::int64_t>(Field(p, 1).primitive().value);
  };

  if (n == "quadratic") return io::to_json(quadratic(need(args.p, "--p"), args.a, args.b, args.c));
  if (n == "welch-exp") {
    const auto p = need(args.p, "--p");
    return io::to_json(welch_exp(p, prime_root(p, args.alpha), args.s));
  }
  if (n == "welch-exp-short") {
    const auto p = need(args.p, "--p");
    return io::to_json(welch_exp_short(p, prime_root(p, args.alpha)));
  }
  if (n == "welch-log") {
    const auto p = need(args.p, "--p");
    return io::to_json(welch_log(p, prime_root(p, args.alpha)));
  }
  if (n == "ruzsa" || n == "ruzsa-fold-mod-p" || n == "ruzsa-fold-mod-p-minus-1") {
    const auto p = need(args.p, "--p");
    const auto theta = prime_root(p, args.theta);
    if (n == "ruzsa") return io::to_json(ruzsa(p, theta));
    if (n == "ruzsa-fold-mod-p") return io::to_json(sonar_from_ruzsa_mod_p(p, theta));
    return io::to_json(sonar_from_ruzsa_mod_p_minus_1(p, theta));
  }

  const auto q = need(args.q, "--q");
  const auto pp = nt::prime_power(q);
  if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (n == "golomb") {
    const Field f(pp->p, pp->r);
    return io::to_json(golomb(f, elem_or(args.alpha, f.primitive()), elem_or(args.beta, f.primitive())));
  }
  const Field big(pp->p, 2 * pp->r);
  if (n == "shift") {
    const Field small(pp->p, pp->r);
    return io::to_json(
        shift(Embedding(small, big), elem_or(args.alpha, big.primitive()), elem_or(args.beta, small.primitive())));
  }
  const auto theta = elem_or(args.theta, big.primitive());
  const auto alpha = elem_or(args.alpha, canonical_bose_alpha(big));
  if (n == "bose") return io::to_json(bose(big, theta, alpha));
  if (n == "bose-fold") return io::to_json(sonar_from_bose(big, theta, alpha));
  throw Error(Errc::InvalidArgument, "unknown construction " + n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sidon-set and sonar-sequence constructions, verification and search"};
  app.require_subcommand(1);

  ConstructArgs cargs;
  auto* construct_cmd = app.add_subcommand("construct", "Build a sequence (or Sidon set) and print it as JSON");
  construct_cmd
      ->add_option("name", cargs.name,
                   "quadratic | shift | welch-exp | welch-exp-short | welch-log | golomb | bose-fold | "
                   "ruzsa-fold-mod-p | ruzsa-fold-mod-p-minus-1 | bose | ruzsa")
      ->required();
  construct_cmd->add_option("--p", cargs.p, "prime");
  construct_cmd->add_option("--q", cargs.q, "prime power");
  construct_cmd->add_option("--a", cargs.a, "quadratic coefficient a");
  construct_cmd->add_option("--b", cargs.b, "quadratic coefficient b");
  construct_cmd->add_option("--c", cargs.c, "quadratic coefficient c");
  construct_cmd->add_option("--s", cargs.s, "Welch exponent shift");
  construct_cmd->add_option("--theta", cargs.theta, "primitive element (field encoding)");
  construct_cmd->add_option("--alpha", cargs.alpha, "element alpha (field encoding)");
  construct_cmd->add_option("--beta", cargs.beta, "element beta (field encoding)");
  construct_cmd->add_option("--out", cargs.out, "output file (default stdout)");

  std::string fold_in, fold_out;
  std::int64_t fold_m = 0, fold_b = 0;
  auto* fold_cmd = app.add_subcommand("fold", "Fold a Sidon set (JSON) into a modular sonar sequence");
  fold_cmd->add_option("input", fold_in, "Sidon set JSON file, '-' for stdin")->default_val("-");
  fold_cmd->add_option("--m", fold_m, "sequence modulus")->required();
  fold_cmd->add_option("--b", fold_b, "divisor")->required();
  fold_cmd->add_option("--out", fold_out, "output file (default stdout)");

  std::string verify_in;
  bool verify_plain = false, verify_json = false;
  std::optional<std::int64_t> verify_modulus;
  auto* verify_cmd = app.add_subcommand("verify", "Check the distinct-differences property; exit 0 pass, 1 fail");
  verify_cmd->add_option("input", verify_in, "sonar sequence JSON file, '-' for stdin")->default_val("-");
  verify_cmd->add_flag("--plain", verify_plain, "compare differences over the integers");
  verify_cmd->add_option("--modulus", verify_modulus, "override the modulus used for the check");
  verify_cmd->add_flag("--json", verify_json, "print the report as JSON");

  std::int64_t search_m = 0;
  std::string search_mode = "modular", search_out;
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;
  unsigned search_threads = 1;
  bool no_prune = false;
  auto* search_cmd = app.add_subcommand("search", "Search for the longest m x n sonar sequence");
  search_cmd->add_option("--m", search_m, "modulus / height")->required();
  search_cmd->add_option("--mode", search_mode, "modular | plain")->check(CLI::IsMember({"modular", "plain"}));
  search_cmd->add_option("--node-budget", node_budget, "maximum search nodes");
  search_cmd->add_option("--time-budget", time_budget, "maximum wall time in seconds");
  search_cmd->add_option("--threads", search_threads, "worker threads")->default_val(1);
  search_cmd->add_flag("--no-prune", no_prune, "disable the f(1) = 0 symmetry prune");
  search_cmd->add_option("--out", search_out, "output file (default stdout)");

  std::int64_t p_max = 13, q_max = 16;
  std::string format = "csv", compare_out, config_path;
  auto* compare_cmd = app.add_subcommand("compare", "Tabulate every construction over a parameter range");
  compare_cmd->add_option("--p-max", p_max, "largest prime")->default_val(13);
  compare_cmd->add_option("--q-max", q_max, "largest prime power")->default_val(16);
  compare_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  compare_cmd->add_option("--out", compare_out, "output file (default stdout)");
  compare_cmd->add_option("--config", config_path, "JSON config with coefficient and element overrides");

  std::vector<std::int64_t> relation_values;
  std::int64_t relation_search_max = 7;
  auto* relations_cmd = app.add_subcommand("relations", "Check G(mod p) = p+1 and G(mod(q-1)) = q claims");
  relations_cmd->add_option("values", relation_values, "primes / prime powers")->required();
  relations_cmd->add_option("--search-max-m", relation_search_max, "run exhaustive search up to this m");
  relations_cmd->add_option("--node-budget", node_budget, "maximum search nodes per search");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct_cmd) {
      emit(construct(cargs).dump(2) + "\n", cargs.out);
      return 0;
    }
    if (*fold_cmd) {
      const auto set = sonar::io::sidon_set_from_json(sonar::io::parse(read_input(fold_in)));
      emit(sonar::io::to_json(sonar::fold_sidon(set, fold_m, fold_b)).dump(2) + "\n", fold_out);
      return 0;
    }
    if (*verify_cmd) {
      const auto seq = sonar::io::sonar_seq_from_json(sonar::io::parse(read_input(verify_in)));
      const auto report = verify_plain          ? sonar::check_plain(seq)
                          : verify_modulus      ? sonar::check_modular(seq, *verify_modulus)
                          : seq.modular()       ? sonar::check_modular(seq, seq.m())
                                                : sonar::check_plain(seq);
      if (verify_json) {
        std::cout << sonar::io::to_json(report).dump(2) << "\n";
      } else if (report.pass) {
        std::cout << "pass\n";
      } else {
        const auto& w = *report.witness;
        std::cout << "fail: h=" << w.h << " i=" << w.i << " j=" << w.j << " (f(" << w.i + w.h << ")-f(" << w.i
                  << ") = f(" << w.j + w.h << ")-f(" << w.j << ")"
                  << (report.mode == sonar::Mode::Modular ? " mod " + std::to_string(report.m) : "") << ")\n";
      }
      return report.pass ? 0 : 1;
    }
    if (*search_cmd) {
      sonar::SearchOptions opts;
      opts.mode = search_mode == "plain" ? sonar::Mode::Plain : sonar::Mode::Modular;
      opts.prune_symmetry = !no_prune;
      opts.threads = search_threads;
      opts.budget.max_nodes = node_budget;
      if (time_budget)
        opts.budget.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(*time_budget * 1000.0));
      emit(sonar::io::to_json(sonar::search_max(search_m, opts)).dump(2) + "\n", search_out);
      return 0;
    }
    if (*compare_cmd) {
      sonar::ComparisonConfig cfg;
      if (!config_path.empty())
        cfg = sonar::comparison_config_from_json(sonar::io::parse(sonar::io::read_text(config_path)));
      const auto table = sonar::run_comparison(p_max, q_max, cfg);
      for (const auto& s : table.skipped) std::cerr << "skipped " << s << "\n";
      const auto fmt = format == "json" ? sonar::ExportFormat::Json : sonar::ExportFormat::Csv;
      if (compare_out.empty() || compare_out == "-")
        std::cout << sonar::render(table.rows, fmt);
      else
        sonar::export_rows(table.rows, fmt, compare_out);
      return 0;
    }
    if (*relations_cmd) {
      sonar::SearchOptions opts;
      opts.budget.max_nodes = node_budget;
      Json out = Json::array();
      for (const auto& row : sonar::verify_relations(relation_values, opts, relation_search_max))
        out.push_back(Json{{"claim", row.claim},
                           {"observed", row.observed},
                           {"status", std::string(sonar::relation_status_name(row.status))}});
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const sonar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
