// Command line front end: reproduces the cohomology dimensions, the grade
// kernel table, the isomorphism classification and the central-extension
// catalogs of the m_2^lambda(p) family as text, JSON or LaTeX.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "m2coh/report.hpp"

namespace {

void add_common_options(CLI::App* cmd, m2coh::RunConfig& cfg) {
  cmd->add_option("-p,--prime", cfg.prime, "prime characteristic p >= 5")->required();
  cmd->add_option("-l,--lambda", cfg.lambda_spec,
                  "lambda vector: 'zero', a comma list like 0,0,1,4,0, or random:SEED");
  cmd->add_option("--field-ext", cfg.field_ext,
                  "work over GF(p^2) with modulus t^2 + c1*t + c0, given as 'c0,c1'")
      ->delimiter(',');
  cmd->add_option("-f,--format", cfg.format, "output format: text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  cmd->add_option("--max-prime", cfg.max_prime,
                  "largest accepted prime (the *-fold costs 2^(p-2) per addition)");
  cmd->add_option("--seed", cfg.seed, "seed for the randomized axiom checks");
  cmd->add_flag("--timing", cfg.show_timing, "append wall time to text output");
}

int run(const m2coh::RunConfig& cfg, const m2coh::CommandResult& res) {
  std::cout << m2coh::render_report(res, cfg);
  return res.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomology and restricted central extensions of the filiform family m2^lambda(p)"};
  app.require_subcommand(1);

  m2coh::RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "check the Lie / restricted-Lie axioms and the "
                                              "differential cross-checks");
  add_common_options(verify, cfg);
  verify->add_flag("--tamper", cfg.tamper,
                   "corrupt one structure constant first (self-test of the failure paths)");

  auto* coh = app.add_subcommand("cohomology",
                                 "H^1, H^1_*, H^2, H^2_* with representatives and grade table");
  add_common_options(coh, cfg);

  auto* ext = app.add_subcommand("extensions", "catalog of one-dimensional restricted central "
                                               "extensions with bracket/[p] formulas");
  add_common_options(ext, cfg);

  auto* iso = app.add_subcommand("iso", "decide graded restricted isomorphism of two lambdas");
  add_common_options(iso, cfg);
  std::string lambda_a, lambda_b;
  iso->add_option("lambda_a", lambda_a, "first lambda vector (comma list)")->required();
  iso->add_option("lambda_b", lambda_b, "second lambda vector (comma list)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (verify->parsed()) return run(cfg, m2coh::cmd_verify(cfg));
    if (coh->parsed()) return run(cfg, m2coh::cmd_cohomology(cfg));
    if (ext->parsed()) return run(cfg, m2coh::cmd_extensions(cfg));
    if (iso->parsed()) return run(cfg, m2coh::cmd_iso(cfg, lambda_a, lambda_b));
  } catch (const m2coh::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const m2coh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
