#ifndef M2COH_REPORT_HPP
#define M2COH_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "m2coh/algebra.hpp"

namespace m2coh {

/// Shared configuration of all CLI commands.
struct RunConfig {
  std::uint64_t prime = 5;
  std::string lambda_spec = "zero"; // "zero" | comma list | "random:SEED"
  std::optional<std::pair<std::uint64_t, std::uint64_t>> field_ext; // modulus t^2 + c1 t + c0 as (c0, c1)
  std::string format = "text"; // text | json | latex
  std::uint64_t max_prime = 13;
  std::uint64_t seed = 1;
  bool show_timing = false;
  bool tamper = false; // self-test hook for the verify command
};

/// A command outcome: the structured document plus the overall verdict.
/// Serialization of the document is deterministic (insertion-ordered keys,
/// canonical residues); timing never enters the document.
struct CommandResult {
  nlohmann::ordered_json doc;
  bool ok = true;
  double elapsed_ms = 0.0;
};

/// Field/lambda construction from a config; throws InputError subclasses.
Field field_from_config(const RunConfig& cfg);
Vec lambda_from_config(const Field& f, const RunConfig& cfg);

/// Axiom suites, differential cross-checks and complex properties.
CommandResult cmd_verify(const RunConfig& cfg);
/// H^1, H^1_*, H^2, H^2_* with representatives, the grade-kernel table and
/// the named-basis verdicts; ok only if every dimension matches the
/// classification and every verdict passes.
CommandResult cmd_cohomology(const RunConfig& cfg);
/// The full catalog of one-dimensional restricted central extensions with
/// bracket/[p] descriptions and per-entry verification.
CommandResult cmd_extensions(const RunConfig& cfg);
/// Graded restricted isomorphism test between two lambda vectors.
CommandResult cmd_iso(const RunConfig& cfg, const std::string& lambda_a,
                      const std::string& lambda_b);

/// Renders per cfg.format; "json" is doc.dump(2), "text" and "latex" are
/// generated from the document.
std::string render_report(const CommandResult& res, const RunConfig& cfg);

} // namespace m2coh

#endif
