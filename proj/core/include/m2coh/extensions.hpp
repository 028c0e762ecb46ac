#ifndef M2COH_EXTENSIONS_HPP
#define M2COH_EXTENSIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "m2coh/cohomology.hpp"
#include "m2coh/restricted.hpp"

namespace m2coh {

/// One-dimensional restricted central extension E = g + F c attached to a
/// restricted 2-cocycle (phi, omega): the bracket gains phi(g ^ h) c, the
/// [p]-map gains omega(g) c, c is central and c^{[p]} = 0.
struct CentralExtension {
  std::string name;
  RestrictedLieAlgebra base;
  RestrictedCochain2 cocycle;
  RestrictedLieAlgebra total; // dim p+1, last basis vector is c
};

/// Builds the extension; throws NotACocycleError unless d^2*(c) = (0,0).
/// If phi is homogeneous (or zero) the total algebra keeps the base grading
/// with c placed in phi's grade; otherwise the total is ungraded.
CentralExtension extend(const RestrictedLieAlgebra& A, const RestrictedCochain2& c,
                        const std::string& name = "");

/// The catalog of extensions attached to the representative classes of the
/// classification: E_1..E_p over (0, ebar^k), then the phi != 0 entries for
/// the (p, lambda) case at hand. Every entry passes verify_restricted.
std::vector<CentralExtension> extension_catalog(const RestrictedLieAlgebra& A);

struct PfoldWitness {
  std::vector<int> factors; // 1-based basis labels of the total algebra
  Vec value;                // the nonzero p-fold bracket
};

/// Searches basis sequences for a nonzero p-fold bracket in the total algebra
/// (depth-first, zero chains pruned, deterministic order). Nonzero p-fold
/// brackets are what make the Jacobson s_i terms of the verifier non-vacuous.
std::optional<PfoldWitness> pfold_bracket_witness(const CentralExtension& E);

} // namespace m2coh

#endif
