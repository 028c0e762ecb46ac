#ifndef M2COH_ALGEBRA_HPP
#define M2COH_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "m2coh/field.hpp"
#include "m2coh/linalg.hpp"

namespace m2coh {

/// Restricted Lie algebra given by structure constants and a [p]-map table.
///
/// Basis elements carry the 1-based labels e_1..e_dim used throughout; the
/// coefficient vector of an element stores the e_k coefficient at slot k-1.
/// Structure constants are kept only for i < j; antisymmetry and the zero
/// diagonal are derived, so the table cannot be inconsistent.
class RestrictedLieAlgebra {
public:
  /// brackets: list of (i, j, value) with 1 <= i < j <= dim.
  /// p_map[k-1] gives e_k^{[p]}. degrees may be empty (ungraded algebra).
  RestrictedLieAlgebra(Field field, std::size_t dim,
                       std::vector<std::tuple<int, int, Vec>> brackets,
                       std::vector<Vec> p_map, std::vector<int> degrees);

  const Field& field() const { return f_; }
  std::size_t dim() const { return dim_; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool graded() const { return !degrees_.empty(); }

  Vec zero() const { return zero_vec(f_, dim_); }
  /// e_k as a coefficient vector (1 <= k <= dim).
  Vec basis_element(int k) const;

  /// [e_i, e_j] for any pair of labels (antisymmetric, zero diagonal).
  Vec bracket_basis(int i, int j) const;
  /// Nonzero structure-constant pairs (i < j), in lexicographic order.
  const std::vector<std::pair<int, int>>& nonzero_pairs() const { return nonzero_; }

  Vec bracket(const Vec& g, const Vec& h) const;
  /// Left-nested iterated bracket [[..[g1,g2],..],gj]; j >= 2.
  Vec nfold_bracket(std::span<const Vec> elems) const;

  /// e_k^{[p]} from the table.
  const Vec& p_power_basis(int k) const;
  /// g^{[p]} for an arbitrary element, via the [p]-map table, p-th power
  /// scaling and Jacobson additivity corrections folded over the support.
  Vec p_power(const Vec& g) const;
  /// sum_{i=1}^{p-1} s_i(g,h): i*s_i is the coefficient of t^{i-1} in
  /// ad(tg+h)^{p-1}(g), expanded degree by degree.
  Vec jacobson_correction(const Vec& g, const Vec& h) const;

  /// Matrix of h -> [g, h] in the basis.
  Matrix adjoint(const Vec& g) const;

private:
  Field f_;
  std::size_t dim_;
  std::vector<Vec> table_;                       // index over i<j pairs, lex order
  std::vector<std::pair<int, int>> nonzero_;
  std::vector<Vec> p_map_;
  std::vector<int> degrees_;

  std::size_t pair_slot(int i, int j) const; // requires i < j
};

/// The p-dimensional filiform algebra with [e_1,e_i] = e_{i+1} (1<i<p),
/// [e_2,e_i] = e_{i+2} (2<i<p-1), grading deg(e_k) = k, and restricted
/// structure e_k^{[p]} = lambda_k e_p. Throws CharTooSmallError for p < 5.
RestrictedLieAlgebra make_m2(const Field& f, const Vec& lambda);

/// Bracket of m2 elements by the closed bilinear formula; used as the
/// cross-check partner of the structure-constant bracket.
Vec m2_bracket_closed(const Field& f, const Vec& g, const Vec& h);

/// Deliberately corrupted variant ([e_2,e_3] = e_4 instead of e_5); exists so
/// the failure paths of verify_restricted can be exercised end to end.
RestrictedLieAlgebra make_m2_tampered(const Field& f, const Vec& lambda);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

struct VerifyOptions {
  std::size_t samples = 8;
  std::uint64_t seed = 1;
};

/// Checks the Lie and restricted-Lie axioms: Jacobi on all basis triples,
/// bracket/grading compatibility, (a g)^{[p]} = a^p g^{[p]}, ad(g^{[p]}) =
/// (ad g)^p, and Jacobson additivity (g+h)^{[p]} = g^{[p]} + h^{[p]} +
/// sum s_i(g,h). Failures are reported, not thrown.
VerifyReport verify_restricted(const RestrictedLieAlgebra& A, const VerifyOptions& opts = {});

/// Witness mu != 0 with lambda_k = mu^{(k-1)p} lambda'_k for all k, if any;
/// exhaustive over the nonzero field elements in their canonical order.
std::optional<Felt> iso_classify(const Field& f, const Vec& lambda, const Vec& lambda2);

/// Comma-separated residue list, e.g. "0,0,1,4,0"; length must equal p.
/// Extension-field entries use a:b for a + b*t. Throws ParseError.
Vec parse_lambda_list(const Field& f, std::size_t p, const std::string& text);

} // namespace m2coh

#endif
