#ifndef M2COH_COHOMOLOGY_HPP
#define M2COH_COHOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "m2coh/restricted.hpp"

namespace m2coh {

/// One computed cohomology space: the kernel/coboundary data, the dimension,
/// and deterministic representative coordinate vectors (C^1 coordinates for
/// degree 1, pair coordinates for degree 2, pair+omega coordinates for the
/// restricted degree 2).
struct CohomologyResult {
  int degree = 0;
  bool restricted = false;
  std::size_t dimension = 0;
  std::vector<Vec> representatives;
  Subspace kernel;
  Subspace coboundaries;
  std::map<int, std::size_t> grade_table; // degree-2 ordinary only

  /// Class membership: v is a cocycle representing the same class as some
  /// combination of coboundaries and the chosen representatives.
  bool same_class(const Vec& v, const Vec& w) const;
};

CohomologyResult h1(const RestrictedLieAlgebra& A);
CohomologyResult h1_star(const RestrictedLieAlgebra& A);
CohomologyResult h2(const RestrictedLieAlgebra& A);
CohomologyResult h2_star(const RestrictedLieAlgebra& A);

/// Dimension of H^2_* predicted by the classification: 8 for (p=5, lambda=0),
/// 6 for (p=5, lambda!=0), p+3 resp. p+2 for p>5. Used by the CLI to turn
/// mismatches into nonzero exit codes.
std::size_t h2_star_expected_dim(std::size_t p, bool lambda_is_zero);

/// Expected per-grade kernel dimensions of d^2: 1,1,2,1,2,1,...,1,0,...
/// over grades 3..2p-1, with dim ker d^2_7 = 1 (and 0 from grade 8 on)
/// when p = 5.
std::map<int, std::size_t> expected_grade_kernel_dims(std::size_t p);

/// The named representative sets whose classes the classification lists.
enum class PaperBasisClaim {
  h1_basis,            // {e^1, e^2}
  h2_p5,               // {e^{1,4}, e^{1,5}+e^{2,4}, e^{2,5}-e^{3,4}}
  h2_pgt5,             // {e^{1,4}, e^{1,6}+e^{3,4}, e^{1,p}+e^{2,p-1}}
  h2star_lambda0_p5,   // {(0,ebar^k)} u {(e^{1,4},~), (phi_6,~), (xi,~)}
  h2star_lambda0_pgt5, // {(0,ebar^k)} u {(e^{1,4},~), (eta,~), (phi_{p+1},~)}
  h2star_nonzero_p5,   // {(0,ebar^k)} u {(e^{1,4},~)}
  h2star_nonzero_pgt5, // {(0,ebar^k)} u {(e^{1,4},~), (eta,~)}
};

PaperBasisClaim paper_basis_claim_from_name(const std::string& name);
std::string paper_basis_claim_name(PaperBasisClaim claim);

/// The coordinate vectors of a named claim set (throws UnknownClaimError if
/// the claim does not apply to this algebra's p / lambda).
std::vector<Vec> paper_basis_vectors(const RestrictedLieAlgebra& A, PaperBasisClaim claim);

/// Checks a claimed representative set against a computed cohomology space:
/// every element is a cocycle, the set is independent modulo coboundaries,
/// and its span together with the coboundaries fills the whole kernel.
VerifyReport check_cohomology_basis(const CohomologyResult& H, const std::vector<Vec>& claimed);

/// check_cohomology_basis applied to a named claim.
VerifyReport verify_paper_basis(const RestrictedLieAlgebra& A, PaperBasisClaim claim);

} // namespace m2coh

#endif
