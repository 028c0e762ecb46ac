#include "m2coh/cohomology.hpp"

#include <algorithm>

namespace m2coh {

namespace {

Subspace span_with(const Subspace& base, const std::vector<Vec>& extra) {
  std::vector<Vec> rows = base.basis;
  rows.insert(rows.end(), extra.begin(), extra.end());
  Matrix m = Matrix::from_rows(base.field, rows, base.ambient_dim);
  auto [r, piv, rank] = rref(m);
  Subspace out{base.field, base.ambient_dim, {}};
  for (std::size_t i = 0; i < rank; ++i) out.basis.push_back(r.row(i));
  return out;
}

CohomologyResult assemble(int degree, bool restricted, const Matrix& cocycle_matrix,
                          const Matrix& coboundary_matrix) {
  Subspace ker = kernel_basis(cocycle_matrix);
  Subspace cob = image_basis(coboundary_matrix);
  std::vector<Vec> reps = complement_representatives(ker, cob);
  std::size_t dim = ker.dim() - cob.dim();
  return CohomologyResult{degree,         restricted, dim, std::move(reps),
                          std::move(ker), std::move(cob), {}};
}

} // namespace

bool CohomologyResult::same_class(const Vec& v, const Vec& w) const {
  Subspace cob = coboundaries;
  Vec diff = sub_vec(cob.field, v, w);
  return in_span(diff, cob).has_value();
}

CohomologyResult h1(const RestrictedLieAlgebra& A) {
  // d^0 = 0, so H^1 is just the kernel of d^1
  Matrix d1 = d1_matrix(A);
  Matrix d0(A.field(), A.dim(), 0);
  return assemble(1, false, d1, d0);
}

CohomologyResult h1_star(const RestrictedLieAlgebra& A) {
  Matrix d1s = d1_star_matrix(A);
  Matrix d0(A.field(), A.dim(), 0);
  return assemble(1, true, d1s, d0);
}

CohomologyResult h2(const RestrictedLieAlgebra& A) {
  CohomologyResult res = assemble(2, false, d2_matrix(A), d1_matrix(A));
  const auto p = static_cast<int>(A.dim());
  for (int k = 3; k <= 2 * p - 1; ++k)
    res.grade_table[k] = kernel_basis(graded_matrix(A, 2, k)).dim();
  return res;
}

CohomologyResult h2_star(const RestrictedLieAlgebra& A) {
  return assemble(2, true, d2_star_matrix(A), d1_star_matrix(A));
}

std::size_t h2_star_expected_dim(std::size_t p, bool lambda_is_zero) {
  if (p == 5) return lambda_is_zero ? 8 : 6;
  return lambda_is_zero ? p + 3 : p + 2;
}

std::map<int, std::size_t> expected_grade_kernel_dims(std::size_t p) {
  std::map<int, std::size_t> t;
  for (int k = 3; k <= 2 * static_cast<int>(p) - 1; ++k) t[k] = 0;
  t[3] = 1;
  t[4] = 1;
  t[5] = 2;
  t[6] = 1;
  t[7] = (p == 5) ? 1 : 2;
  for (int k = 8; k <= static_cast<int>(p) + 1; ++k) t[k] = 1;
  return t;
}

PaperBasisClaim paper_basis_claim_from_name(const std::string& name) {
  if (name == "h1") return PaperBasisClaim::h1_basis;
  if (name == "h2-p5") return PaperBasisClaim::h2_p5;
  if (name == "h2-pgt5") return PaperBasisClaim::h2_pgt5;
  if (name == "h2star-lambda0-p5") return PaperBasisClaim::h2star_lambda0_p5;
  if (name == "h2star-lambda0-pgt5") return PaperBasisClaim::h2star_lambda0_pgt5;
  if (name == "h2star-nonzero-p5") return PaperBasisClaim::h2star_nonzero_p5;
  if (name == "h2star-nonzero-pgt5") return PaperBasisClaim::h2star_nonzero_pgt5;
  throw UnknownClaimError("unknown basis claim: " + name);
}

std::string paper_basis_claim_name(PaperBasisClaim claim) {
  switch (claim) {
  case PaperBasisClaim::h1_basis: return "h1";
  case PaperBasisClaim::h2_p5: return "h2-p5";
  case PaperBasisClaim::h2_pgt5: return "h2-pgt5";
  case PaperBasisClaim::h2star_lambda0_p5: return "h2star-lambda0-p5";
  case PaperBasisClaim::h2star_lambda0_pgt5: return "h2star-lambda0-pgt5";
  case PaperBasisClaim::h2star_nonzero_p5: return "h2star-nonzero-p5";
  case PaperBasisClaim::h2star_nonzero_pgt5: return "h2star-nonzero-pgt5";
  }
  throw UnknownClaimError("unhandled claim");
}

namespace {

bool lambda_is_zero(const RestrictedLieAlgebra& A) {
  const Field& f = A.field();
  for (int k = 1; k <= static_cast<int>(A.dim()); ++k)
    if (!is_zero_vec(f, A.p_power_basis(k))) return false;
  return true;
}

Vec pad_with_omega(const Field& f, const Cochain2& phi, std::size_t p) {
  // coordinates of (phi, ~phi): tilde maps vanish on the basis
  Vec out = phi.sigma;
  Vec zeros = zero_vec(f, p);
  out.insert(out.end(), zeros.begin(), zeros.end());
  return out;
}

} // namespace

std::vector<Vec> paper_basis_vectors(const RestrictedLieAlgebra& A, PaperBasisClaim claim) {
  const Field& f = A.field();
  const auto p = A.dim();
  const bool lz = lambda_is_zero(A);
  auto require = [&](bool cond, const std::string& why) {
    if (!cond)
      throw UnknownClaimError("claim " + paper_basis_claim_name(claim) +
                              " does not apply: " + why);
  };

  std::vector<Vec> out;
  switch (claim) {
  case PaperBasisClaim::h1_basis:
    out.push_back(Cochain1::basis(f, p, 1).mu);
    out.push_back(Cochain1::basis(f, p, 2).mu);
    return out;
  case PaperBasisClaim::h2_p5:
    require(p == 5, "needs p = 5");
    out.push_back(Cochain2::basis(f, p, 1, 4).sigma);
    out.push_back(phi_k(f, p, 6).sigma); // e^{1,5} + e^{2,4}
    out.push_back(xi_cocycle(f).sigma);  // e^{2,5} - e^{3,4}
    return out;
  case PaperBasisClaim::h2_pgt5:
    require(p > 5, "needs p > 5");
    out.push_back(Cochain2::basis(f, p, 1, 4).sigma);
    out.push_back(eta_cocycle(f, p).sigma);                // e^{1,6} + e^{3,4}
    out.push_back(phi_k(f, p, static_cast<int>(p) + 1).sigma); // e^{1,p} + e^{2,p-1}
    return out;
  case PaperBasisClaim::h2star_lambda0_p5:
    require(p == 5 && lz, "needs p = 5 and lambda = 0");
    for (int k = 1; k <= 5; ++k) out.push_back(restricted_coords(
        RestrictedCochain2(Cochain2::zero(f, p), bar_e(f, p, k))));
    out.push_back(pad_with_omega(f, Cochain2::basis(f, p, 1, 4), p));
    out.push_back(pad_with_omega(f, phi_k(f, p, 6), p));
    out.push_back(pad_with_omega(f, xi_cocycle(f), p));
    return out;
  case PaperBasisClaim::h2star_lambda0_pgt5:
    require(p > 5 && lz, "needs p > 5 and lambda = 0");
    for (int k = 1; k <= static_cast<int>(p); ++k)
      out.push_back(restricted_coords(RestrictedCochain2(Cochain2::zero(f, p), bar_e(f, p, k))));
    out.push_back(pad_with_omega(f, Cochain2::basis(f, p, 1, 4), p));
    out.push_back(pad_with_omega(f, eta_cocycle(f, p), p));
    out.push_back(pad_with_omega(f, phi_k(f, p, static_cast<int>(p) + 1), p));
    return out;
  case PaperBasisClaim::h2star_nonzero_p5:
    require(p == 5 && !lz, "needs p = 5 and lambda != 0");
    for (int k = 1; k <= 5; ++k)
      out.push_back(restricted_coords(RestrictedCochain2(Cochain2::zero(f, p), bar_e(f, p, k))));
    out.push_back(pad_with_omega(f, Cochain2::basis(f, p, 1, 4), p));
    return out;
  case PaperBasisClaim::h2star_nonzero_pgt5:
    require(p > 5 && !lz, "needs p > 5 and lambda != 0");
    for (int k = 1; k <= static_cast<int>(p); ++k)
      out.push_back(restricted_coords(RestrictedCochain2(Cochain2::zero(f, p), bar_e(f, p, k))));
    out.push_back(pad_with_omega(f, Cochain2::basis(f, p, 1, 4), p));
    out.push_back(pad_with_omega(f, eta_cocycle(f, p), p));
    return out;
  }
  throw UnknownClaimError("unhandled claim");
}

VerifyReport check_cohomology_basis(const CohomologyResult& H, const std::vector<Vec>& claimed) {
  VerifyReport rep;
  const Field& f = H.kernel.field;

  bool all_cocycles = true;
  std::string detail;
  for (std::size_t n = 0; n < claimed.size(); ++n) {
    if (!in_span(claimed[n], H.kernel)) {
      all_cocycles = false;
      detail = "claimed element " + std::to_string(n) + " is not a cocycle";
      break;
    }
  }
  rep.checks.push_back({"claimed_elements_are_cocycles", all_cocycles, detail});

  // independence mod coboundaries: adding the claimed vectors one by one must
  // grow the span each time
  bool independent = true;
  detail.clear();
  Subspace grown = H.coboundaries;
  for (std::size_t n = 0; n < claimed.size(); ++n) {
    if (in_span(claimed[n], grown)) {
      independent = false;
      detail = "claimed element " + std::to_string(n) + " is dependent modulo coboundaries";
      break;
    }
    grown = span_with(grown, {claimed[n]});
  }
  rep.checks.push_back({"independent_modulo_coboundaries", independent, detail});

  bool spans = grown.dim() == H.kernel.dim() && all_cocycles;
  rep.checks.push_back({"span_plus_coboundaries_is_kernel", spans,
                        spans ? "" : "claimed classes fail to fill the kernel"});
  return rep;
}

VerifyReport verify_paper_basis(const RestrictedLieAlgebra& A, PaperBasisClaim claim) {
  CohomologyResult H = [&] {
    switch (claim) {
    case PaperBasisClaim::h1_basis: return h1(A);
    case PaperBasisClaim::h2_p5:
    case PaperBasisClaim::h2_pgt5: return h2(A);
    default: return h2_star(A);
    }
  }();
  return check_cohomology_basis(H, paper_basis_vectors(A, claim));
}

} // namespace m2coh
