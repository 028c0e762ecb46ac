#ifndef M2COH_RESTRICTED_HPP
#define M2COH_RESTRICTED_HPP

#include <span>

#include "m2coh/algebra.hpp"
#include "m2coh/cochain.hpp"

namespace m2coh {

/// A map omega: g -> F with the *-property with respect to a reference
/// 2-cochain, determined by its values on the basis. Evaluation anywhere else
/// goes through eval_omega.
struct OmegaMap {
  Cochain2 reference;
  Vec basis_values; // omega(e_k) at slot k-1

  static OmegaMap tilde(const Field& f, const Cochain2& phi) {
    return {phi, zero_vec(f, phi.p)};
  }
};

/// ebar^k: sum alpha_i e_i -> alpha_k^p, the Frobenius functional; has the
/// *-property with respect to 0.
OmegaMap bar_e(const Field& f, std::size_t p, int k);

/// Restricted 2-cochain (phi, omega); omega's reference must equal phi.
struct RestrictedCochain2 {
  Cochain2 phi;
  OmegaMap omega;

  RestrictedCochain2(Cochain2 phi_, OmegaMap omega_)
      : phi(std::move(phi_)), omega(std::move(omega_)) {
    if (omega.reference.sigma != phi.sigma)
      throw DimensionMismatchError("omega reference differs from phi");
  }
};

/// Bilinear-in-the-first, Frobenius-semilinear-in-the-second map given by its
/// value grid on basis pairs: eta(g,h) = sum g_i h_j^p M(i,j). Every image of
/// the induced degree-2 map has this shape, which is all the d^2* complex and
/// kernel computations ever need.
class SemiBilinearMap {
public:
  explicit SemiBilinearMap(Matrix values) : values_(std::move(values)) {}

  const Matrix& values() const { return values_; }
  bool is_zero() const { return values_.is_zero(); }
  Felt eval(const Vec& g, const Vec& h) const;

private:
  Matrix values_;
};

/// Evaluate omega at an arbitrary element by the *-property fold: the support
/// of g is consumed one basis component at a time (ascending labels), each
/// scalar step using omega(a e_k) = a^p omega(e_k) and each addition step
/// adding the correction sum of (starprop) over all 2^{p-2} factor sequences,
/// each term weighted by 1/#(first summand).
Felt eval_omega(const RestrictedLieAlgebra& A, const OmegaMap& w, const Vec& g);

/// Same fold but consuming the support in the caller-given order of basis
/// labels; exists so tests can probe order independence of the extension.
Felt eval_omega_ordered(const RestrictedLieAlgebra& A, const OmegaMap& w, const Vec& g,
                        std::span<const int> label_order);

/// ind^1(psi)(g) = psi(g^{[p]}): an omega map with reference d^1(psi) and
/// basis values psi(e_k^{[p]}).
OmegaMap ind1(const RestrictedLieAlgebra& A, const Cochain1& psi);

/// ind^2(phi)(g,h) = phi(g ^ h^{[p]}); depends only on phi.
SemiBilinearMap ind2(const RestrictedLieAlgebra& A, const Cochain2& phi);

/// d^1*(psi) = (d^1(psi), ind^1(psi)).
RestrictedCochain2 d1_star(const RestrictedLieAlgebra& A, const Cochain1& psi);

struct D2StarValue {
  Cochain3 zeta;
  SemiBilinearMap eta;

  bool is_zero(const Field& f) const { return zeta.is_zero(f) && eta.is_zero(); }
};

/// d^2*(phi, omega) = (d^2(phi), ind^2(phi)).
D2StarValue d2_star(const RestrictedLieAlgebra& A, const RestrictedCochain2& c);

/// Coordinates of (phi, omega) in the basis {(e^{i,j}, ~e^{i,j})} u {(0, ebar^k)}:
/// the pair coefficients followed by the basis values (length p(p-1)/2 + p).
Vec restricted_coords(const RestrictedCochain2& c);
RestrictedCochain2 restricted_from_coords(const Field& f, std::size_t p, const Vec& coords);

/// Matrix of d^1* on coordinates: rows = pair coords then omega coords,
/// columns = e^k.
Matrix d1_star_matrix(const RestrictedLieAlgebra& A);
/// Matrix of d^2* on coordinates: rows = triple coords then the p x p grid of
/// ind^2 values (row-major), columns = restricted coordinates.
Matrix d2_star_matrix(const RestrictedLieAlgebra& A);

} // namespace m2coh

#endif
