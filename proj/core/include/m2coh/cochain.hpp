#ifndef M2COH_COCHAIN_HPP
#define M2COH_COCHAIN_HPP

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "m2coh/algebra.hpp"
#include "m2coh/field.hpp"
#include "m2coh/linalg.hpp"

namespace m2coh {

/// Lexicographic enumeration of the pairs 1 <= i < j <= p; the coordinate
/// order of every C^2 vector and matrix in the library.
class PairIndex {
public:
  explicit PairIndex(std::size_t p);

  std::size_t size() const { return list_.size(); }
  std::size_t p() const { return p_; }
  std::size_t index(int i, int j) const; // requires i < j
  std::pair<int, int> pair_at(std::size_t idx) const { return list_[idx]; }

private:
  std::size_t p_;
  std::vector<std::pair<int, int>> list_;
  std::vector<std::size_t> lookup_; // (i-1)*p + (j-1) -> index
};

/// Lexicographic enumeration of the triples 1 <= s < t < u <= p.
class TripleIndex {
public:
  explicit TripleIndex(std::size_t p);

  std::size_t size() const { return list_.size(); }
  std::size_t p() const { return p_; }
  std::size_t index(int s, int t, int u) const; // requires s < t < u
  std::tuple<int, int, int> triple_at(std::size_t idx) const { return list_[idx]; }

private:
  std::size_t p_;
  std::vector<std::tuple<int, int, int>> list_;
  std::vector<std::size_t> lookup_;
};

/// psi = sum mu_k e^k on the dual basis {e^k}.
struct Cochain1 {
  std::size_t p = 0;
  Vec mu;

  static Cochain1 zero(const Field& f, std::size_t p) { return {p, zero_vec(f, p)}; }
  static Cochain1 basis(const Field& f, std::size_t p, int k);
  Felt coeff(int k) const { return mu[static_cast<std::size_t>(k - 1)]; }
};

/// phi = sum_{i<j} sigma_{ij} e^{i,j}, coordinates in PairIndex order.
struct Cochain2 {
  std::size_t p = 0;
  Vec sigma;

  static Cochain2 zero(const Field& f, std::size_t p);
  static Cochain2 basis(const Field& f, std::size_t p, int i, int j);
  Felt coeff(int i, int j) const { return sigma[PairIndex(p).index(i, j)]; }
  bool is_zero(const Field& f) const { return is_zero_vec(f, sigma); }
};

/// Coordinates on the basis e^{s,t,u}, TripleIndex order.
struct Cochain3 {
  std::size_t p = 0;
  Vec tau;

  static Cochain3 zero(const Field& f, std::size_t p);
  Felt coeff(int s, int t, int u) const { return tau[TripleIndex(p).index(s, t, u)]; }
  bool is_zero(const Field& f) const { return is_zero_vec(f, tau); }
};

/// phi(u ^ v) by bilinear antisymmetric expansion over the pair basis.
Felt eval_cochain2(const Field& f, const Cochain2& phi, const Vec& u, const Vec& v);
/// psi(v).
Felt eval_cochain1(const Field& f, const Cochain1& psi, const Vec& v);

/// Index conventions for written symbols e^{i,j} with arbitrary (i,j).
enum class PairConvention {
  kill_descending, // e^{i,j} = 0 whenever j <= i (the closed-form convention)
  antisymmetric,   // e^{j,i} = -e^{i,j}, e^{i,i} = 0
};

struct SignedIndex {
  int sign = 0; // 0 means the symbol is the zero cochain
  std::size_t index = 0;
};

SignedIndex normalize_pair(const PairIndex& ix, int i, int j, PairConvention conv);

/// d^1(psi)(e_i ^ e_j) = psi([e_i, e_j]) from the structure constants.
Cochain2 d1_generic(const RestrictedLieAlgebra& A, const Cochain1& psi);
/// d^1(e^k) = e^{1,k-1} + e^{2,k-2}, symbols with a descending or repeated
/// index dropped.
Cochain2 d1_closed(const Field& f, const Cochain1& psi);

/// d^2(phi)(g,h,f) = phi([g,h]^f) - phi([g,f]^h) + phi([h,f]^g) on basis triples.
Cochain3 d2_generic(const RestrictedLieAlgebra& A, const Cochain2& phi);
/// d^2(e^{1,j}) = -e^{1,2,j-2} and d^2(e^{i,j}) = e^{1,i-1,j} + e^{1,i,j-1} +
/// e^{2,i-2,j} + e^{2,i,j-2}. A written symbol whose trailing index pair is
/// descending is normalized antisymmetrically; anything still not strictly
/// increasing is dropped. (The trailing-pair swap is what the e^{2,i,j-2}
/// term needs at j = i+1 to agree with the generic differential.)
Cochain3 d2_closed(const Field& f, const Cochain2& phi);

/// Matrix of d^1 on all of C^1 (rows = pairs, cols = e^k).
Matrix d1_matrix(const RestrictedLieAlgebra& A);
/// Matrix of d^2 on all of C^2 (rows = triples, cols = pairs).
Matrix d2_matrix(const RestrictedLieAlgebra& A);

/// The grade of e^k is k, of e^{i,j} is i+j, of e^{s,t,u} is s+t+u.
std::vector<std::size_t> pair_indices_of_grade(const PairIndex& ix, int grade);
std::vector<std::size_t> triple_indices_of_grade(const TripleIndex& ix, int grade);

/// Matrix of the restriction of d^degree to the grade-k component, in the
/// fixed basis order. degree 1 admits 1 <= k <= p, degree 2 admits
/// 3 <= k <= 2p-1; anything else throws GradeOutOfRangeError.
Matrix graded_matrix(const RestrictedLieAlgebra& A, int degree, int grade);

/// phi_k = d^1(e^k) = e^{1,k-1} + e^{2,k-2} for k >= 3.
Cochain2 phi_k(const Field& f, std::size_t p, int k);
/// xi = e^{2,5} - e^{3,4} (p = 5).
Cochain2 xi_cocycle(const Field& f);
/// eta = e^{1,6} + e^{3,4} (p > 5).
Cochain2 eta_cocycle(const Field& f, std::size_t p);

} // namespace m2coh

#endif
