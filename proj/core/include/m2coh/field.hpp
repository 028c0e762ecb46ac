#ifndef M2COH_FIELD_HPP
#define M2COH_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "m2coh/errors.hpp"

namespace m2coh {

/// Element of GF(p) or GF(p^2) in canonical form: a + b*t with residues
/// a, b in [0, p). For the prime field b is always 0, so equality of
/// representations is equality of elements.
struct Felt {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const Felt&, const Felt&) = default;
};

/// Exact arithmetic in GF(p), or in GF(p^2) presented as GF(p)[t]/(t^2 + m1*t + m0)
/// with a caller-supplied irreducible quadratic. All operations are pure and the
/// object is immutable, so a Field may be shared freely between threads.
class Field {
public:
  /// GF(p). Throws NotPrimeError unless p is prime.
  explicit Field(std::uint64_t p);

  /// GF(p^2) with modulus t^2 + m1*t + m0 (coefficients are residues mod p).
  /// Throws ReducibleModulusError if the quadratic has a root in GF(p).
  Field(std::uint64_t p, std::uint64_t m0, std::uint64_t m1);

  std::uint64_t characteristic() const { return p_; }
  int extension_degree() const { return ext_ ? 2 : 1; }
  std::uint64_t order() const { return ext_ ? p_ * p_ : p_; }
  /// Modulus coefficients (m0, m1); only meaningful when extension_degree() == 2.
  std::pair<std::uint64_t, std::uint64_t> modulus() const { return {m0_, m1_}; }

  Felt zero() const { return {0, 0}; }
  Felt one() const { return {1 % p_, 0}; }
  /// The residue class of a generic integer (negative values allowed).
  Felt from_int(std::int64_t n) const;
  /// a + b*t with reduction mod p; b must be 0 in the prime field.
  Felt make(std::uint64_t a, std::uint64_t b = 0) const;
  /// The adjoined root t (extension fields only).
  Felt gen() const;

  bool is_zero(const Felt& x) const { return x.a == 0 && x.b == 0; }

  Felt add(const Felt& x, const Felt& y) const;
  Felt sub(const Felt& x, const Felt& y) const;
  Felt neg(const Felt& x) const;
  Felt mul(const Felt& x, const Felt& y) const;
  /// Multiplicative inverse; throws DivisionByZeroError on 0.
  Felt inv(const Felt& x) const;
  Felt div(const Felt& x, const Felt& y) const { return mul(x, inv(y)); }
  Felt pow(Felt x, std::uint64_t n) const;
  /// x^p, the Frobenius endomorphism. Identity on the prime field.
  Felt frobenius(const Felt& x) const { return pow(x, p_); }
  /// 1/n for an integer 1 <= n < p (used for the 1/#(g) and 1/i weights).
  Felt inv_int(std::uint64_t n) const { return inv(from_int(static_cast<std::int64_t>(n))); }

  /// All field elements in a fixed order: index v <-> (v mod p) + (v div p)*t.
  std::vector<Felt> elements() const;

  std::string str(const Felt& x) const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  std::uint64_t p_ = 0;
  bool ext_ = false;
  std::uint64_t m0_ = 0, m1_ = 0; // modulus t^2 + m1*t + m0

  std::uint64_t pmul(std::uint64_t x, std::uint64_t y) const { return (x * y) % p_; }
};

/// Trial-division primality test (the library only ever sees small p).
bool is_prime(std::uint64_t n);

/// Coefficient vector over a Field; used for Lie elements, cochain coordinates
/// and matrix rows alike.
using Vec = std::vector<Felt>;

Vec zero_vec(const Field& f, std::size_t n);
Vec add_vec(const Field& f, const Vec& x, const Vec& y);
Vec sub_vec(const Field& f, const Vec& x, const Vec& y);
Vec scale_vec(const Field& f, const Felt& c, const Vec& x);
bool is_zero_vec(const Field& f, const Vec& x);

} // namespace m2coh

#endif
