#include "m2coh/field.hpp"

namespace m2coh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw NotPrimeError(p);
}

Field::Field(std::uint64_t p, std::uint64_t m0, std::uint64_t m1)
    : p_(p), ext_(true), m0_(m0 % p), m1_(m1 % p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  // degree 2 is irreducible over GF(p) iff it has no root
  for (std::uint64_t x = 0; x < p_; ++x) {
    if ((x * x + m1_ * x + m0_) % p_ == 0)
      throw ReducibleModulusError("t^2 + " + std::to_string(m1_) + "t + " +
                                  std::to_string(m0_) + " has root " +
                                  std::to_string(x) + " mod " + std::to_string(p_));
  }
}

Felt Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(r), 0};
}

Felt Field::make(std::uint64_t a, std::uint64_t b) const {
  if (!ext_ && b % p_ != 0)
    throw DimensionMismatchError("nonzero t-coefficient in a prime field element");
  return {a % p_, b % p_};
}

Felt Field::gen() const {
  if (!ext_) throw DimensionMismatchError("prime field has no adjoined generator");
  return {0, 1};
}

Felt Field::add(const Felt& x, const Felt& y) const {
  return {(x.a + y.a) % p_, (x.b + y.b) % p_};
}

Felt Field::sub(const Felt& x, const Felt& y) const {
  return {(x.a + p_ - y.a) % p_, (x.b + p_ - y.b) % p_};
}

Felt Field::neg(const Felt& x) const {
  return {(p_ - x.a) % p_, (p_ - x.b) % p_};
}

Felt Field::mul(const Felt& x, const Felt& y) const {
  if (!ext_) return {pmul(x.a, y.a), 0};
  // (a + bt)(c + dt) = ac + bd t^2 + (ad + bc) t,  t^2 = -m1 t - m0
  std::uint64_t ac = pmul(x.a, y.a);
  std::uint64_t bd = pmul(x.b, y.b);
  std::uint64_t cross = (pmul(x.a, y.b) + pmul(x.b, y.a)) % p_;
  std::uint64_t a = (ac + p_ * p_ - pmul(bd, m0_)) % p_;
  std::uint64_t b = (cross + p_ * p_ - pmul(bd, m1_)) % p_;
  return {a, b};
}

Felt Field::pow(Felt x, std::uint64_t n) const {
  Felt r = one();
  while (n) {
    if (n & 1) r = mul(r, x);
    x = mul(x, x);
    n >>= 1;
  }
  return r;
}

Felt Field::inv(const Felt& x) const {
  if (is_zero(x)) throw DivisionByZeroError();
  return pow(x, order() - 2);
}

std::vector<Felt> Field::elements() const {
  std::vector<Felt> out;
  out.reserve(order());
  for (std::uint64_t v = 0; v < order(); ++v)
    out.push_back({v % p_, v / p_});
  return out;
}

std::string Field::str(const Felt& x) const {
  if (!ext_ || x.b == 0) return std::to_string(x.a);
  std::string t = x.b == 1 ? "t" : std::to_string(x.b) + "t";
  if (x.a == 0) return t;
  return std::to_string(x.a) + "+" + t;
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec add_vec(const Field& f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatchError("vector length mismatch");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(x[i], y[i]);
  return out;
}

Vec sub_vec(const Field& f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatchError("vector length mismatch");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.sub(x[i], y[i]);
  return out;
}

Vec scale_vec(const Field& f, const Felt& c, const Vec& x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(c, x[i]);
  return out;
}

bool is_zero_vec(const Field& f, const Vec& x) {
  for (const auto& v : x)
    if (!f.is_zero(v)) return false;
  return true;
}

} // namespace m2coh
