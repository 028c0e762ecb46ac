#include "m2coh/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "m2coh/random.hpp"

namespace m2coh {

RestrictedLieAlgebra::RestrictedLieAlgebra(Field field, std::size_t dim,
                                           std::vector<std::tuple<int, int, Vec>> brackets,
                                           std::vector<Vec> p_map, std::vector<int> degrees)
    : f_(std::move(field)), dim_(dim), table_(dim * (dim - 1) / 2, zero_vec(f_, dim)),
      p_map_(std::move(p_map)), degrees_(std::move(degrees)) {
  if (p_map_.size() != dim_)
    throw DimensionMismatchError("p_map table must have one entry per basis element");
  for (const auto& v : p_map_)
    if (v.size() != dim_) throw DimensionMismatchError("p_map entry of wrong length");
  if (!degrees_.empty() && degrees_.size() != dim_)
    throw DimensionMismatchError("degrees must be empty or of length dim");
  for (auto& [i, j, v] : brackets) {
    if (i < 1 || j <= i || j > static_cast<int>(dim_))
      throw DimensionMismatchError("structure constants must be indexed by 1 <= i < j <= dim");
    if (v.size() != dim_) throw DimensionMismatchError("structure constant of wrong length");
    table_[pair_slot(i, j)] = std::move(v);
  }
  for (int i = 1; i <= static_cast<int>(dim_); ++i)
    for (int j = i + 1; j <= static_cast<int>(dim_); ++j)
      if (!is_zero_vec(f_, table_[pair_slot(i, j)])) nonzero_.emplace_back(i, j);
}

std::size_t RestrictedLieAlgebra::pair_slot(int i, int j) const {
  auto a = static_cast<std::size_t>(i - 1);
  auto b = static_cast<std::size_t>(j - 1);
  return a * dim_ - a * (a + 1) / 2 + (b - a - 1);
}

Vec RestrictedLieAlgebra::basis_element(int k) const {
  if (k < 1 || k > static_cast<int>(dim_)) throw IndexOutOfRangeError("basis label out of range");
  Vec v = zero();
  v[static_cast<std::size_t>(k - 1)] = f_.one();
  return v;
}

Vec RestrictedLieAlgebra::bracket_basis(int i, int j) const {
  if (i < 1 || j < 1 || i > static_cast<int>(dim_) || j > static_cast<int>(dim_))
    throw IndexOutOfRangeError("basis label out of range");
  if (i == j) return zero();
  if (i < j) return table_[pair_slot(i, j)];
  Vec v = table_[pair_slot(j, i)];
  for (auto& x : v) x = f_.neg(x);
  return v;
}

Vec RestrictedLieAlgebra::bracket(const Vec& g, const Vec& h) const {
  if (g.size() != dim_ || h.size() != dim_)
    throw DimensionMismatchError("bracket: element length mismatch");
  Vec out = zero();
  for (const auto& [i, j] : nonzero_) {
    const Felt gi = g[static_cast<std::size_t>(i - 1)];
    const Felt gj = g[static_cast<std::size_t>(j - 1)];
    const Felt hi = h[static_cast<std::size_t>(i - 1)];
    const Felt hj = h[static_cast<std::size_t>(j - 1)];
    Felt coef = f_.sub(f_.mul(gi, hj), f_.mul(gj, hi));
    if (f_.is_zero(coef)) continue;
    const Vec& c = table_[pair_slot(i, j)];
    for (std::size_t m = 0; m < dim_; ++m)
      if (!f_.is_zero(c[m])) out[m] = f_.add(out[m], f_.mul(coef, c[m]));
  }
  return out;
}

Vec RestrictedLieAlgebra::nfold_bracket(std::span<const Vec> elems) const {
  if (elems.size() < 2) throw DimensionMismatchError("nfold_bracket needs at least two factors");
  Vec acc = bracket(elems[0], elems[1]);
  for (std::size_t k = 2; k < elems.size(); ++k) acc = bracket(acc, elems[k]);
  return acc;
}

const Vec& RestrictedLieAlgebra::p_power_basis(int k) const {
  if (k < 1 || k > static_cast<int>(dim_)) throw IndexOutOfRangeError("basis label out of range");
  return p_map_[static_cast<std::size_t>(k - 1)];
}

Vec RestrictedLieAlgebra::jacobson_correction(const Vec& g, const Vec& h) const {
  const std::size_t p = f_.characteristic();
  // U[d] = coefficient of t^d in ad(tg+h)^step(g)
  std::vector<Vec> U(p, zero());
  U[0] = g;
  for (std::size_t step = 1; step <= p - 1; ++step) {
    std::vector<Vec> next(p, zero());
    for (std::size_t d = 0; d < p; ++d) {
      Vec val = bracket(h, U[d]);
      if (d > 0) val = add_vec(f_, val, bracket(g, U[d - 1]));
      next[d] = std::move(val);
    }
    U = std::move(next);
  }
  Vec total = zero();
  for (std::size_t i = 1; i <= p - 1; ++i)
    total = add_vec(f_, total, scale_vec(f_, f_.inv_int(i), U[i - 1]));
  return total;
}

Vec RestrictedLieAlgebra::p_power(const Vec& g) const {
  if (g.size() != dim_) throw DimensionMismatchError("p_power: element length mismatch");
  const std::uint64_t p = f_.characteristic();
  Vec acc_val = zero();
  Vec acc_elt = zero();
  bool first = true;
  for (std::size_t k = 0; k < dim_; ++k) {
    if (f_.is_zero(g[k])) continue;
    Vec term = zero();
    term[k] = g[k];
    Vec term_val = scale_vec(f_, f_.pow(g[k], p), p_map_[k]);
    if (first) {
      acc_val = std::move(term_val);
      acc_elt = std::move(term);
      first = false;
    } else {
      acc_val = add_vec(f_, acc_val, term_val);
      acc_val = add_vec(f_, acc_val, jacobson_correction(acc_elt, term));
      acc_elt = add_vec(f_, acc_elt, term);
    }
  }
  return acc_val;
}

Matrix RestrictedLieAlgebra::adjoint(const Vec& g) const {
  Matrix m(f_, dim_, dim_);
  for (int j = 1; j <= static_cast<int>(dim_); ++j) {
    Vec col = bracket(g, basis_element(j));
    for (std::size_t r = 0; r < dim_; ++r) m.at(r, static_cast<std::size_t>(j - 1)) = col[r];
  }
  return m;
}

RestrictedLieAlgebra make_m2(const Field& f, const Vec& lambda) {
  const std::uint64_t p = f.characteristic();
  if (p < 5) throw CharTooSmallError(p);
  if (lambda.size() != p) throw DimensionMismatchError("lambda must have length p");
  const auto n = static_cast<std::size_t>(p);

  std::vector<std::tuple<int, int, Vec>> brackets;
  for (int i = 2; i < static_cast<int>(p); ++i) { // [e_1, e_i] = e_{i+1}
    Vec v = zero_vec(f, n);
    v[static_cast<std::size_t>(i)] = f.one();
    brackets.emplace_back(1, i, std::move(v));
  }
  for (int i = 3; i < static_cast<int>(p) - 1; ++i) { // [e_2, e_i] = e_{i+2}
    Vec v = zero_vec(f, n);
    v[static_cast<std::size_t>(i + 1)] = f.one();
    brackets.emplace_back(2, i, std::move(v));
  }

  std::vector<Vec> p_map;
  for (std::size_t k = 0; k < n; ++k) {
    Vec v = zero_vec(f, n);
    v[n - 1] = lambda[k];
    p_map.push_back(std::move(v));
  }

  std::vector<int> degrees(n);
  for (std::size_t k = 0; k < n; ++k) degrees[k] = static_cast<int>(k + 1);

  return RestrictedLieAlgebra(f, n, std::move(brackets), std::move(p_map), std::move(degrees));
}

RestrictedLieAlgebra make_m2_tampered(const Field& f, const Vec& lambda) {
  const std::uint64_t p = f.characteristic();
  if (p < 5) throw CharTooSmallError(p);
  const auto n = static_cast<std::size_t>(p);
  std::vector<std::tuple<int, int, Vec>> brackets;
  for (int i = 2; i < static_cast<int>(p); ++i) {
    Vec v = zero_vec(f, n);
    v[static_cast<std::size_t>(i)] = f.one();
    brackets.emplace_back(1, i, std::move(v));
  }
  for (int i = 3; i < static_cast<int>(p) - 1; ++i) {
    Vec v = zero_vec(f, n);
    if (i == 3)
      v[3] = f.one(); // [e_2,e_3] = e_4: breaks Jacobi on (1,2,3)
    else
      v[static_cast<std::size_t>(i + 1)] = f.one();
    brackets.emplace_back(2, i, std::move(v));
  }
  std::vector<Vec> p_map;
  for (std::size_t k = 0; k < n; ++k) {
    Vec v = zero_vec(f, n);
    v[n - 1] = lambda[k];
    p_map.push_back(std::move(v));
  }
  return RestrictedLieAlgebra(f, n, std::move(brackets), std::move(p_map), {});
}

Vec m2_bracket_closed(const Field& f, const Vec& g, const Vec& h) {
  const std::size_t p = g.size();
  Vec out = zero_vec(f, p);
  auto det = [&](std::size_t i, std::size_t j) {
    return f.sub(f.mul(g[i], h[j]), f.mul(g[j], h[i]));
  };
  out[2] = det(0, 1);
  out[3] = det(0, 2);
  for (std::size_t j = 5; j <= p; ++j)
    out[j - 1] = f.add(det(0, j - 2), det(1, j - 3));
  return out;
}

namespace {

std::string describe(const Field& f, const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << f.str(v[i]);
  os << ")";
  return os.str();
}

} // namespace

VerifyReport verify_restricted(const RestrictedLieAlgebra& A, const VerifyOptions& opts) {
  const Field& f = A.field();
  const auto n = static_cast<int>(A.dim());
  const std::uint64_t p = f.characteristic();
  VerifyReport rep;
  Rng rng(opts.seed);

  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = i + 1; j <= n && ok; ++j)
        for (int k = j + 1; k <= n && ok; ++k) {
          Vec s = A.bracket(A.bracket_basis(i, j), A.basis_element(k));
          s = add_vec(f, s, A.bracket(A.bracket_basis(j, k), A.basis_element(i)));
          s = add_vec(f, s, A.bracket(A.bracket_basis(k, i), A.basis_element(j)));
          if (!is_zero_vec(f, s)) {
            ok = false;
            detail = "Jacobi fails on triple (" + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(k) + ")";
          }
        }
    rep.checks.push_back({"jacobi_basis_triples", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    if (!A.graded()) {
      detail = "algebra carries no grading; skipped";
    } else {
      const auto& deg = A.degrees();
      for (const auto& [i, j] : A.nonzero_pairs()) {
        const Vec& v = A.bracket_basis(i, j);
        for (std::size_t m = 0; m < A.dim() && ok; ++m) {
          if (!f.is_zero(v[m]) && deg[m] != deg[i - 1] + deg[j - 1]) {
            ok = false;
            detail = "bracket [e_" + std::to_string(i) + ",e_" + std::to_string(j) +
                     "] leaves grade " + std::to_string(deg[i - 1] + deg[j - 1]);
          }
        }
        if (!ok) break;
      }
    }
    rep.checks.push_back({"bracket_respects_grading", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t s = 0; s < opts.samples && ok; ++s) {
      Vec g = rng.vec(f, A.dim());
      Felt alpha = rng.felt(f);
      Vec lhs = A.p_power(scale_vec(f, alpha, g));
      Vec rhs = scale_vec(f, f.pow(alpha, p), A.p_power(g));
      if (lhs != rhs) {
        ok = false;
        detail = "scaling fails for alpha=" + f.str(alpha) + ", g=" + describe(f, g);
      }
    }
    rep.checks.push_back({"p_power_scaling", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    auto check_elem = [&](const Vec& g, const std::string& label) {
      Matrix adg = A.adjoint(g);
      Matrix pow = Matrix::identity(f, A.dim());
      for (std::uint64_t e = 0; e < p; ++e) pow = pow.multiply(adg);
      Matrix adp = A.adjoint(A.p_power(g));
      if (!(pow == adp)) {
        ok = false;
        detail = "ad(g^[p]) != (ad g)^p for " + label;
      }
    };
    for (int k = 1; k <= n && ok; ++k) check_elem(A.basis_element(k), "e_" + std::to_string(k));
    for (std::size_t s = 0; s < opts.samples && ok; ++s) {
      Vec g = rng.vec(f, A.dim());
      check_elem(g, describe(f, g));
    }
    rep.checks.push_back({"ad_of_p_power", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t s = 0; s < opts.samples && ok; ++s) {
      Vec g = rng.vec(f, A.dim());
      Vec h = rng.vec(f, A.dim());
      Vec lhs = A.p_power(add_vec(f, g, h));
      Vec rhs = add_vec(f, add_vec(f, A.p_power(g), A.p_power(h)), A.jacobson_correction(g, h));
      if (lhs != rhs) {
        ok = false;
        detail = "additivity fails for g=" + describe(f, g) + ", h=" + describe(f, h);
      }
    }
    rep.checks.push_back({"jacobson_additivity", ok, detail});
  }

  return rep;
}

std::optional<Felt> iso_classify(const Field& f, const Vec& lambda, const Vec& lambda2) {
  if (lambda.size() != lambda2.size())
    throw DimensionMismatchError("lambda vectors of different length");
  const std::uint64_t p = f.characteristic();
  for (const Felt& mu : f.elements()) {
    if (f.is_zero(mu)) continue;
    bool ok = true;
    for (std::size_t k = 1; k <= lambda.size() && ok; ++k) {
      Felt factor = f.pow(mu, (static_cast<std::uint64_t>(k) - 1) * p);
      ok = lambda[k - 1] == f.mul(factor, lambda2[k - 1]);
    }
    if (ok) return mu;
  }
  return std::nullopt;
}

Vec parse_lambda_list(const Field& f, std::size_t p, const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty entry in lambda list");
    try {
      std::size_t pos = item.find(':');
      if (pos == std::string::npos) {
        out.push_back(f.from_int(std::stoll(item)));
      } else {
        std::uint64_t a = std::stoull(item.substr(0, pos));
        std::uint64_t b = std::stoull(item.substr(pos + 1));
        out.push_back(f.make(a, b));
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad lambda entry: " + item);
    }
  }
  if (out.size() != p)
    throw ParseError("lambda must have exactly " + std::to_string(p) + " entries, got " +
                     std::to_string(out.size()));
  return out;
}

} // namespace m2coh
