#include "m2coh/restricted.hpp"

#include <algorithm>
#include <numeric>

namespace m2coh {

namespace {

/// Sparse form of v -> [v, w] for a fixed right factor w.
struct RightBracketOp {
  // cols[m] lists (target, coeff): [v, w] = sum_m v[m] * sum coeff * e_target
  std::vector<std::vector<std::pair<std::size_t, Felt>>> cols;

  RightBracketOp(const RestrictedLieAlgebra& A, const Vec& w) : cols(A.dim()) {
    const Field& f = A.field();
    for (const auto& [i, j] : A.nonzero_pairs()) {
      const Vec& c = A.bracket_basis(i, j);
      const Felt wi = w[static_cast<std::size_t>(i - 1)];
      const Felt wj = w[static_cast<std::size_t>(j - 1)];
      for (std::size_t m = 0; m < c.size(); ++m) {
        if (f.is_zero(c[m])) continue;
        if (!f.is_zero(wj)) cols[static_cast<std::size_t>(i - 1)].emplace_back(m, f.mul(wj, c[m]));
        if (!f.is_zero(wi))
          cols[static_cast<std::size_t>(j - 1)].emplace_back(m, f.neg(f.mul(wi, c[m])));
      }
    }
  }

  bool apply(const Field& f, const Vec& v, Vec& out) const {
    bool nonzero = false;
    std::fill(out.begin(), out.end(), f.zero());
    for (std::size_t m = 0; m < v.size(); ++m) {
      if (f.is_zero(v[m])) continue;
      for (const auto& [t, c] : cols[m]) out[t] = f.add(out[t], f.mul(v[m], c));
    }
    for (const auto& x : out)
      if (!f.is_zero(x)) {
        nonzero = true;
        break;
      }
    return nonzero;
  }
};

struct SparsePair {
  std::size_t i, j; // 0-based
  Felt coeff;
};

std::vector<SparsePair> support_of(const Field& f, const Cochain2& phi) {
  PairIndex ix(phi.p);
  std::vector<SparsePair> out;
  for (std::size_t n = 0; n < ix.size(); ++n) {
    if (f.is_zero(phi.sigma[n])) continue;
    auto [i, j] = ix.pair_at(n);
    out.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), phi.sigma[n]});
  }
  return out;
}

Felt eval_support(const Field& f, const std::vector<SparsePair>& supp, const Vec& u, const Vec& v) {
  Felt acc = f.zero();
  for (const auto& s : supp) {
    Felt det = f.sub(f.mul(u[s.i], v[s.j]), f.mul(u[s.j], v[s.i]));
    if (!f.is_zero(det)) acc = f.add(acc, f.mul(s.coeff, det));
  }
  return acc;
}

/// The (starprop) correction for one addition step omega(acc + x): a shared-
/// prefix walk over all assignments of the free slots 3..p to {acc, x}; slots
/// 3..p-1 extend the bracket chain, slot p is the wedge partner. Chains that
/// hit zero are pruned (all their terms vanish).
class CorrectionSum {
public:
  CorrectionSum(const RestrictedLieAlgebra& A, const std::vector<SparsePair>& supp,
                const Vec& acc, const Vec& x)
      : A_(A), f_(A.field()), p_(f_.characteristic()), supp_(supp), acc_(acc), x_(x),
        op_acc_(A, acc), op_x_(A, x) {
    inv_.resize(p_);
    for (std::uint64_t n = 1; n < p_; ++n) inv_[n] = f_.inv_int(n);
  }

  Felt run() {
    if (supp_.empty()) return f_.zero();
    Vec b2 = A_.bracket(acc_, x_);
    if (is_zero_vec(f_, b2)) return f_.zero();
    total_ = f_.zero();
    walk(b2, 3, 1);
    return total_;
  }

private:
  void walk(const Vec& chain, std::uint64_t slot, std::uint64_t count_first) {
    if (slot == p_) {
      Felt va = eval_support(f_, supp_, chain, acc_);
      if (!f_.is_zero(va)) total_ = f_.add(total_, f_.mul(inv_[count_first + 1], va));
      Felt vx = eval_support(f_, supp_, chain, x_);
      if (!f_.is_zero(vx)) total_ = f_.add(total_, f_.mul(inv_[count_first], vx));
      return;
    }
    Vec next(chain.size());
    if (op_acc_.apply(f_, chain, next)) walk(next, slot + 1, count_first + 1);
    if (op_x_.apply(f_, chain, next)) walk(next, slot + 1, count_first);
  }

  const RestrictedLieAlgebra& A_;
  const Field& f_;
  std::uint64_t p_;
  const std::vector<SparsePair>& supp_;
  const Vec& acc_;
  const Vec& x_;
  RightBracketOp op_acc_, op_x_;
  std::vector<Felt> inv_;
  Felt total_;
};

} // namespace

OmegaMap bar_e(const Field& f, std::size_t p, int k) {
  if (k < 1 || k > static_cast<int>(p)) throw IndexOutOfRangeError("bar_e label out of range");
  OmegaMap w = OmegaMap::tilde(f, Cochain2::zero(f, p));
  w.basis_values[static_cast<std::size_t>(k - 1)] = f.one();
  return w;
}

Felt SemiBilinearMap::eval(const Vec& g, const Vec& h) const {
  const Field& f = values_.field();
  const std::uint64_t p = f.characteristic();
  Felt acc = f.zero();
  for (std::size_t i = 0; i < values_.rows(); ++i) {
    if (f.is_zero(g[i])) continue;
    for (std::size_t j = 0; j < values_.cols(); ++j) {
      if (f.is_zero(values_.at(i, j)) || f.is_zero(h[j])) continue;
      acc = f.add(acc, f.mul(g[i], f.mul(f.pow(h[j], p), values_.at(i, j))));
    }
  }
  return acc;
}

Felt eval_omega_ordered(const RestrictedLieAlgebra& A, const OmegaMap& w, const Vec& g,
                        std::span<const int> label_order) {
  const Field& f = A.field();
  const std::uint64_t p = f.characteristic();
  if (g.size() != A.dim() || w.basis_values.size() != A.dim())
    throw DimensionMismatchError("eval_omega: length mismatch");
  auto supp = support_of(f, w.reference);

  Felt value = f.zero();
  Vec acc = A.zero();
  bool first = true;
  for (int label : label_order) {
    const auto k = static_cast<std::size_t>(label - 1);
    if (f.is_zero(g[k])) continue;
    Felt term_val = f.mul(f.pow(g[k], p), w.basis_values[k]);
    Vec term = A.zero();
    term[k] = g[k];
    if (first) {
      value = term_val;
      first = false;
    } else {
      CorrectionSum corr(A, supp, acc, term);
      value = f.add(f.add(value, term_val), corr.run());
    }
    acc[k] = g[k];
  }
  return value;
}

Felt eval_omega(const RestrictedLieAlgebra& A, const OmegaMap& w, const Vec& g) {
  std::vector<int> order(A.dim());
  std::iota(order.begin(), order.end(), 1);
  return eval_omega_ordered(A, w, g, order);
}

OmegaMap ind1(const RestrictedLieAlgebra& A, const Cochain1& psi) {
  const Field& f = A.field();
  OmegaMap w{d1_generic(A, psi), zero_vec(f, A.dim())};
  for (int k = 1; k <= static_cast<int>(A.dim()); ++k)
    w.basis_values[static_cast<std::size_t>(k - 1)] = eval_cochain1(f, psi, A.p_power_basis(k));
  return w;
}

SemiBilinearMap ind2(const RestrictedLieAlgebra& A, const Cochain2& phi) {
  const Field& f = A.field();
  const auto n = A.dim();
  Matrix m(f, n, n);
  for (int j = 1; j <= static_cast<int>(n); ++j)
    for (int i = 1; i <= static_cast<int>(n); ++i)
      m.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) =
          eval_cochain2(f, phi, A.basis_element(j), A.p_power_basis(i));
  return SemiBilinearMap(std::move(m));
}

RestrictedCochain2 d1_star(const RestrictedLieAlgebra& A, const Cochain1& psi) {
  OmegaMap w = ind1(A, psi);
  Cochain2 phi = w.reference;
  return RestrictedCochain2(std::move(phi), std::move(w));
}

D2StarValue d2_star(const RestrictedLieAlgebra& A, const RestrictedCochain2& c) {
  return {d2_generic(A, c.phi), ind2(A, c.phi)};
}

Vec restricted_coords(const RestrictedCochain2& c) {
  Vec out = c.phi.sigma;
  out.insert(out.end(), c.omega.basis_values.begin(), c.omega.basis_values.end());
  return out;
}

RestrictedCochain2 restricted_from_coords(const Field& f, std::size_t p, const Vec& coords) {
  PairIndex ix(p);
  if (coords.size() != ix.size() + p)
    throw DimensionMismatchError("restricted coordinate vector of wrong length");
  Cochain2 phi{p, Vec(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(ix.size()))};
  OmegaMap w{phi, Vec(coords.begin() + static_cast<std::ptrdiff_t>(ix.size()), coords.end())};
  return RestrictedCochain2(std::move(phi), std::move(w));
}

Matrix d1_star_matrix(const RestrictedLieAlgebra& A) {
  const Field& f = A.field();
  const auto p = A.dim();
  PairIndex ix(p);
  Matrix m(f, ix.size() + p, p);
  for (int k = 1; k <= static_cast<int>(p); ++k) {
    RestrictedCochain2 img = d1_star(A, Cochain1::basis(f, p, k));
    Vec coords = restricted_coords(img);
    for (std::size_t r = 0; r < coords.size(); ++r) m.at(r, static_cast<std::size_t>(k - 1)) = coords[r];
  }
  return m;
}

Matrix d2_star_matrix(const RestrictedLieAlgebra& A) {
  const Field& f = A.field();
  const auto p = A.dim();
  PairIndex ix(p);
  TripleIndex tx(p);
  const std::size_t cols = ix.size() + p;
  Matrix m(f, tx.size() + p * p, cols);
  for (std::size_t c = 0; c < ix.size(); ++c) {
    auto [i, j] = ix.pair_at(c);
    Cochain2 phi = Cochain2::basis(f, p, i, j);
    Cochain3 z = d2_generic(A, phi);
    for (std::size_t r = 0; r < tx.size(); ++r) m.at(r, c) = z.tau[r];
    SemiBilinearMap e = ind2(A, phi);
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) m.at(tx.size() + a * p + b, c) = e.values().at(a, b);
  }
  // the (0, ebar^k) directions are killed by d^2*
  return m;
}

} // namespace m2coh
