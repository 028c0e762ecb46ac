#include "m2coh/cochain.hpp"

namespace m2coh {

PairIndex::PairIndex(std::size_t p) : p_(p), lookup_(p * p, SIZE_MAX) {
  for (int i = 1; i <= static_cast<int>(p); ++i)
    for (int j = i + 1; j <= static_cast<int>(p); ++j) {
      lookup_[static_cast<std::size_t>(i - 1) * p + static_cast<std::size_t>(j - 1)] =
          list_.size();
      list_.emplace_back(i, j);
    }
}

std::size_t PairIndex::index(int i, int j) const {
  if (i < 1 || j <= i || j > static_cast<int>(p_))
    throw IndexOutOfRangeError("pair index requires 1 <= i < j <= p");
  return lookup_[static_cast<std::size_t>(i - 1) * p_ + static_cast<std::size_t>(j - 1)];
}

TripleIndex::TripleIndex(std::size_t p) : p_(p), lookup_(p * p * p, SIZE_MAX) {
  for (int s = 1; s <= static_cast<int>(p); ++s)
    for (int t = s + 1; t <= static_cast<int>(p); ++t)
      for (int u = t + 1; u <= static_cast<int>(p); ++u) {
        lookup_[(static_cast<std::size_t>(s - 1) * p + static_cast<std::size_t>(t - 1)) * p +
                static_cast<std::size_t>(u - 1)] = list_.size();
        list_.emplace_back(s, t, u);
      }
}

std::size_t TripleIndex::index(int s, int t, int u) const {
  if (s < 1 || t <= s || u <= t || u > static_cast<int>(p_))
    throw IndexOutOfRangeError("triple index requires 1 <= s < t < u <= p");
  return lookup_[(static_cast<std::size_t>(s - 1) * p_ + static_cast<std::size_t>(t - 1)) * p_ +
                 static_cast<std::size_t>(u - 1)];
}

Cochain1 Cochain1::basis(const Field& f, std::size_t p, int k) {
  Cochain1 c = zero(f, p);
  c.mu[static_cast<std::size_t>(k - 1)] = f.one();
  return c;
}

Cochain2 Cochain2::zero(const Field& f, std::size_t p) {
  return {p, zero_vec(f, PairIndex(p).size())};
}

Cochain2 Cochain2::basis(const Field& f, std::size_t p, int i, int j) {
  Cochain2 c = zero(f, p);
  c.sigma[PairIndex(p).index(i, j)] = f.one();
  return c;
}

Cochain3 Cochain3::zero(const Field& f, std::size_t p) {
  return {p, zero_vec(f, TripleIndex(p).size())};
}

Felt eval_cochain1(const Field& f, const Cochain1& psi, const Vec& v) {
  if (v.size() != psi.p) throw DimensionMismatchError("eval_cochain1: length mismatch");
  Felt acc = f.zero();
  for (std::size_t k = 0; k < psi.p; ++k)
    if (!f.is_zero(psi.mu[k]) && !f.is_zero(v[k])) acc = f.add(acc, f.mul(psi.mu[k], v[k]));
  return acc;
}

Felt eval_cochain2(const Field& f, const Cochain2& phi, const Vec& u, const Vec& v) {
  if (u.size() != phi.p || v.size() != phi.p)
    throw DimensionMismatchError("eval_cochain2: length mismatch");
  PairIndex ix(phi.p);
  Felt acc = f.zero();
  for (std::size_t n = 0; n < ix.size(); ++n) {
    if (f.is_zero(phi.sigma[n])) continue;
    auto [i, j] = ix.pair_at(n);
    auto a = static_cast<std::size_t>(i - 1);
    auto b = static_cast<std::size_t>(j - 1);
    Felt det = f.sub(f.mul(u[a], v[b]), f.mul(u[b], v[a]));
    acc = f.add(acc, f.mul(phi.sigma[n], det));
  }
  return acc;
}

SignedIndex normalize_pair(const PairIndex& ix, int i, int j, PairConvention conv) {
  if (i < 1 || j < 1 || i > static_cast<int>(ix.p()) || j > static_cast<int>(ix.p()))
    return {0, 0};
  if (i == j) return {0, 0};
  if (i < j) return {1, ix.index(i, j)};
  if (conv == PairConvention::kill_descending) return {0, 0};
  return {-1, ix.index(j, i)};
}

Cochain2 d1_generic(const RestrictedLieAlgebra& A, const Cochain1& psi) {
  const Field& f = A.field();
  const auto p = A.dim();
  if (psi.p != p) throw DimensionMismatchError("cochain/algebra dimension mismatch");
  PairIndex ix(p);
  Cochain2 out = Cochain2::zero(f, p);
  for (std::size_t n = 0; n < ix.size(); ++n) {
    auto [i, j] = ix.pair_at(n);
    out.sigma[n] = eval_cochain1(f, psi, A.bracket_basis(i, j));
  }
  return out;
}

Cochain2 d1_closed(const Field& f, const Cochain1& psi) {
  const auto p = psi.p;
  PairIndex ix(p);
  Cochain2 out = Cochain2::zero(f, p);
  auto add = [&](int i, int j, const Felt& c) {
    auto s = normalize_pair(ix, i, j, PairConvention::kill_descending);
    if (s.sign == 0) return;
    out.sigma[s.index] = f.add(out.sigma[s.index], c);
  };
  for (int k = 1; k <= static_cast<int>(p); ++k) {
    Felt c = psi.coeff(k);
    if (f.is_zero(c)) continue;
    add(1, k - 1, c);
    add(2, k - 2, c);
  }
  return out;
}

Cochain3 d2_generic(const RestrictedLieAlgebra& A, const Cochain2& phi) {
  const Field& f = A.field();
  const auto p = A.dim();
  if (phi.p != p) throw DimensionMismatchError("cochain/algebra dimension mismatch");
  TripleIndex tx(p);
  Cochain3 out = Cochain3::zero(f, p);
  for (std::size_t n = 0; n < tx.size(); ++n) {
    auto [s, t, u] = tx.triple_at(n);
    Vec es = A.basis_element(s), et = A.basis_element(t), eu = A.basis_element(u);
    Felt v = eval_cochain2(f, phi, A.bracket_basis(s, t), eu);
    v = f.sub(v, eval_cochain2(f, phi, A.bracket_basis(s, u), et));
    v = f.add(v, eval_cochain2(f, phi, A.bracket_basis(t, u), es));
    out.tau[n] = v;
  }
  return out;
}

Cochain3 d2_closed(const Field& f, const Cochain2& phi) {
  const auto p = phi.p;
  PairIndex ix(p);
  TripleIndex tx(p);
  Cochain3 out = Cochain3::zero(f, p);
  auto add = [&](int s, int t, int u, Felt c) {
    if (t > u) { // trailing-pair antisymmetry
      std::swap(t, u);
      c = f.neg(c);
    }
    if (s < 1 || t <= s || u <= t || u > static_cast<int>(p)) return;
    std::size_t n = tx.index(s, t, u);
    out.tau[n] = f.add(out.tau[n], c);
  };
  for (std::size_t n = 0; n < ix.size(); ++n) {
    Felt c = phi.sigma[n];
    if (f.is_zero(c)) continue;
    auto [i, j] = ix.pair_at(n);
    if (i == 1) {
      add(1, 2, j - 2, f.neg(c));
    } else {
      add(1, i - 1, j, c);
      add(1, i, j - 1, c);
      add(2, i - 2, j, c);
      add(2, i, j - 2, c);
    }
  }
  return out;
}

Matrix d1_matrix(const RestrictedLieAlgebra& A) {
  const Field& f = A.field();
  const auto p = A.dim();
  PairIndex ix(p);
  Matrix m(f, ix.size(), p);
  for (int k = 1; k <= static_cast<int>(p); ++k) {
    Cochain2 img = d1_generic(A, Cochain1::basis(f, p, k));
    for (std::size_t r = 0; r < ix.size(); ++r) m.at(r, static_cast<std::size_t>(k - 1)) = img.sigma[r];
  }
  return m;
}

Matrix d2_matrix(const RestrictedLieAlgebra& A) {
  const Field& f = A.field();
  const auto p = A.dim();
  PairIndex ix(p);
  TripleIndex tx(p);
  Matrix m(f, tx.size(), ix.size());
  for (std::size_t cidx = 0; cidx < ix.size(); ++cidx) {
    auto [i, j] = ix.pair_at(cidx);
    Cochain3 img = d2_generic(A, Cochain2::basis(f, p, i, j));
    for (std::size_t r = 0; r < tx.size(); ++r) m.at(r, cidx) = img.tau[r];
  }
  return m;
}

std::vector<std::size_t> pair_indices_of_grade(const PairIndex& ix, int grade) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < ix.size(); ++n) {
    auto [i, j] = ix.pair_at(n);
    if (i + j == grade) out.push_back(n);
  }
  return out;
}

std::vector<std::size_t> triple_indices_of_grade(const TripleIndex& ix, int grade) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < ix.size(); ++n) {
    auto [s, t, u] = ix.triple_at(n);
    if (s + t + u == grade) out.push_back(n);
  }
  return out;
}

Matrix graded_matrix(const RestrictedLieAlgebra& A, int degree, int grade) {
  const Field& f = A.field();
  const auto p = A.dim();
  if (degree == 1) {
    if (grade < 1 || grade > static_cast<int>(p))
      throw GradeOutOfRangeError("degree-1 grades run over 1..p");
    PairIndex ix(p);
    auto rows = pair_indices_of_grade(ix, grade);
    Matrix m(f, rows.size(), 1);
    Cochain2 img = d1_generic(A, Cochain1::basis(f, p, grade));
    for (std::size_t r = 0; r < rows.size(); ++r) m.at(r, 0) = img.sigma[rows[r]];
    return m;
  }
  if (degree != 2) throw GradeOutOfRangeError("graded_matrix supports degrees 1 and 2");
  if (grade < 3 || grade > 2 * static_cast<int>(p) - 1)
    throw GradeOutOfRangeError("degree-2 grades run over 3..2p-1");
  PairIndex ix(p);
  TripleIndex tx(p);
  auto cols = pair_indices_of_grade(ix, grade);
  auto rows = triple_indices_of_grade(tx, grade);
  Matrix m(f, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto [i, j] = ix.pair_at(cols[c]);
    Cochain3 img = d2_generic(A, Cochain2::basis(f, p, i, j));
    for (std::size_t r = 0; r < rows.size(); ++r) m.at(r, c) = img.tau[rows[r]];
  }
  return m;
}

Cochain2 phi_k(const Field& f, std::size_t p, int k) {
  if (k < 3 || k > static_cast<int>(p) + 1)
    throw IndexOutOfRangeError("phi_k is defined for 3 <= k <= p+1");
  Cochain2 c = Cochain2::zero(f, p);
  PairIndex ix(p);
  auto s1 = normalize_pair(ix, 1, k - 1, PairConvention::kill_descending);
  if (s1.sign != 0) c.sigma[s1.index] = f.one();
  auto s2 = normalize_pair(ix, 2, k - 2, PairConvention::kill_descending);
  if (s2.sign != 0) c.sigma[s2.index] = f.one();
  return c;
}

Cochain2 xi_cocycle(const Field& f) {
  Cochain2 c = Cochain2::zero(f, 5);
  PairIndex ix(5);
  c.sigma[ix.index(2, 5)] = f.one();
  c.sigma[ix.index(3, 4)] = f.neg(f.one());
  return c;
}

Cochain2 eta_cocycle(const Field& f, std::size_t p) {
  if (p <= 5) throw IndexOutOfRangeError("eta lives in characteristic > 5");
  Cochain2 c = Cochain2::zero(f, p);
  PairIndex ix(p);
  c.sigma[ix.index(1, 6)] = f.one();
  c.sigma[ix.index(3, 4)] = f.one();
  return c;
}

} // namespace m2coh
