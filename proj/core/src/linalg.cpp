#include "m2coh/linalg.hpp"

#include <algorithm>

namespace m2coh {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatchError("row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatchError("matrix-vector size mismatch");
  Vec out(rows_, f_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    Felt acc = f_.zero();
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!f_.is_zero(at(r, c)) && !f_.is_zero(x[c]))
        acc = f_.add(acc, f_.mul(at(r, c), x[c]));
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatchError("matrix product size mismatch");
  Matrix out(f_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (f_.is_zero(at(r, k))) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out.at(r, c) = f_.add(out.at(r, c), f_.mul(at(r, k), other.at(k, c)));
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!f_.is_zero(x)) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < r.rows() && f.is_zero(r.at(sel, c))) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead)
      for (std::size_t k = 0; k < r.cols(); ++k) std::swap(r.at(sel, k), r.at(lead, k));
    Felt piv_inv = f.inv(r.at(lead, c));
    for (std::size_t k = c; k < r.cols(); ++k) r.at(lead, k) = f.mul(piv_inv, r.at(lead, k));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || f.is_zero(r.at(i, c))) continue;
      Felt factor = r.at(i, c);
      for (std::size_t k = c; k < r.cols(); ++k)
        r.at(i, k) = f.sub(r.at(i, k), f.mul(factor, r.at(lead, k)));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {r, pivots, pivots.size()};
}

Subspace kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  auto [r, pivots, rank] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  Subspace ker{f, m.cols(), {}};
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x = zero_vec(f, m.cols());
    x[free] = f.one();
    for (std::size_t row = 0; row < rank; ++row)
      x[pivots[row]] = f.neg(r.at(row, free));
    ker.basis.push_back(std::move(x));
  }
  return ker;
}

Subspace image_basis(const Matrix& m) {
  const Field& f = m.field();
  auto [r, pivots, rank] = rref(m.transpose());
  Subspace im{f, m.rows(), {}};
  for (std::size_t row = 0; row < rank; ++row) im.basis.push_back(r.row(row));
  return im;
}

std::optional<Vec> in_span(const Vec& v, const Subspace& s) {
  if (v.size() != s.ambient_dim) throw DimensionMismatchError("in_span: vector length mismatch");
  const Field& f = s.field;
  const std::size_t n = s.dim();
  // solve sum_i x_i basis_i = v via [B | v] with basis vectors as columns
  Matrix aug(f, s.ambient_dim, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < s.ambient_dim; ++r) aug.at(r, i) = s.basis[i][r];
  for (std::size_t r = 0; r < s.ambient_dim; ++r) aug.at(r, n) = v[r];
  auto [red, pivots, rank] = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vec coords = zero_vec(f, n);
  for (std::size_t row = 0; row < rank; ++row) coords[pivots[row]] = red.at(row, n);
  return coords;
}

std::vector<Vec> complement_representatives(const Subspace& kernel, const Subspace& image) {
  const Field& f = kernel.field;
  if (image.ambient_dim != kernel.ambient_dim)
    throw DimensionMismatchError("complement_representatives: ambient dimension mismatch");
  for (const auto& v : image.basis)
    if (!in_span(v, kernel))
      throw ImageNotContainedError("image vector outside the kernel");

  auto [imr, impiv, imrank] = rref(Matrix::from_rows(f, image.basis, image.ambient_dim));
  std::vector<Vec> reduced;
  for (const auto& kvec : kernel.basis) {
    Vec v = kvec;
    for (std::size_t row = 0; row < imrank; ++row) {
      Felt c = v[impiv[row]];
      if (f.is_zero(c)) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = f.sub(v[k], f.mul(c, imr.at(row, k)));
    }
    reduced.push_back(std::move(v));
  }
  auto [red, piv, rank] = rref(Matrix::from_rows(f, reduced, kernel.ambient_dim));
  std::vector<Vec> reps;
  for (std::size_t row = 0; row < rank; ++row) reps.push_back(red.row(row));
  return reps;
}

} // namespace m2coh
