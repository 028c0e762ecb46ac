#ifndef M2COH_LINALG_HPP
#define M2COH_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "m2coh/field.hpp"

namespace m2coh {

/// Dense row-major matrix over a Field. Sizes in this library stay tiny
/// (at most a few hundred rows), so exact Gaussian elimination is all we need.
class Matrix {
public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Felt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Felt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);

  /// Matrix-vector product m*x (x indexed by columns).
  Vec apply(const Vec& x) const;
  Matrix multiply(const Matrix& other) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Felt> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination; pivot choice is
/// the first nonzero entry scanning down, so the output is deterministic.
RrefResult rref(const Matrix& m);

/// A linear subspace of F^ambient_dim given by an independent list of basis rows.
struct Subspace {
  Field field;
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  static Subspace zero(const Field& f, std::size_t ambient) { return {f, ambient, {}}; }
};

/// Basis of {x : m x = 0}, one vector per free column in ascending column order.
Subspace kernel_basis(const Matrix& m);

/// Canonical (echelon) basis of the column space of m.
Subspace image_basis(const Matrix& m);

/// Coordinates of v in s.basis if v lies in the span, otherwise nullopt.
/// Throws DimensionMismatchError if v has the wrong length.
std::optional<Vec> in_span(const Vec& v, const Subspace& s);

/// Representatives of kernel/image: vectors of the kernel whose classes form a
/// basis of the quotient. The kernel basis is reduced modulo the image and
/// re-echelonized, so the output is deterministic and supported on the lowest
/// possible coordinates. Throws ImageNotContainedError unless image <= kernel.
std::vector<Vec> complement_representatives(const Subspace& kernel, const Subspace& image);

} // namespace m2coh

#endif
