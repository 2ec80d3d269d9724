// Dense exact linear algebra over a prime field F_p.
//
// The prime is a process-wide setting (default 101). Every Matrix stores
// residues in [0, p); changing the prime after matrices exist invalidates them.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trihered {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trihered

namespace trihered::linalg {

using Elem = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 101;

bool is_prime(std::uint64_t n);

/// Sets the field characteristic. Throws Error unless p is an odd prime < 2^31.
void set_prime(std::uint32_t p);
std::uint32_t prime();

Elem reduce(std::int64_t v);
inline Elem add(Elem a, Elem b) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Elem>(s >= prime() ? s - prime() : s);
}
inline Elem sub(Elem a, Elem b) { return a >= b ? a - b : static_cast<Elem>(a + prime() - b); }
inline Elem neg(Elem a) { return a == 0 ? 0 : static_cast<Elem>(prime() - a); }
inline Elem mul(Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} * b) % prime()); }
Elem inv(Elem a);
/// Signed representative in (-p/2, p/2], used for printing.
std::int64_t centered(Elem a);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty = 0);
  /// Single column built from the given entries.
  static Matrix column(const std::vector<Elem>& entries);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  [[nodiscard]] Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  [[nodiscard]] Matrix scaled(Elem s) const;

  /// Row-major flattening as a single column.
  [[nodiscard]] Matrix vec() const;
  static Matrix unvec(const Matrix& column, std::size_t rows, std::size_t cols);

  static Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows_if_empty = 0);
  static Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols_if_empty = 0);
  static Matrix block_diag(const std::vector<Matrix>& parts);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with a*x = b, free variables zero in RREF coordinates; nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Columns form the null-space basis read off the RREF free columns.
Matrix kernel_basis(const Matrix& a);

/// The pivot columns of a: a basis of its column space.
Matrix column_space_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

/// L with L*a = I for a of full column rank.
Matrix left_inverse(const Matrix& a);

/// Coordinates on the quotient k^n / span(S).
///
/// The complement is spanned by the standard vectors at the non-pivot positions
/// of RREF(S^T), so coordinates are deterministic for a given subspace.
class QuotientChart {
 public:
  QuotientChart() = default;
  QuotientChart(const Matrix& spanning_columns, std::size_t ambient_dim);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return nonpivots_.size(); }
  [[nodiscard]] std::size_t sub_dim() const { return ambient_ - nonpivots_.size(); }

  /// ambient x m -> dim x m
  [[nodiscard]] Matrix project(const Matrix& v) const { return projection_ * v; }
  /// dim x m -> ambient x m, using the standard complement.
  [[nodiscard]] Matrix lift(const Matrix& c) const { return lift_ * c; }
  [[nodiscard]] const Matrix& projection() const { return projection_; }
  [[nodiscard]] const Matrix& lift_matrix() const { return lift_; }
  [[nodiscard]] bool contains(const Matrix& v) const { return project(v).is_zero(); }

 private:
  std::size_t ambient_ = 0;
  std::vector<std::size_t> nonpivots_;
  Matrix projection_;
  Matrix lift_;
};

/// Characteristic polynomial det(xI - m), coefficients from constant term up; monic.
std::vector<Elem> charpoly(const Matrix& m);

/// Evaluates the polynomial (constant term first) at a square matrix.
Matrix poly_eval(const std::vector<Elem>& coeffs, const Matrix& m);

Matrix mat_pow(const Matrix& m, std::size_t e);

}  // namespace trihered::linalg
