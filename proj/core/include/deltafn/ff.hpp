// Dense linear algebra over small prime fields F_p.
//
// Conventions used throughout the library: vectors are rows and matrices act
// on the right, so a representation satisfies rho(gh) = rho(g) * rho(h).

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deltafn {

/// Raised when operands do not fit together (shape or modulus mismatch).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for algebraic preconditions that fail at runtime (singular input,
/// non-subgroup, non-projective module, ...).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_supported_prime(int p);

/// Multiplicative inverse modulo a small prime.
int inv_mod(int a, int p);

/// A scalar of F_p. Only used at API boundaries; matrices store raw bytes.
struct FFScalar {
  std::uint8_t value = 0;
  std::uint8_t p = 2;

  FFScalar() = default;
  FFScalar(long long v, int prime);

  friend bool operator==(const FFScalar&, const FFScalar&) = default;
  FFScalar operator+(FFScalar o) const;
  FFScalar operator-(FFScalar o) const;
  FFScalar operator*(FFScalar o) const;
  FFScalar inverse() const;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int p, std::size_t rows, std::size_t cols);

  static Matrix identity(int p, std::size_t n);
  static Matrix from_rows(int p, const std::vector<std::vector<int>>& rows);
  /// Stack rows of `blocks` on top of each other (all must share cols and p).
  static Matrix vstack(std::span<const Matrix> blocks);

  int p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v);

  std::span<const std::uint8_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<std::uint8_t>& data() const { return data_; }

  Matrix row_matrix(std::size_t r) const;
  Matrix rows_range(std::size_t begin, std::size_t end) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  void append_row(std::span<const std::uint8_t> r);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(int k) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  int p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// dst += c * src (entry-wise, mod p).
void axpy(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src, int c, int p);
/// v *= c (mod p).
void scale_in_place(std::span<std::uint8_t> v, int c, int p);
/// Row vector times matrix.
std::vector<std::uint8_t> vec_mul(std::span<const std::uint8_t> v, const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form with first-nonzero pivoting.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis (as rows) of {x : m * x^T = 0}. Row count is cols - rank.
Matrix kernel_basis(const Matrix& m);
/// Basis (as rows) of {x : x * m = 0}.
Matrix left_kernel(const Matrix& m);

Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Kronecker product; kron(a,b)*kron(c,d) == kron(a*c, b*d).
Matrix kron(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned long long e);

/// Basis of {F (r x s) : X_i F = F Y_i for all i}. Direct Sylvester-system
/// solve; quadratic in r*s, intended for small sizes and as an oracle.
std::vector<Matrix> solve_all(std::span<const std::pair<Matrix, Matrix>> pairs);

/// Characteristic polynomial det(xI - m), coefficients low to high, monic.
std::vector<int> charpoly(const Matrix& m);

/// Incrementally maintained echelon basis of a subspace of F_p^n.
///
/// Each stored row has a pivot with value 1. Optionally records, for every
/// stored row, its expression in terms of the vectors that were inserted, so
/// that `express` can write a member of the span in the inserted basis.
class EchelonBasis {
 public:
  EchelonBasis(int p, std::size_t dim, bool track_coefficients = false);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return inserted_; }
  bool full() const { return inserted_ == dim_; }

  /// Reduce v against the basis in place; returns true if v became zero.
  bool reduce(std::span<std::uint8_t> v) const;
  bool contains(std::span<const std::uint8_t> v) const;
  /// Inserts v if it is independent; returns whether it was inserted.
  bool insert(std::span<const std::uint8_t> v);
  /// Coefficients of v in the inserted vectors; empty optional semantics via
  /// the bool return.
  bool express(std::span<const std::uint8_t> v, std::vector<std::uint8_t>& coeffs) const;

  /// Echelon rows (not the inserted vectors).
  Matrix echelon_rows() const;
  const std::vector<std::size_t>& pivots() const { return pivot_col_; }

 private:
  int p_;
  std::size_t dim_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<std::uint8_t>> rows_;
  std::vector<std::vector<std::uint8_t>> coef_;
  std::vector<std::size_t> pivot_col_;
};

}  // namespace deltafn
