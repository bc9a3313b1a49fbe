#include "deltafn/ff.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace deltafn {

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5; }

int inv_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw AlgebraError("inv_mod: zero has no inverse");
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw AlgebraError("inv_mod: modulus is not prime");
}

static std::uint8_t reduce_ll(long long v, int p) {
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint8_t>(r);
}

FFScalar::FFScalar(long long v, int prime) : value(reduce_ll(v, prime)), p(static_cast<std::uint8_t>(prime)) {
  if (!is_supported_prime(prime)) throw DimensionError("FFScalar: unsupported prime");
}

FFScalar FFScalar::operator+(FFScalar o) const {
  if (o.p != p) throw DimensionError("FFScalar: modulus mismatch");
  return {value + o.value, p};
}
FFScalar FFScalar::operator-(FFScalar o) const {
  if (o.p != p) throw DimensionError("FFScalar: modulus mismatch");
  return {static_cast<long long>(value) - o.value, p};
}
FFScalar FFScalar::operator*(FFScalar o) const {
  if (o.p != p) throw DimensionError("FFScalar: modulus mismatch");
  return {static_cast<long long>(value) * o.value, p};
}
FFScalar FFScalar::inverse() const { return {inv_mod(value, p), p}; }

// ---------------------------------------------------------------------------

Matrix::Matrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!is_supported_prime(p)) throw DimensionError("Matrix: unsupported prime " + std::to_string(p));
}

Matrix Matrix::identity(int p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(p, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionError("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.cols_ != blocks.front().cols_ || b.p_ != blocks.front().p_)
      throw DimensionError("Matrix::vstack: incompatible blocks");
    total += b.rows_;
  }
  Matrix out(blocks.front().p_, total, blocks.front().cols_);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(off));
    off += b.data_.size();
  }
  return out;
}

void Matrix::set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = reduce_ll(v, p_); }

Matrix Matrix::row_matrix(std::size_t r) const { return rows_range(r, r + 1); }

Matrix Matrix::rows_range(std::size_t begin, std::size_t end) const {
  Matrix out(p_, end - begin, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(begin * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>(end * cols_), out.data_.begin());
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(p_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) std::ranges::copy(row(idx[i]), out.row(i).begin());
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix out(p_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.data_[i * idx.size() + j] = (*this)(i, idx[j]);
  return out;
}

void Matrix::append_row(std::span<const std::uint8_t> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DimensionError("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = data_[i * cols_ + j];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw DimensionError("Matrix::operator*: shape or modulus mismatch");
  Matrix out(p_, rows_, o.cols_);
  const std::size_t n = o.cols_;
  if (n == 0) return out;
  if (p_ == 2) {
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint8_t* dst = out.data_.data() + i * n;
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!data_[i * cols_ + k]) continue;
        const std::uint8_t* src = o.data_.data() + k * n;
        for (std::size_t j = 0; j < n; ++j) dst[j] ^= src[j];
      }
    }
    return out;
  }
  std::vector<std::uint32_t> acc(n);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = data_[i * cols_ + k];
      if (!a) continue;
      const std::uint8_t* src = o.data_.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) acc[j] += a * src[j];
    }
    std::uint8_t* dst = out.data_.data() + i * n;
    const auto pp = static_cast<std::uint32_t>(p_);
    for (std::size_t j = 0; j < n; ++j) dst[j] = static_cast<std::uint8_t>(acc[j] % pp);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw DimensionError("Matrix::operator+: mismatch");
  Matrix out = *this;
  axpy(out.data_, o.data_, 1, p_);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw DimensionError("Matrix::operator-: mismatch");
  Matrix out = *this;
  axpy(out.data_, o.data_, p_ - 1, p_);
  return out;
}

Matrix Matrix::scaled(int k) const {
  Matrix out = *this;
  scale_in_place(out.data_, ((k % p_) + p_) % p_, p_);
  return out;
}

bool Matrix::is_zero() const {
  return std::ranges::all_of(data_, [](std::uint8_t v) { return v == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (data_[i * cols_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool operator<(const Matrix& a, const Matrix& b) {
  return std::tie(a.p_, a.rows_, a.cols_, a.data_) < std::tie(b.p_, b.rows_, b.cols_, b.data_);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << int((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

void axpy(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src, int c, int p) {
  c %= p;
  if (c == 0) return;
  const std::size_t n = dst.size();
  if (p == 2) {
    for (std::size_t j = 0; j < n; ++j) dst[j] ^= src[j];
    return;
  }
  std::array<std::uint8_t, 8> lut{};
  for (int s = 0; s < p; ++s) lut[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>((c * s) % p);
  const auto pp = static_cast<std::uint8_t>(p);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint8_t t = static_cast<std::uint8_t>(dst[j] + lut[src[j]]);
    dst[j] = t >= pp ? static_cast<std::uint8_t>(t - pp) : t;
  }
}

void scale_in_place(std::span<std::uint8_t> v, int c, int p) {
  if (c == 1) return;
  for (auto& x : v) x = static_cast<std::uint8_t>((x * c) % p);
}

std::vector<std::uint8_t> vec_mul(std::span<const std::uint8_t> v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionError("vec_mul: width mismatch");
  std::vector<std::uint8_t> out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) axpy(out, m.row(k), v[k], m.p());
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}, 0};
  Matrix& a = res.reduced;
  const int p = a.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    scale_in_place(a.row(r), inv_mod(a(r, c), p), p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      axpy(a.row(i), a.row(r), p - a(i, c), p);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Matrix& m) {
  EchelonBasis eb(m.p(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) eb.insert(m.row(i));
  return eb.size();
}

Matrix kernel_basis(const Matrix& m) {
  const int p = m.p();
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  Matrix out(p, m.cols() - rr.rank, m.cols());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    out.set(k, f, 1);
    for (std::size_t i = 0; i < rr.rank; ++i) out.set(k, rr.pivots[i], -static_cast<int>(rr.reduced(i, f)));
    ++k;
  }
  return out;
}

Matrix left_kernel(const Matrix& m) { return kernel_basis(m.transpose()); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.p(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, 1);
  }
  auto rr = rref(aug);
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) throw AlgebraError("inverse: singular matrix");
  Matrix out(m.p(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, rr.reduced(i, n + j));
  return out;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.p() != b.p()) throw DimensionError("kron: modulus mismatch");
  Matrix out(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
  const int p = a.p();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const int x = a(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, (x * b(k, l)) % p);
    }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (a.p() != b.p()) throw DimensionError("direct_sum: modulus mismatch");
  Matrix out(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

Matrix power(const Matrix& m, unsigned long long e) {
  Matrix result = Matrix::identity(m.p(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1ULL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<Matrix> solve_all(std::span<const std::pair<Matrix, Matrix>> pairs) {
  if (pairs.empty()) throw DimensionError("solve_all: no constraints given");
  const std::size_t r = pairs.front().first.rows();
  const std::size_t s = pairs.front().second.rows();
  const int p = pairs.front().first.p();
  for (const auto& [x, y] : pairs) {
    if (!x.is_square() || !y.is_square() || x.rows() != r || y.rows() != s || x.p() != p || y.p() != p)
      throw DimensionError("solve_all: inconsistent pair dimensions");
  }
  // Unknown F(a,b) sits at column a*s+b; one equation per (pair, a, b).
  Matrix eq(p, pairs.size() * r * s, r * s);
  std::size_t row = 0;
  for (const auto& [x, y] : pairs) {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < s; ++b, ++row) {
        auto dst = eq.row(row);
        for (std::size_t c = 0; c < r; ++c)
          if (x(a, c)) dst[c * s + b] = static_cast<std::uint8_t>((dst[c * s + b] + x(a, c)) % p);
        for (std::size_t c = 0; c < s; ++c)
          if (y(c, b)) dst[a * s + c] = static_cast<std::uint8_t>((dst[a * s + c] + p - y(c, b)) % p);
      }
  }
  Matrix ker = kernel_basis(eq);
  std::vector<Matrix> out;
  out.reserve(ker.rows());
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Matrix f(p, r, s);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < s; ++b) f.set(a, b, ker(k, a * s + b));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> charpoly(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("charpoly: non-square matrix");
  const int p = m.p();
  const std::size_t n = m.rows();
  // Work on columns-as-usual matrix A; similarity transforms keep the polynomial.
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  auto md = [p](long long v) { return static_cast<int>(((v % p) + p) % p); };
  // Reduce to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(a[piv], a[c + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][c + 1]);
    }
    const int inv = inv_mod(a[c + 1][c], p);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const int f = md(static_cast<long long>(a[i][c]) * inv);
      for (std::size_t j = 0; j < n; ++j) a[i][j] = md(a[i][j] - static_cast<long long>(f) * a[c + 1][j]);
      for (std::size_t j = 0; j < n; ++j) a[j][c + 1] = md(a[j][c + 1] + static_cast<long long>(f) * a[j][i]);
    }
  }
  // Recurrence over leading principal blocks of the Hessenberg matrix.
  std::vector<std::vector<int>> poly(n + 1);
  poly[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<int> pk(k + 1, 0);
    // (x - a[k-1][k-1]) * poly[k-1]
    for (std::size_t d = 0; d < poly[k - 1].size(); ++d) {
      pk[d + 1] = md(pk[d + 1] + poly[k - 1][d]);
      pk[d] = md(pk[d] - static_cast<long long>(a[k - 1][k - 1]) * poly[k - 1][d]);
    }
    long long prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      const std::size_t row = k - 1 - i;
      prod = md(prod * a[row + 1][row]);
      const long long coef = md(prod * a[row][k - 1]);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < poly[row].size(); ++d)
        pk[d] = md(pk[d] - coef * poly[row][d]);
    }
    poly[k] = std::move(pk);
  }
  return poly[n];
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(int p, std::size_t dim, bool track_coefficients)
    : p_(p), dim_(dim), track_(track_coefficients) {}

bool EchelonBasis::reduce(std::span<std::uint8_t> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto c = v[pivot_col_[i]];
    if (c) axpy(v, rows_[i], p_ - c, p_);
  }
  return std::ranges::all_of(v, [](std::uint8_t x) { return x == 0; });
}

bool EchelonBasis::contains(std::span<const std::uint8_t> v) const {
  std::vector<std::uint8_t> tmp(v.begin(), v.end());
  return reduce(tmp);
}

bool EchelonBasis::insert(std::span<const std::uint8_t> v) {
  if (v.size() != dim_) throw DimensionError("EchelonBasis::insert: width mismatch");
  std::vector<std::uint8_t> tmp(v.begin(), v.end());
  std::vector<std::uint8_t> coef;
  if (track_) {
    coef.assign(dim_, 0);
    coef[inserted_] = 1;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto c = tmp[pivot_col_[i]];
    if (!c) continue;
    axpy(tmp, rows_[i], p_ - c, p_);
    if (track_) axpy(coef, coef_[i], p_ - c, p_);
  }
  auto it = std::ranges::find_if(tmp, [](std::uint8_t x) { return x != 0; });
  if (it == tmp.end()) return false;
  const auto col = static_cast<std::size_t>(it - tmp.begin());
  const int s = inv_mod(*it, p_);
  scale_in_place(tmp, s, p_);
  if (track_) scale_in_place(coef, s, p_);
  rows_.push_back(std::move(tmp));
  if (track_) coef_.push_back(std::move(coef));
  pivot_col_.push_back(col);
  ++inserted_;
  return true;
}

bool EchelonBasis::express(std::span<const std::uint8_t> v, std::vector<std::uint8_t>& coeffs) const {
  if (!track_) throw AlgebraError("EchelonBasis::express: coefficients not tracked");
  std::vector<std::uint8_t> tmp(v.begin(), v.end());
  coeffs.assign(dim_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto c = tmp[pivot_col_[i]];
    if (!c) continue;
    axpy(tmp, rows_[i], p_ - c, p_);
    axpy(coeffs, coef_[i], c, p_);
  }
  coeffs.resize(inserted_);
  return std::ranges::all_of(tmp, [](std::uint8_t x) { return x == 0; });
}

Matrix EchelonBasis::echelon_rows() const {
  Matrix out(p_, rows_.size(), dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i) std::ranges::copy(rows_[i], out.row(i).begin());
  return out;
}

}  // namespace deltafn
