#include "qmod/linalg.hpp"

#include <algorithm>
#include <utility>

#include "qmod/error.hpp"
#include "qmod/rng.hpp"

namespace qmod {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > (1u << 30))
    throw Error(ErrorCode::InvalidArgument, "field characteristic must be a prime below 2^30, got " +
                                                std::to_string(p));
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1 % p_;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return pow(a, p_ - 2);
}

Elem Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::random(Rng& rng) const { return static_cast<Elem>(rng.below(p_)); }

Elem Field::random_nonzero(Rng& rng) const { return static_cast<Elem>(1 + rng.below(p_ - 1)); }

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::InvalidArgument, "matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::column(std::size_t j) const {
  Matrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
  Matrix c(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) c(i, k) = (*this)(i, idx[k]);
  return c;
}

Matrix Matrix::rows_range(std::size_t begin, std::size_t end) const {
  Matrix r(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i - begin, j) = (*this)(i, j);
  return r;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  const std::uint64_t p = f.prime();
  Matrix c(a.rows(), b.cols());
  // Accumulate in 64 bits; p < 2^30 so up to 16 products fit before reduction.
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        acc[j] += aik * b(k, j);
        if (acc[j] >= (1ull << 62)) acc[j] %= p;
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Elem>(acc[j] % p);
  }
  return c;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::InvalidArgument, "matrix sum shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::InvalidArgument, "matrix difference shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(const Field& f, const Matrix& a, Elem s) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(a(i, j), s);
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "hstack row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::InvalidArgument, "vstack column mismatch");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

Matrix matrix_power(const Field& f, const Matrix& a, std::size_t k) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (k) {
    if (k & 1) result = multiply(f, result, base);
    k >>= 1;
    if (k) base = multiply(f, base, base);
  }
  return result;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.random(rng);
  return m;
}

Echelon row_reduce(const Field& f, Matrix a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    const Elem inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Elem factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Field& f, const Matrix& a) {
  if (a.empty()) return 0;
  return row_reduce(f, a).pivots.size();
}

Matrix kernel(const Field& f, const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Matrix::identity(n);
  const Echelon e = row_reduce(f, a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(n, free.size());
  for (std::size_t idx = 0; idx < free.size(); ++idx) {
    const std::size_t fc = free[idx];
    k(fc, idx) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], idx) = f.neg(e.reduced(r, fc));
  }
  return k;
}

Matrix column_basis(const Field& f, const Matrix& a) {
  if (a.empty()) return Matrix(a.rows(), 0);
  return a.columns(row_reduce(f, a).pivots);
}

std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "solve shape mismatch");
  const Echelon e = row_reduce(f, hstack(a, b));
  const std::size_t n = a.cols();
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(f, a) != a.rows()) return std::nullopt;
  return solve(f, a, Matrix::identity(a.rows()));
}

Matrix empty_basis(std::size_t n) { return Matrix(n, 0); }

Matrix subspace_sum(const Field& f, const Matrix& u, const Matrix& v) {
  return column_basis(f, hstack(u, v));
}

Matrix subspace_intersection(const Field& f, const Matrix& u, const Matrix& v) {
  if (u.cols() == 0 || v.cols() == 0) return empty_basis(u.rows());
  const Matrix k = kernel(f, hstack(u, v));
  // u x + v y = 0  =>  u x lies in both spaces.
  return column_basis(f, multiply(f, u, k.rows_range(0, u.cols())));
}

Matrix preimage(const Field& f, const Matrix& a, const Matrix& u) {
  const std::size_t n = a.cols();
  if (u.cols() == 0) return kernel(f, a);
  const Matrix k = kernel(f, hstack(a, u));
  return column_basis(f, k.rows_range(0, n));
}

Matrix complement(const Field& f, const Matrix& w, std::size_t n) {
  const Matrix all = hstack(w, Matrix::identity(n));
  const Echelon e = row_reduce(f, all);
  std::vector<std::size_t> extra;
  for (std::size_t c : e.pivots)
    if (c >= w.cols()) extra.push_back(c - w.cols());
  return Matrix::identity(n).columns(extra);
}

bool contains(const Field& f, const Matrix& u, const Matrix& v) {
  if (v.cols() == 0) return true;
  return rank(f, hstack(u, v)) == rank(f, u);
}

std::vector<Elem> characteristic_polynomial(const Field& f, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix h = a;
  // Reduce to upper Hessenberg form by similarity transformations.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i > m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Elem tinv = f.inv(h(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      const Elem u = f.mul(h(r, m - 1), tinv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(r, j) = f.sub(h(r, j), f.mul(u, h(m, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, m) = f.add(h(j, m), f.mul(u, h(j, r)));
    }
  }
  std::vector<std::vector<Elem>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Elem> next(m + 1, 0);
    const Elem diag = h(m - 1, m - 1);
    for (std::size_t k = 0; k < m; ++k) {
      next[k + 1] = f.add(next[k + 1], p[m - 1][k]);
      next[k] = f.sub(next[k], f.mul(diag, p[m - 1][k]));
    }
    Elem prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, h(i, i - 1));
      if (prod == 0) break;
      const Elem coeff = f.mul(h(i - 1, m - 1), prod);
      for (std::size_t k = 0; k < p[i - 1].size(); ++k)
        next[k] = f.sub(next[k], f.mul(coeff, p[i - 1][k]));
    }
    p[m] = std::move(next);
  }
  return p[n];
}

Elem evaluate(const Field& f, const std::vector<Elem>& poly, Elem x) {
  Elem acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

Matrix evaluate(const Field& f, const std::vector<Elem>& poly, const Matrix& a) {
  Matrix acc(a.rows(), a.cols());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = multiply(f, acc, a);
    for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) = f.add(acc(i, i), *it);
  }
  return acc;
}

}  // namespace qmod
