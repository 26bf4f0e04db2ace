#pragma once

// Dense exact linear algebra over prime fields F_p.
//
// Matrices are plain row-major storage; every operation that needs arithmetic
// takes the Field explicitly. Subspaces of F_p^n are represented by matrices
// whose columns form a basis (n x k, possibly k = 0).

#include <cstdint>
#include <optional>
#include <vector>

namespace qmod {

using Elem = std::uint32_t;

class Rng;

class Field {
 public:
  explicit Field(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem inv(Elem a) const;
  Elem from_int(long long v) const noexcept;
  Elem random(Rng& rng) const;
  Elem random_nonzero(Rng& rng) const;

  bool operator==(const Field& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Elem>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  Matrix column(std::size_t j) const;
  Matrix columns(const std::vector<std::size_t>& idx) const;
  Matrix rows_range(std::size_t begin, std::size_t end) const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, const Matrix& a, Elem s);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix matrix_power(const Field& f, const Matrix& a, std::size_t k);
Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(const Field& f, Matrix a);
std::size_t rank(const Field& f, const Matrix& a);

// Columns form a basis of {x : a x = 0}.
Matrix kernel(const Field& f, const Matrix& a);
// A maximal independent subset of a's columns (pivot columns), as a matrix.
Matrix column_basis(const Field& f, const Matrix& a);
// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Field& f, const Matrix& a);

// Subspace helpers; all inputs and outputs are column bases in F_p^n.
Matrix subspace_sum(const Field& f, const Matrix& u, const Matrix& v);
Matrix subspace_intersection(const Field& f, const Matrix& u, const Matrix& v);
// {x : a x in span(u)}; n is a.cols().
Matrix preimage(const Field& f, const Matrix& a, const Matrix& u);
// Columns extending the basis w to a basis of F_p^n.
Matrix complement(const Field& f, const Matrix& w, std::size_t n);
bool contains(const Field& f, const Matrix& u, const Matrix& v);
Matrix empty_basis(std::size_t n);

// Coefficients c_0..c_n of det(t I - a), lowest degree first.
std::vector<Elem> characteristic_polynomial(const Field& f, const Matrix& a);
Elem evaluate(const Field& f, const std::vector<Elem>& poly, Elem x);
Matrix evaluate(const Field& f, const std::vector<Elem>& poly, const Matrix& a);

}  // namespace qmod
