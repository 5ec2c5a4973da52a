#pragma once

#include "qmink/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qmink {

/// Dense exact matrix. Tensor legs use the row-major pair index
/// (i, j) -> n*i + j throughout the engine.
class Mat {
public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Mat(size_t rows, size_t cols, std::vector<Scalar> entries);

  static Mat identity(size_t n);
  static Mat zero(size_t rows, size_t cols) { return Mat(rows, cols); }
  /// Column vector from entries.
  static Mat column(std::vector<Scalar> entries);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar &operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const Scalar &operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Scalar> &entries() const { return entries_; }

  Mat &operator+=(const Mat &o);
  Mat &operator-=(const Mat &o);
  Mat &operator*=(const Scalar &s);
  friend Mat operator+(Mat a, const Mat &b) { return a += b; }
  friend Mat operator-(Mat a, const Mat &b) { return a -= b; }
  friend Mat operator*(Mat a, const Scalar &s) { return a *= s; }
  friend Mat operator*(const Scalar &s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat &a, const Mat &b);
  friend bool operator==(const Mat &a, const Mat &b) = default;

  Mat transpose() const;
  Mat conj() const;
  Mat adjoint() const { return transpose().conj(); }
  /// Throws ConstraintError when singular.
  Mat inverse() const;
  size_t rank() const;
  bool is_zero() const;
  bool is_invertible() const { return is_square() && rank() == rows_; }

  /// Largest-index nonzero entry formatted "(r,c)=value", or "0".
  std::string witness() const;
  std::string to_string() const;

private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Kronecker product; entry ((i,p),(j,q)) = a(i,j) * b(p,q).
Mat kron(const Mat &a, const Mat &b);

/// The (m*n)x(n*m) twist e_i (x) e_j -> e_j (x) e_i.
Mat flip(size_t m, size_t n);

/// 1 (x) x (x) 1 on (C^2)^{(x)4} for a 4x4 map x on the middle pair.
Mat middle_embed(const Mat &x);

/// Pauli matrices sigma_0 = 1, sigma_1, sigma_2, sigma_3.
const Mat &pauli(size_t i);

/// V with V_{CD,i} = (sigma_i)_{CD}.
const Mat &spinor_vector_map();

} // namespace qmink
