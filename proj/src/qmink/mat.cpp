#include "qmink/mat.hpp"

#include "qmink/errors.hpp"

#include <array>
#include <utility>

namespace qmink {

Mat::Mat(size_t rows, size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw ShapeError("matrix entry count does not match shape");
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Mat Mat::column(std::vector<Scalar> entries) {
  size_t n = entries.size();
  return Mat(n, 1, std::move(entries));
}

Mat &Mat::operator+=(const Mat &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeError("matrix sum shape mismatch");
  for (size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += o.entries_[k];
  return *this;
}

Mat &Mat::operator-=(const Mat &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeError("matrix difference shape mismatch");
  for (size_t k = 0; k < entries_.size(); ++k)
    entries_[k] -= o.entries_[k];
  return *this;
}

Mat &Mat::operator*=(const Scalar &s) {
  for (auto &e : entries_)
    if (!e.is_zero())
      e *= s;
  return *this;
}

Mat operator*(const Mat &a, const Mat &b) {
  if (a.cols_ != b.rows_)
    throw ShapeError("matrix product shape mismatch");
  Mat out(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar &aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Scalar &bkj = b(k, j);
        if (!bkj.is_zero())
          out(i, j) += aik * bkj;
      }
    }
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::conj() const {
  Mat c(*this);
  for (auto &e : c.entries_)
    e = e.conj();
  return c;
}

namespace {

// Row-reduces m in place; returns pivot columns.
std::vector<size_t> row_reduce(Mat &m, Mat *companion) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero())
      ++p;
    if (p == m.rows())
      continue;
    if (p != row) {
      for (size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(row, j));
      if (companion)
        for (size_t j = 0; j < companion->cols(); ++j)
          std::swap((*companion)(p, j), (*companion)(row, j));
    }
    Scalar inv = m(row, col).inverse();
    for (size_t j = 0; j < m.cols(); ++j)
      m(row, j) *= inv;
    if (companion)
      for (size_t j = 0; j < companion->cols(); ++j)
        (*companion)(row, j) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero())
        continue;
      Scalar f = m(r, col);
      for (size_t j = 0; j < m.cols(); ++j)
        if (!m(row, j).is_zero())
          m(r, j) -= f * m(row, j);
      if (companion)
        for (size_t j = 0; j < companion->cols(); ++j)
          if (!(*companion)(row, j).is_zero())
            (*companion)(r, j) -= f * (*companion)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

Mat Mat::inverse() const {
  if (!is_square())
    throw ShapeError("inverse of non-square matrix");
  Mat work(*this);
  Mat inv = identity(rows_);
  if (row_reduce(work, &inv).size() != rows_)
    throw ConstraintError("matrix is singular");
  return inv;
}

size_t Mat::rank() const {
  Mat work(*this);
  return row_reduce(work, nullptr).size();
}

bool Mat::is_zero() const {
  for (const auto &e : entries_)
    if (!e.is_zero())
      return false;
  return true;
}

std::string Mat::witness() const {
  for (size_t k = entries_.size(); k-- > 0;)
    if (!entries_[k].is_zero())
      return "(" + std::to_string(k / cols_) + "," + std::to_string(k % cols_) +
             ")=" + entries_[k].to_string();
  return "0";
}

std::string Mat::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (size_t j = 0; j < cols_; ++j) {
      if (j)
        out += ",";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Mat kron(const Mat &a, const Mat &b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Scalar &aij = a(i, j);
      if (aij.is_zero())
        continue;
      for (size_t p = 0; p < b.rows(); ++p)
        for (size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero())
            out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return out;
}

Mat flip(size_t m, size_t n) {
  Mat out(m * n, n * m);
  // column e_i (x) e_j (index n*i + j) maps to row e_j (x) e_i (index m*j + i)
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j)
      out(m * j + i, n * i + j) = 1;
  return out;
}

Mat middle_embed(const Mat &x) {
  if (x.rows() != 4 || x.cols() != 4)
    throw ShapeError("middle_embed expects a 4x4 matrix");
  return kron(kron(Mat::identity(2), x), Mat::identity(2));
}

const Mat &pauli(size_t i) {
  static const std::array<Mat, 4> sigma = [] {
    const Scalar I = Scalar::i();
    return std::array<Mat, 4>{
        Mat(2, 2, {1, 0, 0, 1}),
        Mat(2, 2, {0, 1, 1, 0}),
        Mat(2, 2, {0, -I, I, 0}),
        Mat(2, 2, {1, 0, 0, -1}),
    };
  }();
  return sigma.at(i);
}

const Mat &spinor_vector_map() {
  static const Mat v = [] {
    Mat m(4, 4);
    for (size_t i = 0; i < 4; ++i)
      for (size_t c = 0; c < 2; ++c)
        for (size_t d = 0; d < 2; ++d)
          m(2 * c + d, i) = pauli(i)(c, d);
    return m;
  }();
  return v;
}

} // namespace qmink
