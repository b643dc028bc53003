#include "fewpaths/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fewpaths {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("DenseMatrix: ragged initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) {
    throw std::invalid_argument("DenseMatrix: non-finite entry");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    m(i, i) = values[i];
  }
  return m;
}

std::vector<double> DenseMatrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

DenseMatrix DenseMatrix::scaled(double factor) const {
  DenseMatrix out = *this;
  for (auto &x : out.data_) {
    x *= factor;
  }
  return out;
}

double DenseMatrix::max_abs() const noexcept {
  double best = 0.0;
  for (double x : data_) {
    best = std::max(best, std::abs(x));
  }
  return best;
}

bool DenseMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("DenseMatrix multiply: shape mismatch");
  }
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

namespace {

template <class Op>
DenseMatrix elementwise(const DenseMatrix &a, const DenseMatrix &b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("DenseMatrix: shape mismatch");
  }
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) = op(a(i, j), b(i, j));
    }
  }
  return c;
}

} // namespace

DenseMatrix operator+(const DenseMatrix &a, const DenseMatrix &b) {
  return elementwise(a, b, [](double x, double y) { return x + y; });
}

DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b) {
  return elementwise(a, b, [](double x, double y) { return x - y; });
}

std::vector<double> multiply(const DenseMatrix &a, std::span<const double> x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("DenseMatrix multiply: shape mismatch");
  }
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc += a(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b) {
  return (a - b).max_abs();
}

} // namespace fewpaths
