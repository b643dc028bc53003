#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fewpaths {

// Row-major dense real matrix. Entries are always finite.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws std::invalid_argument on ragged rows or non-finite entries.
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  double &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<double> column(std::size_t c) const;

  DenseMatrix transposed() const;
  DenseMatrix scaled(double factor) const;

  // Largest absolute entry (0 for an empty matrix).
  double max_abs() const noexcept;
  bool all_finite() const noexcept;

  friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix operator+(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b);

std::vector<double> multiply(const DenseMatrix &a, std::span<const double> x);

// max |a_ij - b_ij|
double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b);

} // namespace fewpaths
