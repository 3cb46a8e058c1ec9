#pragma once

#include "nilext/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

namespace nilext {

/// Dense row-major rational matrix. Acts on column vectors.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  /// Rows of the result are the given vectors (all of length `cols`).
  static Mat from_rows(std::span<const Vec> rows, std::size_t cols);
  /// Inverse of flatten(): a length n*n vector read row-major.
  static Mat unflatten(const Vec& v, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);
  void swap_rows(std::size_t a, std::size_t b);

  Vec flatten() const { return data_; }
  Mat transpose() const;
  bool is_zero() const;
  Rat trace() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Rat& s, Mat a);
Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);

/// a*b - b*a
Mat commutator(const Mat& a, const Mat& b);
Mat power(const Mat& m, std::size_t k);

/// Stacks rows of `top` over rows of `bottom`.
Mat vstack(const Mat& top, const Mat& bottom);

std::string to_string(const Mat& m);

}  // namespace nilext
