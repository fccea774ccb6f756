#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "conmod/dvr.hpp"

namespace conmod {

using Vector = std::vector<DvrElement>;

Vector zero_vector(const DvrSpec& spec, std::size_t n);
Vector unit_vector(const DvrSpec& spec, std::size_t n, std::size_t index);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const DvrElement& c, const Vector& v);
bool is_zero(const Vector& v);

// Dense row-major matrix over one DVR. Columns are the usual carriers of generators.
class Matrix {
 public:
  Matrix(const DvrSpec& spec, std::size_t rows, std::size_t cols);

  static Matrix identity(const DvrSpec& spec, std::size_t n);
  static Matrix from_rows(const DvrSpec& spec, const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix from_columns(const DvrSpec& spec, const std::vector<Vector>& cols, std::size_t rows = 0);
  static Matrix from_ints(const DvrSpec& spec, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix column(const Vector& v);
  static Matrix diagonal(const DvrSpec& spec, const Vector& entries);

  const DvrSpec& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  DvrElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const DvrElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector col(std::size_t j) const;
  Vector row(std::size_t i) const;
  void set_col(std::size_t j, const Vector& v);

  Matrix transpose() const;
  Matrix select_cols(const std::vector<std::size_t>& indices) const;
  Matrix select_rows(const std::vector<std::size_t>& indices) const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  bool is_zero() const;
  Vector apply(const Vector& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  std::string to_string() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const DvrElement& c, const Matrix& m);
  bool operator==(const Matrix& o) const;

 private:
  DvrSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<DvrElement> data_;
};

Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix hconcat(const DvrSpec& spec, std::size_t rows, const std::vector<Matrix>& parts);
Matrix vconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const DvrSpec& spec, std::size_t cols, const std::vector<Matrix>& parts);
Matrix block_diagonal(const DvrSpec& spec, const std::vector<Matrix>& blocks);

}  // namespace conmod
