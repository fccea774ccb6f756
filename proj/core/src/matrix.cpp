#include "conmod/matrix.hpp"

#include <sstream>

namespace conmod {

Vector zero_vector(const DvrSpec& spec, std::size_t n) { return Vector(n, DvrElement(spec)); }

Vector unit_vector(const DvrSpec& spec, std::size_t n, std::size_t index) {
  Vector v = zero_vector(spec, n);
  v.at(index) = DvrElement::from_int(spec, 1);
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector sum");
  Vector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector difference");
  Vector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scaled(const DvrElement& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix::Matrix(const DvrSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, DvrElement(spec)) {}

Matrix Matrix::identity(const DvrSpec& spec, std::size_t n) {
  Matrix m(spec, n, n);
  const DvrElement one = DvrElement::from_int(spec, 1);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

Matrix Matrix::from_rows(const DvrSpec& spec, const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(spec, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorKind::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const DvrSpec& spec, const std::vector<Vector>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols.front().size();
  Matrix m(spec, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Matrix Matrix::from_ints(const DvrSpec& spec, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.push_back(DvrElement::from_int(spec, x));
    out.push_back(std::move(v));
  }
  return from_rows(spec, out);
}

Matrix Matrix::column(const Vector& v) {
  if (v.empty()) fail(ErrorKind::InvalidArgument, "empty column needs an explicit spec");
  return from_columns(v.front().spec(), {v});
}

Matrix Matrix::diagonal(const DvrSpec& spec, const Vector& entries) {
  Matrix m(spec, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_col(std::size_t j, const Vector& v) {
  if (v.size() != rows_) fail(ErrorKind::DimensionMismatch, "set_col");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(spec_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& indices) const {
  Matrix m(spec_, rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < indices.size(); ++k) m.at(i, k) = at(i, indices[k]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& indices) const {
  Matrix m(spec_, indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m.at(k, j) = at(indices[k], j);
  return m;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) fail(ErrorKind::DimensionMismatch, "block out of range");
  Matrix m(spec_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = at(row0 + i, col0 + j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix-vector product");
  Vector r = zero_vector(spec_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    }
  }
  return r;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product");
  Matrix r(a.spec_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const DvrElement& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum");
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix difference");
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

Matrix operator*(const DvrElement& c, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= c;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix hconcat(const Matrix& a, const Matrix& b) { return hconcat(a.spec(), a.rows(), {a, b}); }

Matrix hconcat(const DvrSpec& spec, std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) fail(ErrorKind::DimensionMismatch, "hconcat row counts differ");
    cols += p.cols();
  }
  Matrix m(spec, rows, cols);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) m.at(i, offset + j) = p.at(i, j);
    offset += p.cols();
  }
  return m;
}

Matrix vconcat(const Matrix& a, const Matrix& b) { return vconcat(a.spec(), a.cols(), {a, b}); }

Matrix vconcat(const DvrSpec& spec, std::size_t cols, const std::vector<Matrix>& parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) fail(ErrorKind::DimensionMismatch, "vconcat column counts differ");
    rows += p.rows();
  }
  Matrix m(spec, rows, cols);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(offset + i, j) = p.at(i, j);
    offset += p.rows();
  }
  return m;
}

Matrix block_diagonal(const DvrSpec& spec, const std::vector<Matrix>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(spec, rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

}  // namespace conmod
