#include "ietilt/linalg.hpp"

#include <sstream>
#include <utility>

#include "ietilt/error.hpp"

namespace ietilt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(Scalar p) : p_(p) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
}

Scalar Field::inv(Scalar a) const {
  if (a % p_ == 0) throw InvalidInput("division by zero in GF(" + std::to_string(p_) + ")");
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
    e >>= 1U;
  }
  return static_cast<Scalar>(result);
}

Scalar Field::reduce(std::int64_t a) const {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return static_cast<Scalar>(r);
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw InvalidInput("matrix entry count " + std::to_string(data_.size()) + " does not match shape " +
                       std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (auto& x : data_) x %= field_.p();
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidInput("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw InvalidInput("matrix product shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                       " * " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  Matrix out(field_, rows_, rhs.cols_);
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        auto& dst = out.data_[i * rhs.cols_ + j];
        dst = static_cast<Scalar>((dst + a * rhs.data_[k * rhs.cols_ + j]) % p);
      }
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
  Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = (acc + std::uint64_t{data_[i * cols_ + k]} * v[k]) % field_.p();
    out[i] = static_cast<Scalar>(acc);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, s % field_.p());
  return out;
}

Matrix Matrix::hconcat(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) throw InvalidInput("hconcat row mismatch");
  Matrix out(field_, rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.data_[r * out.cols_ + c] = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out.data_[r * out.cols_ + cols_ + c] = rhs(r, c);
  }
  return out;
}

Matrix Matrix::vconcat(const Matrix& rhs) const {
  if (cols_ != rhs.cols_) throw InvalidInput("vconcat column mismatch");
  Matrix out(field_, rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Echelon row_reduce(const Matrix& a) {
  const Field& f = a.field();
  Echelon e{a, {}};
  Matrix& m = e.reduced;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        const Scalar tmp = m(pivot, k);
        m.set(pivot, k, m(lead_row, k));
        m.set(lead_row, k, tmp);
      }
    }
    const Scalar scale = f.inv(m(lead_row, c));
    for (std::size_t k = c; k < m.cols(); ++k) m.set(lead_row, k, f.mul(m(lead_row, k), scale));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row) continue;
      const Scalar factor = m(r, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < m.cols(); ++k) m.set(r, k, f.sub(m(r, k), f.mul(factor, m(lead_row, k))));
    }
    e.pivots.push_back(c);
    ++lead_row;
  }
  return e;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& a) {
  const Echelon e = row_reduce(a);
  const Field& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) {
    throw InvalidInput("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                       std::to_string(a.rows()));
  }
  const Matrix aug = a.hconcat(Matrix::from_columns(a.field(), a.rows(), {b}));
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::vector<Vector> image_basis(const Matrix& a) {
  const Echelon e = row_reduce(a.transpose());
  std::vector<Vector> basis;
  basis.reserve(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.push_back(e.reduced.row(r));
  return basis;
}

Matrix kernel_matrix(const Matrix& a) { return Matrix::from_columns(a.field(), a.cols(), kernel_basis(a)); }

Matrix image_matrix(const Matrix& a) { return Matrix::from_columns(a.field(), a.rows(), image_basis(a)); }

Matrix canonical_span(const Matrix& a) { return image_matrix(a); }

bool is_invertible(const Matrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

Matrix right_inverse(const Matrix& a) {
  std::vector<Vector> cols;
  cols.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector e(a.rows(), 0);
    e[i] = 1;
    auto x = solve(a, e);
    if (!x) throw InvalidInput("right_inverse: matrix does not have full row rank");
    cols.push_back(std::move(*x));
  }
  return Matrix::from_columns(a.field(), a.cols(), cols);
}

Matrix coordinates(const Matrix& basis, const Matrix& target) {
  if (basis.rows() != target.rows()) throw InvalidInput("coordinates: row mismatch");
  std::vector<Vector> cols;
  cols.reserve(target.cols());
  for (std::size_t c = 0; c < target.cols(); ++c) {
    auto x = solve(basis, target.column(c));
    if (!x) throw InvalidInput("coordinates: vector outside the span of the basis");
    cols.push_back(std::move(*x));
  }
  return Matrix::from_columns(basis.field(), basis.cols(), cols);
}

}  // namespace ietilt
