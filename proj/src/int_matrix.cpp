#include "ghostlength/int_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace ghostlength {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> rs;
  for (const auto& r : rows) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    rs.push_back(std::move(v));
  }
  return from_rows(rs);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, const IntVector& v) {
  require(v.size() == rows_ && c < cols_, "set_column: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block: out of range");
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  require(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_, "set_block: out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, idx[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(idx[k], c);
  return m;
}

Integer IntMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& x : data_)
    if (abs(x) > best) best = abs(x);
  return best;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m(*this);
  for (auto& x : m.data_) x = -x;
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "operator+: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "operator-: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_columns(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::combine_rows(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                             const Integer& c, const Integer& d) {
  for (std::size_t k = 0; k < cols_; ++k) {
    Integer x = (*this)(i, k);
    Integer y = (*this)(j, k);
    (*this)(i, k) = a * x + b * y;
    (*this)(j, k) = c * x + d * y;
  }
}

void IntMatrix::combine_columns(std::size_t i, std::size_t j, const Integer& a,
                                const Integer& b, const Integer& c, const Integer& d) {
  for (std::size_t k = 0; k < rows_; ++k) {
    Integer x = (*this)(k, i);
    Integer y = (*this)(k, j);
    (*this)(k, i) = a * x + b * y;
    (*this)(k, j) = c * x + d * y;
  }
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), "operator*: inner dimensions differ");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix m(a);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
  return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  require(a.cols() == x.size(), "operator*: vector length differs");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows() == b.rows(), "hconcat: row counts differ");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.cols(), "vconcat: column counts differ");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

IntMatrix block2x2(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                   const IntMatrix& d) {
  return vconcat(hconcat(a, b), hconcat(c, d));
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  return block2x2(a, IntMatrix(a.rows(), b.cols()), IntMatrix(b.rows(), a.cols()), b);
}

Integer determinant(const IntMatrix& a) {
  require(a.rows() == a.cols(), "determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m(a);
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix reduce_mod(const IntMatrix& a, const Integer& m) {
  if (m == 0) return a;
  IntMatrix r(a);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      Integer x;
      mpz_fdiv_r(x.get_mpz_t(), r(i, j).get_mpz_t(), m.get_mpz_t());
      r(i, j) = x;
    }
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).get_str();
    os << ']';
  }
  return os << ']';
}

}  // namespace ghostlength
