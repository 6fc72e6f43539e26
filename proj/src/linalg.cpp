#include "equichar/linalg.hpp"

#include <algorithm>

namespace equichar {

FFMatrix FFMatrix::identity(std::shared_ptr<const FiniteField> field, std::size_t n) {
  FFMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FFMatrix FFMatrix::operator*(const FFMatrix& other) const {
  if (cols_ != other.rows_) throw Error(Error::Kind::shape, "matrix product shape mismatch");
  FFMatrix out(field_, rows_, other.cols_);
  const FiniteField& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      FiniteField::Elt a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        FiniteField::Elt b = other.at(k, j);
        if (b == 0) continue;
        out.at(i, j) = f.add(out.at(i, j), f.mul(a, b));
      }
    }
  return out;
}

FFMatrix FFMatrix::operator-(const FFMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(Error::Kind::shape, "matrix difference shape mismatch");
  FFMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_->sub(data_[i], other.data_[i]);
  return out;
}

FFMatrix FFMatrix::operator+(const FFMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(Error::Kind::shape, "matrix sum shape mismatch");
  FFMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_->add(data_[i], other.data_[i]);
  return out;
}

FFMatrix FFMatrix::pow(long e) const {
  if (!is_square()) throw Error(Error::Kind::shape, "matrix power of non-square matrix");
  if (e < 0) throw Error(Error::Kind::domain, "negative matrix power");
  FFMatrix acc = identity(field_, rows_);
  FFMatrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FFMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FiniteField::Elt e) { return e == 0; });
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(FFMatrix& m) {
  const FiniteField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    FiniteField::Elt inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      FiniteField::Elt factor = m.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FFMatrix& m) {
  FFMatrix copy = m;
  return echelon(copy).size();
}

std::vector<std::vector<FiniteField::Elt>> kernel_basis(const FFMatrix& m) {
  FFMatrix copy = m;
  std::vector<std::size_t> pivots = echelon(copy);
  const FiniteField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FiniteField::Elt>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FiniteField::Elt> v(m.cols(), 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(copy.at(i, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t eigenspace_dimension(const FFMatrix& m, FiniteField::Elt lambda) {
  if (!m.is_square()) throw Error(Error::Kind::shape, "eigenspace of non-square matrix");
  FFMatrix shifted = m;
  const FiniteField& f = m.field();
  for (std::size_t i = 0; i < m.rows(); ++i)
    shifted.at(i, i) = f.sub(shifted.at(i, i), lambda);
  return m.cols() - rank(shifted);
}

std::map<std::size_t, std::size_t> jordan_type_of_unipotent(const FFMatrix& m) {
  if (!m.is_square()) throw Error(Error::Kind::shape, "Jordan type of non-square matrix");
  const std::size_t n = m.rows();
  FFMatrix u = m - FFMatrix::identity(m.field_ptr(), n);
  // ranks[j] = rank((M - I)^j); blocks of size >= j equal ranks[j-1] - ranks[j].
  std::vector<std::size_t> ranks{n};
  FFMatrix power = FFMatrix::identity(m.field_ptr(), n);
  for (std::size_t j = 1; j <= n + 1; ++j) {
    power = power * u;
    ranks.push_back(rank(power));
    if (ranks.back() == 0) break;
  }
  if (ranks.back() != 0)
    throw Error(Error::Kind::domain, "matrix is not unipotent");
  std::map<std::size_t, std::size_t> type;
  for (std::size_t j = 1; j + 1 <= ranks.size(); ++j) {
    std::size_t at_least_j = ranks[j - 1] - ranks[j];
    std::size_t at_least_j1 = j + 1 < ranks.size() ? ranks[j] - ranks[j + 1] : 0;
    std::size_t exactly_j = at_least_j - at_least_j1;
    if (exactly_j > 0) type[j] = exactly_j;
  }
  return type;
}

}  // namespace equichar
