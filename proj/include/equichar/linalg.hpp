#pragma once

#include <map>
#include <memory>
#include <vector>

#include "equichar/finite_field.hpp"

namespace equichar {

/// Dense matrix over a finite field.
class FFMatrix {
 public:
  FFMatrix() = default;
  FFMatrix(std::shared_ptr<const FiniteField> field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FFMatrix identity(std::shared_ptr<const FiniteField> field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }

  FiniteField::Elt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FiniteField::Elt at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FFMatrix operator*(const FFMatrix& other) const;
  FFMatrix operator-(const FFMatrix& other) const;
  FFMatrix operator+(const FFMatrix& other) const;
  bool operator==(const FFMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  FFMatrix pow(long e) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

 private:
  std::shared_ptr<const FiniteField> field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FiniteField::Elt> data_;
};

std::size_t rank(const FFMatrix& m);
std::vector<std::vector<FiniteField::Elt>> kernel_basis(const FFMatrix& m);
/// Dimension of ker(M - lambda I); requires a square matrix.
std::size_t eigenspace_dimension(const FFMatrix& m, FiniteField::Elt lambda);

/// Multiset of Jordan block sizes of a unipotent matrix, derived from the
/// ranks of powers of M - I. Requires (M - I)^k = 0 for some k.
std::map<std::size_t, std::size_t> jordan_type_of_unipotent(const FFMatrix& m);

}  // namespace equichar
