#pragma once

// Dense matrices over F_q with deterministic Gaussian elimination (first
// nonzero entry in a column is the pivot).

#include <vector>

#include "equichar/oracle/galois_field.hpp"

namespace equichar::oracle {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Int rows, Int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {}

  static Matrix identity(Int n);

  Int rows() const { return rows_; }
  Int cols() const { return cols_; }
  Elem& at(Int i, Int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  Elem at(Int i, Int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  Matrix column(Int j) const;
  Matrix columns(const std::vector<Int>& idx) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Int rows_ = 0;
  Int cols_ = 0;
  std::vector<Elem> a_;
};

Matrix mul(const GaloisField& F, const Matrix& a, const Matrix& b);
Matrix add(const GaloisField& F, const Matrix& a, const Matrix& b);
Matrix sub(const GaloisField& F, const Matrix& a, const Matrix& b);
/// a - lambda I
Matrix shift(const GaloisField& F, const Matrix& a, Elem lambda);
Matrix pow(const GaloisField& F, const Matrix& a, Int e);
Matrix block_diag(const Matrix& a, const Matrix& b);
/// [a | b]
Matrix hcat(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;           // reduced row echelon form
  std::vector<Int> pivots;  // pivot column of each nonzero row
};

Echelon rref(const GaloisField& F, Matrix a);
Int rank(const GaloisField& F, const Matrix& a);
/// Columns form a basis of the null space.
Matrix kernel(const GaloisField& F, const Matrix& a);
/// A subset of the columns of a forming a basis of its column space.
Matrix column_basis(const GaloisField& F, const Matrix& a);
/// Throws Internal if a is singular.
Matrix inverse(const GaloisField& F, const Matrix& a);
/// X with k X = y, for k of full column rank and y in its column space;
/// throws Internal otherwise.
Matrix solve(const GaloisField& F, const Matrix& k, const Matrix& y);

}  // namespace equichar::oracle
