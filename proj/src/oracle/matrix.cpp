#include "equichar/oracle/matrix.hpp"

#include <algorithm>
#include <cstdint>

namespace equichar::oracle {

Matrix Matrix::identity(Int n) {
  Matrix m(n, n);
  for (Int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::column(Int j) const { return columns({j}); }

Matrix Matrix::columns(const std::vector<Int>& idx) const {
  Matrix out(rows_, static_cast<Int>(idx.size()));
  for (Int i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out.at(i, static_cast<Int>(k)) = at(i, idx[k]);
  return out;
}

Matrix mul(const GaloisField& F, const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrorKind::Internal, "matrix size mismatch in product");
  Matrix out(a.rows(), b.cols());
  const Int n = b.cols();
  if (F.is_prime_field()) {
    // Accumulate exact integer sums, reduce once per row.
    const auto p = static_cast<std::uint64_t>(F.p());
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(n));
    for (Int i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (Int k = 0; k < a.cols(); ++k) {
        const std::uint64_t x = a.at(i, k);
        if (x == 0) continue;
        for (Int j = 0; j < n; ++j) acc[static_cast<std::size_t>(j)] += x * b.at(k, j);
      }
      for (Int j = 0; j < n; ++j) out.at(i, j) = static_cast<Elem>(acc[static_cast<std::size_t>(j)] % p);
    }
    return out;
  }
  for (Int i = 0; i < a.rows(); ++i)
    for (Int k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      const Elem* row = F.mul_row(x);
      for (Int j = 0; j < n; ++j) {
        const Elem y = b.at(k, j);
        if (y != 0) out.at(i, j) = F.add(out.at(i, j), row ? row[y] : F.mul(x, y));
      }
    }
  return out;
}

Matrix add(const GaloisField& F, const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Internal, "matrix size mismatch in sum");
  Matrix out(a.rows(), a.cols());
  for (Int i = 0; i < a.rows(); ++i)
    for (Int j = 0; j < a.cols(); ++j) out.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  return out;
}

Matrix sub(const GaloisField& F, const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Internal, "matrix size mismatch in difference");
  Matrix out(a.rows(), a.cols());
  for (Int i = 0; i < a.rows(); ++i)
    for (Int j = 0; j < a.cols(); ++j) out.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
  return out;
}

Matrix shift(const GaloisField& F, const Matrix& a, Elem lambda) {
  Matrix out = a;
  for (Int i = 0; i < a.rows(); ++i) out.at(i, i) = F.sub(out.at(i, i), lambda);
  return out;
}

Matrix pow(const GaloisField& F, const Matrix& a, Int e) {
  require(a.rows() == a.cols() && e >= 0, ErrorKind::Internal, "matrix power needs a square matrix");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = mul(F, result, base);
    e >>= 1;
    if (e > 0) base = mul(F, base, base);
  }
  return result;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (Int i = 0; i < a.rows(); ++i)
    for (Int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (Int i = 0; i < b.rows(); ++i)
    for (Int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::Internal, "row mismatch in concatenation");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (Int i = 0; i < a.rows(); ++i) {
    for (Int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (Int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

Echelon rref(const GaloisField& F, Matrix a) {
  Echelon e;
  // x mod p for every x < p^2 + p, used by the prime-field row operations
  std::vector<Elem> reduce;
  if (F.is_prime_field())
    for (Int x = 0; x < F.p() * F.p() + F.p(); ++x) reduce.push_back(static_cast<Elem>(x % F.p()));
  Int row = 0;
  for (Int col = 0; col < a.cols() && row < a.rows(); ++col) {
    Int piv = row;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (Int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    const Elem s = F.inv(a.at(row, col));
    for (Int j = col; j < a.cols(); ++j) a.at(row, j) = F.mul(a.at(row, j), s);
    for (Int i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const Elem f = a.at(i, col);
      if (f == 0) continue;
      const Elem nf = F.neg(f);
      if (F.is_prime_field()) {
        for (Int j = col; j < a.cols(); ++j) {
          const Elem y = a.at(row, j);
          if (y != 0) a.at(i, j) = reduce[a.at(i, j) + nf * y];
        }
        continue;
      }
      const Elem* mrow = F.mul_row(nf);
      for (Int j = col; j < a.cols(); ++j) {
        const Elem y = a.at(row, j);
        if (y != 0) a.at(i, j) = F.add(a.at(i, j), mrow ? mrow[y] : F.mul(nf, y));
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

Int rank(const GaloisField& F, const Matrix& a) { return static_cast<Int>(rref(F, a).pivots.size()); }

Matrix kernel(const GaloisField& F, const Matrix& a) {
  const Echelon e = rref(F, a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Int> free;
  for (Int c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);

  Matrix basis(a.cols(), static_cast<Int>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Int f = free[k];
    basis.at(f, static_cast<Int>(k)) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis.at(e.pivots[r], static_cast<Int>(k)) = F.neg(e.reduced.at(static_cast<Int>(r), f));
  }
  return basis;
}

Matrix column_basis(const GaloisField& F, const Matrix& a) { return a.columns(rref(F, a).pivots); }

Matrix inverse(const GaloisField& F, const Matrix& a) {
  require(a.rows() == a.cols(), ErrorKind::Internal, "inverse of a non-square matrix");
  const Int n = a.rows();
  const Echelon e = rref(F, hcat(a, Matrix::identity(n)));
  require(static_cast<Int>(e.pivots.size()) >= n && (n == 0 || e.pivots[static_cast<std::size_t>(n - 1)] == n - 1),
          ErrorKind::Internal, "matrix is singular");
  Matrix out(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) out.at(i, j) = e.reduced.at(i, n + j);
  return out;
}

Matrix solve(const GaloisField& F, const Matrix& k, const Matrix& y) {
  const Int n = k.cols();
  const Echelon e = rref(F, hcat(k, y));
  for (Int r = 0; r < n; ++r)
    require(r < static_cast<Int>(e.pivots.size()) && e.pivots[static_cast<std::size_t>(r)] == r, ErrorKind::Internal,
            "solve: coefficient matrix lacks full column rank");
  require(static_cast<Int>(e.pivots.size()) == n, ErrorKind::Internal, "solve: right-hand side outside the column space");
  Matrix out(n, y.cols());
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < y.cols(); ++j) out.at(i, j) = e.reduced.at(i, n + j);
  return out;
}

}  // namespace equichar::oracle
