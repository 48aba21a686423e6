#include "pvclift/linalg/sym_matrix.hpp"

#include <stdexcept>

namespace pvclift::linalg {

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j <= i; ++j) {
      if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Rational SymMatrix::quadratic_form(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match matrix");
  Rational total;
  Rational row;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i] == 0) continue;
    row = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (v[j] != 0) row += (*this)(i, j) * v[j];
    }
    total += v[i] * (2 * row + (*this)(i, i) * v[i]);
  }
  return total;
}

std::vector<Rational> SymMatrix::multiply(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

SymMatrix SymMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  SymMatrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) sub(a, b) = (*this)(indices[a], indices[b]);
  }
  return sub;
}

std::vector<std::vector<double>> SymMatrix::to_double() const {
  std::vector<std::vector<double>> out(dim_, std::vector<double>(dim_));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j).get_d();
  }
  return out;
}

}  // namespace pvclift::linalg
