#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pvclift/linalg/rational.hpp"

namespace pvclift::linalg {

/// Dense symmetric matrix over the rationals. Only the lower triangle is
/// stored, so (i, j) and (j, i) always name the same entry.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * (dim + 1) / 2) {}

  static SymMatrix identity(std::size_t dim);

  /// Builds from a full row-major square; throws std::invalid_argument if
  /// the input is not square or not symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t dim() const { return dim_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }

  /// v^T M v
  Rational quadratic_form(std::span<const Rational> v) const;

  /// M v
  std::vector<Rational> multiply(std::span<const Rational> v) const;

  SymMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  std::vector<std::vector<double>> to_double() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  static std::size_t index(std::size_t i, std::size_t j) {
    return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
  }

  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

}  // namespace pvclift::linalg
