#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pgeom/field.hpp"

namespace pgeom {

/// Dense row-major matrix over a small finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Elem& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<Elem> row(int r) { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Elem> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  void append_row(std::span<const Elem> values);
  void truncate_rows(int rows);
  void swap_rows(int a, int b);

  const std::vector<Elem>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

/// Brings `m` to reduced row-echelon form, pivoting only in the first
/// `pivot_cols` columns (all columns when negative). Zero rows are dropped.
/// Returns the pivot column of each remaining row.
std::vector<int> row_reduce(Matrix& m, const Field& f, int pivot_cols = -1);

int matrix_rank(Matrix m, const Field& f);

/// Basis (as rows) of {x : A x = 0} for A already in reduced echelon form.
Matrix null_space(const Matrix& rref, std::span<const int> pivots, const Field& f);

/// Expresses vectors in coordinates relative to a fixed list of independent
/// basis vectors.
class Coordinatizer {
 public:
  Coordinatizer(const Field& f, const Matrix& basis);

  int rank() const noexcept { return static_cast<int>(pivots_.size()); }

  /// Coefficients a with sum a_i basis_i = x, or nullopt when x is outside the span.
  std::optional<std::vector<Elem>> solve(std::span<const Elem> x) const;

 private:
  const Field* field_;
  int n_;
  int k_;
  Matrix reduced_;  // [R | T] where R = T * basis is in reduced echelon form
  std::vector<int> pivots_;
};

}  // namespace pgeom
