#include "pgeom/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace pgeom {

void Matrix::append_row(std::span<const Elem> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
  assert(static_cast<int>(values.size()) == cols_);
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::truncate_rows(int rows) {
  rows_ = std::min(rows_, rows);
  data_.resize(static_cast<std::size_t>(rows_) * cols_);
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

std::vector<int> row_reduce(Matrix& m, const Field& f, int pivot_cols) {
  const int cols = m.cols();
  const int limit = pivot_cols < 0 ? cols : std::min(pivot_cols, cols);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < limit && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    m.swap_rows(r, sel);
    const Elem scale = f.inv(m.at(r, c));
    if (scale != 1)
      for (int j = c; j < cols; ++j) m.at(r, j) = f.mul(m.at(r, j), scale);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = m.at(i, c);
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

int matrix_rank(Matrix m, const Field& f) { return static_cast<int>(row_reduce(m, f).size()); }

Matrix null_space(const Matrix& rref, std::span<const int> pivots, const Field& f) {
  const int n = rref.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix out(0, n);
  std::vector<Elem> x(n);
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(x.begin(), x.end(), Elem{0});
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(rref.at(static_cast<int>(i), free));
    out.append_row(x);
  }
  return out;
}

Coordinatizer::Coordinatizer(const Field& f, const Matrix& basis)
    : field_(&f), n_(basis.cols()), k_(basis.rows()), reduced_(basis.rows(), basis.cols() + basis.rows()) {
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < n_; ++j) reduced_.at(i, j) = basis.at(i, j);
    reduced_.at(i, n_ + i) = 1;
  }
  pivots_ = row_reduce(reduced_, f, n_);
  assert(static_cast<int>(pivots_.size()) == k_ && "basis vectors must be independent");
}

std::optional<std::vector<Elem>> Coordinatizer::solve(std::span<const Elem> x) const {
  const Field& f = *field_;
  std::vector<Elem> residual(x.begin(), x.end());
  std::vector<Elem> coeffs(k_, 0);
  for (int i = 0; i < rank(); ++i) {
    const Elem lambda = residual[pivots_[i]];
    if (lambda == 0) continue;
    for (int j = 0; j < n_; ++j) residual[j] = f.sub(residual[j], f.mul(lambda, reduced_.at(i, j)));
    for (int j = 0; j < k_; ++j) coeffs[j] = f.add(coeffs[j], f.mul(lambda, reduced_.at(i, n_ + j)));
  }
  for (Elem r : residual)
    if (r != 0) return std::nullopt;
  return coeffs;
}

}  // namespace pgeom
