#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pgeom/field.hpp"
#include "pgeom/linalg.hpp"

namespace pgeom {

using PointIndex = std::uint32_t;

/// A projective point: its canonical vector (first nonzero coordinate 1) and
/// its position in the lexicographic enumeration of canonical vectors.
struct Point {
  std::vector<Elem> coords;
  PointIndex index = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// (q^n - 1)/(q - 1). Throws Error(unsupported) if the value overflows 64 bits.
std::uint64_t pg_size(int n, int q);

/// Number of rank-k flats of PG(n-1, q).
std::uint64_t gaussian_binomial(int n, int k, int q);

/**
 * PG(n-1, q) with a coordinate table for every point.
 *
 * Points are indexed in lexicographic order of their canonical vectors,
 * coordinates compared by code with coordinate 0 most significant. The index
 * of a canonical vector with its leading 1 at position i is
 * (q^(n-1-i) - 1)/(q - 1) plus the trailing coordinates read as a base-q number.
 */
class ProjectiveSpace {
 public:
  ProjectiveSpace(const Field& field, int rank);

  const Field& field() const noexcept { return field_; }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return size_; }

  std::span<const Elem> coords(PointIndex i) const {
    return {table_.data() + static_cast<std::size_t>(i) * rank_, static_cast<std::size_t>(rank_)};
  }
  Point point(PointIndex i) const;

  /// Index of the point spanned by an arbitrary vector; nullopt for the zero vector.
  std::optional<PointIndex> normalize(std::span<const Elem> v) const noexcept;

 private:
  Field field_;
  int rank_;
  std::size_t size_;
  std::vector<std::size_t> block_offset_;  // by leading position
  std::vector<std::size_t> place_;         // q^(n-1-j)
  std::vector<Elem> table_;
};

/// Shared, cached PG(n-1, q). Thread-safe.
std::shared_ptr<const ProjectiveSpace> projective_space(const Field& field, int rank);

/**
 * A flat of PG(n-1, q), held as the reduced row-echelon basis of its subspace.
 * The representation is unique per subspace, so equality is structural.
 * Rank is the subspace dimension; the rank-0 flat has an empty basis.
 */
class Flat {
 public:
  Flat(int ambient, int q) : ambient_(ambient), q_(q), basis_(0, ambient) {}

  /// Reduces `rows` to canonical form.
  static Flat from_rows(const Field& f, Matrix rows);

  int rank() const noexcept { return basis_.rows(); }
  int ambient() const noexcept { return ambient_; }
  int q() const noexcept { return q_; }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  friend bool operator==(const Flat& a, const Flat& b) {
    return a.ambient_ == b.ambient_ && a.q_ == b.q_ && a.basis_ == b.basis_;
  }

 private:
  friend class FlatCursor;

  int ambient_;
  int q_;
  Matrix basis_;
  std::vector<int> pivots_;
};

/// Throws Error(zero_vector).
Point canonical_point(const Field& f, std::span<const Elem> v);

std::vector<Point> enumerate_points(int n, const Field& f);

Flat span(const Field& f, int n, std::span<const Point> points);
Flat span_of_vectors(const Field& f, int n, std::span<const std::vector<Elem>> vectors);

bool flat_contains_vector(const Field& f, const Flat& flat, std::span<const Elem> v);
bool flat_contains_point(const Field& f, const Flat& flat, const Point& p);

/// Computed through annihilators: F1 ∩ F2 is the null space of Ann(F1) + Ann(F2).
Flat flat_intersect(const Field& f, const Flat& a, const Flat& b);

std::vector<Point> flat_points(const Field& f, const Flat& flat);
std::vector<PointIndex> flat_point_indices(const ProjectiveSpace& space, const Flat& flat);

/// Throws Error(point_in_flat) if p already lies in the flat.
Flat extend_flat(const Field& f, const Flat& flat, const Point& p);

/// Canonical coefficient vectors of length r (the points of PG(r-1, q)) in index order.
std::vector<std::vector<Elem>> canonical_coefficients(const Field& f, int r);

/**
 * Lazy enumeration of all rank-k flats of PG(n-1, q). Echelon matrices are
 * generated directly: for each increasing choice of pivot columns, every fill
 * of the free entries right of each pivot in non-pivot columns.
 */
class FlatCursor {
 public:
  FlatCursor(const Field& f, int n, int k);

  /// Next flat, or nullopt once every flat has been produced.
  std::optional<Flat> next();

 private:
  bool advance_pivots();
  void reset_free();

  const Field* field_;
  int n_;
  int k_;
  bool done_ = false;
  bool started_ = false;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_;  // (row, col) of free entries
  std::vector<Elem> values_;
};

std::vector<Flat> enumerate_flats(int n, const Field& f, int k);

}  // namespace pgeom
