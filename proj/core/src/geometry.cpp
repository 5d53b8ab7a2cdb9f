#include "pgeom/geometry.hpp"

#include <algorithm>
#include <string>

#include "pgeom/error.hpp"

namespace pgeom {

Geometry::Geometry(std::shared_ptr<const ProjectiveSpace> space, std::vector<PointIndex> points)
    : space_(std::move(space)), points_(std::move(points)), mask_(space_->size()) {
  std::sort(points_.begin(), points_.end());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] >= space_->size())
      throw Error(ErrorCode::invalid_argument, "point index " + std::to_string(points_[i]) + " outside the ambient space");
    if (i > 0 && points_[i] == points_[i - 1])
      throw Error(ErrorCode::duplicate_point, "point " + std::to_string(points_[i]) + " listed twice");
    mask_.set(points_[i]);
  }
}

Geometry Geometry::from_mask(std::shared_ptr<const ProjectiveSpace> space, const PointMask& mask) {
  std::vector<PointIndex> points;
  points.reserve(mask.count());
  for (auto i = mask.find_first(); i != PointMask::npos; i = mask.find_next(i)) points.push_back(static_cast<PointIndex>(i));
  return Geometry(std::move(space), std::move(points));
}

Geometry make_pg(int m, const Field& f) {
  auto space = projective_space(f, m);
  std::vector<PointIndex> all(space->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<PointIndex>(i);
  return Geometry(std::move(space), std::move(all));
}

Geometry make_g(int m, const Field& f, int c) {
  if (c < 0 || c > m) throw Error(ErrorCode::invalid_argument, "make_g needs 0 <= c <= m");
  auto space = projective_space(f, m);
  const int removed_rank = m - c;
  std::vector<PointIndex> kept;
  for (std::size_t i = 0; i < space->size(); ++i) {
    const auto v = space->coords(static_cast<PointIndex>(i));
    // inside the removed flat iff every coordinate past the first m-c vanishes
    const bool removed = std::all_of(v.begin() + removed_rank, v.end(), [](Elem x) { return x == 0; });
    if (!removed) kept.push_back(static_cast<PointIndex>(i));
  }
  return Geometry(std::move(space), std::move(kept));
}

Geometry make_ag(int m, const Field& f) { return make_g(m, f, 1); }

std::uint64_t g_size(int n, int q, int c) {
  if (c < 0 || c > n) throw Error(ErrorCode::invalid_argument, "g_size needs 0 <= c <= n");
  return pg_size(n, q) - pg_size(n - c, q);
}

int geometry_rank(const Geometry& h) {
  if (h.empty()) return 0;
  Matrix m(0, h.ambient());
  for (PointIndex i : h.points()) m.append_row(h.space().coords(i));
  return matrix_rank(std::move(m), h.field());
}

Geometry complement_geometry(const Geometry& h) {
  PointMask mask = h.mask();
  mask.flip();
  return Geometry::from_mask(h.space_ptr(), mask);
}

std::vector<PointIndex> span_basis(const Geometry& h) {
  std::vector<PointIndex> basis;
  Matrix reduced(0, h.ambient());
  int rank = 0;
  for (PointIndex i : h.points()) {
    Matrix trial = reduced;
    trial.append_row(h.space().coords(i));
    const auto pivots = row_reduce(trial, h.field());
    if (static_cast<int>(pivots.size()) > rank) {
      basis.push_back(i);
      reduced = std::move(trial);
      rank = static_cast<int>(pivots.size());
      if (rank == h.ambient()) break;
    }
  }
  return basis;
}

LocalFrame local_frame(const Geometry& h) {
  if (h.empty()) throw Error(ErrorCode::empty_geometry, "geometry has no points");
  auto basis = span_basis(h);
  const int m = static_cast<int>(basis.size());
  Matrix rows(0, h.ambient());
  for (PointIndex b : basis) rows.append_row(h.space().coords(b));
  const Coordinatizer coords(h.field(), rows);
  auto local_space = projective_space(h.field(), m);
  std::vector<PointIndex> local;
  local.reserve(h.size());
  for (PointIndex i : h.points()) local.push_back(*local_space->normalize(*coords.solve(h.space().coords(i))));
  return LocalFrame{std::move(basis), Geometry(std::move(local_space), std::move(local))};
}

int critical_exponent(const Geometry& h) {
  const LocalFrame frame = local_frame(h);
  const Geometry& local = frame.local;
  const int m = local.ambient();
  for (int c = 1; c < m; ++c) {
    FlatCursor cursor(local.field(), m, m - c);
    while (auto flat = cursor.next()) {
      const auto pts = flat_point_indices(local.space(), *flat);
      const bool disjoint = std::none_of(pts.begin(), pts.end(), [&](PointIndex p) { return local.has(p); });
      if (disjoint) return c;
    }
  }
  return m;  // the rank-0 flat is always disjoint
}

Rational density_limit(int q, int c) {
  // 1 - q^(1-c) = (q^(c-1) - 1) / q^(c-1)
  if (c < 1) throw Error(ErrorCode::invalid_argument, "density limit needs c >= 1");
  const BigInt denom = big_pow(static_cast<unsigned long>(q), static_cast<unsigned long>(c - 1));
  Rational r(denom - 1, denom);
  r.canonicalize();
  return r;
}

}  // namespace pgeom
