#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pgeom/numeric.hpp"
#include "pgeom/projective.hpp"

namespace pgeom {

using PointMask = boost::dynamic_bitset<>;

/// A simple point set of PG(n-1, q) (a "geometry over GF(q)"), kept as sorted
/// indices into the ambient enumeration together with a membership mask.
class Geometry {
 public:
  /// Throws Error(duplicate_point) on repeated indices and Error(invalid_argument)
  /// on indices outside the ambient space.
  Geometry(std::shared_ptr<const ProjectiveSpace> space, std::vector<PointIndex> points);

  static Geometry from_mask(std::shared_ptr<const ProjectiveSpace> space, const PointMask& mask);

  const ProjectiveSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const ProjectiveSpace>& space_ptr() const noexcept { return space_; }
  const Field& field() const noexcept { return space_->field(); }
  int ambient() const noexcept { return space_->rank(); }

  std::span<const PointIndex> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const PointMask& mask() const noexcept { return mask_; }
  bool has(PointIndex i) const { return i < mask_.size() && mask_.test(i); }

  friend bool operator==(const Geometry& a, const Geometry& b) {
    return a.ambient() == b.ambient() && a.field() == b.field() && a.points_ == b.points_;
  }

 private:
  std::shared_ptr<const ProjectiveSpace> space_;
  std::vector<PointIndex> points_;
  PointMask mask_;
};

/// PG(m-1, q) as a geometry of ambient rank m.
Geometry make_pg(int m, const Field& f);

/// PG(m-1, q) minus the flat spanned by the first m-c standard basis vectors.
Geometry make_g(int m, const Field& f, int c);

/// AG(m-1, q) = G(m-1, q, 1).
Geometry make_ag(int m, const Field& f);

/// (q^n - q^(n-c))/(q - 1).
std::uint64_t g_size(int n, int q, int c);

int geometry_rank(const Geometry& h);

/// Points of the ambient PG not in h.
Geometry complement_geometry(const Geometry& h);

/// Greedy basis of span(h) drawn from h's own points in index order.
std::vector<PointIndex> span_basis(const Geometry& h);

/// h re-expressed inside its own span: a geometry of ambient rank(h), with
/// coordinates taken relative to span_basis(h).
struct LocalFrame {
  std::vector<PointIndex> basis;
  Geometry local;
};

/// Throws Error(empty_geometry) for empty h.
LocalFrame local_frame(const Geometry& h);

/// Smallest c >= 1 such that some rank-(rank(h) - c) flat of span(h) is
/// disjoint from h. Throws Error(empty_geometry).
int critical_exponent(const Geometry& h);

/// 1 - q^(1-c).
Rational density_limit(int q, int c);

}  // namespace pgeom
