#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pgeom/geometry.hpp"

namespace pgeom {

/**
 * Certificate that a guest geometry H is a restriction of a host G.
 *
 * `basis` is span_basis(H): guest points chosen greedily in index order.
 * Row i of `map` is the host vector assigned to basis[i]; the rows define an
 * injective linear map from span(H) into the host's ambient space.
 * `point_map[j]` is the host point hit by the j-th guest point (guest points
 * in index order).
 */
struct EmbeddingWitness {
  std::vector<PointIndex> basis;
  std::vector<std::vector<Elem>> map;
  std::vector<PointIndex> point_map;

  friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

namespace detail {

// Search order for one guest: basis points plus, for each basis prefix length
// k+1, the coordinate vectors of guest points whose last nonzero coordinate is k.
struct GuestPlan {
  std::vector<PointIndex> basis;
  std::vector<std::vector<std::vector<Elem>>> levels;
  std::vector<std::vector<Elem>> coords;  // every guest point, guest index order
};

}  // namespace detail

/**
 * Backtracking embedder for a fixed guest.
 *
 * Images of a guest basis are assigned one at a time as scaled host points
 * (the first scalar fixed to 1). After assigning the k-th image, every guest
 * point lying in the span of the first k basis points already has a determined
 * image and must land in the host; this prunes most of the tree. The basis is
 * chosen greedily so that early partial spans hold as many guest points as
 * possible. Host candidates are tried in index order, so results are
 * reproducible.
 */
class Embedder {
 public:
  /// With `anchored`, also prepares the per-orbit plans used by exists_through.
  explicit Embedder(const Geometry& guest, bool anchored = false);

  const Geometry& guest() const noexcept { return guest_; }
  int rank() const noexcept { return rank_; }

  /// Throws Error(field_mismatch).
  std::optional<EmbeddingWitness> find(const Geometry& host) const;
  std::optional<EmbeddingWitness> find(const ProjectiveSpace& space, const PointMask& host) const;

  /// True iff some embedding sends a guest point onto `anchor`. Requires the
  /// anchored constructor. Only one guest point per automorphism orbit is tried.
  bool exists_through(const ProjectiveSpace& space, const PointMask& host, PointIndex anchor) const;

  std::size_t orbit_count() const noexcept { return anchor_plans_.size(); }

 private:
  EmbeddingWitness make_witness(const ProjectiveSpace& space, const detail::GuestPlan& plan,
                                const std::vector<Elem>& images) const;

  Geometry guest_;
  int rank_ = 0;
  detail::GuestPlan plan_;
  std::vector<detail::GuestPlan> anchor_plans_;
  std::vector<PointIndex> canonical_basis_;
};

/// Witness iff guest is a restriction of host. Throws Error(field_mismatch).
std::optional<EmbeddingWitness> contains(const Geometry& host, const Geometry& guest);

/// Checks a witness from scratch: basis, rank of the map, every guest image,
/// and host membership.
bool verify_witness(const Geometry& host, const Geometry& guest, const EmbeddingWitness& w);

}  // namespace pgeom
