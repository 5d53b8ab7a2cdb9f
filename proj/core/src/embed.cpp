#include "pgeom/embed.hpp"

#include <algorithm>
#include <cassert>

#include "pgeom/error.hpp"

namespace pgeom {
namespace {

using detail::GuestPlan;

std::size_t position_of(const Geometry& g, PointIndex p) {
  const auto pts = g.points();
  return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
}

// Greedy basis: start from `first`, then repeatedly add the guest point whose
// addition captures the most guest points in the enlarged span.
GuestPlan build_plan(const Geometry& guest, PointIndex first) {
  const Field& f = guest.field();
  const int n = guest.ambient();
  GuestPlan plan;
  plan.basis.push_back(first);
  std::vector<std::vector<Elem>> rows{std::vector<Elem>(guest.space().coords(first).begin(), guest.space().coords(first).end())};
  Flat current = span_of_vectors(f, n, rows);
  for (;;) {
    int best_count = -1;
    PointIndex best = 0;
    for (PointIndex cand : guest.points()) {
      const auto cv = guest.space().coords(cand);
      if (flat_contains_vector(f, current, cv)) continue;
      auto trial_rows = rows;
      trial_rows.emplace_back(cv.begin(), cv.end());
      const Flat trial = span_of_vectors(f, n, trial_rows);
      int count = 0;
      for (PointIndex p : guest.points()) count += flat_contains_vector(f, trial, guest.space().coords(p)) ? 1 : 0;
      if (count > best_count) {
        best_count = count;
        best = cand;
      }
    }
    if (best_count < 0) break;
    plan.basis.push_back(best);
    const auto bv = guest.space().coords(best);
    rows.emplace_back(bv.begin(), bv.end());
    current = span_of_vectors(f, n, rows);
  }

  const int m = static_cast<int>(plan.basis.size());
  Matrix basis_rows(0, n);
  for (const auto& r : rows) basis_rows.append_row(r);
  const Coordinatizer coordinatizer(f, basis_rows);
  plan.levels.assign(m, {});
  plan.coords.reserve(guest.size());
  for (PointIndex p : guest.points()) {
    auto a = *coordinatizer.solve(guest.space().coords(p));
    int last = m - 1;
    while (a[last] == 0) --last;
    const bool is_basis_vector = std::count(a.begin(), a.end(), Elem{0}) == m - 1 && a[last] == 1;
    if (!is_basis_vector) plan.levels[last].push_back(a);
    plan.coords.push_back(std::move(a));
  }
  return plan;
}

class Search {
 public:
  Search(const ProjectiveSpace& space, const PointMask& host, const GuestPlan& plan, std::optional<PointIndex> anchor)
      : f_(space.field()),
        space_(space),
        host_(host),
        plan_(plan),
        m_(static_cast<int>(plan.basis.size())),
        n_(space.rank()),
        anchor_(anchor),
        images_(static_cast<std::size_t>(m_) * n_, 0),
        spans_(m_, PointMask(space.size())),
        scratch_(n_) {
    coefficients_.resize(m_);
    for (int k = 0; k + 1 < m_; ++k) coefficients_[k] = canonical_coefficients(f_, k + 1);
  }

  bool run() { return m_ == 0 || level(0); }
  const std::vector<Elem>& images() const { return images_; }

 private:
  Elem* image(int k) { return images_.data() + static_cast<std::size_t>(k) * n_; }

  bool level_points_ok(int k) {
    for (const auto& a : plan_.levels[k]) {
      std::fill(scratch_.begin(), scratch_.end(), Elem{0});
      for (int i = 0; i <= k; ++i) {
        if (a[i] == 0) continue;
        const Elem* v = image(i);
        for (int j = 0; j < n_; ++j) scratch_[j] = f_.add(scratch_[j], f_.mul(a[i], v[j]));
      }
      const auto idx = space_.normalize(scratch_);
      if (!idx || !host_.test(*idx)) return false;
    }
    return true;
  }

  void build_span(int k) {
    PointMask& span = spans_[k];
    span.reset();
    for (const auto& c : coefficients_[k]) {
      std::fill(scratch_.begin(), scratch_.end(), Elem{0});
      for (int i = 0; i <= k; ++i) {
        if (c[i] == 0) continue;
        const Elem* v = image(i);
        for (int j = 0; j < n_; ++j) scratch_[j] = f_.add(scratch_[j], f_.mul(c[i], v[j]));
      }
      span.set(*space_.normalize(scratch_));
    }
  }

  bool try_candidate(int k, PointIndex h) {
    const auto hv = space_.coords(h);
    const int scalars = k == 0 ? 1 : f_.q() - 1;
    for (int s = 1; s <= scalars; ++s) {
      const Elem lambda = static_cast<Elem>(k == 0 ? 1 : f_.pow(f_.generator(), static_cast<unsigned>(s - 1)));
      Elem* v = image(k);
      for (int j = 0; j < n_; ++j) v[j] = f_.mul(lambda, hv[j]);
      if (!level_points_ok(k)) continue;
      if (k + 1 == m_) return true;
      build_span(k);
      if (level(k + 1)) return true;
    }
    return false;
  }

  bool level(int k) {
    if (k == 0 && anchor_) return host_.test(*anchor_) && try_candidate(0, *anchor_);
    for (auto h = host_.find_first(); h != PointMask::npos; h = host_.find_next(h)) {
      if (k > 0 && spans_[k - 1].test(h)) continue;
      if (try_candidate(k, static_cast<PointIndex>(h))) return true;
    }
    return false;
  }

  const Field& f_;
  const ProjectiveSpace& space_;
  const PointMask& host_;
  const GuestPlan& plan_;
  int m_;
  int n_;
  std::optional<PointIndex> anchor_;
  std::vector<Elem> images_;
  std::vector<PointMask> spans_;
  std::vector<std::vector<std::vector<Elem>>> coefficients_;
  std::vector<Elem> scratch_;
};

}  // namespace

Embedder::Embedder(const Geometry& guest, bool anchored) : guest_(guest) {
  if (guest_.empty()) return;
  canonical_basis_ = span_basis(guest_);
  rank_ = static_cast<int>(canonical_basis_.size());
  plan_ = build_plan(guest_, guest_.points().front());
  if (!anchored) return;
  for (PointIndex g : guest_.points()) {
    GuestPlan candidate = build_plan(guest_, g);
    bool seen = false;
    for (const auto& rep : anchor_plans_) {
      // an embedding of the guest into itself is an automorphism
      Search s(guest_.space(), guest_.mask(), candidate, rep.basis.front());
      if (s.run()) {
        seen = true;
        break;
      }
    }
    if (!seen) anchor_plans_.push_back(std::move(candidate));
  }
}

EmbeddingWitness Embedder::make_witness(const ProjectiveSpace& space, const GuestPlan& plan,
                                        const std::vector<Elem>& images) const {
  const Field& f = space.field();
  const int n = space.rank();
  auto apply = [&](const std::vector<Elem>& a) {
    std::vector<Elem> v(n, 0);
    for (int i = 0; i < rank_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(a[i], images[static_cast<std::size_t>(i) * n + j]));
    }
    return v;
  };
  EmbeddingWitness w;
  w.basis = canonical_basis_;
  for (PointIndex b : canonical_basis_) w.map.push_back(apply(plan.coords[position_of(guest_, b)]));
  for (const auto& a : plan.coords) w.point_map.push_back(*space.normalize(apply(a)));
  return w;
}

std::optional<EmbeddingWitness> Embedder::find(const Geometry& host) const {
  if (!(host.field() == guest_.field()))
    throw Error(ErrorCode::field_mismatch, "host and guest live over different fields");
  return find(host.space(), host.mask());
}

std::optional<EmbeddingWitness> Embedder::find(const ProjectiveSpace& space, const PointMask& host) const {
  if (guest_.empty()) return EmbeddingWitness{};
  if (rank_ > space.rank() || guest_.size() > host.count()) return std::nullopt;
  Search s(space, host, plan_, std::nullopt);
  if (!s.run()) return std::nullopt;
  return make_witness(space, plan_, s.images());
}

bool Embedder::exists_through(const ProjectiveSpace& space, const PointMask& host, PointIndex anchor) const {
  assert((guest_.empty() || !anchor_plans_.empty()) && "Embedder was built without anchored plans");
  if (guest_.empty()) return true;
  if (rank_ > space.rank() || guest_.size() > host.count()) return false;
  for (const auto& plan : anchor_plans_) {
    Search s(space, host, plan, anchor);
    if (s.run()) return true;
  }
  return false;
}

std::optional<EmbeddingWitness> contains(const Geometry& host, const Geometry& guest) {
  if (!(host.field() == guest.field()))
    throw Error(ErrorCode::field_mismatch, "host and guest live over different fields");
  return Embedder(guest).find(host);
}

bool verify_witness(const Geometry& host, const Geometry& guest, const EmbeddingWitness& w) {
  if (!(host.field() == guest.field())) return false;
  const Field& f = host.field();
  const int n = host.ambient();
  if (guest.empty()) return w.basis.empty() && w.map.empty() && w.point_map.empty();

  const auto basis = span_basis(guest);
  const int m = static_cast<int>(basis.size());
  if (w.basis != basis || static_cast<int>(w.map.size()) != m || w.point_map.size() != guest.size()) return false;

  Matrix map(0, n);
  for (const auto& row : w.map) {
    if (static_cast<int>(row.size()) != n) return false;
    for (Elem x : row)
      if (x >= f.q()) return false;
    map.append_row(row);
  }
  if (matrix_rank(map, f) != m) return false;

  Matrix guest_basis(0, guest.ambient());
  for (PointIndex b : basis) guest_basis.append_row(guest.space().coords(b));
  const Coordinatizer coords(f, guest_basis);

  std::size_t j = 0;
  for (PointIndex p : guest.points()) {
    const auto a = coords.solve(guest.space().coords(p));
    if (!a) return false;
    std::vector<Elem> image(n, 0);
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < n; ++c) image[c] = f.add(image[c], f.mul((*a)[i], map.at(i, c)));
    if (std::all_of(image.begin(), image.end(), [](Elem x) { return x == 0; })) return false;
    const Point hit = canonical_point(f, image);
    if (hit.index != w.point_map[j] || !host.has(hit.index)) return false;
    ++j;
  }
  return true;
}

}  // namespace pgeom
