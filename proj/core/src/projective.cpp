#include "pgeom/projective.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <string>

#include "pgeom/error.hpp"

namespace pgeom {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::unsupported, "count overflows 64 bits");
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}

void require_same_ambient(const Flat& a, const Flat& b) {
  assert(a.ambient() == b.ambient() && a.q() == b.q() && "flats from different ambient spaces");
  (void)a;
  (void)b;
}

}  // namespace

std::uint64_t pg_size(int n, int q) {
  if (n <= 0) return 0;
  return (checked_pow(static_cast<std::uint64_t>(q), n) - 1) / static_cast<std::uint64_t>(q - 1);
}

std::uint64_t gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  // prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1), kept exact by dividing after each step
  std::uint64_t result = 1;
  for (int i = 0; i < k; ++i) {
    const std::uint64_t num = checked_pow(static_cast<std::uint64_t>(q), n - i) - 1;
    const std::uint64_t den = checked_pow(static_cast<std::uint64_t>(q), i + 1) - 1;
    // result * num is divisible by den since partial products are Gaussian binomials
    unsigned __int128 wide = static_cast<unsigned __int128>(result) * num;
    wide /= den;
    if (wide > UINT64_MAX) throw Error(ErrorCode::unsupported, "count overflows 64 bits");
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

ProjectiveSpace::ProjectiveSpace(const Field& field, int rank) : field_(field), rank_(rank) {
  if (rank < 1) throw Error(ErrorCode::invalid_argument, "projective space needs rank >= 1");
  const std::uint64_t count = pg_size(rank, field.q());
  if (count > (std::uint64_t{1} << 26))
    throw Error(ErrorCode::unsupported, "PG(" + std::to_string(rank - 1) + "," + std::to_string(field.q()) + ") is too large");
  size_ = static_cast<std::size_t>(count);
  const std::size_t q = static_cast<std::size_t>(field.q());
  place_.assign(rank, 1);
  for (int j = rank - 2; j >= 0; --j) place_[j] = place_[j + 1] * q;
  block_offset_.assign(rank, 0);
  for (int i = 0; i < rank; ++i) block_offset_[i] = (place_[i] - 1) / (q - 1);

  table_.assign(size_ * rank, 0);
  for (int lead = rank - 1; lead >= 0; --lead) {
    const std::size_t block = place_[lead];
    for (std::size_t t = 0; t < block; ++t) {
      Elem* v = table_.data() + (block_offset_[lead] + t) * rank;
      v[lead] = 1;
      std::size_t rest = t;
      for (int j = rank - 1; j > lead; --j) {
        v[j] = static_cast<Elem>(rest % q);
        rest /= q;
      }
    }
  }
}

Point ProjectiveSpace::point(PointIndex i) const {
  const auto c = coords(i);
  return Point{{c.begin(), c.end()}, i};
}

std::optional<PointIndex> ProjectiveSpace::normalize(std::span<const Elem> v) const noexcept {
  int lead = 0;
  while (lead < rank_ && v[lead] == 0) ++lead;
  if (lead == rank_) return std::nullopt;
  const Elem scale = v[lead] == 1 ? Elem{1} : field_.inv(v[lead]);
  std::size_t idx = block_offset_[lead];
  for (int j = lead + 1; j < rank_; ++j) idx += field_.mul(v[j], scale) * place_[j];
  return static_cast<PointIndex>(idx);
}

std::shared_ptr<const ProjectiveSpace> projective_space(const Field& field, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const ProjectiveSpace>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{field.q(), rank}];
  if (!slot) slot = std::make_shared<const ProjectiveSpace>(field, rank);
  return slot;
}

Flat Flat::from_rows(const Field& f, Matrix rows) {
  Flat flat(rows.cols(), f.q());
  flat.pivots_ = row_reduce(rows, f);
  flat.basis_ = std::move(rows);
  if (flat.basis_.rows() == 0) flat.basis_ = Matrix(0, flat.ambient_);
  return flat;
}

Point canonical_point(const Field& f, std::span<const Elem> v) {
  const int n = static_cast<int>(v.size());
  int lead = 0;
  while (lead < n && v[lead] == 0) ++lead;
  if (lead == n) throw Error(ErrorCode::zero_vector, "zero vector has no projective point");
  const Elem scale = f.inv(v[lead]);
  Point p;
  p.coords.resize(n);
  const std::uint64_t q = static_cast<std::uint64_t>(f.q());
  std::uint64_t tail = 0;
  for (int j = 0; j < n; ++j) {
    p.coords[j] = f.mul(v[j], scale);
    if (j > lead) tail = tail * q + p.coords[j];
  }
  const std::uint64_t offset = (checked_pow(q, n - 1 - lead) - 1) / (q - 1);
  p.index = static_cast<PointIndex>(offset + tail);
  return p;
}

std::vector<Point> enumerate_points(int n, const Field& f) {
  const auto space = projective_space(f, n);
  std::vector<Point> out;
  out.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) out.push_back(space->point(static_cast<PointIndex>(i)));
  return out;
}

Flat span(const Field& f, int n, std::span<const Point> points) {
  Matrix m(0, n);
  for (const auto& p : points) {
    assert(static_cast<int>(p.coords.size()) == n);
    m.append_row(p.coords);
  }
  return Flat::from_rows(f, std::move(m));
}

Flat span_of_vectors(const Field& f, int n, std::span<const std::vector<Elem>> vectors) {
  Matrix m(0, n);
  for (const auto& v : vectors) m.append_row(v);
  return Flat::from_rows(f, std::move(m));
}

bool flat_contains_vector(const Field& f, const Flat& flat, std::span<const Elem> v) {
  assert(static_cast<int>(v.size()) == flat.ambient());
  std::vector<Elem> r(v.begin(), v.end());
  const auto& b = flat.basis();
  for (int i = 0; i < flat.rank(); ++i) {
    const Elem lambda = r[flat.pivots()[i]];
    if (lambda == 0) continue;
    for (int j = 0; j < flat.ambient(); ++j) r[j] = f.sub(r[j], f.mul(lambda, b.at(i, j)));
  }
  for (Elem x : r)
    if (x != 0) return false;
  return true;
}

bool flat_contains_point(const Field& f, const Flat& flat, const Point& p) {
  return flat_contains_vector(f, flat, p.coords);
}

Flat flat_intersect(const Field& f, const Flat& a, const Flat& b) {
  require_same_ambient(a, b);
  const int n = a.ambient();
  Matrix ann = null_space(a.basis(), a.pivots(), f);
  const Matrix ann_b = null_space(b.basis(), b.pivots(), f);
  for (int i = 0; i < ann_b.rows(); ++i) ann.append_row(ann_b.row(i));
  if (ann.rows() == 0) {
    // both flats are the whole space
    return a;
  }
  auto pivots = row_reduce(ann, f);
  Matrix joint = null_space(ann, pivots, f);
  if (joint.rows() == 0) return Flat(n, f.q());
  return Flat::from_rows(f, std::move(joint));
}

std::vector<std::vector<Elem>> canonical_coefficients(const Field& f, int r) {
  std::vector<std::vector<Elem>> out;
  if (r <= 0) return out;
  const auto space = projective_space(f, r);
  out.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) {
    const auto c = space->coords(static_cast<PointIndex>(i));
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

std::vector<Point> flat_points(const Field& f, const Flat& flat) {
  std::vector<Point> out;
  if (flat.rank() == 0) return out;
  const auto space = projective_space(f, flat.ambient());
  for (PointIndex i : flat_point_indices(*space, flat)) out.push_back(space->point(i));
  return out;
}

std::vector<PointIndex> flat_point_indices(const ProjectiveSpace& space, const Flat& flat) {
  assert(space.rank() == flat.ambient() && space.field().q() == flat.q());
  std::vector<PointIndex> out;
  const int r = flat.rank();
  if (r == 0) return out;
  const Field& f = space.field();
  const int n = flat.ambient();
  const auto coeff_space = projective_space(f, r);
  out.reserve(coeff_space->size());
  std::vector<Elem> v(n);
  for (std::size_t c = 0; c < coeff_space->size(); ++c) {
    const auto a = coeff_space->coords(static_cast<PointIndex>(c));
    std::fill(v.begin(), v.end(), Elem{0});
    for (int i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      const auto row = flat.basis().row(i);
      for (int j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(a[i], row[j]));
    }
    out.push_back(*space.normalize(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Flat extend_flat(const Field& f, const Flat& flat, const Point& p) {
  if (flat_contains_point(f, flat, p)) throw Error(ErrorCode::point_in_flat, "point already lies in the flat");
  Matrix rows = flat.basis();
  rows.append_row(p.coords);
  return Flat::from_rows(f, std::move(rows));
}

FlatCursor::FlatCursor(const Field& f, int n, int k) : field_(&f), n_(n), k_(k) {
  if (k < 0 || k > n) {
    done_ = true;
    return;
  }
  pivots_.resize(k);
  for (int i = 0; i < k; ++i) pivots_[i] = i;
  reset_free();
}

void FlatCursor::reset_free() {
  free_.clear();
  std::vector<bool> is_pivot(n_, false);
  for (int c : pivots_) is_pivot[c] = true;
  for (int r = 0; r < k_; ++r)
    for (int c = pivots_[r] + 1; c < n_; ++c)
      if (!is_pivot[c]) free_.emplace_back(r, c);
  values_.assign(free_.size(), 0);
}

bool FlatCursor::advance_pivots() {
  int i = k_ - 1;
  while (i >= 0 && pivots_[i] == n_ - k_ + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  reset_free();
  return true;
}

std::optional<Flat> FlatCursor::next() {
  if (done_) return std::nullopt;
  if (started_) {
    // odometer over the free entries, last entry fastest
    int i = static_cast<int>(values_.size()) - 1;
    while (i >= 0 && values_[i] == field_->q() - 1) {
      values_[i] = 0;
      --i;
    }
    if (i >= 0) {
      ++values_[i];
    } else if (!advance_pivots()) {
      done_ = true;
      return std::nullopt;
    }
  }
  started_ = true;
  Flat flat(n_, field_->q());
  flat.basis_ = Matrix(k_, n_);
  for (int r = 0; r < k_; ++r) flat.basis_.at(r, pivots_[r]) = 1;
  for (std::size_t e = 0; e < free_.size(); ++e) flat.basis_.at(free_[e].first, free_[e].second) = values_[e];
  flat.pivots_ = pivots_;
  return flat;
}

std::vector<Flat> enumerate_flats(int n, const Field& f, int k) {
  std::vector<Flat> out;
  FlatCursor cursor(f, n, k);
  while (auto flat = cursor.next()) out.push_back(std::move(*flat));
  return out;
}

}  // namespace pgeom
