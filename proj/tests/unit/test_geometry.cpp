#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgeom/error.hpp"
#include "pgeom/geometry.hpp"

namespace pgeom {
namespace {

Geometry of_vectors(const Field& f, int n, const std::vector<std::vector<Elem>>& vs) {
  auto space = projective_space(f, n);
  std::vector<PointIndex> idx;
  for (const auto& v : vs) idx.push_back(canonical_point(f, v).index);
  return Geometry(space, idx);
}

// Largest rank of a flat of span(h) disjoint from h, by scanning every flat
// of the ambient space and keeping those inside span(h).
int largest_disjoint_rank(const Geometry& h) {
  const Field& f = h.field();
  const int n = h.ambient();
  std::vector<Point> pts;
  for (PointIndex i : h.points()) pts.push_back(h.space().point(i));
  const Flat whole = span(f, n, pts);
  int best = 0;
  for (int k = 1; k <= whole.rank(); ++k) {
    for (const auto& F : enumerate_flats(n, f, k)) {
      if (flat_intersect(f, F, whole).rank() != k) continue;
      bool disjoint = true;
      for (PointIndex p : flat_point_indices(h.space(), F)) disjoint = disjoint && !h.has(p);
      if (disjoint) best = k;
    }
  }
  return best;
}

TEST(MakeFamilies, Sizes) {
  const Field f2 = Field::make(2), f3 = Field::make(3);
  EXPECT_EQ(make_pg(3, f2).size(), 7u);
  EXPECT_EQ(make_pg(2, f3).size(), 4u);
  EXPECT_EQ(make_pg(1, f2).size(), 1u);
  EXPECT_EQ(make_g(3, f2, 3), make_pg(3, f2));
  EXPECT_EQ(make_g(3, f2, 1).size(), 4u);
  EXPECT_EQ(make_g(3, f2, 2).size(), 6u);
  EXPECT_EQ(make_ag(2, f3).size(), 3u);
  EXPECT_EQ(make_ag(3, f2).size(), 4u);
  EXPECT_EQ(make_ag(3, f3).size(), 9u);
  EXPECT_EQ(make_ag(3, f2), make_g(3, f2, 1));
}

TEST(MakeFamilies, SizeMatchesFormula) {
  for (int q : {2, 3, 4, 5}) {
    const Field f = Field::make(q);
    for (int m = 1; m <= 4; ++m)
      for (int c = 1; c <= m; ++c) {
        const Geometry g = make_g(m, f, c);
        EXPECT_EQ(g.size(), g_size(m, q, c));
        EXPECT_EQ(g.ambient(), m);
      }
  }
}

TEST(MakeFamilies, RemovedFlatIsTheCoordinateFlat) {
  const Field f = Field::make(3);
  const Geometry g = make_g(4, f, 2);
  for (const auto& p : enumerate_points(4, f)) {
    const bool in_removed = p.coords[2] == 0 && p.coords[3] == 0;
    EXPECT_EQ(g.has(p.index), !in_removed);
  }
}

TEST(GSize, Examples) {
  EXPECT_EQ(g_size(3, 2, 1), 4u);
  EXPECT_EQ(g_size(2, 3, 1), 3u);
  EXPECT_EQ(g_size(4, 2, 2), 12u);
}

TEST(GSize, RatioIdentity) {
  for (int q : {2, 3, 4, 5, 7}) {
    for (int n = 1; n <= 6; ++n)
      for (int c = 2; c <= n + 1; ++c) {
        Rational lhs(BigInt(static_cast<unsigned long>(g_size(n, q, c - 1))),
                     BigInt(static_cast<unsigned long>(pg_size(n, q))));
        lhs.canonicalize();
        const BigInt qn = big_pow(q, n);
        Rational rhs = Rational(qn) / Rational(BigInt(qn - 1)) * (1 - Rational(1) / Rational(big_pow(q, c - 1)));
        EXPECT_EQ(lhs, rhs) << q << " " << n << " " << c;
      }
  }
}

TEST(GeometryRank, Examples) {
  const Field f = Field::make(2);
  EXPECT_EQ(geometry_rank(make_pg(3, f)), 3);
  EXPECT_EQ(geometry_rank(of_vectors(f, 3, {{1, 0, 0}, {0, 1, 1}})), 2);
  EXPECT_EQ(geometry_rank(Geometry(projective_space(f, 3), {})), 0);
  EXPECT_EQ(geometry_rank(of_vectors(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}})), 2);
}

TEST(GeometryConstruction, RejectsDuplicatesAndRange) {
  const auto space = projective_space(Field::make(2), 3);
  try {
    Geometry(space, {1, 2, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::duplicate_point);
  }
  EXPECT_THROW(Geometry(space, {7}), Error);
  EXPECT_EQ(Geometry(space, {3, 0, 5}).points()[0], 0u);
}

TEST(Complement, Examples) {
  const Field f = Field::make(2);
  const Geometry c = complement_geometry(make_g(3, f, 1));
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(geometry_rank(c), 2);
  EXPECT_TRUE(complement_geometry(make_pg(3, f)).empty());
  for (int c2 = 1; c2 <= 4; ++c2) {
    const Geometry g = make_g(4, Field::make(3), c2);
    EXPECT_EQ(complement_geometry(complement_geometry(g)), g);
  }
}

TEST(CriticalExponent, Examples) {
  EXPECT_EQ(critical_exponent(make_pg(3, Field::make(2))), 3);
  EXPECT_EQ(critical_exponent(make_ag(3, Field::make(3))), 1);
  EXPECT_EQ(critical_exponent(make_g(4, Field::make(2), 2)), 2);
}

TEST(CriticalExponent, EmptyThrows) {
  try {
    critical_exponent(Geometry(projective_space(Field::make(2), 3), {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_geometry);
  }
}

TEST(CriticalExponent, FamiliesOnGrid) {
  for (int q : {2, 3}) {
    const Field f = Field::make(q);
    for (int m = 1; m <= 4; ++m)
      for (int c = 1; c <= m; ++c) EXPECT_EQ(critical_exponent(make_g(m, f, c)), c) << q << " " << m << " " << c;
  }
}

TEST(CriticalExponent, MatchesFlatScanOnAllFanoSubsets) {
  const Field f = Field::make(2);
  const auto space = projective_space(f, 3);
  for (unsigned bits = 1; bits < 128; ++bits) {
    std::vector<PointIndex> pts;
    for (PointIndex i = 0; i < 7; ++i)
      if (bits >> i & 1) pts.push_back(i);
    const Geometry h(space, pts);
    EXPECT_EQ(critical_exponent(h), geometry_rank(h) - largest_disjoint_rank(h)) << bits;
  }
}

TEST(CriticalExponent, EmbeddedInLargerAmbient) {
  // a Fano line minus a point, placed in PG(3,2): rank 2, and the missing point is disjoint
  const Field f = Field::make(2);
  const Geometry h = of_vectors(f, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(critical_exponent(h), 1);
  EXPECT_EQ(critical_exponent(of_vectors(f, 4, {{0, 0, 0, 1}})), 1);
}

TEST(LocalFrame, PreservesStructure) {
  const Field f = Field::make(3);
  const Geometry h = of_vectors(f, 4, {{1, 0, 0, 1}, {0, 1, 0, 2}, {1, 1, 0, 0}, {1, 2, 0, 2}});
  const LocalFrame frame = local_frame(h);
  EXPECT_EQ(frame.local.ambient(), geometry_rank(h));
  EXPECT_EQ(frame.local.size(), h.size());
  EXPECT_EQ(geometry_rank(frame.local), frame.local.ambient());
  EXPECT_EQ(critical_exponent(frame.local), critical_exponent(h));
}

TEST(DensityLimit, Values) {
  EXPECT_EQ(density_limit(2, 2), Rational(1, 2));
  EXPECT_EQ(density_limit(3, 1), Rational(0));
  EXPECT_EQ(density_limit(3, 3), Rational(8, 9));
}

}  // namespace
}  // namespace pgeom
