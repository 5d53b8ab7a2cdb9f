#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgeom/bounds.hpp"
#include "pgeom/error.hpp"

namespace pgeom {
namespace {

Rational q_(const char* s) { return parse_rational(s); }

TEST(Tower, Examples) {
  EXPECT_EQ(tower(0, 7).value, 7);
  EXPECT_EQ(tower(2, 2).value, 16);
  EXPECT_EQ(tower(1, 5).value, 32);
  EXPECT_EQ(tower(2, 5).value, big_pow(2, 32));
}

TEST(Tower, SymbolicBeyondCap) {
  const BoundValue v = tower(4, 4);
  EXPECT_EQ(v.kind, BoundValue::Kind::tower_symbolic);
  EXPECT_EQ(v.height, 1u);
  EXPECT_EQ(v.arg, big_pow(2, 65536));
  EXPECT_EQ(tower(3, 5).kind, BoundValue::Kind::tower_symbolic);
  EXPECT_EQ(tower(3, 5).describe(), "T_1(4294967296)");
}

TEST(Tower, HeightThreeAtFourFitsDefaultCap) {
  const BoundValue v = tower(3, 4);
  ASSERT_TRUE(v.is_exact());
  EXPECT_EQ(decimal_digits(v.value), 19729u);
  const BoundValue capped = tower(3, 4, 1000);
  EXPECT_EQ(capped.kind, BoundValue::Kind::tower_symbolic);
  EXPECT_EQ(capped.height, 1u);
  EXPECT_EQ(capped.arg, 65536);
}

TEST(Tower, RecurrenceIdentity) {
  for (std::uint64_t c = 1; c <= 3; ++c)
    for (unsigned long s = 0; s <= 4; ++s) {
      const BoundValue lhs = tower(c, s);
      const BoundValue rhs = tower(c - 1, big_pow(2, s));
      if (lhs.is_exact() && rhs.is_exact()) EXPECT_EQ(lhs.value, rhs.value) << c << " " << s;
    }
}

TEST(Tower, StrictlyIncreasing) {
  for (std::uint64_t c = 0; c <= 2; ++c)
    for (unsigned long s = 0; s < 5; ++s) {
      EXPECT_LT(tower(c, s).value, tower(c, s + 1).value);
      if (s > 0) EXPECT_LT(tower(c, s).value, tower(c + 1, s).value);
    }
}

TEST(Tower, DigitCapBoundary) {
  // 2^3321 has 1000 digits, 2^3322 has 1001
  EXPECT_TRUE(tower(1, 3321, 1000).is_exact());
  EXPECT_FALSE(tower(1, 3322, 1000).is_exact());
}

TEST(RMdhjBinary, Examples) {
  EXPECT_EQ(r_mdhj_binary(3, q_("1/2")), 4);
  EXPECT_EQ(r_mdhj_binary(2, q_("1/4")), 3);
  EXPECT_EQ(r_mdhj_binary(4, q_("1")), 4);
}

TEST(RMdhjBinary, NonPowerOfTwoEpsilon) {
  // ceil(1 - log2(1/3)) = ceil(2.58...) = 3
  EXPECT_EQ(r_mdhj_binary(2, q_("1/3")), 3);
  EXPECT_EQ(r_mdhj_binary(5, q_("3/4")), 16);
  EXPECT_EQ(r_mdhj_binary(2, q_("1/5")), 4);
}

TEST(RMdhjBinary, RejectsEpsilon) {
  try {
    r_mdhj_binary(3, q_("0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_epsilon);
  }
  EXPECT_THROW(r_mdhj_binary(3, q_("3/2")), Error);
  EXPECT_THROW(r_mdhj_binary(1, q_("1/2")), Error);
}

TEST(RMain2Binary, Examples) {
  EXPECT_EQ(binary_tower_offset(q_("1/4")), 2);
  EXPECT_EQ(r_main2_binary(3, 1, q_("1/4")).value, 32);
  EXPECT_EQ(r_main2_binary(3, 2, q_("1/4")).value, big_pow(2, 32));
  EXPECT_EQ(binary_tower_offset(q_("1/2")), 2);
  EXPECT_EQ(r_main2_binary(4, 1, q_("1/2")).value, 64);
}

TEST(RMain2Binary, OffsetAtBoundaries) {
  EXPECT_EQ(binary_tower_offset(q_("1")), 1);
  EXPECT_EQ(binary_tower_offset(q_("1/2")), 2);
  EXPECT_EQ(binary_tower_offset(q_("1/4")), 2);
  EXPECT_EQ(binary_tower_offset(q_("1/5")), 3);
  EXPECT_EQ(binary_tower_offset(q_("1/64")), 3);
  EXPECT_EQ(binary_tower_offset(q_("1/65")), 4);
}

TEST(SmallestT, Examples) {
  EXPECT_EQ(smallest_t(2, 2, 4, q_("1/2")), 5);
  EXPECT_EQ(smallest_t(2, 1, 1, q_("2")), 1);
}

TEST(SmallestT, MatchesScanOracle) {
  const char* eps_values[] = {"1/8", "1/3", "1/2", "2/3", "1", "3", "1/100"};
  for (int q : {2, 3, 4, 5}) {
    for (int c = 1; c <= 4; ++c)
      for (unsigned long r = 1; r <= 12; ++r)
        for (const char* e : eps_values) {
          const Rational eps = q_(e);
          const BigInt t = smallest_t(q, c, r, eps);
          ASSERT_EQ(t, oracle::smallest_t_by_scan(q, c, r, eps)) << q << " " << c << " " << r << " " << e;
          ASSERT_GE(t, r);
        }
  }
}

TEST(SmallestT, MonotoneInEpsilon) {
  const char* ascending[] = {"1/1000", "1/64", "1/10", "1/3", "1/2", "1", "7/2"};
  for (int q : {2, 3}) {
    for (int c = 1; c <= 3; ++c) {
      BigInt previous = smallest_t(q, c, 6, q_(ascending[0]));
      for (const char* e : ascending) {
        const BigInt t = smallest_t(q, c, 6, q_(e));
        EXPECT_LE(t, previous);
        previous = t;
      }
    }
  }
}

TEST(SmallestT, HugeRank) {
  // r = 10^30, so q^r is never formed; 2^r - 1 <= (2^n - 2^r)/4 first holds at n = r + 3
  const BigInt r("1000000000000000000000000000000");
  EXPECT_EQ(smallest_t(2, 1, r, q_("1/2")), r + 2);
  EXPECT_EQ(smallest_t(3, 2, r, q_("1")), r);
}

TEST(Recursive, BaseCase) {
  const auto base = binary_base();
  const RecursiveBound b = r_main2_recursive(5, 2, 1, q_("1/2"), base);
  EXPECT_EQ(b.value.value, r_mdhj_binary(5, q_("1/2")));
  ASSERT_EQ(b.trace.size(), 1u);
  // any injected base is used as is
  const BaseBound constant = [](const BigInt&, int, const Rational&) { return BoundValue::exact(42); };
  EXPECT_EQ(r_main2_recursive(9, 7, 1, q_("1/9"), constant).value.value, 42);
}

TEST(Recursive, PinnedTrace) {
  const RecursiveBound b = r_main2_recursive(3, 2, 2, q_("1/2"), binary_base());
  ASSERT_EQ(b.trace.size(), 2u);
  const RecursionLevel& outer = b.trace[0];
  EXPECT_EQ(outer.c, 2u);
  EXPECT_EQ(outer.r.value, 3);
  EXPECT_EQ(outer.t, 4);
  const RecursionLevel& inner = b.trace[1];
  EXPECT_EQ(inner.c, 1u);
  EXPECT_EQ(inner.m, 3);
  EXPECT_EQ(inner.eps, q_("1/2"));
  EXPECT_EQ(inner.result.value, 4);
  EXPECT_EQ(b.value.value, 4);
}

TEST(Recursive, TraceConsistency) {
  for (unsigned long m = 3; m <= 9; ++m)
    for (std::uint64_t c = 1; c < std::min<unsigned long>(m, 4); ++c)
      for (const char* e : {"1", "1/2", "1/4", "1/3"}) {
        RecursiveBound b;
        try {
          b = r_main2_recursive(m, 2, c, q_(e), binary_base());
        } catch (const Error& err) {
          // an inner level with r <= c - 1 leaves the recursion's range
          EXPECT_EQ(err.code(), ErrorCode::invalid_argument);
          continue;
        }
        ASSERT_EQ(b.trace.size(), c);
        for (std::size_t i = 0; i + 1 < b.trace.size(); ++i) {
          const auto& level = b.trace[i];
          const auto& next = b.trace[i + 1];
          ASSERT_TRUE(level.r.is_exact());
          EXPECT_EQ(level.r.value, r_mdhj_binary(level.m - level.c + 1, level.eps / 2));
          if (level.r.value <= 4096)
            EXPECT_EQ(level.t, oracle::smallest_t_by_scan(2, static_cast<int>(level.c), level.r.value.get_ui(), level.eps));
          EXPECT_EQ(next.m, level.r.value);
          EXPECT_EQ(next.c, level.c - 1);
          EXPECT_EQ(next.eps, Rational(1) / Rational(big_pow(2, level.c - 1)));
          if (next.result.is_exact()) {
            EXPECT_EQ(level.result.value, std::max(level.t, next.result.value));
          } else {
            EXPECT_FALSE(level.result.is_exact());
          }
        }
      }
}

TEST(Recursive, NeverExceedsClosedForm) {
  for (unsigned long m = 3; m <= 10; ++m)
    for (std::uint64_t c = 1; c <= 2 && c < m; ++c)
      for (const char* e : {"1", "1/2", "1/4", "1/3", "1/16"}) {
        const RecursiveBound rec = r_main2_recursive(m, 2, c, q_(e), binary_base());
        const BoundValue closed = r_main2_binary(m, c, q_(e));
        ASSERT_TRUE(rec.value.is_exact());
        ASSERT_TRUE(closed.is_exact());
        EXPECT_LE(rec.value.value, closed.value) << m << " " << c << " " << e;
      }
}

TEST(Recursive, Errors) {
  try {
    r_main2_recursive(3, 2, 2, q_("0"), binary_base());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_epsilon);
  }
  EXPECT_THROW(r_main2_recursive(2, 2, 2, q_("1/2"), binary_base()), Error);
  try {
    r_main2_recursive(5, 3, 2, q_("1/2"), binary_base());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported);
  }
}

TEST(Recursive, NextEpsilonPositive) {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16})
    for (int c = 2; c <= 12; ++c) {
      const Rational next = Rational(1) / Rational(big_pow(q, c - 2)) - Rational(1) / Rational(big_pow(q, c - 1));
      EXPECT_GT(next, 0);
    }
}

TEST(Numeric, CeilLog2) {
  EXPECT_EQ(ceil_log2(q_("1")), 0);
  EXPECT_EQ(ceil_log2(q_("2")), 1);
  EXPECT_EQ(ceil_log2(q_("3")), 2);
  EXPECT_EQ(ceil_log2(q_("4")), 2);
  EXPECT_EQ(ceil_log2(q_("1/2")), -1);
  EXPECT_EQ(ceil_log2(q_("3/4")), 0);
  EXPECT_EQ(ceil_log2(q_("1/3")), -1);
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(q_("2/4"), Rational(1) / Rational(2));
  EXPECT_EQ(format_rational(q_("6/8")), "3/4");
  EXPECT_EQ(format_rational(q_("3")), "3/1");
  EXPECT_THROW(q_("1/0"), Error);
  EXPECT_THROW(q_("x"), Error);
  EXPECT_THROW(q_("1/2/3"), Error);
}

}  // namespace
}  // namespace pgeom
