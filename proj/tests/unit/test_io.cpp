#include <gtest/gtest.h>

#include "pgeom/error.hpp"
#include "pgeom/io.hpp"

namespace pgeom {
namespace {

ErrorCode code_of(std::string_view text) {
  try {
    io::geometry_from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::invalid_argument;
}

TEST(GeometryJson, Layout) {
  EXPECT_EQ(io::geometry_to_json(make_pg(2, Field::make(2))),
            R"({"q":2,"p":2,"k":1,"modulus":[],"ambient":2,"points":[[0,1],[1,0],[1,1]]})");
  EXPECT_EQ(io::geometry_to_json(make_ag(2, Field::make(9))).rfind(R"({"q":9,"p":3,"k":2,"modulus":[1,2,2],)", 0), 0u);
}

TEST(GeometryJson, RoundTripIsByteIdentical) {
  for (int q : {2, 3, 4, 5, 8, 9, 16}) {
    const Field f = Field::make(q);
    for (int m = 1; m <= 3; ++m)
      for (int c = 1; c <= m; ++c) {
        const Geometry g = make_g(m, f, c);
        const std::string text = io::geometry_to_json(g);
        const Geometry back = io::geometry_from_json(text);
        EXPECT_EQ(back, g);
        EXPECT_EQ(io::geometry_to_json(back), text);
      }
  }
}

TEST(GeometryJson, RecanonicalizesPoints) {
  const Geometry g =
      io::geometry_from_json(R"({"q":3,"p":3,"k":1,"modulus":[],"ambient":2,"points":[[2,2],[0,2]]})");
  EXPECT_EQ(io::geometry_to_json(g), R"({"q":3,"p":3,"k":1,"modulus":[],"ambient":2,"points":[[0,1],[1,1]]})");
}

TEST(GeometryJson, Errors) {
  EXPECT_EQ(code_of("{"), ErrorCode::parse_error);
  EXPECT_EQ(code_of(R"({"q":2})"), ErrorCode::parse_error);
  EXPECT_EQ(code_of(R"({"q":6,"p":2,"k":1,"modulus":[],"ambient":2,"points":[]})"), ErrorCode::not_prime_power);
  EXPECT_EQ(code_of(R"({"q":32,"p":2,"k":5,"modulus":[],"ambient":2,"points":[]})"), ErrorCode::unsupported);
  EXPECT_EQ(code_of(R"({"q":4,"p":2,"k":2,"modulus":[1,0,1],"ambient":2,"points":[]})"), ErrorCode::unsupported);
  EXPECT_EQ(code_of(R"({"q":2,"p":2,"k":1,"modulus":[],"ambient":2,"points":[[0,0]]})"), ErrorCode::zero_vector);
  EXPECT_EQ(code_of(R"({"q":3,"p":3,"k":1,"modulus":[],"ambient":2,"points":[[1,1],[2,2]]})"),
            ErrorCode::duplicate_point);
  EXPECT_EQ(code_of(R"({"q":2,"p":2,"k":1,"modulus":[],"ambient":2,"points":[[1,2]]})"), ErrorCode::parse_error);
  EXPECT_EQ(code_of(R"({"q":2,"p":2,"k":1,"modulus":[],"ambient":2,"points":[[1]]})"), ErrorCode::parse_error);
  EXPECT_EQ(code_of(R"({"q":2,"p":3,"k":1,"modulus":[],"ambient":2,"points":[]})"), ErrorCode::parse_error);
  EXPECT_EQ(code_of(R"({"q":2,"p":2,"k":1,"modulus":[],"ambient":"2","points":[]})"), ErrorCode::parse_error);
}

TEST(WitnessJson, RoundTrip) {
  const Field f = Field::make(3);
  const auto w = contains(make_pg(3, f), make_ag(2, f));
  ASSERT_TRUE(w);
  const std::string text = io::witness_to_json(*w);
  EXPECT_EQ(text.rfind(R"({"basis":)", 0), 0u);
  EXPECT_EQ(io::witness_from_json(text), *w);
}

TEST(DensityCsv, Layout) {
  const auto rows = density_table(make_pg(2, Field::make(2)), 2, 3);
  EXPECT_EQ(io::density_to_csv(rows),
            "n,ex,total,density_num,density_den,limit_num,limit_den,status\n"
            "2,2,3,2,3,1,2,exact\n"
            "3,4,7,4,7,1,2,exact\n");
}

TEST(BoundJson, Kinds) {
  EXPECT_EQ(io::bound_value_to_json(BoundValue::exact(32)), R"({"kind":"exact","value":"32"})");
  EXPECT_EQ(io::bound_value_to_json(BoundValue::tower(2, 7)), R"({"kind":"tower","height":2,"arg":"7"})");
  EXPECT_EQ(io::bound_value_to_json(BoundValue::over_cap()), R"({"kind":"over-cap"})");
}

TEST(FlatJson, Layout) {
  const Field f = Field::make(2);
  const auto space = projective_space(f, 3);
  const Flat line = enumerate_flats(3, f, 2).front();
  const std::string text = io::flat_to_json(*space, line);
  EXPECT_EQ(text.rfind(R"({"rank":2,"ambient":3,"basis":)", 0), 0u);
}

}  // namespace
}  // namespace pgeom
