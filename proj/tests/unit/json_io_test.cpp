// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cdlab/error.hpp>
#include <cdlab/json_io.hpp>

using namespace cdlab;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NoSolution;
}

}  // namespace

TEST(JsonIo, MatrixRoundTripAndValidation) {
  const auto j = parse_json(R"({"p": 7, "rows": 2, "cols": 3, "entries": [[1,1,0],[1,0,1]]})");
  const auto m = matrix_from_json(j);
  EXPECT_EQ(m, FpMatrix(PrimeModulus(7), {{1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(matrix_from_json(to_json(m)), m);
  EXPECT_EQ(to_json(m).dump(), R"({"p":7,"rows":2,"cols":3,"entries":[[1,1,0],[1,0,1]]})");
  EXPECT_EQ(kind_of([] { matrix_from_json(parse_json(R"({"p":7,"rows":1,"cols":1,"entries":[[7]]})")); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { matrix_from_json(parse_json(R"({"p":7,"rows":2,"cols":1,"entries":[[1]]})")); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { matrix_from_json(parse_json(R"({"p":8,"rows":1,"cols":1,"entries":[[1]]})")); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { parse_json("{"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { matrix_from_json(parse_json(R"({"p":7})")); }), ErrorKind::InvalidInput);
}

TEST(JsonIo, SetSystemAndPolynomial) {
  const auto a = set_system_from_json(parse_json(R"({"p": 5, "sets": [[2,0],[4]]})"));
  EXPECT_EQ(a[0], (std::vector<std::uint32_t>{0, 2}));
  EXPECT_EQ(to_json(a).dump(), R"({"p":5,"sets":[[0,2],[4]]})");

  const auto f = poly_from_json(parse_json(R"({"p":5,"vars":2,"terms":[{"exp":[1,0],"coef":3},{"exp":[0,2],"coef":-1}]})"));
  EXPECT_EQ(f.coefficient({1, 0}), 3U);
  EXPECT_EQ(f.coefficient({0, 2}), 4U);
  EXPECT_EQ(poly_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(f).dump(), R"({"p":5,"vars":2,"terms":[{"exp":[0,2],"coef":4},{"exp":[1,0],"coef":3}]})");
  EXPECT_THROW(poly_from_json(parse_json(R"({"p":5,"vars":2,"terms":[{"exp":[1],"coef":1}]})")), Error);
}

TEST(JsonIo, SupportsCertificatesAndBigIntegers) {
  EXPECT_EQ(to_json(IndexSet::of({0, 2})).dump(), "[1,3]");
  EXPECT_EQ(index_set_from_json(parse_json("[3,1]")), IndexSet::of({0, 2}));
  EXPECT_THROW(index_set_from_json(parse_json("[0]")), Error);
  BoundCertificate c{19, IndexSet::full(3), IndexSet(), 3, 3, true};
  EXPECT_EQ(to_json(c).dump(), R"({"lambda":19,"S":[1,2,3],"Sprime":[],"kmax":3,"kmin":3,"precondition_ok":true})");
  BigInt big = 1;
  big <<= 80;
  EXPECT_EQ(to_json(big).dump(), "\"1208925819614629174706176\"");
  ImageResult r{5, std::vector<std::vector<std::uint32_t>>{{0}, {1}}};
  EXPECT_EQ(to_json(r).dump(), R"({"size":5,"points":[[0],[1]]})");
}
