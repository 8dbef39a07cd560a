#include <doctest.h>

#include <vector>

#include "drgcert/gf.hpp"

using namespace drg;
using gf::Field;
using gf::field_new;

TEST_CASE("frozen moduli") {
  // lexicographically smallest monic irreducibles, low-degree-first
  CHECK(field_new(2).modulus() == std::vector<uint32_t>{0, 1});
  CHECK(field_new(4).modulus() == std::vector<uint32_t>{1, 1, 1});
  CHECK(field_new(8).modulus() == std::vector<uint32_t>{1, 0, 1, 1});
  CHECK(field_new(9).modulus() == std::vector<uint32_t>{1, 0, 1});
  CHECK(field_new(27).modulus() == std::vector<uint32_t>{1, 0, 2, 1});
  CHECK(field_new(16).modulus() == std::vector<uint32_t>{1, 0, 0, 1, 1});
}

TEST_CASE("element code arithmetic spot values") {
  const Field& f4 = field_new(4);
  CHECK(f4.mul(2, 2) == 3);  // x * x = x + 1 mod x^2+x+1
  CHECK(f4.mul(2, 3) == 1);  // x (x+1) = x^2+x = 1
  CHECK(f4.add(2, 3) == 1);

  const Field& f9 = field_new(9);
  CHECK(f9.mul(3, 3) == 2);  // x * x = -1 = 2 mod x^2+1
  CHECK(f9.neg(1) == 2);
  CHECK(f9.add(3, 6) == 0);  // x + 2x = 3x = 0
}

TEST_CASE("field axioms exhaustively for small q") {
  for (uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Field& f = field_new(q);
    REQUIRE(f.q() == q);
    for (uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, q - 1) == 1);
      }
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (uint32_t c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("coeffs round trip") {
  const Field& f = field_new(27);
  for (uint32_t a = 0; a < 27; ++a) {
    auto c = f.coeffs(a);
    REQUIRE(c.size() == 3);
    CHECK(f.from_coeffs(c) == a);
  }
  CHECK(f.coeffs(5) == std::vector<uint32_t>{2, 1, 0});  // 2 + x
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(field_new(6), gf::NotPrimePower);
  CHECK_THROWS_AS(field_new(1), gf::NotPrimePower);
  CHECK_THROWS_AS(field_new(0), gf::NotPrimePower);
  CHECK_THROWS_AS(field_new(12), gf::NotPrimePower);
  CHECK_THROWS_AS(field_new(uint64_t{1} << 17), gf::TooLarge);
  CHECK_THROWS_AS(field_new(3).inv(0), gf::DivisionByZero);

  gf::Element a(field_new(4), 2), b(field_new(8), 2);
  CHECK_THROWS_AS((void)(a + b), gf::FieldMismatch);
  CHECK_THROWS_AS((void)(a * b), gf::FieldMismatch);
}

TEST_CASE("field interning") {
  CHECK(&field_new(9) == &field_new(9));
  CHECK(&field_new(4) != &field_new(8));
}

TEST_CASE("element wrapper") {
  const Field& f = field_new(5);
  auto es = gf::elements(f);
  REQUIRE(es.size() == 5);
  CHECK((es[2] + es[4]).code() == 1);
  CHECK((es[3] * es[4]).code() == 2);
  CHECK((-es[2]).code() == 3);
  CHECK(es[2].inverse().code() == 3);
}
