#include <doctest.h>

#include <random>
#include <vector>

#include "drgcert/exactlin.hpp"
#include "drgcert/gf.hpp"

using namespace drg;
using lin::GfMat;
using lin::Int;
using lin::IntMat;
using lin::IntPoly;

namespace {

GfMat random_mat(const gf::Field& f, uint32_t r, uint32_t c, std::mt19937& rng) {
  GfMat m(f, r, c);
  std::uniform_int_distribution<uint32_t> pick(0, f.q() - 1);
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = 0; j < c; ++j) m.set(i, j, pick(rng));
  return m;
}

// y = m x over GF(q), x given as a row of k
bool in_kernel(const GfMat& m, const GfMat& k, uint32_t row) {
  const gf::Field& f = m.field();
  for (uint32_t i = 0; i < m.rows(); ++i) {
    uint32_t s = 0;
    for (uint32_t j = 0; j < m.cols(); ++j)
      s = f.add(s, f.mul(m.at(i, j), k.at(row, j)));
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rref canonical form and rank") {
  const gf::Field& f = gf::field_new(3);
  GfMat m(f, 3, 4);
  // rows: (1,2,0,1), (2,1,0,2), (0,0,1,1); row2 = 2*row1 mod 3
  uint32_t vals[3][4] = {{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 0, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.set(i, j, vals[i][j]);
  auto r = lin::rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivot_cols == std::vector<uint32_t>{0, 2});
  CHECK(r.reduced.rows() == 2);
  CHECK(r.reduced.at(0, 0) == 1);
  CHECK(r.reduced.at(0, 1) == 2);
  CHECK(r.reduced.at(1, 2) == 1);

  // idempotent on already-reduced input
  auto r2 = lin::rref(r.reduced);
  CHECK(r2.reduced == r.reduced);
}

TEST_CASE("rref and kernel on random matrices") {
  std::mt19937 rng(12345);
  for (uint64_t q : {2, 3, 4, 5}) {
    const gf::Field& f = gf::field_new(q);
    for (int trial = 0; trial < 40; ++trial) {
      GfMat m = random_mat(f, 4, 6, rng);
      auto r = lin::rref(m);
      GfMat k = lin::kernel(m);
      CHECK(r.rank + k.rows() == 6);  // rank-nullity
      for (uint32_t i = 0; i < k.rows(); ++i) CHECK(in_kernel(m, k, i));
      // kernel output is itself reduced
      auto kr = lin::rref(k);
      CHECK(kr.reduced == k);
      CHECK(kr.rank == k.rows());
    }
  }
}

TEST_CASE("kernel canonical across presentations") {
  // same row space written two ways must give byte-identical kernels
  const gf::Field& f = gf::field_new(5);
  GfMat a(f, 2, 4), b(f, 3, 4);
  uint32_t av[2][4] = {{1, 2, 3, 4}, {0, 1, 1, 2}};
  uint32_t bv[3][4] = {{2, 4, 6 % 5, 8 % 5}, {1, 3, 4, 1}, {0, 2, 2, 4}};
  // b rows: 2*a0, a0 + a1, 2*a1
  for (int j = 0; j < 4; ++j) {
    a.set(0, j, av[0][j]);
    a.set(1, j, av[1][j]);
    for (int i = 0; i < 3; ++i) b.set(i, j, bv[i][j]);
  }
  CHECK(lin::kernel(a) == lin::kernel(b));
}

TEST_CASE("intpoly arithmetic") {
  IntPoly x = IntPoly::x();
  IntPoly p = x * x - IntPoly::constant(1);  // x^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(3) == 8);
  CHECK(p.eval(-1) == 0);

  IntPoly sq = x * x;
  IntPoly comp = sq.compose_linear(2, 3);  // (2x+3)^2
  CHECK(comp.coeffs() == std::vector<Int>{9, 12, 4});

  IntPoly prod = (x - IntPoly::constant(1)) * (x + IntPoly::constant(1));
  CHECK(prod == p);
  CHECK((p - p).is_zero());
  CHECK(p.scaled(-2).coeff(0) == 2);
  CHECK(p.to_string() == "x^2 - 1");
}

TEST_CASE("charpoly known values") {
  IntMat d(3, 3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  d.at(2, 2) = 3;
  IntPoly p = lin::charpoly_int(d);
  CHECK(p.coeffs() == std::vector<Int>{-6, 11, -6, 1});

  IntMat z(2, 2);  // nilpotent [[0,1],[0,0]]
  z.at(0, 1) = 1;
  CHECK(lin::charpoly_int(z).coeffs() == std::vector<Int>{0, 0, 1});
}

TEST_CASE("charpoly agrees with cofactor determinant") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    uint32_t n = 2 + trial % 4;  // 2..5
    IntMat m(n, n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) m.at(i, j) = pick(rng);
    IntPoly p = lin::charpoly_int(m);
    for (Int x : {Int(0), Int(1), Int(-1), Int(2), Int(5)}) {
      IntMat s(n, n);  // xI - m
      for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
          s.at(i, j) = (i == j ? x : Int(0)) - m.at(i, j);
      CHECK(p.eval(x) == lin::det_cofactor(s));
    }
  }
}

TEST_CASE("integer roots") {
  IntPoly x = IntPoly::x();
  auto c = [](int64_t v) { return IntPoly::constant(v); };

  // (x-2)^2 (x+3) x
  IntPoly p = (x - c(2)) * (x - c(2)) * (x + c(3)) * x;
  auto r = lin::integer_roots(p);
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0] == std::pair<Int, uint32_t>{Int(-3), 1});
  CHECK(r.roots[1] == std::pair<Int, uint32_t>{Int(0), 1});
  CHECK(r.roots[2] == std::pair<Int, uint32_t>{Int(2), 2});
  CHECK(r.remainder.degree() == 0);

  // (x-1)(x^2+x-1): golden-ratio factor stays in the remainder
  IntPoly q = (x - c(1)) * (x * x + x - c(1));
  auto r2 = lin::integer_roots(q);
  REQUIRE(r2.roots.size() == 1);
  CHECK(r2.roots[0].first == 1);
  CHECK(r2.remainder.coeffs() == std::vector<Int>{-1, 1, 1});

  // no integer roots at all
  auto r3 = lin::integer_roots(x * x + c(1));
  CHECK(r3.roots.empty());
  CHECK(r3.remainder.degree() == 2);
}

TEST_CASE("rational rank") {
  // rank 2 matrix with a dependent third row
  IntMat m(3, 4);
  int64_t vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = vals[i][j];
  CHECK(lin::rank_rational(m, 0) == 2);

  // adjacency of C4: eigenvalues 2, 0, 0, -2
  IntMat a(4, 4);
  for (int i = 0; i < 4; ++i) {
    a.at(i, (i + 1) % 4) = 1;
    a.at((i + 1) % 4, i) = 1;
  }
  CHECK(lin::rank_rational(a, 0) == 2);   // mult(0) = 2
  CHECK(lin::rank_rational(a, 2) == 3);   // mult(2) = 1
  CHECK(lin::rank_rational(a, -2) == 3);
  CHECK(lin::rank_rational(a, 1) == 4);   // not an eigenvalue

  IntMat zero(3, 3);
  CHECK(lin::rank_rational(zero, 0) == 0);
}

TEST_CASE("gfmat identity") {
  const gf::Field& f = gf::field_new(4);
  GfMat id = GfMat::identity(f, 3);
  auto r = lin::rref(id);
  CHECK(r.rank == 3);
  CHECK(r.reduced == id);
  CHECK(lin::kernel(id).rows() == 0);
}
