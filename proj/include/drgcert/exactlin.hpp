#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "drgcert/errors.hpp"
#include "drgcert/gf.hpp"

namespace drg::lin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over a GF(q); entries are element codes.
class GfMat {
 public:
  GfMat(const gf::Field& f, uint32_t rows, uint32_t cols)
      : f_(&f), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static GfMat identity(const gf::Field& f, uint32_t n);

  const gf::Field& field() const { return *f_; }
  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }

  uint32_t at(uint32_t r, uint32_t c) const { return a_[size_t(r) * cols_ + c]; }
  void set(uint32_t r, uint32_t c, uint32_t v) { a_[size_t(r) * cols_ + c] = v; }

  /// Row r as a span of codes.
  const uint32_t* row(uint32_t r) const { return a_.data() + size_t(r) * cols_; }
  uint32_t* row(uint32_t r) { return a_.data() + size_t(r) * cols_; }

  /// Flattened row-major entry codes (the canonical encoding of a subspace
  /// basis when the matrix is in RREF).
  const std::vector<uint32_t>& flat() const { return a_; }

  bool operator==(const GfMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && *f_ == *o.f_;
  }

 private:
  const gf::Field* f_;
  uint32_t rows_, cols_;
  std::vector<uint32_t> a_;
};

struct RrefResult {
  GfMat reduced;
  std::vector<uint32_t> pivot_cols;
  uint32_t rank = 0;
};

/// Reduced row echelon form over GF(q).
RrefResult rref(const GfMat& m);

/// RREF basis of the right null space {x : m x = 0}, one row per basis
/// vector. Canonical: equal subspaces yield identical matrices.
GfMat kernel(const GfMat& m);

/// Integer polynomial, little-endian coefficients, no trailing zeros
/// (empty = zero polynomial).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
  static IntPoly x() { return IntPoly({Int(0), Int(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  const Int& coeff(size_t i) const {
    static const Int zero{0};
    return i < c_.size() ? c_[i] : zero;
  }
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval(const Int& x) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const Int& s) const;
  /// p(a*x + b), exact.
  IntPoly compose_linear(const Int& a, const Int& b) const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Dense square-or-rectangular integer matrix.
struct IntMat {
  uint32_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMat() = default;
  IntMat(uint32_t r, uint32_t c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}
  Int& at(uint32_t r, uint32_t c) { return a[size_t(r) * cols + c]; }
  const Int& at(uint32_t r, uint32_t c) const { return a[size_t(r) * cols + c]; }
};

/// Monic characteristic polynomial det(xI - m), computed exactly
/// (Faddeev-LeVerrier; all intermediate divisions are exact over Z).
IntPoly charpoly_int(const IntMat& m);

struct IntegerRoots {
  std::vector<std::pair<Int, uint32_t>> roots;  // (root, multiplicity)
  IntPoly remainder;                            // no integer roots left
};

/// All integer roots with multiplicities, by divisor search on the constant
/// term of the deflated polynomial (plus the root 0). p must be nonzero.
IntegerRoots integer_roots(const IntPoly& p);

/// Exact rank of (m - shift*I) over the rationals (fraction-free Bareiss
/// elimination). m need not be square when shift == 0; shift requires square.
uint64_t rank_rational(const IntMat& m, const Int& shift);

/// det of a square integer matrix by cofactor expansion. Exponential; only
/// for small matrices (used as an independent cross-check).
Int det_cofactor(const IntMat& m);

}  // namespace drg::lin
