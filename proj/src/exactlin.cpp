#include "drgcert/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace drg::lin {

GfMat GfMat::identity(const gf::Field& f, uint32_t n) {
  GfMat m(f, n, n);
  for (uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

RrefResult rref(const GfMat& m) {
  const gf::Field& f = m.field();
  GfMat a = m;
  const uint32_t nr = a.rows(), nc = a.cols();
  std::vector<uint32_t> pivots;
  uint32_t r = 0;
  for (uint32_t c = 0; c < nc && r < nr; ++c) {
    uint32_t pr = r;
    while (pr < nr && a.at(pr, c) == 0) ++pr;
    if (pr == nr) continue;
    if (pr != r)
      for (uint32_t j = 0; j < nc; ++j) std::swap(a.row(pr)[j], a.row(r)[j]);
    const uint32_t inv = f.inv(a.at(r, c));
    for (uint32_t j = c; j < nc; ++j) a.set(r, j, f.mul(a.at(r, j), inv));
    for (uint32_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      const uint32_t factor = a.at(i, c);
      if (factor == 0) continue;
      for (uint32_t j = c; j < nc; ++j)
        a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  // Drop all-zero rows so the result's row count equals the rank.
  GfMat out(f, r, nc);
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = 0; j < nc; ++j) out.set(i, j, a.at(i, j));
  return {std::move(out), std::move(pivots), r};
}

GfMat kernel(const GfMat& m) {
  const gf::Field& f = m.field();
  RrefResult rr = rref(m);
  const uint32_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (uint32_t c : rr.pivot_cols) is_pivot[c] = true;

  std::vector<uint32_t> free_cols;
  for (uint32_t c = 0; c < nc; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // One special solution per free column, then re-reduce for canonical form.
  GfMat sols(f, uint32_t(free_cols.size()), nc);
  for (uint32_t s = 0; s < free_cols.size(); ++s) {
    const uint32_t fc = free_cols[s];
    sols.set(s, fc, 1);
    for (uint32_t i = 0; i < rr.rank; ++i)
      sols.set(s, rr.pivot_cols[i], f.neg(rr.reduced.at(i, fc)));
  }
  return rref(sols).reduced;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return IntPoly{};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int& s) const {
  std::vector<Int> r = c_;
  for (Int& v : r) v *= s;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_linear(const Int& a, const Int& b) const {
  // Horner: p(ax+b) = (...(c_n (ax+b) + c_{n-1})(ax+b) + ...) + c_0
  IntPoly acc;
  IntPoly lin({b, a});
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * lin;
    acc = acc + IntPoly::constant(c_[i]);
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Int& v = c_[i];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    first = false;
    Int av = abs(v);
    if (av != 1 || i == 0) os << av.str();
    if (i >= 1) {
      if (av != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly charpoly_int(const IntMat& m) {
  if (m.rows != m.cols) throw Error("charpoly_int: matrix must be square");
  const uint32_t n = m.rows;
  if (n == 0) return IntPoly::constant(1);

  // Faddeev-LeVerrier: M_0 = I, c_n = 1;
  //   for k = 1..n: M_k = A*M_{k-1} + c_{n-k+1} I implicit via trace step.
  // We use the standard recurrence with N = A*M + c*I.
  std::vector<Int> coeff(n + 1, Int(0));
  coeff[n] = 1;
  IntMat M(n, n);
  for (uint32_t i = 0; i < n; ++i) M.at(i, i) = 1;

  IntMat AM(n, n);
  for (uint32_t k = 1; k <= n; ++k) {
    // AM = A * M
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) {
        Int s = 0;
        for (uint32_t t = 0; t < n; ++t) s += m.at(i, t) * M.at(t, j);
        AM.at(i, j) = std::move(s);
      }
    Int tr = 0;
    for (uint32_t i = 0; i < n; ++i) tr += AM.at(i, i);
    // c_{n-k} = -tr(AM)/k, always an exact division.
    Int c = -tr;
    if (c % k != 0) throw Error("charpoly_int: inexact trace division");
    c /= k;
    coeff[n - k] = c;
    M = AM;
    for (uint32_t i = 0; i < n; ++i) M.at(i, i) += c;
  }
  return IntPoly(std::move(coeff));
}

namespace {

// Divide p by (x - r); returns quotient, requires exact divisibility.
bool deflate(const IntPoly& p, const Int& r, IntPoly* out) {
  const auto& c = p.coeffs();
  if (c.empty()) return false;
  std::vector<Int> q(c.size() - 1, Int(0));
  Int carry = 0;
  for (size_t i = c.size(); i-- > 1;) {
    carry = carry * r + c[i];
    q[i - 1] = carry;
  }
  Int rem = carry * r + c[0];
  if (rem != 0) return false;
  *out = IntPoly(std::move(q));
  return true;
}

std::vector<Int> positive_divisors(Int v) {
  v = abs(v);
  std::vector<Int> divs;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

IntegerRoots integer_roots(const IntPoly& p) {
  if (p.is_zero()) throw Error("integer_roots: zero polynomial");
  IntegerRoots out;
  IntPoly cur = p;

  // Strip roots at zero first.
  uint32_t zero_mult = 0;
  while (!cur.is_zero() && cur.coeff(0) == 0) {
    IntPoly q;
    if (!deflate(cur, Int(0), &q)) break;
    cur = q;
    ++zero_mult;
  }
  if (zero_mult) out.roots.emplace_back(Int(0), zero_mult);

  if (cur.degree() >= 1) {
    // Any integer root divides the (nonzero) constant term.
    for (const Int& d : positive_divisors(cur.coeff(0))) {
      for (int sign : {1, -1}) {
        Int cand = sign > 0 ? d : -d;
        uint32_t mult = 0;
        IntPoly q;
        while (cur.degree() >= 1 && cur.eval(cand) == 0 && deflate(cur, cand, &q)) {
          cur = q;
          ++mult;
        }
        if (mult) out.roots.emplace_back(cand, mult);
        if (cur.degree() < 1) break;
      }
      if (cur.degree() < 1) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.remainder = cur;
  return out;
}

uint64_t rank_rational(const IntMat& m, const Int& shift) {
  IntMat a = m;
  if (shift != 0) {
    if (m.rows != m.cols) throw Error("rank_rational: shift requires square matrix");
    for (uint32_t i = 0; i < m.rows; ++i) a.at(i, i) -= shift;
  }
  const uint32_t nr = a.rows, nc = a.cols;
  // Bareiss fraction-free elimination with partial (nonzero) pivoting.
  Int prev = 1;
  uint32_t rank = 0;
  for (uint32_t c = 0; c < nc && rank < nr; ++c) {
    uint32_t pr = rank;
    while (pr < nr && a.at(pr, c) == 0) ++pr;
    if (pr == nr) continue;
    if (pr != rank)
      for (uint32_t j = 0; j < nc; ++j) std::swap(a.at(pr, j), a.at(rank, j));
    const Int pivot = a.at(rank, c);
    for (uint32_t i = rank + 1; i < nr; ++i) {
      for (uint32_t j = c + 1; j < nc; ++j) {
        Int num = a.at(i, j) * pivot - a.at(i, c) * a.at(rank, j);
        // Exact by the Bareiss identity.
        a.at(i, j) = num / prev;
      }
      a.at(i, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

Int det_cofactor(const IntMat& m) {
  if (m.rows != m.cols) throw Error("det_cofactor: matrix must be square");
  const uint32_t n = m.rows;
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int det = 0;
  for (uint32_t c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMat sub(n - 1, n - 1);
    for (uint32_t i = 1; i < n; ++i) {
      uint32_t jj = 0;
      for (uint32_t j = 0; j < n; ++j) {
        if (j == c) continue;
        sub.at(i - 1, jj++) = m.at(i, j);
      }
    }
    Int term = m.at(0, c) * det_cofactor(sub);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace drg::lin
