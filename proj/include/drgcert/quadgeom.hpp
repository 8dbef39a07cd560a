#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "drgcert/errors.hpp"
#include "drgcert/exactlin.hpp"
#include "drgcert/gf.hpp"
#include "drgcert/graph.hpp"

namespace drg::geom {

struct ParityViolation : Error {
  using Error::Error;
};
struct NoAdjacentMate : Error {
  using Error::Error;
};

/// Coordinate vector of field element codes.
using Vec = std::vector<uint32_t>;
/// Subspace, always stored as an RREF basis (rows = basis vectors).
using Subspace = lin::GfMat;

/// Vector space over GF(q) with a quadratic form Q(x) = sum_{i<=j} c_ij x_i x_j.
/// The polarization B(x,y) = Q(x+y) - Q(x) - Q(y) is kept as a Gram matrix.
class QuadSpace {
 public:
  /// terms: list of (i, j, coeff-code) with i <= j.
  QuadSpace(const gf::Field& f, uint32_t dim,
            const std::vector<std::array<uint32_t, 3>>& terms, uint32_t witt);

  const gf::Field& field() const { return *f_; }
  uint32_t dim() const { return dim_; }
  uint32_t witt() const { return witt_; }

  uint32_t eval_q(const Vec& v) const;
  uint32_t bilinear(const Vec& u, const Vec& v) const;
  uint32_t gram(uint32_t i, uint32_t j) const { return gram_[size_t(i) * dim_ + j]; }

 private:
  const gf::Field* f_;
  uint32_t dim_;
  uint32_t witt_;
  std::vector<uint32_t> form_;  // upper-triangular coefficients, row-major
  std::vector<uint32_t> gram_;
};

/// Dim-7 space with Q(x) = x1 x5 + x2 x6 + x3 x7 + x4^2 (type B3).
QuadSpace space_b3(uint64_t q);
/// Dim-8 hyperbolic space with Q(x) = x1 x5 + x2 x6 + x3 x7 + x4 x8 (type D4).
QuadSpace space_d4(uint64_t q);

/// Q vanishes on the whole span. Checks Q on basis vectors, the polarization
/// on pairs, and (belt and braces, mandatory in characteristic 2) Q on all
/// pairwise sums of basis vectors.
bool is_totally_isotropic(const QuadSpace& s, const Subspace& m);

/// All maximal totally isotropic subspaces, RREF canonical, sorted
/// lexicographically by flattened basis encoding. Verifies the found
/// dimension equals s.witt().
std::vector<Subspace> max_isotropic(const QuadSpace& s);

/// Slow oracle: every totally isotropic k-subspace by exhaustive RREF
/// enumeration of all k-subspaces. Intended for q = 2 cross-checks.
std::vector<Subspace> ti_subspaces_bruteforce(const QuadSpace& s, uint32_t k);

uint32_t intersection_dim(const Subspace& a, const Subspace& b);

/// Label: basis rows joined by ';', entries by ',' (integer element codes).
std::string subspace_label(const Subspace& m);

struct FamilySplit {
  std::vector<uint32_t> f1, f2;  // indices into the maximal list
  std::vector<uint8_t> side;     // 0 = f1, 1 = f2, per index
};

/// Splits the maximal t.i. subspaces of a D4 space into the two families by
/// intersection-dimension parity, with E = <e1..e4> placed in f1. Verifies
/// the parity law on all pairs for q = 2 and on 10^4 seeded random pairs for
/// larger q; throws ParityViolation on any violation.
FamilySplit split_families(const QuadSpace& s, const std::vector<Subspace>& maximals);

/// Dual polar graph B3(q): maximal t.i. subspaces of space_b3(q), adjacent
/// when the intersection has dimension 2.
graph::Graph dual_polar_b3(uint64_t q);

/// Dual polar graph D4(q): bipartite on f1 u f2, adjacent when the
/// intersection has dimension 3. Bipartition recorded on the graph.
graph::Graph dual_polar_d4(uint64_t q);

/// Subgraph of dual_polar_b3(q) induced on the vertices disjoint from
/// pi0 = <e1,e2,e3>.
graph::Graph far_from_vertex_b3(uint64_t q);

/// Subgraph of dual_polar_d4(q) induced on
/// {A in F1 : A n A0 = 0} u {B in F2 : B n B0 = 0}, where A0 = E and
/// B0 = phi(E) = <e1,e2,e3,e8> is the mate of E across the reflection phi
/// (the unique adjacent f2-member making the quotient identification work).
graph::Graph far_from_edge_d4(uint64_t q);

struct CheckReport {
  bool pass = true;
  std::string detail;  // first counterexample when pass = false
};

/// Certifies the reflection quotient D4 -> B3: phi is an involution swapping
/// f1/f2 with phi(A) ~ A, and A -> A n H is an adjacency-respecting bijection
/// from f1 onto the B3 dual polar vertices.
CheckReport reflection_quotient_check(uint64_t q);

/// Certifies far_from_edge_d4(q) = EBD(far_from_vertex_b3(q)) under the
/// explicit map A -> (A n H)+, B -> (B n H)- (no isomorphism search).
CheckReport ebd_correspondence_check(uint64_t q);

/// For every nonadjacent pair A (f1 side), B (f2 side) of far_from_edge_d4,
/// the points A0 n B and A n B0 exist and are nonorthogonal. Exhaustive;
/// meant for q = 2.
CheckReport nonorthogonality_check(uint64_t q);

namespace detail {
/// Reflection in the nonisotropic point P = e4 - e8 of the D4 space:
/// phi(v) = v - (B(v,P)/Q(P)) P. Fixes H = {x4 = x8} pointwise.
Vec reflect(const QuadSpace& d4, const Vec& v);
Subspace reflect_subspace(const QuadSpace& d4, const Subspace& m);
/// A n H truncated to the first 7 coordinates, RREF over the B3 space.
Subspace meet_h_as_b3(const QuadSpace& d4, const Subspace& m);
}  // namespace detail

}  // namespace drg::geom
