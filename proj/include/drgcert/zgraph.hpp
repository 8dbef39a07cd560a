#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "drgcert/gf.hpp"
#include "drgcert/graph.hpp"
#include "drgcert/quadgeom.hpp"

namespace drg::zg {

/// 3-vector over a field, entries as element codes.
using Vec3 = std::array<uint32_t, 3>;

/// Standard outer product: (u2 v3 - u3 v2, u3 v1 - u1 v3, u1 v2 - u2 v1).
Vec3 cross(const gf::Field& f, const Vec3& u, const Vec3& v);
uint32_t dot(const gf::Field& f, const Vec3& u, const Vec3& v);

/// Vertex id of (u, u'): base-q digits (u1,u2,u3,u'1,u'2,u'3), u1 most
/// significant.
uint64_t vertex_id(const gf::Field& f, const Vec3& u, const Vec3& up);
std::pair<Vec3, Vec3> vertex_of_id(const gf::Field& f, uint64_t id);

/// The graph Z on W x W, W = GF(q)^3: (u,u') ~ (v,v') iff distinct and
/// u x v + u' - v' = 0. Labels carry the six coordinates.
graph::Graph build_z(uint64_t q);

/// The automorphism (u,u') -> (u+a, u' + (a x u) + b) as a vertex permutation.
std::vector<uint32_t> z_automorphism(uint64_t q, const Vec3& a, const Vec3& b);

/// Closed-form distance from (0,0): 0 at the origin; 1 if u != 0, u' = 0;
/// 2 if u,u' != 0 and u.u' = 0; 3 if u.u' != 0 or u = 0 != u'.
uint32_t z_distance_class(const gf::Field& f, const Vec3& u, const Vec3& up);

/// The alternating 4x4 matrix of the explicit labeling:
///   (  0  a  b  c )
///   ( -a  0  d  e )
///   ( -b -d  0  f )
///   ( -c -e -f  0 )
struct AltMatrix {
  uint32_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

/// Label extraction u = (c,e,f), u' = (-d, b, -a).
std::pair<Vec3, Vec3> alt_label(const gf::Field& f, const AltMatrix& m);

/// End-to-end check that A -> F_A n H is a bijection from alternating
/// matrices onto far_from_vertex_b3(q) carrying the adjacency of Z over
/// exactly (explicit maps, no search).
geom::CheckReport verify_b3far_z_iso(uint64_t q);

/// For every A != 0 with det A = 0: ker A is 2-dimensional and spanned by
/// the four vectors (0,f,-e,d), (-f,0,c,-b), (e,-c,0,a), (-d,b,-a,0).
geom::CheckReport verify_alt_kernel_basis(uint64_t q);

/// det A = (af - be + cd)^2 over GF(q) for all q^6 matrices.
geom::CheckReport verify_alt_det_identity(uint64_t q);

}  // namespace drg::zg
