#include "drgcert/zgraph.hpp"

#include <string>
#include <unordered_map>

#include "drgcert/exactlin.hpp"

namespace drg::zg {

Vec3 cross(const gf::Field& f, const Vec3& u, const Vec3& v) {
  return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])),
          f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
          f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

uint32_t dot(const gf::Field& f, const Vec3& u, const Vec3& v) {
  uint32_t acc = 0;
  for (int i = 0; i < 3; ++i) acc = f.add(acc, f.mul(u[i], v[i]));
  return acc;
}

uint64_t vertex_id(const gf::Field& f, const Vec3& u, const Vec3& up) {
  const uint64_t q = f.q();
  uint64_t id = 0;
  for (int i = 0; i < 3; ++i) id = id * q + u[i];
  for (int i = 0; i < 3; ++i) id = id * q + up[i];
  return id;
}

std::pair<Vec3, Vec3> vertex_of_id(const gf::Field& f, uint64_t id) {
  const uint64_t q = f.q();
  Vec3 u{}, up{};
  for (int i = 2; i >= 0; --i) {
    up[i] = uint32_t(id % q);
    id /= q;
  }
  for (int i = 2; i >= 0; --i) {
    u[i] = uint32_t(id % q);
    id /= q;
  }
  return {u, up};
}

namespace {

std::string z_label(const Vec3& u, const Vec3& up) {
  std::string s;
  for (int i = 0; i < 3; ++i) s += std::to_string(u[i]) + ",";
  for (int i = 0; i < 3; ++i) s += std::to_string(up[i]) + (i < 2 ? "," : "");
  return s;
}

/// All q^3 vectors in lexicographic order of (v1,v2,v3).
std::vector<Vec3> all_vec3(const gf::Field& f) {
  const uint32_t q = uint32_t(f.q());
  std::vector<Vec3> out;
  out.reserve(size_t(q) * q * q);
  for (uint32_t x = 0; x < q; ++x)
    for (uint32_t y = 0; y < q; ++y)
      for (uint32_t z = 0; z < q; ++z) out.push_back({x, y, z});
  return out;
}

}  // namespace

graph::Graph build_z(uint64_t q) {
  const gf::Field& f = gf::field_new(q);
  const std::vector<Vec3> w = all_vec3(f);
  const uint64_t n = uint64_t(w.size()) * w.size();
  if (n > 0x7fffffff) throw Error("build_z: q too large");

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(size_t(n) * (w.size() - 1) / 2);
  std::vector<std::string> labels(n);

  for (uint64_t id = 0; id < n; ++id) {
    const auto [u, up] = vertex_of_id(f, id);
    labels[id] = z_label(u, up);
    for (const Vec3& v : w) {
      if (v == u) continue;
      const Vec3 cuv = cross(f, u, v);
      Vec3 vp;
      for (int i = 0; i < 3; ++i) vp[i] = f.add(cuv[i], up[i]);
      const uint64_t other = vertex_id(f, v, vp);
      if (id < other) edges.emplace_back(uint32_t(id), uint32_t(other));
    }
  }
  return graph::Graph(uint32_t(n), edges, std::move(labels));
}

std::vector<uint32_t> z_automorphism(uint64_t q, const Vec3& a, const Vec3& b) {
  const gf::Field& f = gf::field_new(q);
  const uint64_t n = uint64_t(f.q()) * f.q() * f.q();
  std::vector<uint32_t> perm(size_t(n) * n);
  for (uint64_t id = 0; id < perm.size(); ++id) {
    const auto [u, up] = vertex_of_id(f, id);
    Vec3 nu, nup;
    const Vec3 au = cross(f, a, u);
    for (int i = 0; i < 3; ++i) {
      nu[i] = f.add(u[i], a[i]);
      nup[i] = f.add(up[i], f.add(au[i], b[i]));
    }
    perm[id] = uint32_t(vertex_id(f, nu, nup));
  }
  return perm;
}

uint32_t z_distance_class(const gf::Field& f, const Vec3& u, const Vec3& up) {
  const bool uz = u == Vec3{0, 0, 0};
  const bool upz = up == Vec3{0, 0, 0};
  if (uz && upz) return 0;
  if (!uz && upz) return 1;
  if (uz) return 3;
  return dot(f, u, up) == 0 ? 2 : 3;
}

std::pair<Vec3, Vec3> alt_label(const gf::Field& f, const AltMatrix& m) {
  return {Vec3{m.c, m.e, m.f}, Vec3{f.neg(m.d), m.b, f.neg(m.a)}};
}

namespace {

lin::GfMat alt_matrix_4x4(const gf::Field& f, const AltMatrix& m) {
  lin::GfMat a(f, 4, 4);
  const uint32_t vals[4][4] = {
      {0, m.a, m.b, m.c},
      {f.neg(m.a), 0, m.d, m.e},
      {f.neg(m.b), f.neg(m.d), 0, m.f},
      {f.neg(m.c), f.neg(m.e), f.neg(m.f), 0}};
  for (uint32_t i = 0; i < 4; ++i)
    for (uint32_t j = 0; j < 4; ++j) a.set(i, j, vals[i][j]);
  return a;
}

uint32_t gf_det(const gf::Field& f, lin::GfMat m) {
  const uint32_t n = m.rows();
  uint32_t det = 1;
  for (uint32_t c = 0; c < n; ++c) {
    uint32_t pr = c;
    while (pr < n && m.at(pr, c) == 0) ++pr;
    if (pr == n) return 0;
    if (pr != c) {
      for (uint32_t j = 0; j < n; ++j) std::swap(m.row(pr)[j], m.row(c)[j]);
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    const uint32_t inv = f.inv(m.at(c, c));
    for (uint32_t i = c + 1; i < n; ++i) {
      const uint32_t factor = f.mul(m.at(i, c), inv);
      if (factor == 0) continue;
      for (uint32_t j = c; j < n; ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(c, j))));
    }
  }
  return det;
}

uint32_t pfaffian_expr(const gf::Field& f, const AltMatrix& m) {
  // af - be + cd
  return f.add(f.sub(f.mul(m.a, m.f), f.mul(m.b, m.e)), f.mul(m.c, m.d));
}

template <typename Fn>
void for_each_alt(const gf::Field& f, Fn&& fn) {
  const uint32_t q = uint32_t(f.q());
  AltMatrix m;
  for (m.a = 0; m.a < q; ++m.a)
    for (m.b = 0; m.b < q; ++m.b)
      for (m.c = 0; m.c < q; ++m.c)
        for (m.d = 0; m.d < q; ++m.d)
          for (m.e = 0; m.e < q; ++m.e)
            for (m.f = 0; m.f < q; ++m.f) fn(m);
}

std::string alt_to_string(const AltMatrix& m) {
  return "(a,b,c,d,e,f)=(" + std::to_string(m.a) + "," + std::to_string(m.b) + "," +
         std::to_string(m.c) + "," + std::to_string(m.d) + "," + std::to_string(m.e) +
         "," + std::to_string(m.f) + ")";
}

}  // namespace

geom::CheckReport verify_b3far_z_iso(uint64_t q) {
  const gf::Field& f = gf::field_new(q);
  graph::Graph far = geom::far_from_vertex_b3(q);
  graph::Graph z = build_z(q);
  if (far.n() != z.n())
    return {false, "vertex counts differ: far graph " + std::to_string(far.n()) +
                       ", Z " + std::to_string(z.n())};

  std::unordered_map<std::string, uint32_t> far_index;
  for (uint32_t i = 0; i < far.n(); ++i) far_index.emplace(far.label(i), i);

  const geom::QuadSpace b3 = geom::space_b3(q);

  std::vector<uint32_t> perm(z.n(), 0);
  std::vector<uint8_t> z_used(z.n(), 0), far_used(far.n(), 0);
  geom::CheckReport rep{true, ""};

  for_each_alt(f, [&](const AltMatrix& m) {
    if (!rep.pass) return;
    lin::GfMat a = alt_matrix_4x4(f, m);
    // F_A = {(A t, t)}; F_A n H cut out by t4 = -(c t1 + e t2 + f t3).
    std::vector<geom::Vec> rows;
    const uint32_t tvals[3][4] = {{1, 0, 0, f.neg(m.c)},
                                  {0, 1, 0, f.neg(m.e)},
                                  {0, 0, 1, f.neg(m.f)}};
    for (int r = 0; r < 3; ++r) {
      geom::Vec x(8, 0);
      for (uint32_t i = 0; i < 4; ++i) {
        uint32_t acc = 0;
        for (uint32_t j = 0; j < 4; ++j) acc = f.add(acc, f.mul(a.at(i, j), tvals[r][j]));
        x[i] = acc;
      }
      for (uint32_t i = 0; i < 4; ++i) x[4 + i] = tvals[r][i];
      if (x[3] != x[7]) {
        rep = {false, "F_A n H representative leaves H at " + alt_to_string(m)};
        return;
      }
      x.resize(7);
      rows.push_back(std::move(x));
    }
    lin::GfMat basis(f, 3, 7);
    for (uint32_t i = 0; i < 3; ++i)
      for (uint32_t j = 0; j < 7; ++j) basis.set(i, j, rows[i][j]);
    lin::GfMat canon = lin::rref(basis).reduced;
    if (canon.rows() != 3) {
      rep = {false, "F_A n H is not 3-dimensional at " + alt_to_string(m)};
      return;
    }
    if (!geom::is_totally_isotropic(b3, canon)) {
      rep = {false, "F_A n H is not totally isotropic at " + alt_to_string(m)};
      return;
    }
    auto it = far_index.find(geom::subspace_label(canon));
    if (it == far_index.end()) {
      rep = {false, "F_A n H is not a far vertex at " + alt_to_string(m)};
      return;
    }
    const auto [u, up] = alt_label(f, m);
    const uint64_t zid = vertex_id(f, u, up);
    if (z_used[zid] || far_used[it->second]) {
      rep = {false, "labeling not injective at " + alt_to_string(m)};
      return;
    }
    z_used[zid] = 1;
    far_used[it->second] = 1;
    perm[zid] = it->second;
  });
  if (!rep.pass) return rep;

  for (uint32_t i = 0; i < z.n(); ++i)
    if (!z_used[i]) return {false, "Z vertex " + std::to_string(i) + " never labeled"};
  if (!graph::is_isomorphism(z, far, perm))
    return {false, "explicit map does not preserve adjacency"};
  return {true, ""};
}

geom::CheckReport verify_alt_kernel_basis(uint64_t q) {
  const gf::Field& f = gf::field_new(q);
  geom::CheckReport rep{true, ""};
  for_each_alt(f, [&](const AltMatrix& m) {
    if (!rep.pass) return;
    const bool zero = !m.a && !m.b && !m.c && !m.d && !m.e && !m.f;
    if (zero || pfaffian_expr(f, m) != 0) return;
    lin::GfMat a = alt_matrix_4x4(f, m);
    lin::GfMat ker = lin::kernel(a);
    if (ker.rows() != 2) {
      rep = {false, "kernel dimension " + std::to_string(ker.rows()) + " at " +
                        alt_to_string(m)};
      return;
    }
    const uint32_t spanning[4][4] = {
        {0, m.f, f.neg(m.e), m.d},
        {f.neg(m.f), 0, m.c, f.neg(m.b)},
        {m.e, f.neg(m.c), 0, m.a},
        {f.neg(m.d), m.b, f.neg(m.a), 0}};
    lin::GfMat span(f, 4, 4);
    for (uint32_t i = 0; i < 4; ++i) {
      // Each stated vector must lie in ker A.
      for (uint32_t r = 0; r < 4; ++r) {
        uint32_t acc = 0;
        for (uint32_t cc = 0; cc < 4; ++cc)
          acc = f.add(acc, f.mul(a.at(r, cc), spanning[i][cc]));
        if (acc != 0) {
          rep = {false, "stated vector " + std::to_string(i) +
                            " is not in ker A at " + alt_to_string(m)};
          return;
        }
      }
      for (uint32_t j = 0; j < 4; ++j) span.set(i, j, spanning[i][j]);
    }
    if (lin::rref(span).rank != 2) {
      rep = {false, "stated vectors do not span a 2-space at " + alt_to_string(m)};
      return;
    }
  });
  return rep;
}

geom::CheckReport verify_alt_det_identity(uint64_t q) {
  const gf::Field& f = gf::field_new(q);
  geom::CheckReport rep{true, ""};
  for_each_alt(f, [&](const AltMatrix& m) {
    if (!rep.pass) return;
    const uint32_t pf = pfaffian_expr(f, m);
    if (gf_det(f, alt_matrix_4x4(f, m)) != f.mul(pf, pf))
      rep = {false, "det != (af-be+cd)^2 at " + alt_to_string(m)};
  });
  return rep;
}

}  // namespace drg::zg
