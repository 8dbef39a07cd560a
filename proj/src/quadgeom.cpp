#include "drgcert/quadgeom.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace drg::geom {

namespace {

struct VecHash {
  size_t operator()(const std::vector<uint32_t>& v) const noexcept {
    uint64_t h = 1469598103934665603ULL;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return size_t(h);
  }
};

using FlatSet = std::unordered_set<std::vector<uint32_t>, VecHash>;
using FlatMap = std::unordered_map<std::vector<uint32_t>, uint32_t, VecHash>;

Vec row_vec(const Subspace& m, uint32_t r) {
  return Vec(m.row(r), m.row(r) + m.cols());
}

Subspace mat_from_rows(const gf::Field& f, const std::vector<Vec>& rows, uint32_t cols) {
  lin::GfMat m(f, uint32_t(rows.size()), cols);
  for (uint32_t i = 0; i < rows.size(); ++i)
    for (uint32_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  return m;
}

/// x in U n W solved via coefficients: columns are U's rows and -(W's rows).
Subspace subspace_intersection(const QuadSpace& s, const Subspace& u, const Subspace& w) {
  const gf::Field& f = s.field();
  const uint32_t d = u.cols(), k = u.rows(), l = w.rows();
  lin::GfMat m(f, d, k + l);
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = 0; j < k; ++j) m.set(i, j, u.at(j, i));
    for (uint32_t j = 0; j < l; ++j) m.set(i, k + j, f.neg(w.at(j, i)));
  }
  lin::GfMat ker = lin::kernel(m);
  std::vector<Vec> rows;
  for (uint32_t r = 0; r < ker.rows(); ++r) {
    Vec x(d, 0);
    for (uint32_t j = 0; j < k; ++j)
      for (uint32_t c = 0; c < d; ++c)
        x[c] = f.add(x[c], f.mul(ker.at(r, j), u.at(j, c)));
    rows.push_back(std::move(x));
  }
  return lin::rref(mat_from_rows(f, rows, d)).reduced;
}

}  // namespace

QuadSpace::QuadSpace(const gf::Field& f, uint32_t dim,
                     const std::vector<std::array<uint32_t, 3>>& terms, uint32_t witt)
    : f_(&f), dim_(dim), witt_(witt), form_(size_t(dim) * dim, 0),
      gram_(size_t(dim) * dim, 0) {
  for (const auto& [i, j, c] : terms) {
    if (i > j || j >= dim) throw Error("QuadSpace: bad form term");
    form_[size_t(i) * dim + j] = f.add(form_[size_t(i) * dim + j], c);
  }
  // Polarization: B(e_i, e_j) = c_ij for i != j, B(e_i, e_i) = 2 c_ii.
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = 0; j < dim; ++j) {
      const uint32_t c = form_[size_t(std::min(i, j)) * dim + std::max(i, j)];
      gram_[size_t(i) * dim + j] = (i == j) ? f.add(c, c) : c;
    }
}

uint32_t QuadSpace::eval_q(const Vec& v) const {
  uint32_t acc = 0;
  for (uint32_t i = 0; i < dim_; ++i) {
    if (v[i] == 0) continue;
    for (uint32_t j = i; j < dim_; ++j) {
      const uint32_t c = form_[size_t(i) * dim_ + j];
      if (c == 0 || v[j] == 0) continue;
      acc = f_->add(acc, f_->mul(c, f_->mul(v[i], v[j])));
    }
  }
  return acc;
}

uint32_t QuadSpace::bilinear(const Vec& u, const Vec& v) const {
  uint32_t acc = 0;
  for (uint32_t i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    uint32_t rowacc = 0;
    for (uint32_t j = 0; j < dim_; ++j) {
      const uint32_t g = gram_[size_t(i) * dim_ + j];
      if (g == 0 || v[j] == 0) continue;
      rowacc = f_->add(rowacc, f_->mul(g, v[j]));
    }
    acc = f_->add(acc, f_->mul(u[i], rowacc));
  }
  return acc;
}

QuadSpace space_b3(uint64_t q) {
  const gf::Field& f = gf::field_new(q);
  return QuadSpace(f, 7, {{{0, 4, 1}}, {{1, 5, 1}}, {{2, 6, 1}}, {{3, 3, 1}}}, 3);
}

QuadSpace space_d4(uint64_t q) {
  const gf::Field& f = gf::field_new(q);
  return QuadSpace(f, 8, {{{0, 4, 1}}, {{1, 5, 1}}, {{2, 6, 1}}, {{3, 7, 1}}}, 4);
}

bool is_totally_isotropic(const QuadSpace& s, const Subspace& m) {
  const gf::Field& f = s.field();
  for (uint32_t i = 0; i < m.rows(); ++i) {
    Vec ri = row_vec(m, i);
    if (s.eval_q(ri) != 0) return false;
    for (uint32_t j = i + 1; j < m.rows(); ++j) {
      Vec rj = row_vec(m, j);
      if (s.bilinear(ri, rj) != 0) return false;
      Vec sum(m.cols());
      for (uint32_t c = 0; c < m.cols(); ++c) sum[c] = f.add(ri[c], rj[c]);
      if (s.eval_q(sum) != 0) return false;
    }
  }
  return true;
}

namespace {

/// All projectively normalized vectors (leading coefficient 1) of the span
/// of the RREF matrix rows, one per 1-space.
template <typename Fn>
void for_each_point(const gf::Field& f, const lin::GfMat& basis, Fn&& fn) {
  const uint32_t q = uint32_t(f.q());
  const uint32_t d = basis.cols();
  for (uint32_t lead = 0; lead < basis.rows(); ++lead) {
    const uint32_t nfree = basis.rows() - lead - 1;
    std::vector<uint32_t> digits(nfree, 0);
    while (true) {
      Vec v = row_vec(basis, lead);
      for (uint32_t i = 0; i < nfree; ++i) {
        const uint32_t c = digits[i];
        if (c == 0) continue;
        for (uint32_t col = 0; col < d; ++col)
          v[col] = f.add(v[col], f.mul(c, basis.at(lead + 1 + i, col)));
      }
      fn(v);
      uint32_t pos = 0;
      while (pos < nfree && digits[pos] == q - 1) digits[pos++] = 0;
      if (pos == nfree) break;
      ++digits[pos];
    }
  }
}

/// Basis of perp(S) reduced modulo S (S totally isotropic, so S <= perp(S));
/// rows span a complement of S in perp(S), RREF.
lin::GfMat perp_complement(const QuadSpace& s, const Subspace& sub) {
  const gf::Field& f = s.field();
  const uint32_t d = s.dim();
  // M[i][j] = B(row_i, e_j); perp(S) = ker M.
  lin::GfMat m(f, sub.rows(), d);
  for (uint32_t i = 0; i < sub.rows(); ++i)
    for (uint32_t j = 0; j < d; ++j) {
      uint32_t acc = 0;
      for (uint32_t t = 0; t < d; ++t)
        acc = f.add(acc, f.mul(sub.at(i, t), s.gram(t, j)));
      m.set(i, j, acc);
    }
  lin::GfMat perp = lin::kernel(m);
  // Reduce each perp basis vector mod S: clear S's pivot coordinates.
  std::vector<uint32_t> pivots;
  for (uint32_t i = 0; i < sub.rows(); ++i) {
    uint32_t p = 0;
    while (p < d && sub.at(i, p) == 0) ++p;
    pivots.push_back(p);
  }
  std::vector<Vec> rows;
  for (uint32_t r = 0; r < perp.rows(); ++r) {
    Vec v = row_vec(perp, r);
    for (uint32_t i = 0; i < sub.rows(); ++i) {
      const uint32_t c = v[pivots[i]];
      if (c == 0) continue;
      for (uint32_t col = 0; col < d; ++col)
        v[col] = f.sub(v[col], f.mul(c, sub.at(i, col)));
    }
    rows.push_back(std::move(v));
  }
  return lin::rref(mat_from_rows(f, rows, d)).reduced;
}

}  // namespace

std::vector<Subspace> max_isotropic(const QuadSpace& s) {
  const gf::Field& f = s.field();
  const uint32_t d = s.dim();

  // Level 1: isotropic 1-spaces, canonical leading-1 representatives.
  std::vector<Subspace> level;
  {
    lin::GfMat full = lin::GfMat::identity(f, d);
    for_each_point(f, full, [&](const Vec& v) {
      if (s.eval_q(v) != 0) return;
      level.push_back(mat_from_rows(f, {v}, d));
    });
    std::sort(level.begin(), level.end(),
              [](const Subspace& a, const Subspace& b) { return a.flat() < b.flat(); });
  }

  while (true) {
    std::vector<Subspace> next;
    FlatSet seen;
    for (const Subspace& sub : level) {
      lin::GfMat comp = perp_complement(s, sub);
      if (comp.rows() == 0) continue;
      for_each_point(f, comp, [&](const Vec& v) {
        if (s.eval_q(v) != 0) return;
        // v is in perp(sub) and reduced mod sub, so Q is constant on v+sub
        // and <sub, v> is totally isotropic of dimension rows+1.
        lin::GfMat ext(f, sub.rows() + 1, d);
        for (uint32_t i = 0; i < sub.rows(); ++i)
          for (uint32_t j = 0; j < d; ++j) ext.set(i, j, sub.at(i, j));
        for (uint32_t j = 0; j < d; ++j) ext.set(sub.rows(), j, v[j]);
        lin::GfMat canon = lin::rref(ext).reduced;
        if (seen.insert(canon.flat()).second) next.push_back(std::move(canon));
      });
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(),
              [](const Subspace& a, const Subspace& b) { return a.flat() < b.flat(); });
    level = std::move(next);
  }

  if (level.empty() || level.front().rows() != s.witt())
    throw Error("max_isotropic: found maximal dimension " +
                std::to_string(level.empty() ? 0 : level.front().rows()) +
                ", expected witt index " + std::to_string(s.witt()));
  return level;
}

std::vector<Subspace> ti_subspaces_bruteforce(const QuadSpace& s, uint32_t k) {
  const gf::Field& f = s.field();
  const uint32_t d = s.dim();
  const uint32_t q = uint32_t(f.q());
  if (k == 0 || k > d) throw Error("ti_subspaces_bruteforce: bad k");

  std::vector<Subspace> out;
  // Iterate pivot column sets c_0 < ... < c_{k-1}.
  std::vector<uint32_t> piv(k);
  for (uint32_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // Free positions: (i, j) with j > piv[i], j not a pivot column.
    std::vector<std::pair<uint32_t, uint32_t>> free_pos;
    std::vector<bool> is_piv(d, false);
    for (uint32_t c : piv) is_piv[c] = true;
    for (uint32_t i = 0; i < k; ++i)
      for (uint32_t j = piv[i] + 1; j < d; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);

    std::vector<uint32_t> digits(free_pos.size(), 0);
    while (true) {
      lin::GfMat m(f, k, d);
      for (uint32_t i = 0; i < k; ++i) m.set(i, piv[i], 1);
      for (size_t t = 0; t < free_pos.size(); ++t)
        m.set(free_pos[t].first, free_pos[t].second, digits[t]);
      if (is_totally_isotropic(s, m)) out.push_back(m);
      size_t pos = 0;
      while (pos < digits.size() && digits[pos] == q - 1) digits[pos++] = 0;
      if (pos == digits.size()) break;
      ++digits[pos];
    }

    // Next pivot combination.
    int i = int(k) - 1;
    while (i >= 0 && piv[i] == d - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (uint32_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(),
            [](const Subspace& a, const Subspace& b) { return a.flat() < b.flat(); });
  return out;
}

uint32_t intersection_dim(const Subspace& a, const Subspace& b) {
  const gf::Field& f = a.field();
  lin::GfMat stacked(f, a.rows() + b.rows(), a.cols());
  for (uint32_t i = 0; i < a.rows(); ++i)
    for (uint32_t j = 0; j < a.cols(); ++j) stacked.set(i, j, a.at(i, j));
  for (uint32_t i = 0; i < b.rows(); ++i)
    for (uint32_t j = 0; j < b.cols(); ++j) stacked.set(a.rows() + i, j, b.at(i, j));
  return a.rows() + b.rows() - lin::rref(stacked).rank;
}

std::string subspace_label(const Subspace& m) {
  std::string out;
  for (uint32_t i = 0; i < m.rows(); ++i) {
    if (i) out += ';';
    for (uint32_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += std::to_string(m.at(i, j));
    }
  }
  return out;
}

FamilySplit split_families(const QuadSpace& s, const std::vector<Subspace>& maximals) {
  if (maximals.empty()) throw Error("split_families: empty input");
  const uint32_t w = s.witt();
  const uint32_t n = uint32_t(maximals.size());

  FamilySplit out;
  out.side.assign(n, 0);
  const Subspace& x0 = maximals[0];
  for (uint32_t i = 0; i < n; ++i)
    out.side[i] = uint8_t((w - intersection_dim(maximals[i], x0)) % 2);

  // Keep E = <e1..e4> in f1.
  lin::GfMat e = lin::GfMat(s.field(), w, s.dim());
  for (uint32_t i = 0; i < w; ++i) e.set(i, i, 1);
  for (uint32_t i = 0; i < n; ++i) {
    if (maximals[i].flat() == e.flat()) {
      if (out.side[i] == 1)
        for (auto& sd : out.side) sd = uint8_t(1 - sd);
      break;
    }
  }
  for (uint32_t i = 0; i < n; ++i)
    (out.side[i] == 0 ? out.f1 : out.f2).push_back(i);

  // Parity law: same family iff even intersection dimension.
  auto check_pair = [&](uint32_t i, uint32_t j) {
    const uint32_t dim = intersection_dim(maximals[i], maximals[j]);
    const bool same = out.side[i] == out.side[j];
    if (same != (dim % 2 == w % 2))
      throw ParityViolation("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") has intersection dim " + std::to_string(dim) +
                            " contradicting the family split");
  };
  if (s.field().q() == 2) {
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = i + 1; j < n; ++j) check_pair(i, j);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<uint32_t> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t) {
      uint32_t i = pick(rng), j = pick(rng);
      if (i != j) check_pair(i, j);
    }
  }
  return out;
}

namespace {

struct B3Ctx {
  QuadSpace space;
  std::vector<Subspace> maximals;
  FlatMap index;
  graph::Graph g;
};

struct D4Ctx {
  QuadSpace space;
  std::vector<Subspace> maximals;
  FlatMap index;
  FamilySplit fam;
  uint32_t idx_e = 0, idx_b0 = 0;
  graph::Graph g;
};

graph::Graph dual_polar_graph(const std::vector<Subspace>& maximals, uint32_t adj_dim) {
  const uint32_t n = uint32_t(maximals.size());
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j)
      if (intersection_dim(maximals[i], maximals[j]) == adj_dim)
        edges.emplace_back(i, j);
  std::vector<std::string> labels(n);
  for (uint32_t i = 0; i < n; ++i) labels[i] = subspace_label(maximals[i]);
  return graph::Graph(n, edges, std::move(labels));
}

const B3Ctx& b3_ctx(uint64_t q) {
  static std::mutex mu;
  static std::map<uint64_t, std::unique_ptr<B3Ctx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<B3Ctx>(B3Ctx{space_b3(q), {}, {}, {}});
  ctx->maximals = max_isotropic(ctx->space);
  for (uint32_t i = 0; i < ctx->maximals.size(); ++i)
    ctx->index.emplace(ctx->maximals[i].flat(), i);
  ctx->g = dual_polar_graph(ctx->maximals, 2);
  return *cache.emplace(q, std::move(ctx)).first->second;
}

const D4Ctx& d4_ctx(uint64_t q) {
  static std::mutex mu;
  static std::map<uint64_t, std::unique_ptr<D4Ctx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<D4Ctx>(D4Ctx{space_d4(q), {}, {}, {}, 0, 0, {}});
  ctx->maximals = max_isotropic(ctx->space);
  for (uint32_t i = 0; i < ctx->maximals.size(); ++i)
    ctx->index.emplace(ctx->maximals[i].flat(), i);
  ctx->fam = split_families(ctx->space, ctx->maximals);

  lin::GfMat e(ctx->space.field(), 4, 8);
  for (uint32_t i = 0; i < 4; ++i) e.set(i, i, 1);
  auto eit = ctx->index.find(e.flat());
  if (eit == ctx->index.end()) throw Error("d4_ctx: E not among maximals");
  ctx->idx_e = eit->second;

  Subspace b0 = detail::reflect_subspace(ctx->space, e);
  auto bit = ctx->index.find(b0.flat());
  if (bit == ctx->index.end() || ctx->fam.side[bit->second] != 1 ||
      intersection_dim(e, b0) != 3)
    throw NoAdjacentMate("d4_ctx: phi(E) is not an adjacent f2 mate of E");
  ctx->idx_b0 = bit->second;

  ctx->g = dual_polar_graph(ctx->maximals, 3);
  std::vector<uint8_t> sides(ctx->maximals.size());
  for (uint32_t i = 0; i < sides.size(); ++i) sides[i] = ctx->fam.side[i];
  ctx->g.set_sides(std::move(sides));
  return *cache.emplace(q, std::move(ctx)).first->second;
}

std::vector<uint32_t> far_keep_d4(const D4Ctx& ctx) {
  const Subspace& a0 = ctx.maximals[ctx.idx_e];
  const Subspace& b0 = ctx.maximals[ctx.idx_b0];
  std::vector<uint32_t> keep;
  for (uint32_t i = 0; i < ctx.maximals.size(); ++i) {
    const Subspace& anchor = ctx.fam.side[i] == 0 ? a0 : b0;
    if (intersection_dim(ctx.maximals[i], anchor) == 0) keep.push_back(i);
  }
  return keep;
}

}  // namespace

graph::Graph dual_polar_b3(uint64_t q) { return b3_ctx(q).g; }

graph::Graph dual_polar_d4(uint64_t q) { return d4_ctx(q).g; }

graph::Graph far_from_vertex_b3(uint64_t q) {
  const B3Ctx& ctx = b3_ctx(q);
  lin::GfMat pi0(ctx.space.field(), 3, 7);
  for (uint32_t i = 0; i < 3; ++i) pi0.set(i, i, 1);
  std::vector<uint32_t> keep;
  for (uint32_t i = 0; i < ctx.maximals.size(); ++i)
    if (intersection_dim(ctx.maximals[i], pi0) == 0) keep.push_back(i);
  return graph::induce(ctx.g, keep);
}

graph::Graph far_from_edge_d4(uint64_t q) {
  const D4Ctx& ctx = d4_ctx(q);
  return graph::induce(ctx.g, far_keep_d4(ctx));
}

namespace detail {

Vec reflect(const QuadSpace& d4, const Vec& v) {
  const gf::Field& f = d4.field();
  Vec p(8, 0);
  p[3] = 1;
  p[7] = f.neg(1);
  const uint32_t qp = d4.eval_q(p);
  const uint32_t c = f.mul(d4.bilinear(v, p), f.inv(qp));
  Vec out = v;
  for (uint32_t i = 0; i < 8; ++i) out[i] = f.sub(out[i], f.mul(c, p[i]));
  return out;
}

Subspace reflect_subspace(const QuadSpace& d4, const Subspace& m) {
  std::vector<Vec> rows;
  for (uint32_t i = 0; i < m.rows(); ++i) rows.push_back(reflect(d4, row_vec(m, i)));
  return lin::rref(mat_from_rows(d4.field(), rows, m.cols())).reduced;
}

Subspace meet_h_as_b3(const QuadSpace& d4, const Subspace& m) {
  const gf::Field& f = d4.field();
  // Coefficients t with sum_i t_i (row_i[3] - row_i[7]) = 0.
  lin::GfMat cons(f, 1, m.rows());
  for (uint32_t i = 0; i < m.rows(); ++i)
    cons.set(0, i, f.sub(m.at(i, 3), m.at(i, 7)));
  lin::GfMat ker = lin::kernel(cons);
  std::vector<Vec> rows;
  for (uint32_t r = 0; r < ker.rows(); ++r) {
    Vec x(7, 0);
    for (uint32_t i = 0; i < m.rows(); ++i) {
      const uint32_t c = ker.at(r, i);
      if (c == 0) continue;
      for (uint32_t col = 0; col < 7; ++col)
        x[col] = f.add(x[col], f.mul(c, m.at(i, col)));
    }
    rows.push_back(std::move(x));
  }
  return lin::rref(mat_from_rows(f, rows, 7)).reduced;
}

}  // namespace detail

CheckReport reflection_quotient_check(uint64_t q) {
  const D4Ctx& d4 = d4_ctx(q);
  const B3Ctx& b3 = b3_ctx(q);
  const uint32_t n = uint32_t(d4.maximals.size());

  // (a) phi is an involution interchanging the families.
  std::vector<uint32_t> phi_of(n);
  for (uint32_t i = 0; i < n; ++i) {
    Subspace img = detail::reflect_subspace(d4.space, d4.maximals[i]);
    auto it = d4.index.find(img.flat());
    if (it == d4.index.end())
      return {false, "phi image of vertex " + std::to_string(i) + " is not maximal t.i."};
    phi_of[i] = it->second;
    if (d4.fam.side[i] == d4.fam.side[it->second])
      return {false, "phi fixes the family of vertex " + std::to_string(i)};
  }
  for (uint32_t i = 0; i < n; ++i)
    if (phi_of[phi_of[i]] != i)
      return {false, "phi is not an involution at vertex " + std::to_string(i)};

  // (b) A ~ phi(A) for every A in f1.
  for (uint32_t i : d4.fam.f1)
    if (intersection_dim(d4.maximals[i], d4.maximals[phi_of[i]]) != 3)
      return {false, "A and phi(A) not adjacent at f1 vertex " + std::to_string(i)};

  // (c) A -> A n H is a bijection f1 -> B3 vertices...
  if (d4.fam.f1.size() != b3.maximals.size())
    return {false, "|f1| = " + std::to_string(d4.fam.f1.size()) +
                       " but B3 has " + std::to_string(b3.maximals.size()) + " vertices"};
  std::vector<uint32_t> quot(d4.fam.f1.size());
  std::vector<uint8_t> hit(b3.maximals.size(), 0);
  for (size_t a = 0; a < d4.fam.f1.size(); ++a) {
    Subspace y = detail::meet_h_as_b3(d4.space, d4.maximals[d4.fam.f1[a]]);
    if (y.rows() != 3)
      return {false, "A n H has dimension " + std::to_string(y.rows()) +
                         " at f1 vertex " + std::to_string(d4.fam.f1[a])};
    auto it = b3.index.find(y.flat());
    if (it == b3.index.end())
      return {false, "A n H is not a B3 vertex at f1 vertex " +
                         std::to_string(d4.fam.f1[a])};
    if (hit[it->second])
      return {false, "A -> A n H is not injective at f1 vertex " +
                         std::to_string(d4.fam.f1[a])};
    hit[it->second] = 1;
    quot[a] = it->second;
  }

  // ...respecting adjacency: classes {A, phi(A)}, {A', phi(A')} have adjacent
  // representatives iff the B3 images are adjacent (intersect in dim 2).
  for (size_t a = 0; a < d4.fam.f1.size(); ++a) {
    for (size_t b = a + 1; b < d4.fam.f1.size(); ++b) {
      const uint32_t ia = d4.fam.f1[a], ib = d4.fam.f1[b];
      const bool gamma_adj =
          intersection_dim(d4.maximals[phi_of[ia]], d4.maximals[ib]) == 3;
      const bool b3_adj = b3.g.adjacent(quot[a], quot[b]);
      if (gamma_adj != b3_adj)
        return {false, "quotient adjacency mismatch at f1 pair (" +
                           std::to_string(ia) + "," + std::to_string(ib) + ")"};
    }
  }
  return {true, ""};
}

CheckReport ebd_correspondence_check(uint64_t q) {
  const D4Ctx& d4 = d4_ctx(q);
  graph::Graph gb = far_from_vertex_b3(q);
  graph::Graph gd = far_from_edge_d4(q);
  graph::Graph ebd = graph::extended_bipartite_double(gb);

  std::unordered_map<std::string, uint32_t> b3far_index;
  for (uint32_t i = 0; i < gb.n(); ++i) b3far_index.emplace(gb.label(i), i);

  std::vector<uint32_t> keep = far_keep_d4(d4);
  if (gd.n() != 2 * gb.n())
    return {false, "vertex counts differ: " + std::to_string(gd.n()) + " vs 2*" +
                       std::to_string(gb.n())};

  std::vector<uint32_t> perm(gd.n());
  std::vector<uint8_t> used(ebd.n(), 0);
  for (uint32_t j = 0; j < gd.n(); ++j) {
    Subspace y = detail::meet_h_as_b3(d4.space, d4.maximals[keep[j]]);
    auto it = b3far_index.find(subspace_label(y));
    if (it == b3far_index.end())
      return {false, "image of vertex " + std::to_string(j) +
                         " is not a far B3 vertex"};
    const uint32_t img = it->second + (gd.side(j) == 1 ? gb.n() : 0);
    if (used[img])
      return {false, "map not injective at vertex " + std::to_string(j)};
    used[img] = 1;
    perm[j] = img;
  }
  if (!graph::is_isomorphism(gd, ebd, perm))
    return {false, "explicit map does not preserve adjacency"};
  return {true, ""};
}

CheckReport nonorthogonality_check(uint64_t q) {
  const D4Ctx& d4 = d4_ctx(q);
  const Subspace& a0 = d4.maximals[d4.idx_e];
  const Subspace& b0 = d4.maximals[d4.idx_b0];
  std::vector<uint32_t> keep = far_keep_d4(d4);

  std::vector<uint32_t> side1, side2;
  for (uint32_t i : keep) (d4.fam.side[i] == 0 ? side1 : side2).push_back(i);

  for (uint32_t ia : side1) {
    const Subspace& a = d4.maximals[ia];
    Subspace a_b0 = subspace_intersection(d4.space, a, b0);
    for (uint32_t ib : side2) {
      const Subspace& b = d4.maximals[ib];
      if (intersection_dim(a, b) == 3) continue;  // adjacent
      Subspace a0_b = subspace_intersection(d4.space, a0, b);
      if (a0_b.rows() != 1 || a_b0.rows() != 1)
        return {false, "A0 n B or A n B0 is not a point at pair (" +
                           std::to_string(ia) + "," + std::to_string(ib) + ")"};
      if (d4.space.bilinear(row_vec(a0_b, 0), row_vec(a_b0, 0)) == 0)
        return {false, "A0 n B and A n B0 orthogonal at pair (" +
                           std::to_string(ia) + "," + std::to_string(ib) + ")"};
    }
  }
  return {true, ""};
}

}  // namespace drg::geom
