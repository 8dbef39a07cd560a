#include "drgcert/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace drg::gf {

namespace {

// ---- polynomial helpers over GF(p), coefficients little-endian ----

int poly_deg(const std::vector<uint32_t>& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[size_t(i)]) return i;
  return -1;
}

// a mod b, b nonzero; p prime
std::vector<uint32_t> poly_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b,
                               uint32_t p) {
  int db = poly_deg(b);
  uint32_t lead_inv = 1;
  {
    // inverse of b's leading coefficient mod p
    uint32_t l = b[size_t(db)] % p;
    int64_t t = 0, newt = 1, r = p, newr = l;
    while (newr != 0) {
      int64_t qq = r / newr;
      std::swap(t -= qq * newt, newt);
      std::swap(r -= qq * newr, newr);
    }
    lead_inv = uint32_t(((t % p) + p) % p);
  }
  for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
    uint32_t f = uint32_t((uint64_t(a[size_t(da)]) * lead_inv) % p);
    for (int i = 0; i <= db; ++i) {
      uint64_t sub = (uint64_t(f) * b[size_t(i)]) % p;
      size_t k = size_t(da - db + i);
      a[k] = uint32_t((a[k] + p - uint32_t(sub)) % p);
    }
  }
  return a;
}

bool is_irreducible(const std::vector<uint32_t>& m, uint32_t p, uint32_t e) {
  // trial division by every monic polynomial of degree 1..e/2
  for (uint32_t d = 1; 2 * d <= e; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<uint32_t> div(d + 1, 0);
      uint64_t t = idx;
      for (uint32_t i = 0; i < d; ++i) {
        div[i] = uint32_t(t % p);
        t /= p;
      }
      div[d] = 1;
      if (poly_deg(poly_mod(m, div, p)) < 0) return false;
    }
  }
  return true;
}

// smallest monic irreducible of degree e over GF(p); coefficient tuples
// (c_0,...,c_{e-1}) compared lexicographically low-degree-first
std::vector<uint32_t> smallest_irreducible(uint32_t p, uint32_t e) {
  std::vector<uint32_t> m(e + 1, 0);
  m[e] = 1;
  if (e == 1) return m;  // x itself: GF(p)[x]/(x) = GF(p)
  uint64_t total = 1;
  for (uint32_t i = 0; i < e; ++i) total *= p;
  std::vector<uint64_t> weight(e);  // c_0 most significant
  weight[e - 1] = 1;
  for (int i = int(e) - 2; i >= 0; --i) weight[size_t(i)] = weight[size_t(i) + 1] * p;
  for (uint64_t idx = 0; idx < total; ++idx) {
    for (uint32_t i = 0; i < e; ++i) m[i] = uint32_t((idx / weight[i]) % p);
    if (is_irreducible(m, p, e)) return m;
  }
  throw Error("no irreducible polynomial found (unreachable)");
}

}  // namespace

Field::Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  uint64_t q = 1;
  pow_p_.resize(e + 1);
  pow_p_[0] = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    pow_p_[i + 1] = uint32_t(q);
  }
  q_ = uint32_t(q);
  constexpr uint32_t kTableLimit = 1024;
  if (q_ <= kTableLimit) build_tables();
}

std::vector<uint32_t> Field::coeffs(uint32_t a) const {
  std::vector<uint32_t> c(e_);
  for (uint32_t i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

uint32_t Field::from_coeffs(const std::vector<uint32_t>& c) const {
  uint32_t a = 0;
  for (size_t i = c.size(); i-- > 0;) a = a * p_ + (c[i] % p_);
  return a;
}

uint32_t Field::add_direct(uint32_t a, uint32_t b) const {
  if (e_ == 1) return (a + b) % p_;
  uint32_t r = 0;
  for (uint32_t i = 0; i < e_; ++i)
    r += ((a / pow_p_[i] + b / pow_p_[i]) % p_) * pow_p_[i];
  return r;
}

uint32_t Field::neg_direct(uint32_t a) const {
  if (e_ == 1) return (p_ - a) % p_;
  uint32_t r = 0;
  for (uint32_t i = 0; i < e_; ++i)
    r += ((p_ - a / pow_p_[i] % p_) % p_) * pow_p_[i];
  return r;
}

uint32_t Field::mul_direct(uint32_t a, uint32_t b) const {
  if (e_ == 1) return uint32_t((uint64_t(a) * b) % p_);
  std::vector<uint32_t> prod(2 * e_ - 1, 0);
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t ai = (a / pow_p_[i]) % p_;
    if (!ai) continue;
    for (uint32_t j = 0; j < e_; ++j) {
      uint32_t bj = (b / pow_p_[j]) % p_;
      prod[i + j] = uint32_t((prod[i + j] + uint64_t(ai) * bj) % p_);
    }
  }
  prod = poly_mod(std::move(prod), modulus_, p_);
  uint32_t r = 0;
  for (uint32_t i = 0; i < e_ && i < prod.size(); ++i) r += prod[i] * pow_p_[i];
  return r;
}

uint32_t Field::inv_direct(uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(q_) + ")");
  auto scal_inv = [&](uint32_t x) {
    int64_t t = 0, newt = 1, r = p_, newr = x % p_;
    while (newr != 0) {
      int64_t qq = r / newr;
      std::swap(t -= qq * newt, newt);
      std::swap(r -= qq * newr, newr);
    }
    return uint32_t(((t % p_) + p_) % p_);
  };
  if (e_ == 1) return scal_inv(a);

  // extended Euclid in GF(p)[x]: r0 = modulus, r1 = a; gcd is a nonzero
  // constant since the modulus is irreducible
  std::vector<uint32_t> r0 = modulus_, r1 = coeffs(a);
  std::vector<uint32_t> t0{0}, t1{1};
  while (poly_deg(r1) >= 0) {
    // quotient of r0 by r1
    int d1 = poly_deg(r1);
    uint32_t linv = scal_inv(r1[size_t(d1)]);
    std::vector<uint32_t> quot(size_t(std::max(poly_deg(r0) - d1 + 1, 1)), 0);
    std::vector<uint32_t> rem = r0;
    for (int dr = poly_deg(rem); dr >= d1; dr = poly_deg(rem)) {
      uint32_t f = uint32_t((uint64_t(rem[size_t(dr)]) * linv) % p_);
      quot[size_t(dr - d1)] = f;
      for (int i = 0; i <= d1; ++i) {
        size_t k = size_t(dr - d1 + i);
        rem[k] = (rem[k] + p_ - uint32_t((uint64_t(f) * r1[size_t(i)]) % p_)) % p_;
      }
    }
    // tnew = t0 - quot * t1
    std::vector<uint32_t> tnew(std::max(t0.size(), quot.size() + t1.size()), 0);
    for (size_t i = 0; i < t0.size(); ++i) tnew[i] = t0[i];
    for (size_t i = 0; i < quot.size(); ++i) {
      if (!quot[i]) continue;
      for (size_t j = 0; j < t1.size(); ++j) {
        size_t k = i + j;
        tnew[k] = (tnew[k] + p_ - uint32_t((uint64_t(quot[i]) * t1[j]) % p_)) % p_;
      }
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tnew);
  }
  // r0 is the gcd (nonzero constant); t0 / r0[0] inverts a mod modulus
  uint32_t c = scal_inv(r0[0]);
  std::vector<uint32_t> res(e_, 0);
  for (size_t i = 0; i < t0.size() && i < e_; ++i)
    res[i] = uint32_t((uint64_t(t0[i]) * c) % p_);
  return from_coeffs(res);
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(q_) + ")");
  return tables_ ? inv_tab_[a] : inv_direct(a);
}

uint32_t Field::pow(uint32_t a, uint64_t n) const {
  uint32_t r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

void Field::build_tables() {
  add_tab_.resize(size_t(q_) * q_);
  mul_tab_.resize(size_t(q_) * q_);
  neg_tab_.resize(q_);
  inv_tab_.resize(q_);
  for (uint32_t a = 0; a < q_; ++a) {
    neg_tab_[a] = neg_direct(a);
    inv_tab_[a] = a ? inv_direct(a) : 0;
    for (uint32_t b = 0; b < q_; ++b) {
      add_tab_[size_t(a) * q_ + b] = add_direct(a, b);
      mul_tab_[size_t(a) * q_ + b] = mul_direct(a, b);
    }
  }
  tables_ = true;
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = int(e_); i >= 0; --i) {
    uint32_t c = modulus_[size_t(i)];
    if (!c) continue;
    if (!first) os << "+";
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      if (c != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

const Field& field_new(uint64_t q, uint64_t max_order) {
  if (q > max_order)
    throw TooLarge("field order " + std::to_string(q) + " exceeds bound " +
                   std::to_string(max_order));
  if (q < 2) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q prime
  uint32_t e = 0;
  uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++e;
  }
  if (t != 1)
    throw NotPrimePower(std::to_string(q) + " is not a prime power");

  static std::mutex mu;
  static std::map<uint64_t, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(q);
  if (it == registry.end()) {
    auto mod = smallest_irreducible(uint32_t(p), e);
    it = registry
             .emplace(q, std::unique_ptr<Field>(new Field(uint32_t(p), e, std::move(mod))))
             .first;
  }
  return *it->second;
}

void Element::check_same(const Element& a, const Element& b, const char* op) {
  if (a.f_ != b.f_ && !(*a.f_ == *b.f_))
    throw FieldMismatch(std::string("operands of '") + op + "' belong to different fields");
}

std::vector<Element> elements(const Field& f) {
  std::vector<Element> out;
  out.reserve(f.q());
  for (uint32_t c = 0; c < f.q(); ++c) out.emplace_back(f, c);
  return out;
}

}  // namespace drg::gf
