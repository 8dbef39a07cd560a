#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drgcert/errors.hpp"

namespace drg::gf {

struct NotPrimePower : Error {
  explicit NotPrimePower(const std::string& w) : Error(w) {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& w) : Error(w) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w) : Error(w) {}
};
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& w) : Error(w) {}
};

inline constexpr uint64_t kDefaultMaxOrder = uint64_t{1} << 16;

/// GF(q), q = p^e, in the polynomial basis GF(p)[x]/(modulus).
///
/// Elements are identified with integer codes 0..q-1: the code of the element
/// with coefficients c_0..c_{e-1} (little-endian) is sum c_i * p^i, so code 0
/// is 0, code 1 is 1 and code p is x. Enumeration by ascending code equals
/// lexicographic order of coefficient tuples with the top coefficient most
/// significant. The modulus is the lexicographically smallest monic
/// irreducible polynomial of degree e over GF(p), comparing coefficient
/// tuples low-degree-first (not a Conway polynomial).
class Field {
 public:
  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }

  /// Modulus coefficients, little-endian, length e+1, monic. For e = 1 this
  /// is [0, 1], i.e. the polynomial x.
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  uint32_t add(uint32_t a, uint32_t b) const {
    return tables_ ? add_tab_[size_t(a) * q_ + b] : add_direct(a, b);
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return tables_ ? mul_tab_[size_t(a) * q_ + b] : mul_direct(a, b);
  }
  uint32_t neg(uint32_t a) const { return tables_ ? neg_tab_[a] : neg_direct(a); }
  uint32_t inv(uint32_t a) const;  // throws DivisionByZero on a == 0
  uint32_t pow(uint32_t a, uint64_t n) const;

  std::vector<uint32_t> coeffs(uint32_t a) const;
  uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus);
  friend const Field& field_new(uint64_t, uint64_t);

  uint32_t add_direct(uint32_t a, uint32_t b) const;
  uint32_t mul_direct(uint32_t a, uint32_t b) const;
  uint32_t neg_direct(uint32_t a) const;
  uint32_t inv_direct(uint32_t a) const;
  void build_tables();

  uint32_t p_, e_, q_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> pow_p_;  // p^0..p^e
  bool tables_ = false;
  std::vector<uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

/// Returns the interned GF(q). Fields are constructed once per q and live for
/// the program's lifetime, so `const Field*` borrows never dangle.
/// Throws NotPrimePower / TooLarge.
const Field& field_new(uint64_t q, uint64_t max_order = kDefaultMaxOrder);

/// A field element together with its field, for checked arithmetic.
class Element {
 public:
  Element(const Field& f, uint32_t code) : f_(&f), code_(code) {}

  uint32_t code() const { return code_; }
  const Field& field() const { return *f_; }

  friend Element operator+(Element a, Element b) {
    check_same(a, b, "add");
    return Element(*a.f_, a.f_->add(a.code_, b.code_));
  }
  friend Element operator-(Element a, Element b) {
    check_same(a, b, "sub");
    return Element(*a.f_, a.f_->sub(a.code_, b.code_));
  }
  friend Element operator*(Element a, Element b) {
    check_same(a, b, "mul");
    return Element(*a.f_, a.f_->mul(a.code_, b.code_));
  }
  Element operator-() const { return Element(*f_, f_->neg(code_)); }
  Element inverse() const { return Element(*f_, f_->inv(code_)); }

  bool operator==(const Element& o) const { return f_ == o.f_ && code_ == o.code_; }

 private:
  static void check_same(const Element& a, const Element& b, const char* op);
  const Field* f_;
  uint32_t code_;
};

/// All q elements in canonical order (code 0, 1, ..., q-1).
std::vector<Element> elements(const Field& f);

}  // namespace drg::gf
