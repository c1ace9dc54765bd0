#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "o2sep/errors.hpp"

namespace o2sep {

class FieldSpec;
class FieldElement;

/// Owning handle for a field. Elements, polynomials and group elements keep
/// non-owning pointers into the spec, so the handle must outlive them.
using Field = std::shared_ptr<const FieldSpec>;

/// Builds GF(q) for a prime power q = p^k with 2 <= q <= FieldSpec::kMaxQ.
/// Throws NotAPrimePower when q has two distinct prime factors or q < 2, and
/// ConfigError when q exceeds the implementation bound.
Field field_make(unsigned q);

/// Exact description of GF(p^k) with dense operation tables.
///
/// Elements are residues c_0 + c_1 t + ... + c_{k-1} t^{k-1} modulo an
/// irreducible degree-k polynomial over F_p; the index of an element is
/// sum_i c_i p^i. Index order therefore sorts coefficient tuples
/// high-degree-first with 0 and 1 leading, and is the canonical total order
/// used everywhere (enumeration, orbit representative selection, witness
/// ordering). For prime fields it coincides with integer order.
///
/// The modulus for k > 1 is the lexicographically smallest monic irreducible
/// polynomial of degree k over F_p, coefficients compared high-degree-first,
/// so every run and every field rebuild picks the same representation.
///
/// A spec is immutable after construction and safe to share across threads.
class FieldSpec {
 public:
  static constexpr unsigned kMaxQ = 64;

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }

  /// Modulus polynomial, coefficient list low degree first, monic, length k+1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FieldElement element(unsigned index) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// Element with the given residue coefficients (low degree first, entries
  /// reduced mod p; shorter tuples are zero-padded).
  FieldElement from_rep(const std::vector<unsigned>& coeffs) const;

  /// All q elements in canonical order.
  std::vector<FieldElement> enumerate() const;

  /// Smallest element in canonical order whose multiplicative order is q-1.
  FieldElement primitive_element() const;

  bool same_structure(const FieldSpec& o) const {
    return q_ == o.q_ && p_ == o.p_ && modulus_ == o.modulus_;
  }

  std::string describe() const;  // e.g. "GF(9)"

  // Index-level arithmetic; used by FieldElement and the dense matrices.
  unsigned add_idx(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul_idx(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg_idx(unsigned a) const { return neg_[a]; }
  unsigned inv_idx(unsigned a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in " + describe());
    return inv_[a];
  }

 private:
  friend Field field_make(unsigned q);
  FieldSpec() = default;

  unsigned p_ = 0, k_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_, mul_;  // q*q, row-major
  std::vector<std::uint8_t> neg_, inv_;  // length q; inv_[0] unused
  unsigned primitive_ = 1;
};

/// One element of GF(q). A small value type: canonical index plus a pointer
/// to its field. Mixing elements of structurally different fields throws
/// MixedFields; inverting zero throws DivisionByZero.
class FieldElement {
 public:
  FieldElement() = default;  // null element; arithmetic on it throws

  unsigned index() const { return v_; }
  const FieldSpec* field() const { return spec_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// Residue coefficients, low degree first, length k.
  std::vector<unsigned> rep() const;

  FieldElement operator+(FieldElement o) const {
    require_same(o);
    return FieldElement(spec_, spec_->add_idx(v_, o.v_));
  }
  FieldElement operator-() const {
    require_valid();
    return FieldElement(spec_, spec_->neg_idx(v_));
  }
  FieldElement operator-(FieldElement o) const { return *this + (-o); }
  FieldElement operator*(FieldElement o) const {
    require_same(o);
    return FieldElement(spec_, spec_->mul_idx(v_, o.v_));
  }
  FieldElement inv() const {
    require_valid();
    return FieldElement(spec_, spec_->inv_idx(v_));
  }
  FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
  FieldElement& operator*=(FieldElement o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const {
    require_same(o);
    return v_ == o.v_;
  }
  std::strong_ordering operator<=>(const FieldElement& o) const {
    require_same(o);
    return v_ <=> o.v_;
  }

 private:
  friend class FieldSpec;
  FieldElement(const FieldSpec* s, unsigned v) : spec_(s), v_(static_cast<std::uint8_t>(v)) {}

  void require_valid() const {
    if (spec_ == nullptr) throw MixedFields("operation on a null field element");
  }
  void require_same(const FieldElement& o) const {
    if (spec_ == o.spec_ && spec_ != nullptr) return;
    if (spec_ == nullptr || o.spec_ == nullptr || !spec_->same_structure(*o.spec_))
      throw MixedFields("elements of different fields");
  }

  const FieldSpec* spec_ = nullptr;
  std::uint8_t v_ = 0;
};

inline FieldElement FieldSpec::element(unsigned index) const {
  if (index >= q_) throw ConfigError("element index out of range for " + describe());
  return FieldElement(this, index);
}
inline FieldElement FieldSpec::zero() const { return FieldElement(this, 0); }
inline FieldElement FieldSpec::one() const { return FieldElement(this, 1); }

FieldElement pow(FieldElement a, unsigned long long e);

inline std::string to_string(const FieldElement& a) { return std::to_string(a.index()); }

}  // namespace o2sep
