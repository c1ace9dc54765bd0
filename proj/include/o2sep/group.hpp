#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "o2sep/gf.hpp"
#include "o2sep/poly.hpp"

namespace o2sep {

/// A plane vector (v(1), v(2)) over one field, ordered lexicographically by
/// the canonical order on coordinates.
struct Vector2 {
  FieldElement c1, c2;

  bool is_zero() const { return c1.is_zero() && c2.is_zero(); }
  bool operator==(const Vector2&) const = default;
  auto operator<=>(const Vector2&) const = default;
};

/// e_alpha = (1, alpha).
Vector2 e_vec(FieldElement alpha);

/// A point of V^m: m plane vectors over one field.
struct PointTuple {
  std::vector<Vector2> slots;

  unsigned m() const { return static_cast<unsigned>(slots.size()); }
  const FieldSpec* field() const { return slots.empty() ? nullptr : slots[0].c1.field(); }
  /// Coordinates in variable order x_1..x_m, y_1..y_m.
  std::vector<FieldElement> coords() const;

  bool operator==(const PointTuple&) const = default;
  auto operator<=>(const PointTuple&) const = default;
};

std::string to_string(const Vector2& v);
std::string to_string(const PointTuple& v);

enum class GKind : std::uint8_t { Tau, Sigma };

/// An element of the 2(q-1)-element group {sigma_a, tau_a | a != 0} of 2x2
/// matrices tau_a = [[a,0],[0,a^-1]] and sigma_a = [[0,a],[a^-1,0]].
/// tau_1 is the identity; every sigma_a is an involution. Elements are
/// canonical by (kind, a): tau matrices have zero antidiagonal and sigma
/// matrices zero diagonal, so the two families never coincide.
class GroupElement {
 public:
  static GroupElement tau(FieldElement a);    // throws ZeroAlpha for a = 0
  static GroupElement sigma(FieldElement a);  // throws ZeroAlpha for a = 0
  static GroupElement identity(const FieldSpec& f) { return tau(f.one()); }

  GKind kind() const { return kind_; }
  FieldElement alpha() const { return alpha_; }
  bool is_identity() const { return kind_ == GKind::Tau && alpha_.is_one(); }

  /// Row-major 2x2 matrix [[a,b],[c,d]].
  std::array<FieldElement, 4> matrix() const;

  /// this ∘ other (apply other first). Closed in the sigma/tau families.
  GroupElement compose(const GroupElement& other) const;
  GroupElement inverse() const;

  Vector2 act(const Vector2& v) const {
    if (kind_ == GKind::Tau) return {alpha_ * v.c1, alpha_.inv() * v.c2};
    return {alpha_ * v.c2, alpha_.inv() * v.c1};
  }
  PointTuple act(const PointTuple& v) const;
  /// Action on the coordinate ring: substitutes the matrix of the inverse,
  /// slot-wise, so that act(f)(v) = f(inverse().act(v)).
  Poly act(const Poly& f) const;

  bool operator==(const GroupElement&) const = default;
  std::string to_string() const;  // "tau(2)", "sigma(1)"

 private:
  GroupElement(GKind k, FieldElement a) : kind_(k), alpha_(a) {}

  GKind kind_;
  FieldElement alpha_;
};

/// All 2(q-1) elements: the tau family then the sigma family, alphas in
/// canonical order starting at 1. Index 0 is the identity.
std::vector<GroupElement> all_elements(const FieldSpec& f);

/// Brute-force stabilizer of v (the whole group when v = 0).
std::vector<GroupElement> stabilizer(const Vector2& v);

/// f evaluated at the point (x_i = v_i(1), y_i = v_i(2)).
FieldElement eval_at(const Poly& f, const PointTuple& v);

}  // namespace o2sep
