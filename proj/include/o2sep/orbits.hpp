#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "o2sep/group.hpp"

namespace o2sep {

inline constexpr std::uint64_t kDefaultEnumBudget = 20'000'000;

enum class OrbitType : std::uint8_t { Zero, A, B, C };
std::string to_string(OrbitType t);  // "0", "a", "b", "c"

/// The unique distinguished representative of one orbit. With r leading
/// zero slots, the four shapes are:
///   Zero  all slots zero
///   A     (0^r, (1,0), u_1..u_t)                      u_i arbitrary
///   B     (0^r, (1,a), b_1 (1,a), .., b_s (1,a))      a != 0, b_i scalars
///   C     as B, then a slot from Omega_a, then arbitrary u_i
/// Shape parameters are recorded as parsed during canonicalization, never
/// recomputed from the point.
struct CanonicalForm {
  PointTuple point;
  OrbitType otype = OrbitType::Zero;
  unsigned r = 0;                     // leading zero slots
  std::optional<FieldElement> alpha;  // B/C: pivot second coordinate
  unsigned s = 0;                     // B/C: scalar-multiple run length
  std::optional<unsigned> w_pos;      // C: index of the Omega_a slot
};

/// S_alpha membership: w off the line through (1, alpha), i.e.
/// alpha * w(1) != w(2).
bool in_s_alpha(const FieldElement& alpha, const Vector2& w);

/// The stabilizer {tau_1, sigma_{alpha^-1}} of (1, alpha) splits S_alpha
/// into two-element orbits {w, sigma_{alpha^-1} w}; the chosen
/// representative is the lexicographically smaller of the pair. True iff
/// w is that representative. Throws ZeroAlpha / NotInSAlpha.
bool omega_contains(const FieldElement& alpha, const Vector2& w);

struct CanonicalizeResult {
  CanonicalForm form;
  GroupElement witness;  // witness.act(input) == form.point
};

/// The unique canonical element of the orbit of v, with a group element
/// mapping v onto it. Normalizes the first nonzero slot to (1, a) (sigma_1
/// first when its first coordinate vanishes, then tau by the inverse of the
/// first coordinate), skips the scalar-multiple run, and lands the first
/// off-line slot in Omega_a via sigma_{a^-1} when needed.
CanonicalizeResult canonicalize(const PointTuple& v);

/// Orbit counts: kappa = 1 + k1 + k2 + k3 = (q^m+1)(q^m+q-2) / (2(q-1)),
/// where k1 = (q^2m - 1)/(q^2 - 1) counts type-a orbits, k2 = q^m - 1
/// type-b, and k3 = q (q^m - 1)(q^(m-1) - 1) / (2(q+1)) type-c. All
/// divisions are checked exact.
struct OrbitCounts {
  std::uint64_t kappa = 0, k1 = 0, k2 = 0, k3 = 0;
};
OrbitCounts orbit_count_formula(unsigned m, const FieldSpec& f);

/// Representatives generated directly from the four shapes, sorted by point.
std::vector<CanonicalForm> orbit_reps_grammar(unsigned m, const FieldSpec& f);

/// Representatives by canonicalizing all q^(2m) points and deduplicating,
/// sorted by point; orbit_sizes[i] (when requested) is the orbit size of
/// rep i. Throws BudgetExceeded when q^(2m) > budget.
std::vector<CanonicalForm> orbit_reps_brute(unsigned m, const FieldSpec& f,
                                            std::uint64_t budget = kDefaultEnumBudget,
                                            std::vector<std::uint64_t>* orbit_sizes = nullptr);

/// Direct orbit oracle: some group element maps u to v. Independent of
/// canonicalize by construction.
bool same_orbit(const PointTuple& u, const PointTuple& v);
bool same_orbit(const PointTuple& u, const PointTuple& v, std::span<const GroupElement> elements);

}  // namespace o2sep
