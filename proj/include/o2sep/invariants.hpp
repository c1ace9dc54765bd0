#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "o2sep/group.hpp"
#include "o2sep/poly.hpp"

namespace o2sep {

enum class Family : std::uint8_t { N, T, U, H, B, D, Custom };

/// Symbolic name of one invariant of the group acting diagonally on m
/// plane vectors over GF(q). The families, all fixed by every group
/// element:
///   N_i = x_i y_i                                     1 <= i <= m
///   T_i = x_i^(q-1) + y_i^(q-1)
///   U_ij = x_i y_j + x_j y_i                          i < j
///   H_ij = x_i x_j^(q-2) + y_i y_j^(q-2)              i < j
///   B_e = prod_i x_i^(e_i) + prod_i y_i^(e_i)         |e| = q-1
///   D_IJ = x_I y_J + x_J y_I                          I < J elementwise,
///          |J| - |I| in {0, q-1}, x_I = prod_{i in I} x_i
struct InvariantDescriptor {
  Family family = Family::Custom;
  unsigned i = 0, j = 0;            // N/T use i; U/H use i < j (1-based)
  std::vector<unsigned> exponents;  // B: length m, entries summing to q-1
  std::vector<unsigned> I, J;       // D: ascending 1-based slot sets
  std::string custom_label;

  static InvariantDescriptor n(unsigned i);
  static InvariantDescriptor t(unsigned i);
  static InvariantDescriptor u(unsigned i, unsigned j);
  static InvariantDescriptor h(unsigned i, unsigned j);
  static InvariantDescriptor b(std::vector<unsigned> exponents);
  static InvariantDescriptor d(std::vector<unsigned> I, std::vector<unsigned> J);
  static InvariantDescriptor custom(std::string label);

  std::string label() const;  // "N_1", "U_{1,2}", "B_(1,0,2)", "D_{1|2,3}"
  bool operator==(const InvariantDescriptor&) const = default;
};

/// The descriptor's polynomial at arity m over f. Validity is checked
/// eagerly; throws BadDescriptor with a precise message.
Poly make_invariant(const InvariantDescriptor& d, unsigned m, const FieldSpec& f);

/// An ordered set of invariants with their symbolic names. Construction
/// deduplicates by polynomial equality (first descriptor wins), so members
/// are pairwise distinct polynomials.
struct InvariantSet {
  std::string name;
  unsigned m = 0;
  Field field;
  std::vector<std::pair<InvariantDescriptor, Poly>> members;

  std::size_t size() const { return members.size(); }
  std::vector<std::string> labels() const;
};

/// {N_i, T_i | i} ∪ {U_ij, H_ij | i < j}. At q = 2 every H_ij equals T_i
/// as a polynomial and is deduplicated away, leaving {N_i, T_i, U_ij}.
/// Sizes: m^2 + m for q > 2, (m^2 + 3m)/2 at q = 2.
InvariantSet set_Tm(unsigned m, const Field& f);

/// {N_i, T_i | i} ∪ {U_ij | i < j}; size (m^2 + 3m)/2.
InvariantSet set_Tm2(unsigned m, const Field& f);

/// N ∪ B ∪ D (B streamed over all C(m+q-2, m-1) multi-indices).
InvariantSet set_chen(unsigned m, const Field& f);

/// Expansion: every member re-instantiated at every strictly increasing
/// slot tuple into m slots, deduplicated. Throws ArityShrink when m < S.m.
InvariantSet expand_set(const InvariantSet& S, unsigned m);

/// Plain-text set: one polynomial per line in the to_string grammar,
/// '#' comments and blank lines ignored.
InvariantSet parse_set_lines(const std::string& text, std::string name, unsigned m,
                             const Field& f);

/// First (group element, member index) whose action moves the member, or
/// nullopt when all members are fixed. Checks the two generators sigma_1
/// and tau_primitive by default, or every group element on request.
std::optional<std::pair<GroupElement, std::size_t>> find_non_invariant(
    const InvariantSet& S, bool check_all_elements = false);

}  // namespace o2sep
