#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "o2sep/gf.hpp"

namespace o2sep {

/// Exponent tuple of one monomial in x_1..x_m, y_1..y_m: entry j is the
/// exponent of x_{j+1} for j < m and of y_{j-m+1} for j >= m.
using MonoKey = std::vector<std::uint16_t>;

unsigned mono_degree(const MonoKey& k);

/// Graded lexicographic order: total degree first, then the exponent tuple.
struct GrlexLess {
  bool operator()(const MonoKey& a, const MonoKey& b) const;
};

/// Sparse multivariate polynomial over GF(q) in 2m variables.
///
/// Zero coefficients are never stored, so two polynomials are equal iff
/// their term maps are. Exponents are deliberately not reduced modulo
/// x^q - x: polynomials are formal objects and degree bookkeeping matters;
/// equality of the induced functions is decided by evaluation where needed.
class Poly {
 public:
  using TermMap = std::map<MonoKey, FieldElement, GrlexLess>;

  static Poly zero(unsigned m, const FieldSpec& f);
  static Poly constant(unsigned m, FieldElement c);
  /// var is 0..2m-1 in the order x_1..x_m, y_1..y_m.
  static Poly variable(unsigned m, unsigned var, const FieldSpec& f);
  static Poly monomial(unsigned m, MonoKey key, FieldElement coeff);

  unsigned m() const { return m_; }
  unsigned nvars() const { return 2 * m_; }
  const FieldSpec* field() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(FieldElement c) const;
  bool operator==(const Poly& o) const;

  /// Value at the point with coordinates (x_1..x_m, y_1..y_m).
  FieldElement eval(std::span<const FieldElement> coords) const;

  /// Substitutes variable j by the linear form sum_i rows[j][i] * var_i and
  /// re-expands; rows must be 2m x 2m. Throws DimensionMismatch.
  Poly substitute_linear(const std::vector<std::vector<FieldElement>>& rows) const;

  /// Re-embeds into target_m slots, sending slot j to slot_map[j] (0-based,
  /// strictly increasing); x and y variables of a slot move together.
  Poly reindex_slots(unsigned target_m, std::span<const unsigned> slot_map) const;

 private:
  Poly(unsigned m, const FieldSpec* f) : m_(m), spec_(f) {}
  void add_term(const MonoKey& key, FieldElement c);
  void require_like(const Poly& o) const;

  unsigned m_ = 0;
  const FieldSpec* spec_ = nullptr;
  TermMap terms_;
};

Poly pow(const Poly& f, unsigned e);

/// Renders terms in graded lexicographic order, largest first, e.g.
/// "x1*y2 + x2*y1" or "2*x1^2 + 1". Coefficients print as canonical element
/// indices (plain integers over prime fields).
std::string to_string(const Poly& f);

/// Parses the to_string grammar (plus '-' for convenience): coefficients as
/// canonical indices, variables x<i>/y<i>, operators +, -, *, ^.
/// Throws ParseError.
Poly parse_poly(std::string_view text, unsigned m, const FieldSpec& f);

}  // namespace o2sep
