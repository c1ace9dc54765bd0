#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "o2sep/group.hpp"
#include "o2sep/poly.hpp"

namespace o2sep {

/// Row-major dense matrix over one GF(q); entries are field elements,
/// stored as canonical indices.
class DenseMatrix {
 public:
  DenseMatrix(unsigned rows, unsigned cols, const FieldSpec& f)
      : rows_(rows), cols_(cols), spec_(&f), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  const FieldSpec& field() const { return *spec_; }

  FieldElement at(unsigned i, unsigned j) const { return spec_->element(a_[pos(i, j)]); }
  void set(unsigned i, unsigned j, FieldElement v) {
    a_[pos(i, j)] = static_cast<std::uint8_t>(v.index());
  }
  unsigned idx_at(unsigned i, unsigned j) const { return a_[pos(i, j)]; }
  void idx_set(unsigned i, unsigned j, unsigned v) {
    a_[pos(i, j)] = static_cast<std::uint8_t>(v);
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t pos(unsigned i, unsigned j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  unsigned rows_, cols_;
  const FieldSpec* spec_;
  std::vector<std::uint8_t> a_;
};

struct RrefResult {
  DenseMatrix mat;
  std::vector<unsigned> pivots;  // pivot column per nonzero row; rank = size
};

/// Reduced row-echelon form by Gauss-Jordan elimination, exact over GF(q).
RrefResult rref(DenseMatrix M);
unsigned rank(const DenseMatrix& M);

/// Basis of the right kernel {v : Mv = 0}: one vector per free column, with
/// a 1 in that column. Deterministic given the column order.
std::vector<std::vector<FieldElement>> kernel_basis(const DenseMatrix& M);

/// Exponent keys of all monomials of total degree d in 2m variables,
/// in ascending grlex (here: plain lexicographic) order.
std::vector<MonoKey> monomials_of_degree(unsigned m, unsigned d);

inline constexpr unsigned kColumnBudget = 5000;

struct GradedInvariantBasis {
  unsigned m = 0, d = 0;
  std::vector<Poly> basis;  // homogeneous of degree d, independent, fixed by the group
  unsigned dim() const { return static_cast<unsigned>(basis.size()); }
};

/// Basis of the degree-d invariants: the common fixed space of sigma_1 and
/// tau_g on the span of the degree-d monomials, computed as the kernel of
/// the stacked system (A_g - I) over the monomial basis and then
/// row-reduced. g defaults to the primitive element; the two chosen
/// elements generate the whole group, so their common fixed space is the
/// full invariant space (tests re-check every basis element against all
/// 2(q-1) group elements). Since the action preserves degree, inhomogeneous
/// invariants are sums of these homogeneous pieces, so per-degree
/// computation loses nothing.
/// Throws BudgetExceeded when the monomial count exceeds column_budget.
GradedInvariantBasis invariant_basis(unsigned m, unsigned d, const FieldSpec& f,
                                     std::optional<FieldElement> tau_alpha = {},
                                     unsigned column_budget = kColumnBudget);

/// Bases for every degree 1..D (degree 0 excluded: constants never
/// separate anything).
std::vector<GradedInvariantBasis> invariant_basis_up_to(
    unsigned m, unsigned D, const FieldSpec& f, std::optional<FieldElement> tau_alpha = {},
    unsigned column_budget = kColumnBudget);

/// Coefficient rows of homogeneous degree-d polynomials over the degree-d
/// monomial list. Throws DimensionMismatch for non-homogeneous input.
DenseMatrix coefficient_matrix(std::span<const Poly> polys, unsigned m, unsigned d,
                               const FieldSpec& f);

/// Membership of f (homogeneous of the basis degree) in the basis span,
/// decided by a rank comparison.
bool in_span(const GradedInvariantBasis& basis, const Poly& f);

struct M1DegreeCheck {
  unsigned d = 0;
  unsigned product_count = 0;   // #{(a,b) : 2a + (q-1)b = d}
  unsigned invariant_dim = 0;   // dim of the degree-d invariant space
  bool dims_match = false;
  bool products_independent = false;
  bool products_span = false;
  bool ok() const { return dims_match && products_independent && products_span; }
};
struct M1GenerationReport {
  unsigned q = 0, max_degree = 0;
  std::vector<M1DegreeCheck> degrees;
  bool ok = false;
};

/// Degree-by-degree verification that the products N_1^a T_1^b with
/// 2a + (q-1)b = d are independent and span the m = 1 invariants of
/// degree d, for every d <= D.
M1GenerationReport check_m1_generation(const FieldSpec& f, unsigned D);

}  // namespace o2sep
