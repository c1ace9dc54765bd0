#include "o2sep/invspace.hpp"

#include <algorithm>

#include "o2sep/invariants.hpp"

namespace o2sep {

RrefResult rref(DenseMatrix M) {
  const FieldSpec& f = M.field();
  const unsigned rows = M.rows(), cols = M.cols();
  std::vector<unsigned> pivots;
  unsigned row = 0;
  for (unsigned col = 0; col < cols && row < rows; ++col) {
    unsigned pivot_row = row;
    while (pivot_row < rows && M.idx_at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != row)
      for (unsigned j = col; j < cols; ++j) {
        const unsigned tmp = M.idx_at(row, j);
        M.idx_set(row, j, M.idx_at(pivot_row, j));
        M.idx_set(pivot_row, j, tmp);
      }
    const unsigned inv = f.inv_idx(M.idx_at(row, col));
    for (unsigned j = col; j < cols; ++j) M.idx_set(row, j, f.mul_idx(M.idx_at(row, j), inv));
    for (unsigned i = 0; i < rows; ++i) {
      if (i == row) continue;
      const unsigned factor = M.idx_at(i, col);
      if (factor == 0) continue;
      for (unsigned j = col; j < cols; ++j) {
        const unsigned sub = f.neg_idx(f.mul_idx(factor, M.idx_at(row, j)));
        M.idx_set(i, j, f.add_idx(M.idx_at(i, j), sub));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(M), std::move(pivots)};
}

unsigned rank(const DenseMatrix& M) { return static_cast<unsigned>(rref(M).pivots.size()); }

std::vector<std::vector<FieldElement>> kernel_basis(const DenseMatrix& M) {
  const FieldSpec& f = M.field();
  auto r = rref(M);
  const unsigned cols = M.cols();
  std::vector<bool> is_pivot(cols, false);
  for (unsigned p : r.pivots) is_pivot[p] = true;

  std::vector<std::vector<FieldElement>> basis;
  for (unsigned free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols, f.zero());
    v[free] = f.one();
    for (unsigned i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<MonoKey> monomials_of_degree(unsigned m, unsigned d) {
  std::vector<MonoKey> out;
  MonoKey key(2 * m, 0);
  // Compositions of d into 2m parts, lexicographically ascending.
  auto rec = [&](auto&& self, unsigned var, unsigned left) -> void {
    if (var + 1 == 2 * m) {
      key[var] = static_cast<std::uint16_t>(left);
      out.push_back(key);
      key[var] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      key[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
    key[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t monomial_count(unsigned m, unsigned d) {
  // C(2m + d - 1, d), computed exactly and capped.
  unsigned __int128 num = 1;
  for (unsigned i = 1; i <= d; ++i) {
    num = num * (2 * m - 1 + i) / i;  // binomial prefix products stay integral
    if (num > 1'000'000'000) return 1'000'000'000;
  }
  return static_cast<std::uint64_t>(num);
}

DenseMatrix action_matrix(const GroupElement& g, const std::vector<MonoKey>& monos, unsigned m,
                          const FieldSpec& f) {
  const unsigned n = static_cast<unsigned>(monos.size());
  DenseMatrix A(n, n, f);
  for (unsigned j = 0; j < n; ++j) {
    const Poly image = g.act(Poly::monomial(m, monos[j], f.one()));
    for (const auto& [key, c] : image.terms()) {
      auto it = std::lower_bound(monos.begin(), monos.end(), key);
      if (it == monos.end() || *it != key)
        throw DimensionMismatch("action image leaves the graded piece");
      A.set(static_cast<unsigned>(it - monos.begin()), j, c);
    }
  }
  return A;
}

}  // namespace

GradedInvariantBasis invariant_basis(unsigned m, unsigned d, const FieldSpec& f,
                                     std::optional<FieldElement> tau_alpha,
                                     unsigned column_budget) {
  if (d == 0) throw ConfigError("invariant bases start at degree 1");
  if (monomial_count(m, d) > column_budget)
    throw BudgetExceeded("degree-" + std::to_string(d) + " monomial basis exceeds " +
                         std::to_string(column_budget) + " columns");
  const auto monos = monomials_of_degree(m, d);
  const unsigned n = static_cast<unsigned>(monos.size());

  const GroupElement gens[2] = {
      GroupElement::sigma(f.one()),
      GroupElement::tau(tau_alpha.value_or(f.primitive_element()))};

  // Stack (A_g - I) for both generators; the kernel is the fixed space.
  DenseMatrix stacked(2 * n, n, f);
  for (unsigned which = 0; which < 2; ++which) {
    DenseMatrix A = action_matrix(gens[which], monos, m, f);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        FieldElement v = A.at(i, j);
        if (i == j) v = v - f.one();
        stacked.set(which * n + i, j, v);
      }
  }

  auto kernel = kernel_basis(stacked);
  // Row-reduce the kernel vectors for a canonical basis.
  DenseMatrix K(static_cast<unsigned>(kernel.size()), n, f);
  for (unsigned i = 0; i < kernel.size(); ++i)
    for (unsigned j = 0; j < n; ++j) K.set(i, j, kernel[i][j]);
  auto reduced = rref(std::move(K));

  GradedInvariantBasis out;
  out.m = m;
  out.d = d;
  for (unsigned i = 0; i < reduced.pivots.size(); ++i) {
    Poly p = Poly::zero(m, f);
    for (unsigned j = 0; j < n; ++j) {
      FieldElement c = reduced.mat.at(i, j);
      if (!c.is_zero()) p = p + Poly::monomial(m, monos[j], c);
    }
    out.basis.push_back(std::move(p));
  }
  return out;
}

std::vector<GradedInvariantBasis> invariant_basis_up_to(unsigned m, unsigned D,
                                                        const FieldSpec& f,
                                                        std::optional<FieldElement> tau_alpha,
                                                        unsigned column_budget) {
  std::vector<GradedInvariantBasis> out;
  for (unsigned d = 1; d <= D; ++d)
    out.push_back(invariant_basis(m, d, f, tau_alpha, column_budget));
  return out;
}

DenseMatrix coefficient_matrix(std::span<const Poly> polys, unsigned m, unsigned d,
                               const FieldSpec& f) {
  const auto monos = monomials_of_degree(m, d);
  DenseMatrix M(static_cast<unsigned>(polys.size()), static_cast<unsigned>(monos.size()), f);
  for (unsigned i = 0; i < polys.size(); ++i) {
    for (const auto& [key, c] : polys[i].terms()) {
      auto it = std::lower_bound(monos.begin(), monos.end(), key);
      if (it == monos.end() || *it != key)
        throw DimensionMismatch("polynomial is not homogeneous of degree " + std::to_string(d));
      M.set(i, static_cast<unsigned>(it - monos.begin()), c);
    }
  }
  return M;
}

bool in_span(const GradedInvariantBasis& basis, const Poly& f) {
  const FieldSpec& fs = *f.field();
  std::vector<Poly> rows(basis.basis);
  const unsigned base_rank = rank(coefficient_matrix(rows, basis.m, basis.d, fs));
  rows.push_back(f);
  return rank(coefficient_matrix(rows, basis.m, basis.d, fs)) == base_rank;
}

M1GenerationReport check_m1_generation(const FieldSpec& f, unsigned D) {
  const unsigned q = f.q();
  M1GenerationReport report;
  report.q = q;
  report.max_degree = D;
  report.ok = true;

  const Poly n1 = make_invariant(InvariantDescriptor::n(1), 1, f);
  const Poly t1 = make_invariant(InvariantDescriptor::t(1), 1, f);

  for (unsigned d = 1; d <= D; ++d) {
    M1DegreeCheck check;
    check.d = d;

    std::vector<Poly> products;  // N_1^a T_1^b of degree exactly d
    for (unsigned b = 0; (q - 1) * b <= d; ++b) {
      const unsigned rest = d - (q - 1) * b;
      if (rest % 2 != 0) continue;
      products.push_back(pow(n1, rest / 2) * pow(t1, b));
    }
    check.product_count = static_cast<unsigned>(products.size());

    auto basis = invariant_basis(1, d, f);
    check.invariant_dim = basis.dim();
    check.dims_match = check.invariant_dim == check.product_count;

    check.products_independent =
        rank(coefficient_matrix(products, 1, d, f)) == check.product_count;

    std::vector<Poly> stacked = basis.basis;
    stacked.insert(stacked.end(), products.begin(), products.end());
    check.products_span = rank(coefficient_matrix(stacked, 1, d, f)) == check.invariant_dim;

    report.ok = report.ok && check.ok();
    report.degrees.push_back(check);
  }
  return report;
}

}  // namespace o2sep
