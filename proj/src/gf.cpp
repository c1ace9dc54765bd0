#include "o2sep/gf.hpp"

#include <algorithm>

namespace o2sep {

namespace {

// Coefficient vectors over F_p, low degree first, not necessarily trimmed.

unsigned poly_degree(const std::vector<unsigned>& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<unsigned>(i);
  return 0;
}

bool poly_is_zero(const std::vector<unsigned>& f) {
  return std::all_of(f.begin(), f.end(), [](unsigned c) { return c == 0; });
}

// Remainder of f by a monic divisor g, all coefficients mod p.
std::vector<unsigned> poly_rem(std::vector<unsigned> f, const std::vector<unsigned>& g, unsigned p) {
  const unsigned dg = poly_degree(g);
  while (!poly_is_zero(f)) {
    const unsigned df = poly_degree(f);
    if (df < dg) break;
    const unsigned c = f[df];  // leading coefficient of f; g is monic
    for (unsigned i = 0; i <= dg; ++i) {
      const unsigned sub = (c * g[i]) % p;
      f[df - dg + i] = (f[df - dg + i] + p - sub % p) % p;
    }
  }
  return f;
}

// Digits of v base p, length n (low digit first).
std::vector<unsigned> digits(unsigned v, unsigned p, unsigned n) {
  std::vector<unsigned> d(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

bool is_irreducible(const std::vector<unsigned>& f, unsigned p) {
  const unsigned k = poly_degree(f);
  if (k == 0) return false;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (unsigned d = 1; 2 * d <= k; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned v = 0; v < count; ++v) {
      std::vector<unsigned> g = digits(v, p, d);
      g.push_back(1);  // monic of degree d
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

// Product of two residues modulo (p, modulus), both of length k.
std::vector<unsigned> residue_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                  const std::vector<unsigned>& modulus, unsigned p) {
  const std::size_t k = a.size();
  std::vector<unsigned> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  std::vector<unsigned> r = poly_rem(std::move(prod), modulus, p);
  r.resize(k, 0);
  return r;
}

unsigned index_of(const std::vector<unsigned>& coeffs, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p + coeffs[i];
  return v;
}

}  // namespace

Field field_make(unsigned q) {
  if (q < 2) throw NotAPrimePower("q must be at least 2, got " + std::to_string(q));
  if (q > FieldSpec::kMaxQ)
    throw ConfigError("q = " + std::to_string(q) + " exceeds the implementation bound " +
                      std::to_string(FieldSpec::kMaxQ));
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    throw NotAPrimePower(std::to_string(q) + " is not a prime power");

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->k_ = k;
  spec->q_ = q;

  // Smallest monic irreducible of degree k, scanning coefficient tuples in
  // high-degree-first lexicographic order (= index order of the low part).
  for (unsigned v = 0; v < q; ++v) {
    std::vector<unsigned> mod = digits(v, p, k);
    mod.push_back(1);
    if (is_irreducible(mod, p)) {
      spec->modulus_ = std::move(mod);
      break;
    }
  }

  spec->add_.assign(static_cast<std::size_t>(q) * q, 0);
  spec->mul_.assign(static_cast<std::size_t>(q) * q, 0);
  spec->neg_.assign(q, 0);
  spec->inv_.assign(q, 0);
  std::vector<std::vector<unsigned>> reps(q);
  for (unsigned v = 0; v < q; ++v) reps[v] = digits(v, p, k);
  for (unsigned a = 0; a < q; ++a) {
    std::vector<unsigned> na(k);
    for (unsigned i = 0; i < k; ++i) na[i] = (p - reps[a][i]) % p;
    spec->neg_[a] = static_cast<std::uint8_t>(index_of(na, p));
    for (unsigned b = 0; b < q; ++b) {
      std::vector<unsigned> s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (reps[a][i] + reps[b][i]) % p;
      spec->add_[a * q + b] = static_cast<std::uint8_t>(index_of(s, p));
      const unsigned m = index_of(residue_mul(reps[a], reps[b], spec->modulus_, p), p);
      spec->mul_[a * q + b] = static_cast<std::uint8_t>(m);
      if (m == 1 && a != 0) spec->inv_[a] = static_cast<std::uint8_t>(b);
    }
  }

  spec->primitive_ = 1;
  for (unsigned a = 1; a < q; ++a) {
    unsigned x = a, order = 1;
    while (x != 1) {
      x = spec->mul_idx(x, a);
      ++order;
    }
    if (order == q - 1) {
      spec->primitive_ = a;
      break;
    }
  }
  return spec;
}

FieldElement FieldSpec::from_rep(const std::vector<unsigned>& coeffs) const {
  if (coeffs.size() > k_) {
    for (std::size_t i = k_; i < coeffs.size(); ++i)
      if (coeffs[i] % p_ != 0)
        throw ConfigError("residue coefficients exceed extension degree of " + describe());
  }
  unsigned v = 0;
  for (std::size_t i = std::min<std::size_t>(coeffs.size(), k_); i-- > 0;)
    v = v * p_ + coeffs[i] % p_;
  return element(v);
}

std::vector<unsigned> FieldElement::rep() const {
  require_valid();
  std::vector<unsigned> d(spec_->k(), 0);
  unsigned v = v_;
  for (unsigned i = 0; i < spec_->k(); ++i) {
    d[i] = v % spec_->p();
    v /= spec_->p();
  }
  return d;
}

std::vector<FieldElement> FieldSpec::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (unsigned v = 0; v < q_; ++v) out.push_back(element(v));
  return out;
}

FieldElement FieldSpec::primitive_element() const { return element(primitive_); }

std::string FieldSpec::describe() const { return "GF(" + std::to_string(q_) + ")"; }

FieldElement pow(FieldElement a, unsigned long long e) {
  if (a.field() == nullptr) throw MixedFields("pow of a null field element");
  FieldElement r = a.field()->one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace o2sep
