#include "o2sep/poly.hpp"

#include <algorithm>
#include <cctype>

namespace o2sep {

unsigned mono_degree(const MonoKey& k) {
  unsigned d = 0;
  for (auto e : k) d += e;
  return d;
}

bool GrlexLess::operator()(const MonoKey& a, const MonoKey& b) const {
  const unsigned da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::zero(unsigned m, const FieldSpec& f) { return Poly(m, &f); }

Poly Poly::constant(unsigned m, FieldElement c) {
  if (c.field() == nullptr) throw MixedFields("constant from a null element");
  Poly p(m, c.field());
  p.add_term(MonoKey(2 * m, 0), c);
  return p;
}

Poly Poly::variable(unsigned m, unsigned var, const FieldSpec& f) {
  if (var >= 2 * m) throw DimensionMismatch("variable index out of range");
  MonoKey key(2 * m, 0);
  key[var] = 1;
  return monomial(m, std::move(key), f.one());
}

Poly Poly::monomial(unsigned m, MonoKey key, FieldElement coeff) {
  if (key.size() != 2 * m) throw DimensionMismatch("exponent tuple has wrong length");
  if (coeff.field() == nullptr) throw MixedFields("monomial with a null coefficient");
  Poly p(m, coeff.field());
  p.add_term(key, coeff);
  return p;
}

unsigned Poly::degree() const {
  return terms_.empty() ? 0 : mono_degree(terms_.rbegin()->first);
}

void Poly::add_term(const MonoKey& key, FieldElement c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::require_like(const Poly& o) const {
  if (m_ != o.m_) throw MixedArity("polynomials with different slot counts");
  if (spec_ != o.spec_ && (spec_ == nullptr || o.spec_ == nullptr || !spec_->same_structure(*o.spec_)))
    throw MixedFields("polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  require_like(o);
  Poly r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  require_like(o);
  Poly r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_like(o);
  Poly r(m_, spec_);
  MonoKey key(2 * m_, 0);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      for (std::size_t i = 0; i < key.size(); ++i)
        key[i] = static_cast<std::uint16_t>(ka[i] + kb[i]);
      r.add_term(key, ca * cb);
    }
  return r;
}

Poly Poly::scaled(FieldElement c) const {
  Poly r(m_, spec_);
  if (c.is_zero()) return r;
  for (const auto& [key, a] : terms_) r.add_term(key, a * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  require_like(o);
  return terms_ == o.terms_;
}

FieldElement Poly::eval(std::span<const FieldElement> coords) const {
  if (coords.size() != 2 * m_) throw MixedArity("evaluation point has wrong arity");
  FieldElement acc = spec_->zero();
  for (const auto& [key, c] : terms_) {
    FieldElement v = c;
    for (std::size_t i = 0; i < key.size(); ++i)
      if (key[i] != 0) v *= pow(coords[i], key[i]);
    acc += v;
  }
  return acc;
}

Poly Poly::substitute_linear(const std::vector<std::vector<FieldElement>>& rows) const {
  const std::size_t n = 2 * m_;
  if (rows.size() != n) throw DimensionMismatch("substitution matrix must be 2m x 2m");
  for (const auto& row : rows)
    if (row.size() != n) throw DimensionMismatch("substitution matrix must be 2m x 2m");

  std::vector<Poly> forms;
  forms.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly form(m_, spec_);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[j][i].is_zero()) continue;
      MonoKey key(n, 0);
      key[i] = 1;
      form.add_term(key, rows[j][i]);
    }
    forms.push_back(std::move(form));
  }

  Poly result(m_, spec_);
  for (const auto& [key, c] : terms_) {
    Poly t = Poly::constant(m_, c);
    for (std::size_t j = 0; j < n; ++j)
      if (key[j] != 0) t = t * pow(forms[j], key[j]);
    result = result + t;
  }
  return result;
}

Poly Poly::reindex_slots(unsigned target_m, std::span<const unsigned> slot_map) const {
  if (target_m < m_) throw ArityShrink("cannot reindex into fewer slots");
  if (slot_map.size() != m_) throw DimensionMismatch("slot map has wrong length");
  for (std::size_t j = 0; j < slot_map.size(); ++j) {
    if (slot_map[j] >= target_m) throw DimensionMismatch("slot map entry out of range");
    if (j > 0 && slot_map[j] <= slot_map[j - 1])
      throw DimensionMismatch("slot map must be strictly increasing");
  }
  Poly r(target_m, spec_);
  for (const auto& [key, c] : terms_) {
    MonoKey nk(2 * target_m, 0);
    for (unsigned j = 0; j < m_; ++j) {
      nk[slot_map[j]] = key[j];
      nk[target_m + slot_map[j]] = key[m_ + j];
    }
    r.add_term(nk, c);
  }
  return r;
}

Poly pow(const Poly& f, unsigned e) {
  Poly r = Poly::constant(f.m(), f.field()->one());
  Poly base = f;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  // Largest term first: reverse of the grlex-ascending map order.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [key, c] = *it;
    if (!out.empty()) out += " + ";
    std::string term;
    if (!c.is_one() || mono_degree(key) == 0) term = std::to_string(c.index());
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 0) continue;
      if (!term.empty()) term += "*";
      term += (i < f.m() ? "x" : "y") + std::to_string(i < f.m() ? i + 1 : i + 1 - f.m());
      if (key[i] != 1) term += "^" + std::to_string(key[i]);
    }
    out += term;
  }
  return out;
}

namespace {

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (c != '\0') ++pos;
    return c;
  }
  unsigned number() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected a number at position " + std::to_string(pos));
    unsigned long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
      if (v > 1'000'000) throw ParseError("number too large");
      ++pos;
    }
    return static_cast<unsigned>(v);
  }
};

Poly parse_factor(Lexer& lx, unsigned m, const FieldSpec& f) {
  char c = lx.peek();
  if (c == 'x' || c == 'y') {
    lx.take();
    unsigned i = lx.number();
    if (i < 1 || i > m)
      throw ParseError("variable index " + std::to_string(i) + " out of range for m = " +
                       std::to_string(m));
    unsigned var = (c == 'x' ? i - 1 : m + i - 1);
    unsigned e = 1;
    if (lx.peek() == '^') {
      lx.take();
      e = lx.number();
    }
    MonoKey key(2 * m, 0);
    if (e > 0xffff) throw ParseError("exponent too large");
    key[var] = static_cast<std::uint16_t>(e);
    return Poly::monomial(m, std::move(key), f.one());
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    unsigned idx = lx.number();
    if (idx >= f.q())
      throw ParseError("coefficient index " + std::to_string(idx) + " out of range for " +
                       f.describe());
    return Poly::constant(m, f.element(idx));
  }
  throw ParseError(std::string("unexpected character '") + c + "'");
}

Poly parse_term(Lexer& lx, unsigned m, const FieldSpec& f) {
  Poly t = parse_factor(lx, m, f);
  while (lx.peek() == '*') {
    lx.take();
    t = t * parse_factor(lx, m, f);
  }
  return t;
}

}  // namespace

Poly parse_poly(std::string_view text, unsigned m, const FieldSpec& f) {
  Lexer lx{text};
  Poly acc = Poly::zero(m, f);
  bool negate = false;
  if (lx.peek() == '-') {
    lx.take();
    negate = true;
  }
  while (true) {
    Poly t = parse_term(lx, m, f);
    acc = negate ? acc - t : acc + t;
    char c = lx.peek();
    if (c == '\0') break;
    if (c == '+')
      negate = false;
    else if (c == '-')
      negate = true;
    else
      throw ParseError(std::string("unexpected character '") + c + "'");
    lx.take();
  }
  return acc;
}

}  // namespace o2sep
