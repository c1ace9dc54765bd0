#include "o2sep/invariants.hpp"

#include <algorithm>
#include <functional>
#include <span>
#include <sstream>

namespace o2sep {

namespace {
InvariantDescriptor indexed(Family fam, unsigned i, unsigned j = 0) {
  InvariantDescriptor d;
  d.family = fam;
  d.i = i;
  d.j = j;
  return d;
}
}  // namespace

InvariantDescriptor InvariantDescriptor::n(unsigned i) { return indexed(Family::N, i); }
InvariantDescriptor InvariantDescriptor::t(unsigned i) { return indexed(Family::T, i); }
InvariantDescriptor InvariantDescriptor::u(unsigned i, unsigned j) {
  return indexed(Family::U, i, j);
}
InvariantDescriptor InvariantDescriptor::h(unsigned i, unsigned j) {
  return indexed(Family::H, i, j);
}
InvariantDescriptor InvariantDescriptor::b(std::vector<unsigned> exponents) {
  InvariantDescriptor d;
  d.family = Family::B;
  d.exponents = std::move(exponents);
  return d;
}
InvariantDescriptor InvariantDescriptor::d(std::vector<unsigned> I, std::vector<unsigned> J) {
  InvariantDescriptor d;
  d.family = Family::D;
  d.I = std::move(I);
  d.J = std::move(J);
  return d;
}
InvariantDescriptor InvariantDescriptor::custom(std::string label) {
  InvariantDescriptor d;
  d.family = Family::Custom;
  d.custom_label = std::move(label);
  return d;
}

std::string InvariantDescriptor::label() const {
  auto join = [](const std::vector<unsigned>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  switch (family) {
    case Family::N: return "N_" + std::to_string(i);
    case Family::T: return "T_" + std::to_string(i);
    case Family::U: return "U_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    case Family::H: return "H_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    case Family::B: return "B_(" + join(exponents) + ")";
    case Family::D: return "D_{" + join(I) + "|" + join(J) + "}";
    case Family::Custom: return custom_label;
  }
  return "?";
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw BadDescriptor(msg);
}

void check_pair(unsigned i, unsigned j, unsigned m, const char* fam) {
  require(1 <= i && i < j && j <= m, std::string(fam) + " needs 1 <= i < j <= m, got i = " +
                                         std::to_string(i) + ", j = " + std::to_string(j) +
                                         ", m = " + std::to_string(m));
}

Poly slot_product(const std::vector<unsigned>& slots, bool use_y, unsigned m,
                  const FieldSpec& f) {
  MonoKey key(2 * m, 0);
  for (unsigned s : slots) key[(use_y ? m : 0) + s - 1] = 1;
  return Poly::monomial(m, std::move(key), f.one());
}

}  // namespace

Poly make_invariant(const InvariantDescriptor& d, unsigned m, const FieldSpec& f) {
  const unsigned q = f.q();
  switch (d.family) {
    case Family::N: {
      require(1 <= d.i && d.i <= m, "N_i needs 1 <= i <= m, got i = " + std::to_string(d.i));
      MonoKey key(2 * m, 0);
      key[d.i - 1] = 1;
      key[m + d.i - 1] = 1;
      return Poly::monomial(m, std::move(key), f.one());
    }
    case Family::T: {
      require(1 <= d.i && d.i <= m, "T_i needs 1 <= i <= m, got i = " + std::to_string(d.i));
      MonoKey kx(2 * m, 0), ky(2 * m, 0);
      kx[d.i - 1] = static_cast<std::uint16_t>(q - 1);
      ky[m + d.i - 1] = static_cast<std::uint16_t>(q - 1);
      return Poly::monomial(m, std::move(kx), f.one()) +
             Poly::monomial(m, std::move(ky), f.one());
    }
    case Family::U: {
      check_pair(d.i, d.j, m, "U_ij");
      MonoKey ka(2 * m, 0), kb(2 * m, 0);
      ka[d.i - 1] = 1;
      ka[m + d.j - 1] = 1;
      kb[d.j - 1] = 1;
      kb[m + d.i - 1] = 1;
      return Poly::monomial(m, std::move(ka), f.one()) +
             Poly::monomial(m, std::move(kb), f.one());
    }
    case Family::H: {
      check_pair(d.i, d.j, m, "H_ij");
      MonoKey kx(2 * m, 0), ky(2 * m, 0);
      kx[d.i - 1] = 1;
      kx[d.j - 1] = static_cast<std::uint16_t>(q - 2);
      ky[m + d.i - 1] = 1;
      ky[m + d.j - 1] = static_cast<std::uint16_t>(q - 2);
      return Poly::monomial(m, std::move(kx), f.one()) +
             Poly::monomial(m, std::move(ky), f.one());
    }
    case Family::B: {
      require(d.exponents.size() == m,
              "B needs one exponent per slot, got " + std::to_string(d.exponents.size()) +
                  " for m = " + std::to_string(m));
      unsigned total = 0;
      for (unsigned e : d.exponents) total += e;
      require(total == q - 1, "B exponents must sum to q - 1 = " + std::to_string(q - 1) +
                                  ", got " + std::to_string(total));
      MonoKey kx(2 * m, 0), ky(2 * m, 0);
      for (unsigned s = 0; s < m; ++s) {
        kx[s] = static_cast<std::uint16_t>(d.exponents[s]);
        ky[m + s] = static_cast<std::uint16_t>(d.exponents[s]);
      }
      return Poly::monomial(m, std::move(kx), f.one()) +
             Poly::monomial(m, std::move(ky), f.one());
    }
    case Family::D: {
      require(!d.I.empty(), "D needs a nonempty I");
      require(!d.J.empty(), "D needs a nonempty J");
      auto sorted = [](const std::vector<unsigned>& v) { return std::is_sorted(v.begin(), v.end()); };
      require(sorted(d.I) && sorted(d.J), "D slot sets must be ascending");
      for (unsigned i : d.I) require(1 <= i && i <= m, "D slot out of range");
      for (unsigned j : d.J) require(1 <= j && j <= m, "D slot out of range");
      require(d.I.back() < d.J.front(), "D needs I < J elementwise");
      const unsigned diff = static_cast<unsigned>(d.J.size() - d.I.size());
      require(d.J.size() >= d.I.size() && (diff == 0 || diff == q - 1),
              "D needs |J| - |I| equal to 0 or q - 1");
      return slot_product(d.I, false, m, f) * slot_product(d.J, true, m, f) +
             slot_product(d.J, false, m, f) * slot_product(d.I, true, m, f);
    }
    case Family::Custom:
      throw BadDescriptor("custom descriptors carry no construction rule");
  }
  throw BadDescriptor("unknown family");
}

std::vector<std::string> InvariantSet::labels() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const auto& [d, p] : members) out.push_back(d.label());
  return out;
}

namespace {

void push_dedup(InvariantSet& S, InvariantDescriptor d, Poly p) {
  for (const auto& [d0, p0] : S.members)
    if (p0 == p) return;
  S.members.emplace_back(std::move(d), std::move(p));
}

// All e in N^m with |e| = total, first coordinate varying slowest, largest
// first (so (1,0) precedes (0,1)).
void compositions(unsigned m, unsigned total, std::vector<unsigned>& prefix,
                  const std::function<void(const std::vector<unsigned>&)>& emit) {
  if (m == 1) {
    prefix.push_back(total);
    emit(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned e = total + 1; e-- > 0;) {
    prefix.push_back(e);
    compositions(m - 1, total - e, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

InvariantSet set_Tm(unsigned m, const Field& f) {
  InvariantSet S{.name = "Tm", .m = m, .field = f, .members = {}};
  for (unsigned i = 1; i <= m; ++i)
    push_dedup(S, InvariantDescriptor::n(i), make_invariant(InvariantDescriptor::n(i), m, *f));
  for (unsigned i = 1; i <= m; ++i)
    push_dedup(S, InvariantDescriptor::t(i), make_invariant(InvariantDescriptor::t(i), m, *f));
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = i + 1; j <= m; ++j)
      push_dedup(S, InvariantDescriptor::u(i, j),
                 make_invariant(InvariantDescriptor::u(i, j), m, *f));
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = i + 1; j <= m; ++j)
      push_dedup(S, InvariantDescriptor::h(i, j),
                 make_invariant(InvariantDescriptor::h(i, j), m, *f));
  return S;
}

InvariantSet set_Tm2(unsigned m, const Field& f) {
  InvariantSet S{.name = "Tm2", .m = m, .field = f, .members = {}};
  for (unsigned i = 1; i <= m; ++i)
    push_dedup(S, InvariantDescriptor::n(i), make_invariant(InvariantDescriptor::n(i), m, *f));
  for (unsigned i = 1; i <= m; ++i)
    push_dedup(S, InvariantDescriptor::t(i), make_invariant(InvariantDescriptor::t(i), m, *f));
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = i + 1; j <= m; ++j)
      push_dedup(S, InvariantDescriptor::u(i, j),
                 make_invariant(InvariantDescriptor::u(i, j), m, *f));
  return S;
}

InvariantSet set_chen(unsigned m, const Field& f) {
  InvariantSet S{.name = "chen", .m = m, .field = f, .members = {}};
  for (unsigned i = 1; i <= m; ++i)
    push_dedup(S, InvariantDescriptor::n(i), make_invariant(InvariantDescriptor::n(i), m, *f));
  std::vector<unsigned> prefix;
  compositions(m, f->q() - 1, prefix, [&](const std::vector<unsigned>& e) {
    auto d = InvariantDescriptor::b(e);
    push_dedup(S, d, make_invariant(d, m, *f));
  });
  // D pairs: nonempty I entirely left of nonempty J, |J| - |I| in {0, q-1}.
  for (unsigned maskI = 1; maskI < (1u << m); ++maskI) {
    std::vector<unsigned> I;
    for (unsigned s = 0; s < m; ++s)
      if (maskI & (1u << s)) I.push_back(s + 1);
    const unsigned lo = I.back();  // J lives in slots > lo
    if (lo >= m) continue;
    const unsigned rest = m - lo;
    for (unsigned maskJ = 1; maskJ < (1u << rest); ++maskJ) {
      std::vector<unsigned> J;
      for (unsigned s = 0; s < rest; ++s)
        if (maskJ & (1u << s)) J.push_back(lo + s + 1);
      const auto diff = J.size() - I.size();
      if (J.size() < I.size() || (diff != 0 && diff != f->q() - 1)) continue;
      auto d = InvariantDescriptor::d(I, J);
      push_dedup(S, d, make_invariant(d, m, *f));
    }
  }
  return S;
}

namespace {

InvariantDescriptor remap_descriptor(const InvariantDescriptor& d, unsigned target_m,
                                     std::span<const unsigned> slot_map) {
  auto to = [&](unsigned slot) { return slot_map[slot - 1] + 1; };  // 1-based through 0-based map
  switch (d.family) {
    case Family::N: return InvariantDescriptor::n(to(d.i));
    case Family::T: return InvariantDescriptor::t(to(d.i));
    case Family::U: return InvariantDescriptor::u(to(d.i), to(d.j));
    case Family::H: return InvariantDescriptor::h(to(d.i), to(d.j));
    case Family::B: {
      std::vector<unsigned> e(target_m, 0);
      for (std::size_t s = 0; s < d.exponents.size(); ++s) e[slot_map[s]] = d.exponents[s];
      return InvariantDescriptor::b(std::move(e));
    }
    case Family::D: {
      std::vector<unsigned> I, J;
      for (unsigned s : d.I) I.push_back(to(s));
      for (unsigned s : d.J) J.push_back(to(s));
      return InvariantDescriptor::d(std::move(I), std::move(J));
    }
    case Family::Custom: {
      std::string suffix = "^(";
      for (std::size_t s = 0; s < slot_map.size(); ++s) {
        if (s) suffix += ",";
        suffix += std::to_string(slot_map[s] + 1);
      }
      return InvariantDescriptor::custom(d.custom_label + suffix + ")");
    }
  }
  throw BadDescriptor("unknown family");
}

}  // namespace

InvariantSet expand_set(const InvariantSet& S, unsigned m) {
  if (m < S.m)
    throw ArityShrink("expansion target m = " + std::to_string(m) +
                      " is smaller than the base arity " + std::to_string(S.m));
  InvariantSet out{.name = S.name + "^[" + std::to_string(m) + "]",
                   .m = m,
                   .field = S.field,
                   .members = {}};
  // All strictly increasing tuples of S.m slots out of m.
  std::vector<unsigned> tuple(S.m);
  for (unsigned i = 0; i < S.m; ++i) tuple[i] = i;
  while (true) {
    for (const auto& [d, p] : S.members)
      push_dedup(out, remap_descriptor(d, m, tuple), p.reindex_slots(m, tuple));
    // next combination
    int i = static_cast<int>(S.m) - 1;
    while (i >= 0 && tuple[i] == m - S.m + i) --i;
    if (i < 0) break;
    ++tuple[i];
    for (unsigned j = i + 1; j < S.m; ++j) tuple[j] = tuple[j - 1] + 1;
  }
  return out;
}

InvariantSet parse_set_lines(const std::string& text, std::string name, unsigned m,
                             const Field& f) {
  InvariantSet S{.name = std::move(name), .m = m, .field = f, .members = {}};
  std::istringstream in(text);
  std::string line;
  unsigned k = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++k;
    push_dedup(S, InvariantDescriptor::custom("f" + std::to_string(k)),
               parse_poly(line, m, *f));
  }
  return S;
}

std::optional<std::pair<GroupElement, std::size_t>> find_non_invariant(
    const InvariantSet& S, bool check_all_elements) {
  std::vector<GroupElement> gs;
  if (check_all_elements)
    gs = all_elements(*S.field);
  else
    gs = {GroupElement::sigma(S.field->one()),
          GroupElement::tau(S.field->primitive_element())};
  for (const auto& g : gs)
    for (std::size_t k = 0; k < S.members.size(); ++k)
      if (!(g.act(S.members[k].second) == S.members[k].second)) return {{g, k}};
  return std::nullopt;
}

}  // namespace o2sep
