#include "o2sep/orbits.hpp"

#include <algorithm>
#include <map>

namespace o2sep {

std::string to_string(OrbitType t) {
  switch (t) {
    case OrbitType::Zero: return "0";
    case OrbitType::A: return "a";
    case OrbitType::B: return "b";
    case OrbitType::C: return "c";
  }
  return "?";
}

bool in_s_alpha(const FieldElement& alpha, const Vector2& w) {
  return !(alpha * w.c1 == w.c2);
}

bool omega_contains(const FieldElement& alpha, const Vector2& w) {
  if (alpha.field() == nullptr || alpha.is_zero())
    throw ZeroAlpha("Omega_alpha needs a nonzero alpha");
  if (!in_s_alpha(alpha, w))
    throw NotInSAlpha(to_string(w) + " lies on the line of (1," + to_string(alpha) + ")");
  const Vector2 partner = GroupElement::sigma(alpha.inv()).act(w);
  return w <= partner;
}

CanonicalizeResult canonicalize(const PointTuple& v) {
  const FieldSpec* f = v.field();
  if (f == nullptr) throw MixedArity("cannot canonicalize an empty tuple");
  const unsigned m = v.m();

  GroupElement witness = GroupElement::identity(*f);
  PointTuple cur = v;
  auto apply = [&](const GroupElement& g) {
    cur = g.act(cur);
    witness = g.compose(witness);
  };

  unsigned r = 0;
  while (r < m && cur.slots[r].is_zero()) ++r;

  CanonicalForm form;
  form.r = r;
  if (r == m) {
    form.point = std::move(cur);
    form.otype = OrbitType::Zero;
    return {std::move(form), witness};
  }

  if (cur.slots[r].c1.is_zero()) apply(GroupElement::sigma(f->one()));
  apply(GroupElement::tau(cur.slots[r].c1.inv()));
  const FieldElement alpha = cur.slots[r].c2;  // pivot is now (1, alpha)

  if (alpha.is_zero()) {
    form.otype = OrbitType::A;
  } else {
    unsigned j = r + 1;
    while (j < m && !in_s_alpha(alpha, cur.slots[j])) ++j;
    form.alpha = alpha;
    form.s = j - (r + 1);
    if (j == m) {
      form.otype = OrbitType::B;
    } else {
      if (!omega_contains(alpha, cur.slots[j])) apply(GroupElement::sigma(alpha.inv()));
      form.otype = OrbitType::C;
      form.w_pos = j;
    }
  }
  form.point = std::move(cur);
  return {std::move(form), witness};
}

OrbitCounts orbit_count_formula(unsigned m, const FieldSpec& f) {
  if (m == 0) throw ConfigError("orbit counts need m >= 1");
  using u128 = unsigned __int128;
  const u128 q = f.q();
  u128 qm = 1;
  for (unsigned i = 0; i < 2 * m; ++i) {
    qm *= q;
    if (qm > (u128(1) << 100)) throw ConfigError("q^(2m) too large for exact counting");
  }
  u128 q_m = 1;
  for (unsigned i = 0; i < m; ++i) q_m *= q;

  auto exact_div = [](u128 a, u128 b) {
    if (a % b != 0) throw ConfigError("orbit count formula division is not exact");
    return a / b;
  };

  const u128 k1 = exact_div(q_m * q_m - 1, q * q - 1);
  const u128 k2 = q_m - 1;
  const u128 qm1 = q_m / q;  // q^(m-1)
  const u128 k3 = exact_div(q * (q_m - 1) * (qm1 - 1), 2 * (q + 1));
  const u128 kappa = exact_div((q_m + 1) * (q_m + q - 2), 2 * (q - 1));
  if (1 + k1 + k2 + k3 != kappa)
    throw ConfigError("orbit count breakdown does not sum to kappa");

  const u128 umax = ~std::uint64_t{0};
  if (kappa > umax) throw ConfigError("orbit count exceeds 64 bits");
  return {static_cast<std::uint64_t>(kappa), static_cast<std::uint64_t>(k1),
          static_cast<std::uint64_t>(k2), static_cast<std::uint64_t>(k3)};
}

namespace {

std::vector<Vector2> all_vectors(const FieldSpec& f) {
  std::vector<Vector2> out;
  out.reserve(static_cast<std::size_t>(f.q()) * f.q());
  for (const auto& a : f.enumerate())
    for (const auto& b : f.enumerate()) out.push_back({a, b});
  return out;
}

// Runs body over every tuple in V^t (odometer over the vector list).
template <typename Body>
void for_each_filling(const std::vector<Vector2>& vs, unsigned t, Body body) {
  std::vector<std::size_t> odo(t, 0);
  std::vector<Vector2> fill(t, vs.empty() ? Vector2{} : vs[0]);
  while (true) {
    for (unsigned i = 0; i < t; ++i) fill[i] = vs[odo[i]];
    body(fill);
    unsigned i = t;
    while (i > 0 && ++odo[i - 1] == vs.size()) odo[--i] = 0;
    if (i == 0) break;
  }
}

}  // namespace

std::vector<CanonicalForm> orbit_reps_grammar(unsigned m, const FieldSpec& f) {
  if (m == 0) throw ConfigError("orbit enumeration needs m >= 1");
  std::vector<CanonicalForm> out;
  const auto vs = all_vectors(f);
  const Vector2 zero_vec{f.zero(), f.zero()};
  const auto nonzero = [&] {
    std::vector<FieldElement> a;
    for (unsigned v = 1; v < f.q(); ++v) a.push_back(f.element(v));
    return a;
  }();

  {
    CanonicalForm z;
    z.point.slots.assign(m, zero_vec);
    z.otype = OrbitType::Zero;
    z.r = m;
    out.push_back(std::move(z));
  }

  for (unsigned r = 0; r + 1 <= m; ++r) {
    const unsigned rest = m - r - 1;

    // type a: pivot (1, 0), then arbitrary slots
    for_each_filling(vs, rest, [&](const std::vector<Vector2>& fill) {
      CanonicalForm c;
      c.otype = OrbitType::A;
      c.r = r;
      c.point.slots.assign(r, zero_vec);
      c.point.slots.push_back(e_vec(f.zero()));
      c.point.slots.insert(c.point.slots.end(), fill.begin(), fill.end());
      out.push_back(std::move(c));
    });

    for (const auto& alpha : nonzero) {
      const Vector2 ea = e_vec(alpha);

      // type b: the whole tail is a scalar-multiple run
      {
        std::vector<Vector2> line;
        for (const auto& b : f.enumerate()) line.push_back({b, b * alpha});
        for_each_filling(line, rest, [&](const std::vector<Vector2>& fill) {
          CanonicalForm c;
          c.otype = OrbitType::B;
          c.r = r;
          c.alpha = alpha;
          c.s = rest;
          c.point.slots.assign(r, zero_vec);
          c.point.slots.push_back(ea);
          c.point.slots.insert(c.point.slots.end(), fill.begin(), fill.end());
          out.push_back(std::move(c));
        });
      }

      // type c: scalar run, then an Omega_alpha slot, then arbitrary slots
      if (rest >= 1) {
        std::vector<Vector2> omega;
        for (const auto& w : vs)
          if (in_s_alpha(alpha, w) && omega_contains(alpha, w)) omega.push_back(w);
        std::vector<Vector2> line;
        for (const auto& b : f.enumerate()) line.push_back({b, b * alpha});
        for (unsigned s = 0; s + 1 <= rest; ++s) {
          const unsigned t = rest - s - 1;
          for_each_filling(line, s, [&](const std::vector<Vector2>& run) {
            for (const auto& w : omega) {
              for_each_filling(vs, t, [&](const std::vector<Vector2>& fill) {
                CanonicalForm c;
                c.otype = OrbitType::C;
                c.r = r;
                c.alpha = alpha;
                c.s = s;
                c.w_pos = r + 1 + s;
                c.point.slots.assign(r, zero_vec);
                c.point.slots.push_back(ea);
                c.point.slots.insert(c.point.slots.end(), run.begin(), run.end());
                c.point.slots.push_back(w);
                c.point.slots.insert(c.point.slots.end(), fill.begin(), fill.end());
                out.push_back(std::move(c));
              });
            }
          });
        }
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const CanonicalForm& a, const CanonicalForm& b) { return a.point < b.point; });
  return out;
}

std::vector<CanonicalForm> orbit_reps_brute(unsigned m, const FieldSpec& f,
                                            std::uint64_t budget,
                                            std::vector<std::uint64_t>* orbit_sizes) {
  if (m == 0) throw ConfigError("orbit enumeration needs m >= 1");
  using u128 = unsigned __int128;
  u128 total = 1;
  for (unsigned i = 0; i < 2 * m; ++i) {
    total *= f.q();
    if (total > budget)
      throw BudgetExceeded("q^(2m) exceeds the enumeration budget " + std::to_string(budget));
  }

  std::map<PointTuple, std::pair<CanonicalForm, std::uint64_t>> classes;
  const auto vs = all_vectors(f);
  for_each_filling(vs, m, [&](const std::vector<Vector2>& fill) {
    PointTuple t;
    t.slots = fill;
    auto res = canonicalize(t);
    auto it = classes.find(res.form.point);
    if (it == classes.end()) {
      PointTuple key = res.form.point;
      classes.emplace(std::move(key), std::make_pair(std::move(res.form), std::uint64_t{1}));
    } else {
      ++it->second.second;
    }
  });

  std::vector<CanonicalForm> out;
  out.reserve(classes.size());
  if (orbit_sizes) orbit_sizes->clear();
  for (auto& [point, entry] : classes) {
    out.push_back(std::move(entry.first));
    if (orbit_sizes) orbit_sizes->push_back(entry.second);
  }
  return out;
}

bool same_orbit(const PointTuple& u, const PointTuple& v,
                std::span<const GroupElement> elements) {
  if (u.m() != v.m()) throw MixedArity("tuples of different arity");
  for (const auto& g : elements) {
    bool match = true;
    for (unsigned i = 0; i < u.m() && match; ++i) match = g.act(u.slots[i]) == v.slots[i];
    if (match) return true;
  }
  return false;
}

bool same_orbit(const PointTuple& u, const PointTuple& v) {
  const FieldSpec* f = u.field();
  if (f == nullptr) throw MixedArity("cannot compare empty tuples");
  const auto els = all_elements(*f);
  return same_orbit(u, v, els);
}

}  // namespace o2sep
