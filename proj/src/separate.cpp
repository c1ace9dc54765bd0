#include "o2sep/separate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace o2sep {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Value column per member: columns[k][r] = member_k(rep_r).
std::vector<std::vector<std::uint8_t>> eval_columns(
    const std::vector<std::pair<InvariantDescriptor, Poly>>& members,
    const std::vector<CanonicalForm>& reps) {
  std::vector<std::vector<std::uint8_t>> columns(members.size());
  std::vector<std::vector<FieldElement>> coords;
  coords.reserve(reps.size());
  for (const auto& rep : reps) coords.push_back(rep.point.coords());
  for (std::size_t k = 0; k < members.size(); ++k) {
    auto& col = columns[k];
    col.reserve(reps.size());
    for (const auto& c : coords)
      col.push_back(static_cast<std::uint8_t>(members[k].second.eval(c).index()));
  }
  return columns;
}

// Rep order sorted by the selected coordinates; first adjacent tie is the
// collision. Skip < 0 means "use all columns", otherwise that column index
// is left out.
std::optional<std::pair<std::size_t, std::size_t>> first_collision(
    const std::vector<std::vector<std::uint8_t>>& columns, std::size_t nreps, int skip = -1) {
  std::vector<std::uint32_t> order(nreps);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (static_cast<int>(k) == skip) continue;
      if (columns[k][a] != columns[k][b]) return columns[k][a] < columns[k][b];
    }
    return a < b;  // stable tie-break on the rep order
  };
  std::sort(order.begin(), order.end(), less);
  auto equal = [&](std::uint32_t a, std::uint32_t b) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (static_cast<int>(k) == skip) continue;
      if (columns[k][a] != columns[k][b]) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i + 1 < nreps; ++i)
    if (equal(order[i], order[i + 1])) return {{order[i], order[i + 1]}};
  return std::nullopt;
}

CollisionWitness make_witness(const CanonicalForm& a, const CanonicalForm& b,
                              std::span<const GroupElement> els) {
  CollisionWitness w;
  w.u = a.point;
  w.v = b.point;
  w.u_type = a.otype;
  w.v_type = b.otype;
  w.distinct_orbits_checked = !same_orbit(a.point, b.point, els);
  return w;
}

void require_invariant(const InvariantSet& S) {
  if (auto bad = find_non_invariant(S))
    throw NonInvariantMember("member " + S.members[bad->second].first.label() +
                             " of set " + S.name + " moves under " + bad->first.to_string());
}

}  // namespace

Fingerprint fingerprint_of(const InvariantSet& S, const PointTuple& v) {
  Fingerprint fp;
  fp.reserve(S.members.size());
  const auto coords = v.coords();
  for (const auto& [d, p] : S.members)
    fp.push_back(static_cast<std::uint8_t>(p.eval(coords).index()));
  return fp;
}

SeparationReport is_separating(const InvariantSet& S) {
  const auto start = Clock::now();
  require_invariant(S);
  const FieldSpec& f = *S.field;

  SeparationReport rep;
  rep.q = f.q();
  rep.m = S.m;
  rep.set_name = S.name;
  rep.set_size = S.size();

  const auto reps = orbit_reps_grammar(S.m, f);
  rep.kappa = reps.size();
  const auto columns = eval_columns(S.members, reps);
  const auto collision = first_collision(columns, reps.size());
  rep.separating = !collision.has_value();
  if (collision) {
    const auto els = all_elements(f);
    rep.collision = make_witness(reps[collision->first], reps[collision->second], els);
  }
  rep.runtime_ms = ms_since(start);
  return rep;
}

SeparationReport is_minimal(const InvariantSet& S) {
  const auto start = Clock::now();
  SeparationReport rep = is_separating(S);
  if (!rep.separating)
    throw NotSeparating("set " + S.name + " does not separate, so minimality is undefined");

  const FieldSpec& f = *S.field;
  const auto reps = orbit_reps_grammar(S.m, f);
  const auto columns = eval_columns(S.members, reps);
  const auto els = all_elements(f);

  bool minimal = true;
  for (std::size_t k = 0; k < S.members.size(); ++k) {
    const auto collision = first_collision(columns, reps.size(), static_cast<int>(k));
    if (!collision) {
      minimal = false;
      rep.redundant_member = S.members[k].first.label();
      break;
    }
    rep.removals.push_back(
        {S.members[k].first.label(),
         make_witness(reps[collision->first], reps[collision->second], els)});
  }
  rep.minimal = minimal;
  if (!minimal) rep.removals.clear();
  rep.runtime_ms = ms_since(start);
  return rep;
}

BetaReport beta_sep(unsigned m, const FieldSpec& f, unsigned d_max,
                    std::optional<FieldElement> tau_alpha) {
  const auto start = Clock::now();
  if (d_max < 1) throw ConfigError("beta search needs max degree >= 1");

  BetaReport rep;
  rep.q = f.q();
  rep.m = m;

  const auto reps = orbit_reps_grammar(m, f);
  std::vector<std::vector<FieldElement>> coords;
  coords.reserve(reps.size());
  for (const auto& r : reps) coords.push_back(r.point.coords());
  const auto els = all_elements(f);

  std::vector<std::vector<std::uint8_t>> columns;  // cumulative, one per basis poly
  for (unsigned d = 1; d <= d_max; ++d) {
    const auto basis = invariant_basis(m, d, f, tau_alpha);
    for (const auto& p : basis.basis) {
      std::vector<std::uint8_t> col;
      col.reserve(reps.size());
      for (const auto& c : coords) col.push_back(static_cast<std::uint8_t>(p.eval(c).index()));
      columns.push_back(std::move(col));
    }

    BetaDegree deg;
    deg.d = d;
    deg.dim = basis.dim();
    deg.cumulative_dim = static_cast<unsigned>(columns.size());
    const auto collision = first_collision(columns, reps.size());
    deg.injective = !collision.has_value();
    if (collision)
      deg.witness = make_witness(reps[collision->first], reps[collision->second], els);
    rep.degrees.push_back(std::move(deg));

    if (!collision) {
      rep.beta = d;
      rep.runtime_ms = ms_since(start);
      return rep;
    }
  }
  throw NotFoundWithinBudget("degree <= " + std::to_string(d_max) +
                             " invariants do not separate at q = " + std::to_string(f.q()) +
                             ", m = " + std::to_string(m));
}

SigmaReport sigma_sep_bounded(const Field& f, unsigned max_m) {
  const auto start = Clock::now();
  if (max_m < 2) throw ConfigError("sigma check needs max m >= 2");

  SigmaReport rep;
  rep.q = f->q();
  rep.max_m = max_m;

  const auto t1_at_2 = is_separating(expand_set(set_Tm(1, f), 2));
  rep.t1_expansion_separates_at_2 = t1_at_2.separating;
  rep.t1_witness = t1_at_2.collision;

  const auto base2 = set_Tm(2, f);
  bool all_separating = true;
  for (unsigned mm = 2; mm <= max_m; ++mm) {
    const bool ok = is_separating(expand_set(base2, mm)).separating;
    rep.base2_expansion_separating.emplace_back(mm, ok);
    all_separating = all_separating && ok;
  }

  rep.confirmed = !rep.t1_expansion_separates_at_2 && all_separating;
  rep.runtime_ms = ms_since(start);
  return rep;
}

namespace {

// Next k-combination of {0..n-1} in lexicographic order; false at the end.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

bool subset_separates(const std::vector<std::vector<std::uint8_t>>& columns,
                      const std::vector<std::size_t>& subset, std::size_t nreps) {
  std::vector<std::uint32_t> order(nreps);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    for (std::size_t k : subset)
      if (columns[k][a] != columns[k][b]) return columns[k][a] < columns[k][b];
    return false;
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 0; i + 1 < nreps; ++i) {
    bool equal = true;
    for (std::size_t k : subset)
      if (columns[k][order[i]] != columns[k][order[i + 1]]) {
        equal = false;
        break;
      }
    if (equal) return false;
  }
  return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 1'000'000'000'000ULL) return 1'000'000'000'000ULL;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

GammaReport gamma_sep_check(unsigned m, const FieldSpec& f, const InvariantSet* pool) {
  const auto start = Clock::now();
  GammaReport rep;
  rep.q = f.q();
  rep.m = m;
  rep.two_m = 2 * m;
  rep.kappa = orbit_count_formula(m, f).kappa;

  using u128 = unsigned __int128;
  u128 power = 1;
  unsigned gamma = 0;
  while (power < rep.kappa) {
    power *= f.q();
    ++gamma;
  }
  rep.gamma = gamma;
  rep.bound_ok = gamma <= 2 * m;

  if (pool != nullptr) {
    if (pool->m != m) throw ConfigError("pool arity differs from m");
    require_invariant(*pool);
    rep.pool_name = pool->name;
    const std::size_t n = pool->size();
    std::uint64_t work = 0;
    for (unsigned s = 1; s < gamma; ++s) work += binomial(n, s);
    if (work > 2'000'000)
      throw BudgetExceeded("subset scan of " + std::to_string(work) + " candidates is too large");

    const auto reps = orbit_reps_grammar(m, f);
    const auto columns = eval_columns(pool->members, reps);
    rep.pool_checked = true;
    for (unsigned s = 1; s < gamma && rep.no_small_subset; ++s) {
      if (s > n) break;
      std::vector<std::size_t> subset(s);
      std::iota(subset.begin(), subset.end(), 0);
      do {
        if (subset_separates(columns, subset, reps.size())) {
          rep.no_small_subset = false;
          for (std::size_t k : subset)
            rep.violating_subset.push_back(pool->members[k].first.label());
          break;
        }
      } while (next_combination(subset, n));
    }
  }
  rep.runtime_ms = ms_since(start);
  return rep;
}

SubsetSearchResult min_separating_subset(const InvariantSet& pool, std::size_t size_cap) {
  const auto start = Clock::now();
  if (pool.size() > 24)
    throw PoolTooLarge("exact subset search is limited to 24 members, got " +
                       std::to_string(pool.size()));
  require_invariant(pool);

  SubsetSearchResult res;
  res.q = pool.field->q();
  res.m = pool.m;
  res.pool_name = pool.name;
  res.size_cap = size_cap;

  const auto reps = orbit_reps_grammar(pool.m, *pool.field);
  const auto columns = eval_columns(pool.members, reps);
  const std::size_t n = pool.size();
  for (std::size_t s = 1; s <= std::min(size_cap, n); ++s) {
    std::vector<std::size_t> subset(s);
    std::iota(subset.begin(), subset.end(), 0);
    do {
      if (subset_separates(columns, subset, reps.size())) {
        res.found = true;
        res.indices = subset;
        for (std::size_t k : subset) res.labels.push_back(pool.members[k].first.label());
        res.runtime_ms = ms_since(start);
        return res;
      }
    } while (next_combination(subset, n));
  }
  res.runtime_ms = ms_since(start);
  return res;
}

}  // namespace o2sep
