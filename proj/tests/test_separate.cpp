#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "o2sep/separate.hpp"

using namespace o2sep;

namespace {

PointTuple tuple_of(std::initializer_list<std::pair<unsigned, unsigned>> coords,
                    const FieldSpec& f) {
  PointTuple t;
  for (auto [a, b] : coords) t.slots.push_back({f.element(a), f.element(b)});
  return t;
}

std::vector<PointTuple> all_tuples(const FieldSpec& f, unsigned m) {
  std::vector<PointTuple> out;
  std::vector<Vector2> vs;
  for (const auto& a : f.enumerate())
    for (const auto& b : f.enumerate()) vs.push_back({a, b});
  std::vector<std::size_t> odo(m, 0);
  while (true) {
    PointTuple t;
    for (unsigned i = 0; i < m; ++i) t.slots.push_back(vs[odo[i]]);
    out.push_back(std::move(t));
    unsigned i = m;
    while (i > 0 && ++odo[i - 1] == vs.size()) odo[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

Fingerprint fingerprint_without(const InvariantSet& S, std::size_t skip, const PointTuple& v) {
  Fingerprint fp;
  const auto coords = v.coords();
  for (std::size_t k = 0; k < S.members.size(); ++k) {
    if (k == skip) continue;
    fp.push_back(static_cast<std::uint8_t>(S.members[k].second.eval(coords).index()));
  }
  return fp;
}

}  // namespace

TEST_CASE("T1 separates the three orbits at q = 2, N1 alone does not") {
  auto f2 = field_make(2);
  auto rep = is_separating(set_Tm(1, f2));
  CHECK(rep.separating);
  CHECK(rep.kappa == 3);
  CHECK(rep.set_size == 2);

  auto n_only = parse_set_lines("x1*y1\n", "N1-only", 1, f2);
  auto rep2 = is_separating(n_only);
  CHECK(!rep2.separating);
  REQUIRE(rep2.collision.has_value());
  CHECK(rep2.collision->u == tuple_of({{0, 0}}, *f2));
  CHECK(rep2.collision->v == tuple_of({{1, 0}}, *f2));
  CHECK(rep2.collision->distinct_orbits_checked);
}

TEST_CASE("Tm2 separates at q = 2, m = 2 over 10 orbits") {
  auto f2 = field_make(2);
  auto rep = is_separating(set_Tm2(2, f2));
  CHECK(rep.separating);
  CHECK(rep.kappa == 10);
}

TEST_CASE("non-invariant members are rejected with the offending element") {
  auto f3 = field_make(3);
  auto bad = parse_set_lines("x1\n", "bad", 1, f3);
  CHECK_THROWS_AS(is_separating(bad), NonInvariantMember);
}

TEST_CASE("minimality certificates with valid witnesses") {
  auto f3 = field_make(3);
  auto rep = is_minimal(set_Tm(2, f3));
  CHECK(rep.separating);
  REQUIRE(rep.minimal.has_value());
  CHECK(*rep.minimal);
  auto S = set_Tm(2, f3);
  REQUIRE(rep.removals.size() == S.size());
  auto els = all_elements(*f3);
  for (std::size_t k = 0; k < rep.removals.size(); ++k) {
    const auto& w = rep.removals[k];
    CHECK(w.removed == S.members[k].first.label());
    CHECK(w.pair.distinct_orbits_checked);
    CHECK(!same_orbit(w.pair.u, w.pair.v, els));
    CHECK(fingerprint_without(S, k, w.pair.u) == fingerprint_without(S, k, w.pair.v));
  }
}

TEST_CASE("known witness pairs collide after the named removals") {
  auto f2 = field_make(2);
  auto s22 = set_Tm2(2, f2);
  // removing U_{1,2}: (e_0, e_0) vs (e_0, (0,1)) become indistinguishable
  std::size_t u_idx = 5;
  for (std::size_t k = 0; k < s22.members.size(); ++k)
    if (s22.members[k].first.label() == "U_{1,2}") u_idx = k;
  REQUIRE(u_idx < s22.members.size());
  auto u = tuple_of({{1, 0}, {1, 0}}, *f2);
  auto v = tuple_of({{1, 0}, {0, 1}}, *f2);
  CHECK(!same_orbit(u, v));
  CHECK(fingerprint_without(s22, u_idx, u) == fingerprint_without(s22, u_idx, v));
  CHECK(fingerprint_of(s22, u) != fingerprint_of(s22, v));

  // q > 2, removing H_{1,2}: (e_0, e_0) vs (e_0, (a,0)) with a not in {0,1}
  auto f3 = field_make(3);
  auto t23 = set_Tm(2, f3);
  std::size_t h_idx = t23.size();
  for (std::size_t k = 0; k < t23.members.size(); ++k)
    if (t23.members[k].first.label() == "H_{1,2}") h_idx = k;
  REQUIRE(h_idx < t23.members.size());
  auto u3 = tuple_of({{1, 0}, {1, 0}}, *f3);
  auto v3 = tuple_of({{1, 0}, {2, 0}}, *f3);
  CHECK(!same_orbit(u3, v3));
  CHECK(fingerprint_without(t23, h_idx, u3) == fingerprint_without(t23, h_idx, v3));
  CHECK(fingerprint_of(t23, u3) != fingerprint_of(t23, v3));
}

TEST_CASE("T1 is minimal; a padded set is not") {
  auto f2 = field_make(2);
  auto rep = is_minimal(set_Tm(1, f2));
  REQUIRE(rep.minimal.has_value());
  CHECK(*rep.minimal);
  CHECK(rep.removals.size() == 2);

  auto padded = parse_set_lines("x1*y1\nx1 + y1\nx1^2*y1^2\n", "padded", 1, f2);
  auto rep2 = is_minimal(padded);
  REQUIRE(rep2.minimal.has_value());
  CHECK(!*rep2.minimal);
  REQUIRE(rep2.redundant_member.has_value());
  CHECK(*rep2.redundant_member == "f1");  // {T1, N1^2} still separates

  auto n_only = parse_set_lines("x1*y1\n", "N1-only", 1, f2);
  CHECK_THROWS_AS(is_minimal(n_only), NotSeparating);
}

TEST_CASE("fingerprints are constant on orbits") {
  for (unsigned q : {2u, 3u}) {
    auto f = field_make(q);
    for (unsigned m : {1u, 2u}) {
      auto S = set_Tm(m, f);
      auto els = all_elements(*f);
      for (const auto& rep : orbit_reps_grammar(m, *f)) {
        auto base = fingerprint_of(S, rep.point);
        for (const auto& g : els) CHECK(fingerprint_of(S, g.act(rep.point)) == base);
      }
    }
  }
}

TEST_CASE("oracle agreement: rep fingerprints match the pairwise definition") {
  for (unsigned q : {2u, 3u}) {
    auto f = field_make(q);
    for (unsigned m : {1u, 2u}) {
      CAPTURE(q);
      CAPTURE(m);
      auto tuples = all_tuples(*f, m);
      auto els = all_elements(*f);
      std::vector<InvariantSet> sets;
      sets.push_back(set_Tm(m, f));
      sets.push_back(expand_set(set_Tm(1, f), m));
      sets.push_back(parse_set_lines("x1*y1\n", "N1-only", m, f));
      for (const auto& S : sets) {
        bool separating_by_definition = true;
        std::vector<Fingerprint> fps;
        fps.reserve(tuples.size());
        for (const auto& t : tuples) fps.push_back(fingerprint_of(S, t));
        for (std::size_t i = 0; i < tuples.size() && separating_by_definition; ++i)
          for (std::size_t j = i + 1; j < tuples.size(); ++j)
            if (fps[i] == fps[j] && !same_orbit(tuples[i], tuples[j], els)) {
              separating_by_definition = false;
              break;
            }
        CHECK(is_separating(S).separating == separating_by_definition);
      }
    }
  }
}

TEST_CASE("supersets of separating sets stay separating") {
  auto f3 = field_make(3);
  const unsigned m = 2;
  auto base = set_Tm(m, f3);
  REQUIRE(is_separating(base).separating);
  std::string lines;
  for (const auto& [d, p] : base.members) lines += to_string(p) + "\n";
  for (const auto& [d, p] : set_chen(m, f3).members) lines += to_string(p) + "\n";
  lines += "x1^2*y1^2\n";  // N_1^2, invariant and redundant
  auto superset = parse_set_lines(lines, "Tm-plus-chen", m, f3);
  CHECK(superset.size() > base.size());
  CHECK(is_separating(superset).separating);
}

TEST_CASE("Tm/Tm2 stay separating and minimal beyond the acceptance grid") {
  // the combinations the acceptance grid leaves out: q in {7,8,9} at m = 3
  // and q = 2 at m = 4
  for (unsigned q : {7u, 8u, 9u}) {
    CAPTURE(q);
    auto f = field_make(q);
    auto rep = is_minimal(set_Tm(3, f));
    CHECK(rep.separating);
    CHECK(rep.minimal.value_or(false));
  }
  auto f2 = field_make(2);
  auto rep = is_minimal(set_Tm2(4, f2));
  CHECK(rep.separating);
  CHECK(rep.minimal.value_or(false));
}

TEST_CASE("the N+B+D set separates in characteristic 2 and refines Tm") {
  for (unsigned q : {2u, 4u, 8u}) {
    auto f = field_make(q);
    for (unsigned m : {1u, 2u, 3u}) {
      CAPTURE(q);
      CAPTURE(m);
      CHECK(is_separating(set_chen(m, f)).separating);
    }
  }
  // refinement on raw tuples: equal chen fingerprints force equal Tm
  // fingerprints (chen generates, so it can only distinguish more)
  for (unsigned q : {2u, 4u}) {
    auto f = field_make(q);
    for (unsigned m : {1u, 2u}) {
      auto chen = set_chen(m, f);
      auto tm = set_Tm(m, f);
      auto tuples = all_tuples(*f, m);
      std::vector<Fingerprint> fc, ft;
      for (const auto& t : tuples) {
        fc.push_back(fingerprint_of(chen, t));
        ft.push_back(fingerprint_of(tm, t));
      }
      for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i + 1; j < tuples.size(); ++j)
          if (fc[i] == fc[j]) CHECK(ft[i] == ft[j]);
    }
  }
}

TEST_CASE("beta_sep values and failing lower degrees") {
  auto f2 = field_make(2);
  auto b22 = beta_sep(2, *f2, 4);
  CHECK(b22.beta == 2);
  REQUIRE(b22.degrees.size() == 2);
  CHECK(!b22.degrees[0].injective);
  REQUIRE(b22.degrees[0].witness.has_value());
  CHECK(b22.degrees[0].witness->distinct_orbits_checked);
  CHECK(b22.degrees[1].injective);

  auto f3 = field_make(3);
  CHECK(beta_sep(2, *f3, 4).beta == 2);
  auto f5 = field_make(5);
  auto b51 = beta_sep(1, *f5, 6);
  CHECK(b51.beta == 4);
  for (unsigned d = 0; d + 1 < 4; ++d) CHECK(!b51.degrees[d].injective);

  CHECK_THROWS_AS(beta_sep(1, *f5, 3), NotFoundWithinBudget);
}

TEST_CASE("beta_sep does not depend on the primitive element choice") {
  auto f7 = field_make(7);
  auto order_of = [&](FieldElement a) {
    unsigned n = 1;
    auto x = a;
    while (!x.is_one()) {
      x *= a;
      ++n;
    }
    return n;
  };
  std::vector<FieldElement> primitives;
  for (unsigned v = 2; v < 7 && primitives.size() < 2; ++v)
    if (order_of(f7->element(v)) == 6) primitives.push_back(f7->element(v));
  REQUIRE(primitives.size() == 2);
  CHECK(beta_sep(1, *f7, 8, primitives[0]).beta == beta_sep(1, *f7, 8, primitives[1]).beta);
}

TEST_CASE("sigma: arity-1 expansion fails at m = 2, arity-2 expansion carries") {
  for (unsigned q : {2u, 3u}) {
    CAPTURE(q);
    auto f = field_make(q);
    auto rep = sigma_sep_bounded(f, 3);
    CHECK(!rep.t1_expansion_separates_at_2);
    REQUIRE(rep.t1_witness.has_value());
    CHECK(rep.t1_witness->distinct_orbits_checked);
    for (const auto& [mm, ok] : rep.base2_expansion_separating) CHECK(ok);
    CHECK(rep.confirmed);
  }

  // the spec's explicit witness pair at q = 2
  auto f2 = field_make(2);
  auto t1x2 = expand_set(set_Tm(1, f2), 2);
  auto u = tuple_of({{1, 0}, {1, 0}}, *f2);
  auto v = tuple_of({{1, 0}, {0, 1}}, *f2);
  CHECK(fingerprint_of(t1x2, u) == fingerprint_of(t1x2, v));
  CHECK(!same_orbit(u, v));
  auto u12 = make_invariant(InvariantDescriptor::u(1, 2), 2, *f2);
  CHECK(eval_at(u12, u).is_zero());
  CHECK(eval_at(u12, v).is_one());

  CHECK_THROWS_AS(sigma_sep_bounded(f2, 1), ConfigError);
}

TEST_CASE("gamma: integer log bound and exhaustive small-subset scan") {
  auto f2 = field_make(2);
  auto g22 = gamma_sep_check(2, *f2);
  CHECK(g22.kappa == 10);
  CHECK(g22.gamma == 4);  // 2^3 = 8 < 10 <= 16 = 2^4
  CHECK(g22.bound_ok);

  auto f3 = field_make(3);
  auto g31 = gamma_sep_check(1, *f3);
  CHECK(g31.kappa == 4);
  CHECK(g31.gamma == 2);
  CHECK(g31.bound_ok);

  auto f5 = field_make(5);
  auto g53 = gamma_sep_check(3, *f5);
  CHECK(g53.kappa == 2016);
  CHECK(g53.gamma == 5);  // 5^4 = 625 < 2016 <= 3125
  CHECK(g53.two_m == 6);
  CHECK(g53.bound_ok);

  auto pool = set_Tm(1, f2);
  auto gp = gamma_sep_check(1, *f2, &pool);
  CHECK(gp.gamma == 2);
  CHECK(gp.pool_checked);
  CHECK(gp.no_small_subset);
}

TEST_CASE("exact minimum-subset search") {
  auto f2 = field_make(2);
  auto pool = set_Tm(1, f2);
  auto res = min_separating_subset(pool, 2);
  REQUIRE(res.found);
  CHECK(res.labels == std::vector<std::string>{"N_1", "T_1"});

  auto n_only = parse_set_lines("x1*y1\n", "N1-only", 1, f2);
  CHECK(!min_separating_subset(n_only, 1).found);

  // Tm2 at q=2, m=2 is minimal with 5 members, so no 4-subset separates.
  auto s22 = set_Tm2(2, f2);
  CHECK(!min_separating_subset(s22, 4).found);
  auto full = min_separating_subset(s22, 5);
  REQUIRE(full.found);
  CHECK(full.labels.size() == 5);

  auto f3 = field_make(3);
  CHECK_THROWS_AS(min_separating_subset(set_Tm(5, f3), 4), PoolTooLarge);
}
