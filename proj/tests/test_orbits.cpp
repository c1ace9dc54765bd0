#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "o2sep/orbits.hpp"

using namespace o2sep;

namespace {

std::vector<Vector2> all_vectors(const FieldSpec& f) {
  std::vector<Vector2> out;
  for (const auto& a : f.enumerate())
    for (const auto& b : f.enumerate()) out.push_back({a, b});
  return out;
}

std::vector<PointTuple> all_tuples(const FieldSpec& f, unsigned m) {
  std::vector<PointTuple> out;
  auto vs = all_vectors(f);
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

PointTuple tuple_of(std::initializer_list<std::pair<unsigned, unsigned>> coords,
                    const FieldSpec& f) {
  PointTuple t;
  for (auto [a, b] : coords) t.slots.push_back({f.element(a), f.element(b)});
  return t;
}

}  // namespace

TEST_CASE("omega representative selection") {
  auto f2 = field_make(2);
  auto one = f2->one();
  CHECK(!omega_contains(one, Vector2{one, f2->zero()}));  // pair {(1,0),(0,1)}
  CHECK(omega_contains(one, Vector2{f2->zero(), one}));

  auto f3 = field_make(3);
  CHECK_THROWS_AS(omega_contains(f3->one(), Vector2{f3->zero(), f3->zero()}), NotInSAlpha);
  CHECK_THROWS_AS(omega_contains(f3->zero(), Vector2{f3->one(), f3->zero()}), ZeroAlpha);
}

TEST_CASE("stabilizer orbits on S_alpha have exactly two elements; Omega picks one per pair") {
  for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    CAPTURE(q);
    auto f = field_make(q);
    for (unsigned av = 1; av < q; ++av) {
      auto alpha = f->element(av);
      auto flip = GroupElement::sigma(alpha.inv());
      std::size_t s_size = 0, omega_size = 0;
      for (const auto& w : all_vectors(*f)) {
        if (!in_s_alpha(alpha, w)) continue;
        ++s_size;
        auto partner = flip.act(w);
        CHECK(in_s_alpha(alpha, partner));
        CHECK(!(partner == w));
        CHECK(flip.act(partner) == w);
        CHECK(omega_contains(alpha, w) != omega_contains(alpha, partner));
        omega_size += omega_contains(alpha, w);
      }
      CHECK(s_size == static_cast<std::size_t>(q) * (q - 1));
      CHECK(omega_size == s_size / 2);  // |Omega_alpha| = q(q-1)/2
    }
  }
}

TEST_CASE("canonicalize: spec examples") {
  auto f3 = field_make(3);
  auto zero3 = tuple_of({{0, 0}, {0, 0}}, *f3);
  auto rz = canonicalize(zero3);
  CHECK(rz.form.otype == OrbitType::Zero);
  CHECK(rz.form.point == zero3);
  CHECK(rz.witness == GroupElement::identity(*f3));

  auto r1 = canonicalize(tuple_of({{2, 0}}, *f3));
  CHECK(r1.form.otype == OrbitType::A);
  CHECK(r1.form.point == tuple_of({{1, 0}}, *f3));
  CHECK(r1.witness == GroupElement::tau(f3->element(2)));

  auto f2 = field_make(2);
  auto r2 = canonicalize(tuple_of({{1, 1}, {1, 0}}, *f2));
  CHECK(r2.form.otype == OrbitType::C);
  CHECK(r2.form.point == tuple_of({{1, 1}, {0, 1}}, *f2));
  REQUIRE(r2.form.alpha.has_value());
  CHECK(r2.form.alpha->is_one());
  CHECK(r2.form.s == 0);
  CHECK(r2.form.w_pos == 1);
  CHECK(r2.witness == GroupElement::sigma(f2->one()));
}

TEST_CASE("canonicalize: witness soundness and idempotence, exhaustively") {
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}}) {
    CAPTURE(q);
    CAPTURE(m);
    auto f = field_make(q);
    for (const auto& t : all_tuples(*f, m)) {
      auto res = canonicalize(t);
      CHECK(res.witness.act(t) == res.form.point);
      auto again = canonicalize(res.form.point);
      CHECK(again.form.point == res.form.point);
      CHECK(again.witness == GroupElement::identity(*f));
      CHECK(again.form.otype == res.form.otype);
      // zero pattern preserved
      for (unsigned i = 0; i < m; ++i)
        CHECK(t.slots[i].is_zero() == res.form.point.slots[i].is_zero());
    }
  }
}

TEST_CASE("canonicalize: witness soundness, sampled at q = 5, 9") {
  std::mt19937 rng(31337);
  for (unsigned q : {5u, 9u}) {
    auto f = field_make(q);
    std::uniform_int_distribution<unsigned> idx(0, q - 1);
    for (int rep = 0; rep < 500; ++rep) {
      PointTuple t;
      for (unsigned i = 0; i < 3; ++i)
        t.slots.push_back({f->element(idx(rng)), f->element(idx(rng))});
      auto res = canonicalize(t);
      CHECK(res.witness.act(t) == res.form.point);
      CHECK(canonicalize(res.form.point).form.point == res.form.point);
    }
  }
}

TEST_CASE("completeness: same orbit iff same canonical point") {
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    CAPTURE(q);
    CAPTURE(m);
    auto f = field_make(q);
    auto ts = all_tuples(*f, m);
    auto els = all_elements(*f);
    std::vector<PointTuple> canon;
    canon.reserve(ts.size());
    for (const auto& t : ts) canon.push_back(canonicalize(t).form.point);
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i; j < ts.size(); ++j)
        CHECK(same_orbit(ts[i], ts[j], els) == (canon[i] == canon[j]));
  }
}

TEST_CASE("orbit count formula and breakdown") {
  auto f2 = field_make(2);
  auto c21 = orbit_count_formula(1, *f2);
  CHECK(c21.kappa == 3);
  CHECK(c21.k1 == 1);
  CHECK(c21.k2 == 1);
  CHECK(c21.k3 == 0);

  CHECK(orbit_count_formula(2, *f2).kappa == 10);
  CHECK(orbit_count_formula(3, *f2).kappa == 36);
  auto f3 = field_make(3);
  CHECK(orbit_count_formula(1, *f3).kappa == 4);
  CHECK(orbit_count_formula(2, *f3).kappa == 25);
  CHECK(orbit_count_formula(3, *f3).kappa == 196);
}

TEST_CASE("both enumeration strategies agree with the formula") {
  std::vector<std::pair<unsigned, unsigned>> grid;
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (unsigned m : {1u, 2u, 3u}) grid.emplace_back(q, m);
  for (unsigned q : {7u, 8u, 9u})
    for (unsigned m : {1u, 2u}) grid.emplace_back(q, m);

  for (auto [q, m] : grid) {
    CAPTURE(q);
    CAPTURE(m);
    auto f = field_make(q);
    auto counts = orbit_count_formula(m, *f);
    auto grammar = orbit_reps_grammar(m, *f);
    std::vector<std::uint64_t> sizes;
    auto brute = orbit_reps_brute(m, *f, kDefaultEnumBudget, &sizes);
    REQUIRE(grammar.size() == counts.kappa);
    REQUIRE(brute.size() == counts.kappa);
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(grammar[i].point == brute[i].point);
      CHECK(grammar[i].otype == brute[i].otype);
    }
    // sorted output
    CHECK(std::is_sorted(grammar.begin(), grammar.end(),
                         [](const auto& a, const auto& b) { return a.point < b.point; }));
    // per-type decomposition
    std::map<OrbitType, std::uint64_t> by_type;
    for (const auto& c : brute) ++by_type[c.otype];
    CHECK(by_type[OrbitType::Zero] == 1);
    CHECK(by_type[OrbitType::A] == counts.k1);
    CHECK(by_type[OrbitType::B] == counts.k2);
    CHECK(by_type[OrbitType::C] == counts.k3);
    // orbit sizes partition the whole space
    std::uint64_t space = 1;
    for (unsigned i = 0; i < 2 * m; ++i) space *= q;
    std::uint64_t covered = 0;
    for (auto s : sizes) covered += s;
    CHECK(covered == space);
  }
}

TEST_CASE("same_orbit oracle basics") {
  auto f2 = field_make(2);
  auto u = tuple_of({{1, 0}}, *f2);
  CHECK(same_orbit(u, u));
  CHECK(same_orbit(u, tuple_of({{0, 1}}, *f2)));
  CHECK(!same_orbit(u, tuple_of({{1, 1}}, *f2)));
  CHECK_THROWS_AS(same_orbit(u, tuple_of({{1, 0}, {0, 0}}, *f2)), MixedArity);
}

TEST_CASE("brute-force enumeration respects its budget") {
  auto f5 = field_make(5);
  CHECK_THROWS_AS(orbit_reps_brute(3, *f5, 100), BudgetExceeded);
  CHECK_NOTHROW(orbit_reps_brute(1, *f5, 100));
}
