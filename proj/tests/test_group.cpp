#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "o2sep/group.hpp"
#include "o2sep/invariants.hpp"

using namespace o2sep;

namespace {

std::array<FieldElement, 4> matmul2(const std::array<FieldElement, 4>& a,
                                    const std::array<FieldElement, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

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

}  // namespace

TEST_CASE("all_elements: size 2(q-1), structurally distinct, identity first") {
  auto f2 = field_make(2);
  auto els2 = all_elements(*f2);
  REQUIRE(els2.size() == 2);
  CHECK(els2[0] == GroupElement::identity(*f2));
  CHECK(els2[1] == GroupElement::sigma(f2->one()));

  for (unsigned q : {3u, 5u, 9u, 16u}) {
    auto f = field_make(q);
    auto els = all_elements(*f);
    CHECK(els.size() == 2 * (q - 1));
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = i + 1; j < els.size(); ++j) CHECK(!(els[i] == els[j]));
  }
}

TEST_CASE("composition agrees with the 2x2 matrix product") {
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    auto f = field_make(q);
    for (const auto& g : all_elements(*f))
      for (const auto& h : all_elements(*f)) {
        auto prod = matmul2(g.matrix(), h.matrix());
        CHECK(g.compose(h).matrix() == prod);
      }
  }
}

TEST_CASE("composition case table") {
  auto f5 = field_make(5);
  auto a = f5->element(2);
  auto b = f5->element(3);
  CHECK(GroupElement::tau(a).compose(GroupElement::tau(b)) == GroupElement::tau(a * b));
  CHECK(GroupElement::sigma(a).compose(GroupElement::sigma(b)) ==
        GroupElement::tau(a * b.inv()));
  CHECK(GroupElement::sigma(f5->one()).compose(GroupElement::tau(a)) ==
        GroupElement::sigma(a.inv()));
}

TEST_CASE("group axioms, exhaustively for q <= 16") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    CAPTURE(q);
    auto f = field_make(q);
    auto els = all_elements(*f);
    auto contains = [&](const GroupElement& g) {
      return std::find(els.begin(), els.end(), g) != els.end();
    };
    auto id = GroupElement::identity(*f);
    for (const auto& g : els) {
      CHECK(g.compose(g.inverse()) == id);
      CHECK(g.inverse().compose(g) == id);
      CHECK(g.compose(id) == g);
      CHECK(id.compose(g) == g);
      for (const auto& h : els) {
        CHECK(contains(g.compose(h)));
        for (const auto& k : els) CHECK(g.compose(h).compose(k) == g.compose(h.compose(k)));
      }
    }
  }
}

TEST_CASE("sigma_1 and tau_primitive generate the whole group") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    auto f = field_make(q);
    std::vector<GroupElement> gens = {GroupElement::sigma(f->one()),
                                      GroupElement::tau(f->primitive_element())};
    std::vector<GroupElement> closure = {GroupElement::identity(*f)};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < closure.size(); ++i)
        for (const auto& g : gens) {
          auto next = g.compose(closure[i]);
          if (std::find(closure.begin(), closure.end(), next) == closure.end()) {
            closure.push_back(next);
            grew = true;
          }
        }
    }
    CHECK(closure.size() == 2 * (q - 1));
  }
}

TEST_CASE("inverses: tau flips alpha, sigma is an involution") {
  auto f7 = field_make(7);
  auto a = f7->element(3);
  CHECK(GroupElement::tau(a).inverse() == GroupElement::tau(a.inv()));
  CHECK(GroupElement::sigma(a).inverse() == GroupElement::sigma(a));
  CHECK(GroupElement::identity(*f7).inverse() == GroupElement::identity(*f7));
  CHECK_THROWS_AS(GroupElement::tau(f7->zero()), ZeroAlpha);
  CHECK_THROWS_AS(GroupElement::sigma(f7->zero()), ZeroAlpha);
}

TEST_CASE("vector action") {
  auto f5 = field_make(5);
  auto a = f5->element(2);
  auto b = f5->element(4);
  auto g = f5->element(3);
  CHECK(GroupElement::tau(a).act(Vector2{f5->one(), b}) == Vector2{a, a.inv() * b});
  CHECK(GroupElement::sigma(f5->one()).act(Vector2{f5->one(), f5->zero()}) ==
        Vector2{f5->zero(), f5->one()});
  CHECK(GroupElement::sigma(a.inv()).act(Vector2{b, g}) == Vector2{a.inv() * g, a * b});
}

TEST_CASE("coordinate-ring action matches the defining rules") {
  auto f5 = field_make(5);
  const unsigned m = 2;
  auto x1 = Poly::variable(m, 0, *f5);
  auto y1 = Poly::variable(m, 2, *f5);
  auto s1 = GroupElement::sigma(f5->one());
  CHECK(s1.act(x1) == y1);
  CHECK(s1.act(y1) == x1);
  auto a = f5->element(3);
  auto ta = GroupElement::tau(a);
  CHECK(ta.act(x1) == x1.scaled(a.inv()));
  CHECK(ta.act(y1) == y1.scaled(a));
  CHECK(ta.act(x1 * y1) == x1 * y1);
}

TEST_CASE("action contract: act(f)(v) = f(g^-1 v), exhaustively for small q, m") {
  std::mt19937 rng(4242);
  for (unsigned q : {2u, 3u}) {
    auto f = field_make(q);
    for (unsigned m : {1u, 2u}) {
      std::vector<Poly> polys;
      for (unsigned var = 0; var < 2 * m; ++var) polys.push_back(Poly::variable(m, var, *f));
      std::uniform_int_distribution<unsigned> coeff(0, q - 1);
      for (int rep = 0; rep < 3; ++rep) {
        Poly p = Poly::zero(m, *f);
        for (unsigned var = 0; var < 2 * m; ++var)
          p = p + pow(polys[var], 1 + rep % 2).scaled(f->element(coeff(rng)));
        polys.push_back(p);
      }
      for (const auto& g : all_elements(*f)) {
        auto ginv = g.inverse();
        for (const auto& p : polys)
          for (const auto& v : all_tuples(*f, m))
            CHECK(eval_at(g.act(p), v) == eval_at(p, ginv.act(v)));
      }
    }
  }
}

TEST_CASE("action is compatible with composition: (gh)f = g(hf)") {
  auto f4 = field_make(4);
  const unsigned m = 2;
  auto x1 = Poly::variable(m, 0, *f4);
  auto y2 = Poly::variable(m, 3, *f4);
  auto p = x1 * y2 + pow(x1, 3);
  for (const auto& g : all_elements(*f4))
    for (const auto& h : all_elements(*f4)) CHECK(g.compose(h).act(p) == g.act(h.act(p)));

  // and exhaustively on the invariant families at arity 2
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    auto f = field_make(q);
    auto els = all_elements(*f);
    for (const auto& [d, poly] : set_Tm(2, f).members)
      for (const auto& g : els)
        for (const auto& h : els) CHECK(g.compose(h).act(poly) == g.act(h.act(poly)));
  }
}

TEST_CASE("stabilizers match the closed form") {
  for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    CAPTURE(q);
    auto f = field_make(q);
    auto id = GroupElement::identity(*f);
    for (const auto& v : all_vectors(*f)) {
      auto st = stabilizer(v);
      if (v.is_zero()) {
        CHECK(st.size() == 2 * (q - 1));
      } else if (v.c1.is_zero() || v.c2.is_zero()) {
        REQUIRE(st.size() == 1);
        CHECK(st[0] == id);
      } else {
        REQUIRE(st.size() == 2);
        CHECK(st[0] == id);
        CHECK(st[1] == GroupElement::sigma(v.c1 * v.c2.inv()));
      }
    }
  }
}

TEST_CASE("stabilizers of vectors on different lines meet only in the identity") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    auto f = field_make(q);
    auto id = GroupElement::identity(*f);
    auto vs = all_vectors(*f);
    auto same_line = [&](const Vector2& u, const Vector2& v) {
      for (const auto& c : f->enumerate())
        if (Vector2{c * v.c1, c * v.c2} == u || Vector2{c * u.c1, c * u.c2} == v) return true;
      return false;
    };
    for (const auto& u : vs)
      for (const auto& v : vs) {
        if (u.is_zero() || v.is_zero() || same_line(u, v)) continue;
        auto su = stabilizer(u);
        std::vector<GroupElement> common;
        for (const auto& g : stabilizer(v))
          if (std::find(su.begin(), su.end(), g) != su.end()) common.push_back(g);
        REQUIRE(common.size() == 1);
        CHECK(common[0] == id);
      }
  }
}

TEST_CASE("spec examples: stabilizer of (1,0), (1,1), (0,0)") {
  auto f3 = field_make(3);
  auto one = f3->one();
  auto zero = f3->zero();
  auto st10 = stabilizer(Vector2{one, zero});
  REQUIRE(st10.size() == 1);
  CHECK(st10[0] == GroupElement::identity(*f3));
  auto st11 = stabilizer(Vector2{one, one});
  REQUIRE(st11.size() == 2);
  CHECK(st11[1] == GroupElement::sigma(one));
  CHECK(stabilizer(Vector2{zero, zero}).size() == 4);
}
