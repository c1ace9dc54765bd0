#include "o2sep/group.hpp"

namespace o2sep {

Vector2 e_vec(FieldElement alpha) {
  if (alpha.field() == nullptr) throw MixedFields("e_vec of a null element");
  return {alpha.field()->one(), alpha};
}

std::vector<FieldElement> PointTuple::coords() const {
  std::vector<FieldElement> out;
  out.reserve(2 * slots.size());
  for (const auto& s : slots) out.push_back(s.c1);
  for (const auto& s : slots) out.push_back(s.c2);
  return out;
}

std::string to_string(const Vector2& v) {
  return "(" + to_string(v.c1) + "," + to_string(v.c2) + ")";
}

std::string to_string(const PointTuple& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.slots.size(); ++i) {
    if (i) out += ",";
    out += to_string(v.slots[i]);
  }
  return out + ")";
}

GroupElement GroupElement::tau(FieldElement a) {
  if (a.field() == nullptr || a.is_zero()) throw ZeroAlpha("tau requires a nonzero parameter");
  return GroupElement(GKind::Tau, a);
}

GroupElement GroupElement::sigma(FieldElement a) {
  if (a.field() == nullptr || a.is_zero()) throw ZeroAlpha("sigma requires a nonzero parameter");
  return GroupElement(GKind::Sigma, a);
}

std::array<FieldElement, 4> GroupElement::matrix() const {
  const FieldSpec& f = *alpha_.field();
  if (kind_ == GKind::Tau) return {alpha_, f.zero(), f.zero(), alpha_.inv()};
  return {f.zero(), alpha_, alpha_.inv(), f.zero()};
}

GroupElement GroupElement::compose(const GroupElement& o) const {
  // Products by family:
  //   tau_a   tau_b   = tau_{ab}        tau_a   sigma_b = sigma_{ab}
  //   sigma_a tau_b   = sigma_{a/b}     sigma_a sigma_b = tau_{a/b}
  const bool left_sigma = kind_ == GKind::Sigma;
  const bool right_sigma = o.kind_ == GKind::Sigma;
  const FieldElement a = left_sigma ? alpha_ * o.alpha_.inv() : alpha_ * o.alpha_;
  return GroupElement(left_sigma == right_sigma ? GKind::Tau : GKind::Sigma, a);
}

GroupElement GroupElement::inverse() const {
  if (kind_ == GKind::Tau) return GroupElement(GKind::Tau, alpha_.inv());
  return *this;  // sigma_a * sigma_a = tau_1
}

PointTuple GroupElement::act(const PointTuple& v) const {
  PointTuple out;
  out.slots.reserve(v.slots.size());
  for (const auto& s : v.slots) out.slots.push_back(act(s));
  return out;
}

Poly GroupElement::act(const Poly& f) const {
  const FieldSpec& fs = *alpha_.field();
  const unsigned m = f.m();
  const auto a = inverse().matrix();
  std::vector<std::vector<FieldElement>> rows(2 * m,
                                              std::vector<FieldElement>(2 * m, fs.zero()));
  for (unsigned i = 0; i < m; ++i) {
    rows[i][i] = a[0];
    rows[i][m + i] = a[1];
    rows[m + i][i] = a[2];
    rows[m + i][m + i] = a[3];
  }
  return f.substitute_linear(rows);
}

std::string GroupElement::to_string() const {
  return (kind_ == GKind::Tau ? "tau(" : "sigma(") + std::to_string(alpha_.index()) + ")";
}

std::vector<GroupElement> all_elements(const FieldSpec& f) {
  std::vector<GroupElement> out;
  out.reserve(2 * (f.q() - 1));
  for (unsigned v = 1; v < f.q(); ++v) out.push_back(GroupElement::tau(f.element(v)));
  for (unsigned v = 1; v < f.q(); ++v) out.push_back(GroupElement::sigma(f.element(v)));
  return out;
}

std::vector<GroupElement> stabilizer(const Vector2& v) {
  const FieldSpec* f = v.c1.field();
  if (f == nullptr) throw MixedFields("stabilizer of a null vector");
  std::vector<GroupElement> out;
  for (const auto& g : all_elements(*f))
    if (g.act(v) == v) out.push_back(g);
  return out;
}

FieldElement eval_at(const Poly& f, const PointTuple& v) {
  if (f.m() != v.m()) throw MixedArity("polynomial and point have different arities");
  return f.eval(v.coords());
}

}  // namespace o2sep
