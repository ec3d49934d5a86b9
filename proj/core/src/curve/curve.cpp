#include "h10m/curve/curve.hpp"

#include <atomic>

#include "h10m/errors.hpp"

namespace h10m::curve {

namespace {
std::atomic<AdditionLawMutation> g_mutation{AdditionLawMutation::None};

const char* curve_name(CurveId id) {
  switch (id) {
    case CurveId::ManinDenef:
      return "E_delta";
    case CurveId::NodalTwisted:
      return "E~ (twisted)";
    case CurveId::Nodal:
      return "E~";
  }
  return "?";
}
}  // namespace

void set_addition_law_mutation(AdditionLawMutation m) { g_mutation.store(m); }
AdditionLawMutation addition_law_mutation() { return g_mutation.load(); }

MPoly f_poly() {
  MPoly z(algebra::vars::z()), d(algebra::vars::delta());
  return z.pow(3) + d * z.pow(2) + z;
}

MPoly f_tilde_poly() {
  MPoly z(algebra::vars::z());
  return z * (z - 1).pow(2);
}

const RatFunc& CurvePoint::x() const {
  if (infinity_) throw DomainError("the point at infinity has no affine coordinates");
  return x_;
}

const RatFunc& CurvePoint::y() const {
  if (infinity_) throw DomainError("the point at infinity has no affine coordinates");
  return y_;
}

const Curve& Curve::manin_denef() {
  static const Curve c(CurveId::ManinDenef, RatFunc(algebra::vars::delta()), RatFunc(f_poly()));
  return c;
}

const Curve& Curve::nodal_twisted() {
  static const Curve c(CurveId::NodalTwisted, RatFunc(-2), RatFunc(f_tilde_poly()));
  return c;
}

const Curve& Curve::nodal() {
  static const Curve c(CurveId::Nodal, RatFunc(-2), RatFunc(1));
  return c;
}

CurvePoint Curve::infinity() const { return CurvePoint(id_, true, {}, {}); }

CurvePoint Curve::point_unchecked(RatFunc x, RatFunc y) const {
  return CurvePoint(id_, false, std::move(x), std::move(y));
}

RatFunc Curve::residual(const RatFunc& x, const RatFunc& y) const {
  return twist_ * y * y - x * (x * x + delta_ * x + RatFunc(1));
}

CurvePoint Curve::point(RatFunc x, RatFunc y) const {
  if (!residual(x, y).is_zero())
    throw DomainError("(" + x.to_string() + ", " + y.to_string() + ") is not on " + curve_name(id_));
  return point_unchecked(std::move(x), std::move(y));
}

void Curve::check_tag(const CurvePoint& p) const {
  if (p.curve() != id_)
    throw DomainError(std::string("point of ") + curve_name(p.curve()) + " used on " + curve_name(id_));
  if (is_nodal() && !p.is_infinity() && p.x_ == RatFunc(1) && p.y_.is_zero())
    throw DomainError("(1,0) is not in the group of the nodal curve");
}

CurvePoint Curve::negate(const CurvePoint& p) const {
  check_tag(p);
  if (p.is_infinity()) return p;
  return point_unchecked(p.x_, -p.y_);
}

CurvePoint Curve::add(const CurvePoint& p, const CurvePoint& q) const {
  check_tag(p);
  check_tag(q);
  // case 1
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const RatFunc &a1 = p.x_, &b1 = p.y_, &a2 = q.x_, &b2 = q.y_;
  // case 2
  if (a1 == a2 && b1 == -b2) return infinity();
  // case 3, read symmetrically
  if (a2.is_zero() && !a1.is_zero()) {
    RatFunc inv = a1.inverse();
    return point_unchecked(inv, -b1 * inv * inv);
  }
  if (a1.is_zero() && !a2.is_zero()) return add(q, p);
  if (a1.is_zero() || a2.is_zero()) throw DomainError("addition of points off the curve");
  // case 4
  RatFunc m;
  if (a1 != a2) {
    m = (b2 - b1) / (a2 - a1);
  } else {
    if (b1.is_zero()) throw DomainError("doubling slope needs b1 != 0");
    RatFunc lin = RatFunc(2) * delta_ * a1;
    if (addition_law_mutation() == AdditionLawMutation::FlipDoublingDeltaSign) lin = -lin;
    m = (RatFunc(3) * a1 * a1 + lin + RatFunc(1)) / (RatFunc(2) * twist_ * b1);
  }
  RatFunc u = b1 - a1 * m;
  RatFunc a = twist_ * u * u / (a1 * a2);
  RatFunc b = -b1 - m * (a - a1);
  return point_unchecked(std::move(a), std::move(b));
}

CurvePoint Curve::multiply(const CurvePoint& p, int n) const {
  check_tag(p);
  if (n < 0) return multiply(negate(p), -n);
  CurvePoint acc = infinity();
  for (int i = 0; i < n; ++i) acc = add(acc, p);
  return acc;
}

}  // namespace h10m::curve
