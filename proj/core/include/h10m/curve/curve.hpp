#pragma once

#include "h10m/algebra/ratfunc.hpp"

namespace h10m::curve {

using algebra::MPoly;
using algebra::RatFunc;
using algebra::Rational;
using algebra::Var;

// f(δ, z) = z³ + δz² + z and the nodal specialization f̃(z) = z(z − 1)².
MPoly f_poly();
MPoly f_tilde_poly();

enum class CurveId {
  ManinDenef,    // Y² = X³ + δX² + X over ℚ(δ, z), twisted by f(δ, z)
  NodalTwisted,  // δ = −2 over ℚ(z), twisted by f̃(z)
  Nodal,         // δ = −2, untwisted; the curve parametrized by ℘̃
};

class CurvePoint {
 public:
  bool is_infinity() const { return infinity_; }
  const RatFunc& x() const;
  const RatFunc& y() const;
  CurveId curve() const { return curve_; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  friend class Curve;
  CurvePoint(CurveId c, bool inf, RatFunc x, RatFunc y)
      : curve_(c), infinity_(inf), x_(std::move(x)), y_(std::move(y)) {}
  CurveId curve_;
  bool infinity_;
  RatFunc x_, y_;
};

// Y² = X³ + δX² + X where a stored point (a, b) stands for (a, √w·b).
// Points remember which curve built them; mixing curves is an error.
class Curve {
 public:
  static const Curve& manin_denef();
  static const Curve& nodal_twisted();
  static const Curve& nodal();

  CurveId id() const { return id_; }
  const RatFunc& delta() const { return delta_; }
  const RatFunc& twist() const { return twist_; }
  bool is_nodal() const { return id_ != CurveId::ManinDenef; }

  CurvePoint infinity() const;
  // Throws DomainError unless (x, y) satisfies the curve equation.
  CurvePoint point(RatFunc x, RatFunc y) const;
  CurvePoint point_unchecked(RatFunc x, RatFunc y) const;
  // w·y² − (x³ + δx² + x)
  RatFunc residual(const RatFunc& x, const RatFunc& y) const;

  CurvePoint negate(const CurvePoint& p) const;
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
  CurvePoint multiply(const CurvePoint& p, int n) const;

 private:
  Curve(CurveId id, RatFunc delta, RatFunc twist)
      : id_(id), delta_(std::move(delta)), twist_(std::move(twist)) {}
  void check_tag(const CurvePoint& p) const;
  CurveId id_;
  RatFunc delta_;
  RatFunc twist_;
};

// Test hook: deliberately corrupts the addition law so that verification
// campaigns can prove they detect a wrong law.
enum class AdditionLawMutation {
  None,
  FlipDoublingDeltaSign,  // slope numerator 3a² − 2δa + 1 instead of 3a² + 2δa + 1
};
void set_addition_law_mutation(AdditionLawMutation m);
AdditionLawMutation addition_law_mutation();

}  // namespace h10m::curve
