#pragma once

#include "h10m/curve/endo.hpp"
#include "h10m/series/series.hpp"

namespace h10m::curve {

// f(δ, z)·y² − f(δ, x)
RatFunc check_md(const RatFunc& x, const RatFunc& y);
// f̃(z)·y² − f̃(x)
RatFunc check_md_tilde(const RatFunc& x, const RatFunc& y);

// ∂xₙ/∂z − n·yₙ
RatFunc check_wellknown(int n, EndoTable& table = shared_endo_table());

struct ProductResiduals {
  RatFunc product;        // x_{n+k}x_{n−k}(xₙ − x_k)² − (x_k·xₙ − 1)²
  RatFunc duplication;        // x_{2n}·4(xₙ + δ + xₙ⁻¹) − (xₙ − xₙ⁻¹)²
  RatFunc product_tilde;  // the same on the nodal specializations
  RatFunc duplication_tilde;
  bool all_zero() const { return product.is_zero() && duplication.is_zero() && product_tilde.is_zero() && duplication_tilde.is_zero(); }
};

// Needs n ≥ 2 and 1 ≤ k < n.
ProductResiduals check_product_formulas(int n, int k, EndoTable& table = shared_endo_table());

// [(3z² + 2δz + 1)y + 2f·y_z]·y − x_z(3x² + 2δx + 1) at (xₙ, yₙ)
RatFunc check_mariac(int n, EndoTable& table = shared_endo_table());

// eₙ = xₙ/x̃ₙ expanded in (δ + 2) with coefficients in ℚ(z).
series::FuncSeries check_quotienttilde(int n, int order, EndoTable& table = shared_endo_table());

}  // namespace h10m::curve
