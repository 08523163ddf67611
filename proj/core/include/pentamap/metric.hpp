#pragma once

// The bag-of-edges metric in intrinsic form (pairwise phase-rate sum) and in
// chart form (the E, F, G rational functions of x = tan(xi/2), y = tan(eta/2)),
// the Brioschi Gaussian curvature from exact rational partials, and the
// Grassmannian-cover comparison with its factor of 8.

#include <array>

#include "pentamap/pentagon.hpp"
#include "pentamap/polyrat.hpp"

namespace pentamap {

struct TangentVector {
  std::array<double, 5> dtheta;
};

// Linearized closure residual: max of |sum r_k cos(theta_k) dtheta_k| and
// |sum r_k sin(theta_k) dtheta_k| for r_k = 1/5.
double tangent_closure_residual(const Pentagon& p, const TangentVector& v);

// Project an arbitrary dtheta onto the closure-preserving subspace at p.
TangentVector project_closed(const Pentagon& p, const std::array<double, 5>& dtheta);

// sum_{i<j} r_i r_j (dtheta_j - dtheta_i)^2.
double bag_length_sq(const std::array<double, 5>& r, const TangentVector& v);
// Expansion form (sum r)(sum r dtheta^2) - (sum r dtheta)^2; algebraic twin.
double bag_length_sq_expansion(const std::array<double, 5>& r, const TangentVector& v);

struct FirstFundamentalForm {
  double E, F, G;
  double det() const { return E * G - F * F; }
};

// Stored chart forms (exact integer-coefficient rationals).
const BiRat& form_Q();
const BiRat& form_E();
const BiRat& form_F();
const BiRat& form_G();

// E, F, G at Weierstrass coordinates (x, y). Throws OutsideRegion when Q <= 0.
FirstFundamentalForm fff(double x, double y);

// Complex-continued evaluation (no region check); used by the Beltrami solver.
struct ComplexForm {
  cplx E, F, G;
};
ComplexForm fff_complex(cplx x, cplx y);

// Pullback of the form under a rotation of the (xi, eta) chart by `angle`
// (unit Jacobian; at angle 0 this reproduces fff exactly).
class RotatedForm {
 public:
  explicit RotatedForm(double angle);
  // (a, b) are coordinates along the rotated axes.
  FirstFundamentalForm at(double a, double b) const;
  double angle() const { return angle_; }

 private:
  double angle_, c_, s_;
};

// Gaussian curvature via the Brioschi determinant formula, with all first and
// second partials of E, F, G taken exactly through polyrat. Throws
// OutsideRegion when Q <= 0.
double gaussian_curvature(double x, double y);
double gaussian_curvature_coords(double xi, double eta);

// dtheta/dt of the chart map along (dxi, deta) by Richardson-extrapolated
// central differences of pentagon_from_coords. Throws OutsideRegion.
TangentVector coord_pushforward(const AngleCoords& c, double dxi, double deta);

// Squared Grassmannian length of a closed tangent at p (perimeter-2
// convention internally, r_k = 2/5): squared Frobenius norm of the
// projections of du and dv into the orthogonal complement of span(u, v).
double grassmann_length_sq(const Pentagon& p, const TangentVector& v,
                           const std::array<int, 5>& sigma = {1, 1, 1, 1, 1});

} // namespace pentamap
