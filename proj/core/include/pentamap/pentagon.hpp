#pragma once

// Unit-perimeter equilateral pentagons: representation by edge phases,
// reconstruction from the naive (xi, eta) vertex-angle chart, the
// S5 x C2 isometry action, and classification of the special shapes
// that sit at tract vertices.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "pentamap/angles.hpp"
#include "pentamap/errors.hpp"

namespace pentamap {

inline constexpr double kClosureTol = 1e-10;

enum class Convention { Theta3Zero, PhaseSum };

class Pentagon {
 public:
  // Validates closure and non-collinearity, then canonicalizes.
  static Pentagon from_phases(const std::array<double, 5>& phases,
                              Convention conv = Convention::Theta3Zero,
                              double closure_tol = kClosureTol,
                              double phase_sum = 0.0);

  const std::array<double, 5>& phases() const { return phases_; }
  Convention convention() const { return conv_; }

  // Pentagon rotated so theta3 = 0, or so the phase sum hits `phase_sum`.
  Pentagon canonicalized(Convention conv, double phase_sum = 0.0) const;

 private:
  Pentagon() = default;
  std::array<double, 5> phases_{};  // radians, each in [0, 2pi)
  Convention conv_ = Convention::Theta3Zero;
  friend Pentagon pentagon_unchecked(const std::array<double, 5>&, Convention);
};

// Internal: skip validation (closure known analytically).
Pentagon pentagon_unchecked(const std::array<double, 5>& phases,
                            Convention conv = Convention::Theta3Zero);

// |sum_k e^{i theta_k}|, dimensionless (edge lengths cancel).
double closure_residual(const Pentagon& p);

// tau_k = theta_{k+1} - theta_k reduced to (-pi, pi], indices mod 5.
std::array<double, 5> vertex_angles(const Pentagon& p);

enum class Sheet : int { Plus = +1, Minus = -1 };

struct AngleCoords {
  double xi;    // tau_1, radians
  double eta;   // tau_4, radians
  Sheet sheet;  // Minus selects the convex-and-CCW branch near xi=eta=2pi/5
};

// The 9-term radicand polynomial of the two-valued reconstruction.
double radicand_Q(double x, double y);

// Reconstruct the pentagon with theta3 = 0 from chart coordinates.
// Throws NoPentagon when Q < 0 or the chart is degenerate (xi or eta = pi).
Pentagon pentagon_from_coords(const AngleCoords& c);

// Chart coordinates (and sheet) of a pentagon. tau_1, tau_4 are read off
// directly; the sheet is the branch whose reconstructed tau_2 matches.
AngleCoords coords_of(const Pentagon& p);

// Both trivariate residuals (adjacent triple tau1,tau2,tau3 and nonadjacent
// triple tau1,tau3,tau4) at t_k = tan(tau_k/2). Zero on true pentagons.
// Throws TangentPole if some |tau_k| = pi.
std::pair<double, double> trivariate_residuals(const Pentagon& p);

// Term-by-term forms of the two trivariate relations; residual oracles.
double trivariate_adjacent(double t1, double t2, double t3);
double trivariate_nonadjacent(double t1, double t3, double t4);

struct Isometry {
  std::array<int, 5> perm{0, 1, 2, 3, 4};  // theta'_k = s * theta_{perm[k]}
  bool reflect = false;

  static Isometry identity() { return {}; }
  static Isometry reflection();
  // Swap the phases of edges i and j (0-based), no reflection.
  static Isometry short_swap(int i, int j);
  // Swap two disjoint pairs and reflect.
  static Isometry hyplong_swap(int i1, int j1, int i2, int j2);

  Isometry inverse() const;
  bool operator==(const Isometry&) const = default;
};

// apply(a, apply(b, p)) == apply(compose(a, b), p)
Isometry compose(const Isometry& a, const Isometry& b);

// Phases reindexed by perm, negated if reflect, then re-canonicalized.
Pentagon apply_isometry(const Isometry& iso, const Pentagon& p);

// min over rigid rotation rho of the wrapped phase-vector distance between
// apply_isometry(iso, p) rotated by rho and p. Zero exactly on the fixed locus.
double fixed_residual(const Isometry& iso, const Pentagon& p);

// All 25 self-inverse swaps with fixed loci: 10 short swaps and 15
// hyplong swaps (5 each of disjoint / crossing / nested type).
std::array<Isometry, 10> all_short_swaps();
std::array<Isometry, 15> all_hyplong_swaps();

// The three swaps fixing the sides of the fundamental tract T_in:
// short leg xi = 0, hypotenuse xi = eta, and the curved long leg.
Isometry tract_short_swap();    // (R,O)
Isometry tract_hyp_swap();      // (O,B)(R,P) + reflect, nested around edge 3
Isometry tract_long_swap();     // (R,O)(G,P) + reflect, nested around edge 4

enum class VertexKind { Pi5, Pi4, Pi2, Generic };

enum class Shape {
  RegularPentagon, RegularPentagram, Crown, Rocket,       // pi/5 vertices
  VBar, WBar, Pinwheel,                                   // pi/4 vertices
  Trapezoid, TripledEdge, RisingFlag, FallingFlag,        // pi/2 vertices
  RisingAxe, FallingAxe,
};

const char* shape_name(Shape s);

struct VertexClass {
  VertexKind kind = VertexKind::Generic;
  std::optional<Shape> shape;
};

VertexClass classify(const Pentagon& p, double tol = 1e-6);

// Edge partition of a decomposable (ditri) pentagon: the digon pair and the
// triangle triple, detected when two phases differ by pi within tol.
struct EdgePartition {
  std::array<int, 2> digon;
  std::array<int, 3> triangle;
};
std::optional<EdgePartition> is_decomposable(const Pentagon& p, double tol = 1e-9);

// Residual of the best near-pi phase difference (how far from decomposable).
double decomposability_residual(const Pentagon& p);

// Reference pentagons at the corners of T_in.
Pentagon vbar_pentagon();            // pi/4 corner, at (xi,eta) = (0,0)
Pentagon trapezoid_pentagon();       // pi/2 corner, at (0, pi/3)
Pentagon regular_pentagon_ccw();     // pi/5 corner, at (2pi/5, 2pi/5)
Pentagon regular_pentagram_ccw();
Pentagon childs_house_pentagon();    // two adjacent right angles, at (pi/6, pi/6)

} // namespace pentamap
