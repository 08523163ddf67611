#include "pentamap/pentagon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace pentamap {

namespace {

std::array<double, 5> wrapped(const std::array<double, 5>& ph) {
  std::array<double, 5> r;
  for (int k = 0; k < 5; ++k) r[k] = wrap_2pi(ph[k]);
  return r;
}

cplx edge_sum(const std::array<double, 5>& ph) {
  cplx s{0.0, 0.0};
  for (double t : ph) s += cplx{std::cos(t), std::sin(t)};
  return s;
}

bool is_collinear(const std::array<double, 5>& ph, double tol) {
  for (int k = 1; k < 5; ++k) {
    double d = circ_dist(ph[k], ph[0]);
    if (d > tol && std::abs(d - pi) > tol) return false;
  }
  return true;
}

} // namespace

Pentagon pentagon_unchecked(const std::array<double, 5>& phases, Convention conv) {
  Pentagon p;
  p.phases_ = wrapped(phases);
  p.conv_ = conv;
  return p;
}

Pentagon Pentagon::from_phases(const std::array<double, 5>& phases, Convention conv,
                               double closure_tol, double phase_sum) {
  auto ph = wrapped(phases);
  if (is_collinear(ph, 1e-9))
    throw NoPentagon("collinear phase set: no equilateral pentagon is collinear");
  double res = std::abs(edge_sum(ph));
  if (res > closure_tol)
    throw NoPentagon("closure residual " + std::to_string(res) + " exceeds tolerance");
  return pentagon_unchecked(ph, conv).canonicalized(conv, phase_sum);
}

Pentagon Pentagon::canonicalized(Convention conv, double phase_sum) const {
  std::array<double, 5> ph = phases_;
  if (conv == Convention::Theta3Zero) {
    double rot = -ph[2];
    for (auto& t : ph) t = wrap_2pi(t + rot);
  } else {
    double sum = 0.0;
    for (double t : ph) sum += t;
    double rot = wrap_2pi(phase_sum - sum) / 5.0;  // in [0, 2pi/5)
    for (auto& t : ph) t = wrap_2pi(t + rot);
  }
  return pentagon_unchecked(ph, conv);
}

double closure_residual(const Pentagon& p) { return std::abs(edge_sum(p.phases())); }

std::array<double, 5> vertex_angles(const Pentagon& p) {
  const auto& th = p.phases();
  std::array<double, 5> tau;
  for (int k = 0; k < 5; ++k) tau[k] = wrap_pi(th[(k + 1) % 5] - th[k]);
  return tau;
}

double radicand_Q(double x, double y) {
  double x2 = x * x, y2 = y * y, x4 = x2 * x2, y4 = y2 * y2;
  return 15.0 + 22.0 * x2 + 22.0 * y2 - 9.0 * x4 + 60.0 * x2 * y2 - 9.0 * y4 +
         6.0 * x4 * y2 + 6.0 * x2 * y4 - x4 * y4;
}

namespace {

// Root of A t^2 - 2u t + C selected by sign s in t = (u + s*sqrtQ)/A,
// where Q = u^2 - A*C. Product-of-roots form avoids the cancellation when
// u and s*sqrtQ have opposite signs (and covers small A).
double stable_quad_root(double A, double u, double sv, double C) {
  double num = u + sv;
  if ((u >= 0.0) == (sv >= 0.0) || sv == 0.0) {
    return num / A;
  }
  return C / (u - sv);
}

} // namespace

Pentagon pentagon_from_coords(const AngleCoords& c) {
  if (std::abs(std::abs(wrap_pi(c.xi)) - pi) < 1e-12 ||
      std::abs(std::abs(wrap_pi(c.eta)) - pi) < 1e-12)
    throw NoPentagon("chart pole: xi or eta at pi (collapsed ditri point)");
  double x = std::tan(c.xi / 2.0), y = std::tan(c.eta / 2.0);
  double Q = radicand_Q(x, y);
  if (Q < 0.0) throw NoPentagon("outside moduli space (Q<0)");
  double s = (c.sheet == Sheet::Plus) ? 1.0 : -1.0;
  double sq = s * std::sqrt(Q);
  double x2 = x * x, y2 = y * y;

  // t2 solves the nonadjacent-triple relation as a quadratic; likewise t3
  // with x and y swapped. Same sign choice in both numerators.
  double t2 = stable_quad_root((1.0 + x2) * (y2 - 3.0), 4.0 * x * (1.0 + y2), sq,
                               5.0 + 9.0 * y2 - 3.0 * x2 + x2 * y2);
  double t3 = stable_quad_root((1.0 + y2) * (x2 - 3.0), 4.0 * y * (1.0 + x2), sq,
                               5.0 + 9.0 * x2 - 3.0 * y2 + x2 * y2);

  double tau2 = 2.0 * std::atan(t2);
  double tau3 = 2.0 * std::atan(t3);

  std::array<double, 5> th;
  th[2] = 0.0;
  th[3] = tau3;
  th[4] = th[3] + c.eta;
  th[1] = -tau2;
  th[0] = th[1] - c.xi;
  Pentagon p = pentagon_unchecked(th);
  if (closure_residual(p) > kClosureTol)
    throw InternalError("reconstruction closure residual above 1e-10");
  return p;
}

AngleCoords coords_of(const Pentagon& p) {
  auto tau = vertex_angles(p);
  if (std::abs(std::abs(tau[0]) - pi) < 1e-12 || std::abs(std::abs(tau[3]) - pi) < 1e-12)
    throw TangentPole("tau1 or tau4 at pi: chart coordinates undefined");
  double x = std::tan(tau[0] / 2.0), y = std::tan(tau[3] / 2.0);
  double Q = radicand_Q(x, y);
  double best = std::numeric_limits<double>::infinity();
  Sheet sheet = Sheet::Minus;
  double x2 = x * x, y2 = y * y;
  for (Sheet sh : {Sheet::Minus, Sheet::Plus}) {
    double sq = (sh == Sheet::Plus ? 1.0 : -1.0) * std::sqrt(std::max(Q, 0.0));
    double t2 = stable_quad_root((1.0 + x2) * (y2 - 3.0), 4.0 * x * (1.0 + y2), sq,
                                 5.0 + 9.0 * y2 - 3.0 * x2 + x2 * y2);
    double d = circ_dist(tau[1], 2.0 * std::atan(t2));
    if (d < best) {
      best = d;
      sheet = sh;
    }
  }
  return AngleCoords{tau[0], tau[3], sheet};
}

double trivariate_adjacent(double t1, double t2, double t3) {
  return 15.0 + 3.0 * t1 * t1 - t2 * t2 + 3.0 * t3 * t3 - 16.0 * t1 * t2 -
         8.0 * t1 * t3 - 16.0 * t2 * t3 + 3.0 * t1 * t1 * t2 * t2 -
         t1 * t1 * t3 * t3 + 3.0 * t2 * t2 * t3 * t3 + 8.0 * t1 * t2 * t2 * t3 -
         t1 * t1 * t2 * t2 * t3 * t3;
}

double trivariate_nonadjacent(double t1, double t3, double t4) {
  return 5.0 + 9.0 * t1 * t1 - 3.0 * t3 * t3 - 8.0 * t3 * t4 - 3.0 * t4 * t4 +
         t1 * t1 * t3 * t3 - 8.0 * t1 * t1 * t3 * t4 + t1 * t1 * t4 * t4 -
         3.0 * t3 * t3 * t4 * t4 + t1 * t1 * t3 * t3 * t4 * t4;
}

std::pair<double, double> trivariate_residuals(const Pentagon& p) {
  auto tau = vertex_angles(p);
  std::array<double, 5> t;
  for (int k = 0; k < 5; ++k) {
    if (std::abs(std::abs(tau[k]) - pi) < 1e-12)
      throw TangentPole("tau_k at pi: Weierstrass transform has a pole");
    t[k] = std::tan(tau[k] / 2.0);
  }
  return {trivariate_adjacent(t[0], t[1], t[2]),
          trivariate_nonadjacent(t[0], t[2], t[3])};
}

Isometry Isometry::reflection() {
  Isometry iso;
  iso.reflect = true;
  return iso;
}

Isometry Isometry::short_swap(int i, int j) {
  Isometry iso;
  std::swap(iso.perm[i], iso.perm[j]);
  return iso;
}

Isometry Isometry::hyplong_swap(int i1, int j1, int i2, int j2) {
  Isometry iso;
  std::swap(iso.perm[i1], iso.perm[j1]);
  std::swap(iso.perm[i2], iso.perm[j2]);
  iso.reflect = true;
  return iso;
}

Isometry Isometry::inverse() const {
  Isometry inv;
  for (int k = 0; k < 5; ++k) inv.perm[perm[k]] = k;
  inv.reflect = reflect;
  return inv;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  Isometry r;
  for (int k = 0; k < 5; ++k) r.perm[k] = b.perm[a.perm[k]];
  r.reflect = a.reflect != b.reflect;
  return r;
}

Pentagon apply_isometry(const Isometry& iso, const Pentagon& p) {
  const auto& th = p.phases();
  std::array<double, 5> out;
  for (int k = 0; k < 5; ++k) {
    double v = th[iso.perm[k]];
    out[k] = iso.reflect ? -v : v;
  }
  return pentagon_unchecked(out).canonicalized(p.convention());
}

double fixed_residual(const Isometry& iso, const Pentagon& p) {
  const auto& th = p.phases();
  std::array<double, 5> im;
  for (int k = 0; k < 5; ++k) {
    double v = th[iso.perm[k]];
    im[k] = iso.reflect ? -v : v;
  }
  auto dist2 = [&](double rho) {
    double s = 0.0;
    for (int k = 0; k < 5; ++k) {
      double w = wrap_pi(im[k] + rho - th[k]);
      s += w * w;
    }
    return s;
  };
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 5; ++j) {
    double rho = wrap_pi(th[j] - im[j]);
    // Within a fixed branch the objective is quadratic in rho; a couple of
    // mean-shift iterations land on the local optimum.
    for (int it = 0; it < 3; ++it) {
      double m = 0.0;
      for (int k = 0; k < 5; ++k) m += wrap_pi(im[k] + rho - th[k]);
      rho -= m / 5.0;
    }
    best = std::min(best, dist2(rho));
  }
  return std::sqrt(best);
}

std::array<Isometry, 10> all_short_swaps() {
  std::array<Isometry, 10> r;
  int n = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) r[n++] = Isometry::short_swap(i, j);
  return r;
}

std::array<Isometry, 15> all_hyplong_swaps() {
  std::array<Isometry, 15> r;
  int n = 0;
  for (int skip = 0; skip < 5; ++skip) {
    int a[4], m = 0;
    for (int k = 0; k < 5; ++k)
      if (k != skip) a[m++] = k;
    // three pairings of the four remaining edges
    r[n++] = Isometry::hyplong_swap(a[0], a[1], a[2], a[3]);
    r[n++] = Isometry::hyplong_swap(a[0], a[2], a[1], a[3]);
    r[n++] = Isometry::hyplong_swap(a[0], a[3], a[1], a[2]);
  }
  return r;
}

Isometry tract_short_swap() { return Isometry::short_swap(0, 1); }
Isometry tract_hyp_swap() { return Isometry::hyplong_swap(1, 3, 0, 4); }
Isometry tract_long_swap() { return Isometry::hyplong_swap(0, 1, 2, 4); }

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::RegularPentagon: return "regular pentagon";
    case Shape::RegularPentagram: return "regular pentagram";
    case Shape::Crown: return "crown";
    case Shape::Rocket: return "rocket";
    case Shape::VBar: return "V-bar";
    case Shape::WBar: return "W-bar";
    case Shape::Pinwheel: return "pinwheel";
    case Shape::Trapezoid: return "trapezoid";
    case Shape::TripledEdge: return "tripled edge";
    case Shape::RisingFlag: return "rising flag";
    case Shape::FallingFlag: return "falling flag";
    case Shape::RisingAxe: return "rising axe";
    case Shape::FallingAxe: return "falling axe";
  }
  return "?";
}

namespace {

struct ShapeTemplate {
  Shape shape;
  std::array<double, 5> tau;  // sorted
};

std::array<double, 5> sorted_negated(const std::array<double, 5>& tau) {
  std::array<double, 5> r;
  for (int k = 0; k < 5; ++k) r[k] = wrap_pi(-tau[k]);
  std::sort(r.begin(), r.end());
  return r;
}

bool multiset_match(const std::array<double, 5>& a, const std::array<double, 5>& b,
                    double tol) {
  for (int k = 0; k < 5; ++k)
    if (std::abs(a[k] - b[k]) > tol) return false;
  return true;
}

std::array<double, 5> tau_multiset(std::initializer_list<double> deg) {
  std::array<double, 5> r;
  int k = 0;
  for (double d : deg) r[k++] = deg2rad(d);
  std::sort(r.begin(), r.end());
  return r;
}

const std::vector<ShapeTemplate>& shape_templates() {
  static const std::vector<ShapeTemplate> tmpl = [] {
    const double delta = rad2deg(std::acos(-7.0 / 8.0));  // 151.0449...
    const double c1 = 180.0 - delta / 2.0;                // 104.4775...
    std::vector<ShapeTemplate> v;
    v.push_back({Shape::RegularPentagon, tau_multiset({72, 72, 72, 72, 72})});
    v.push_back({Shape::RegularPentagram, tau_multiset({144, 144, 144, 144, 144})});
    v.push_back({Shape::Crown, tau_multiset({-72, 72, 72, 144, 144})});
    v.push_back({Shape::Rocket, tau_multiset({-144, -144, 72, 72, 144})});
    v.push_back({Shape::VBar, tau_multiset({0, 0, c1, c1, delta})});
    v.push_back({Shape::WBar, tau_multiset({-delta, c1, c1, delta, delta})});
    v.push_back({Shape::Pinwheel, tau_multiset({-delta, -c1, 0, c1, delta})});
    v.push_back({Shape::Trapezoid, tau_multiset({0, 60, 60, 120, 120})});
    v.push_back({Shape::TripledEdge, tau_multiset({120, 120, 120, 180, 180})});
    // Rising and falling flags share one multiset per chirality; likewise the
    // axes across chiralities. The doubled-edge rule below separates them.
    v.push_back({Shape::RisingFlag, tau_multiset({-60, 0, 120, 120, 180})});
    v.push_back({Shape::RisingAxe, tau_multiset({-120, -120, -60, 120, 180})});
    v.push_back({Shape::FallingAxe, tau_multiset({-120, 60, 120, 120, 180})});
    return v;
  }();
  return tmpl;
}

// Fig.-6 naming rule for flags and axes: locate the doubled edge (the
// handle), find the triangle edge parallel to it, and test whether that
// edge's direction points away from the handle (rising) or toward it.
bool parallel_edge_points_away(const Pentagon& p, double tol) {
  const auto& th = p.phases();
  auto tau = vertex_angles(p);
  int k = -1;
  for (int i = 0; i < 5; ++i)
    if (std::abs(std::abs(tau[i]) - pi) < tol) k = i;
  if (k < 0) throw InternalError("flag/axe classification without a doubled edge");

  std::array<cplx, 5> V;
  V[0] = {0.0, 0.0};
  for (int i = 0; i < 4; ++i) V[i + 1] = V[i] + cplx{std::cos(th[i]), std::sin(th[i])};
  auto vat = [&](int i) { return V[((i % 5) + 5) % 5]; };

  cplx handle_mid = 0.5 * (vat(k) + vat(k + 1));
  int par = -1;
  double best = 1e9;
  for (int j = 0; j < 5; ++j) {
    if (j == k || j == (k + 1) % 5) continue;
    double d = std::abs(wrap_pi(2.0 * (th[j] - th[k])));  // 0 iff parallel mod pi
    if (d < best) {
      best = d;
      par = j;
    }
  }
  cplx mid_j = 0.5 * (vat(par) + vat(par + 1));
  cplx dir{std::cos(th[par]), std::sin(th[par])};
  double dot = (mid_j - handle_mid).real() * dir.real() +
               (mid_j - handle_mid).imag() * dir.imag();
  return dot > 0.0;
}

bool phases_match_fifth_roots(const std::array<double, 5>& th, double tol) {
  std::array<double, 5> s = th;
  std::sort(s.begin(), s.end());
  for (int k = 0; k < 5; ++k) {
    double gap = (k < 4) ? s[k + 1] - s[k] : two_pi - (s[4] - s[0]);
    if (std::abs(gap - two_pi / 5.0) > tol) return false;
  }
  return true;
}

bool phases_match_two_pairs(const std::array<double, 5>& th, double tol) {
  int pair_count = 0;
  std::array<bool, 5> used{};
  for (int i = 0; i < 5; ++i) {
    if (used[i]) continue;
    for (int j = i + 1; j < 5; ++j) {
      if (used[j]) continue;
      if (circ_dist(th[i], th[j]) < tol) {
        used[i] = used[j] = true;
        ++pair_count;
        break;
      }
    }
  }
  return pair_count == 2;
}

// Square and cube roots of unity superposed: a digon pair {a, a+pi} and a
// triangle triple {b, b+2pi/3, b+4pi/3} with a and b coincident.
bool phases_match_square_cube(const std::array<double, 5>& th, double tol) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      if (std::abs(wrap_pi(th[j] - th[i] - pi)) > tol) continue;
      int tri[3], m = 0;
      for (int k = 0; k < 5; ++k)
        if (k != i && k != j) tri[m++] = k;
      std::array<double, 3> rel;
      for (int k = 0; k < 3; ++k) rel[k] = wrap_2pi(th[tri[k]] - th[tri[0]]);
      std::sort(rel.begin(), rel.end());
      bool is_tri = rel[0] < tol && std::abs(rel[1] - two_pi / 3.0) < tol &&
                    std::abs(rel[2] - 2.0 * two_pi / 3.0) < tol;
      if (!is_tri) continue;
      bool anchored = false;
      for (int k = 0; k < 3; ++k)
        if (circ_dist(th[tri[k]], th[i]) < tol || circ_dist(th[tri[k]], th[j]) < tol)
          anchored = true;
      if (anchored) return true;
    }
  return false;
}

} // namespace

VertexClass classify(const Pentagon& p, double tol) {
  VertexClass out;
  const auto& th = p.phases();
  if (phases_match_fifth_roots(th, tol)) out.kind = VertexKind::Pi5;
  else if (phases_match_two_pairs(th, tol)) out.kind = VertexKind::Pi4;
  else if (phases_match_square_cube(th, tol)) out.kind = VertexKind::Pi2;
  else return out;

  auto tau = vertex_angles(p);
  std::array<double, 5> sorted_tau = tau;
  std::sort(sorted_tau.begin(), sorted_tau.end());
  for (const auto& t : shape_templates()) {
    bool ccw = multiset_match(sorted_tau, t.tau, tol);
    bool cw = !ccw && multiset_match(sorted_tau, sorted_negated(t.tau), tol);
    if (!ccw && !cw) continue;
    Shape s = t.shape;
    if (s == Shape::RisingFlag || s == Shape::RisingAxe || s == Shape::FallingAxe) {
      bool away = parallel_edge_points_away(p, tol);
      bool flag = (s == Shape::RisingFlag);
      s = flag ? (away ? Shape::RisingFlag : Shape::FallingFlag)
               : (away ? Shape::RisingAxe : Shape::FallingAxe);
    }
    out.shape = s;
    return out;
  }
  return out;
}

std::optional<EdgePartition> is_decomposable(const Pentagon& p, double tol) {
  const auto& th = p.phases();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (std::abs(wrap_pi(th[j] - th[i] - pi)) > tol &&
          std::abs(wrap_pi(th[i] - th[j] - pi)) > tol)
        continue;
      EdgePartition part;
      part.digon = {i, j};
      int m = 0;
      for (int k = 0; k < 5; ++k)
        if (k != i && k != j) part.triangle[m++] = k;
      return part;
    }
  return std::nullopt;
}

double decomposability_residual(const Pentagon& p) {
  const auto& th = p.phases();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      best = std::min(best, std::abs(wrap_pi(th[j] - th[i] - pi)));
  return best;
}

Pentagon vbar_pentagon() {
  double delta = std::acos(-7.0 / 8.0);
  double c = delta / 2.0 - pi;
  return pentagon_unchecked({delta, delta, c, 0.0, 0.0}).canonicalized(Convention::Theta3Zero);
}

Pentagon trapezoid_pentagon() {
  return pentagon_unchecked({0.0, 0.0, two_pi / 3.0, pi, 2.0 * two_pi / 3.0})
      .canonicalized(Convention::Theta3Zero);
}

Pentagon regular_pentagon_ccw() {
  return pentagon_unchecked({0.0, 0.4 * pi, 0.8 * pi, 1.2 * pi, 1.6 * pi})
      .canonicalized(Convention::Theta3Zero);
}

Pentagon regular_pentagram_ccw() {
  return pentagon_unchecked({0.0, 0.8 * pi, 1.6 * pi, 0.4 * pi, 1.2 * pi})
      .canonicalized(Convention::Theta3Zero);
}

Pentagon childs_house_pentagon() {
  return pentagon_unchecked({0.0, pi / 6.0, two_pi / 3.0, 7.0 * pi / 6.0, 2.0 * two_pi / 3.0})
      .canonicalized(Convention::Theta3Zero);
}

} // namespace pentamap
