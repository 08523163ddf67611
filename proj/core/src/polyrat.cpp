#include "pentamap/polyrat.hpp"

#include <algorithm>
#include <stdexcept>

#include "pentamap/errors.hpp"

namespace pentamap {

mpz_class& BiPoly::at(int i, int j) { return c_[static_cast<size_t>(i) * ny_ + j]; }
const mpz_class& BiPoly::at(int i, int j) const { return c_[static_cast<size_t>(i) * ny_ + j]; }

BiPoly BiPoly::from_terms(std::initializer_list<std::tuple<int, int, long>> terms) {
  int nx = 0, ny = 0;
  for (auto& [i, j, c] : terms) {
    nx = std::max(nx, i + 1);
    ny = std::max(ny, j + 1);
  }
  BiPoly p;
  p.nx_ = nx;
  p.ny_ = ny;
  p.c_.assign(static_cast<size_t>(nx) * ny, mpz_class(0));
  for (auto& [i, j, c] : terms) p.at(i, j) += c;
  p.trim();
  return p;
}

BiPoly BiPoly::constant(long c) { return from_terms({{0, 0, c}}); }

const mpz_class& BiPoly::coeff(int i, int j) const {
  static const mpz_class zero(0);
  if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return zero;
  return at(i, j);
}

void BiPoly::set_coeff(int i, int j, mpz_class c) {
  if (i >= nx_ || j >= ny_) {
    int nx = std::max(nx_, i + 1), ny = std::max(ny_, j + 1);
    std::vector<mpz_class> nc(static_cast<size_t>(nx) * ny, mpz_class(0));
    for (int a = 0; a < nx_; ++a)
      for (int b = 0; b < ny_; ++b) nc[static_cast<size_t>(a) * ny + b] = at(a, b);
    c_ = std::move(nc);
    nx_ = nx;
    ny_ = ny;
  }
  at(i, j) = std::move(c);
  cd_.clear();
}

void BiPoly::trim() {
  cd_.clear();
  int nx = 0, ny = 0;
  for (int i = 0; i < nx_; ++i)
    for (int j = 0; j < ny_; ++j)
      if (at(i, j) != 0) {
        nx = std::max(nx, i + 1);
        ny = std::max(ny, j + 1);
      }
  if (nx == nx_ && ny == ny_) return;
  std::vector<mpz_class> nc(static_cast<size_t>(nx) * ny, mpz_class(0));
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) nc[static_cast<size_t>(i) * ny + j] = at(i, j);
  c_ = std::move(nc);
  nx_ = nx;
  ny_ = ny;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r;
  r.nx_ = std::max(nx_, o.nx_);
  r.ny_ = std::max(ny_, o.ny_);
  r.c_.assign(static_cast<size_t>(r.nx_) * r.ny_, mpz_class(0));
  for (int i = 0; i < r.nx_; ++i)
    for (int j = 0; j < r.ny_; ++j) r.at(i, j) = coeff(i, j) + o.coeff(i, j);
  r.trim();
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.c_) c = -c;
  r.cd_.clear();
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (is_zero() || o.is_zero()) return BiPoly();
  BiPoly r;
  r.nx_ = nx_ + o.nx_ - 1;
  r.ny_ = ny_ + o.ny_ - 1;
  if (r.nx_ > 65 || r.ny_ > 65)
    throw InternalError("BiPoly degree bound (64) exceeded");
  r.c_.assign(static_cast<size_t>(r.nx_) * r.ny_, mpz_class(0));
  for (int i = 0; i < nx_; ++i)
    for (int j = 0; j < ny_; ++j) {
      if (at(i, j) == 0) continue;
      for (int a = 0; a < o.nx_; ++a)
        for (int b = 0; b < o.ny_; ++b) {
          if (o.at(a, b) == 0) continue;
          r.at(i + a, j + b) += at(i, j) * o.at(a, b);
        }
    }
  r.trim();
  return r;
}

BiPoly BiPoly::partial(char var) const {
  BiPoly r;
  if (var == 'x') {
    if (nx_ <= 1) return BiPoly();
    r.nx_ = nx_ - 1;
    r.ny_ = ny_;
    r.c_.assign(static_cast<size_t>(r.nx_) * r.ny_, mpz_class(0));
    for (int i = 1; i < nx_; ++i)
      for (int j = 0; j < ny_; ++j) r.at(i - 1, j) = at(i, j) * i;
  } else {
    if (ny_ <= 1) return BiPoly();
    r.nx_ = nx_;
    r.ny_ = ny_ - 1;
    r.c_.assign(static_cast<size_t>(r.nx_) * r.ny_, mpz_class(0));
    for (int i = 0; i < nx_; ++i)
      for (int j = 1; j < ny_; ++j) r.at(i, j - 1) = at(i, j) * j;
  }
  r.trim();
  return r;
}

void BiPoly::ensure_double_cache() const {
  if (cd_.size() == c_.size() && !c_.empty()) return;
  cd_.resize(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) cd_[k] = c_[k].get_d();
}

cplx BiPoly::eval(cplx x, cplx y) const {
  if (is_zero()) return {0.0, 0.0};
  ensure_double_cache();
  cplx acc{0.0, 0.0};
  for (int i = nx_ - 1; i >= 0; --i) {
    cplx row{0.0, 0.0};
    const double* rc = &cd_[static_cast<size_t>(i) * ny_];
    for (int j = ny_ - 1; j >= 0; --j) row = row * y + rc[j];
    acc = acc * x + row;
  }
  return acc;
}

double BiPoly::eval(double x, double y) const {
  if (is_zero()) return 0.0;
  ensure_double_cache();
  double acc = 0.0;
  for (int i = nx_ - 1; i >= 0; --i) {
    double row = 0.0;
    const double* rc = &cd_[static_cast<size_t>(i) * ny_];
    for (int j = ny_ - 1; j >= 0; --j) row = row * y + rc[j];
    acc = acc * x + row;
  }
  return acc;
}

double BiPoly::eval_direct(double x, double y) const {
  double s = 0.0;
  for (int i = 0; i < nx_; ++i)
    for (int j = 0; j < ny_; ++j) {
      if (at(i, j) == 0) continue;
      s += at(i, j).get_d() * std::pow(x, i) * std::pow(y, j);
    }
  return s;
}

BiRat::BiRat(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InternalError("BiRat with zero denominator");
}

cplx BiRat::eval(cplx x, cplx y) const {
  cplx d = den_.eval(x, y);
  if (std::abs(d) < 1e-300) throw PoleHit("BiRat evaluation at a pole");
  return num_.eval(x, y) / d;
}

double BiRat::eval_real(double x, double y) const {
  double d = den_.eval(x, y);
  if (std::abs(d) < 1e-300) throw PoleHit("BiRat evaluation at a pole");
  return num_.eval(x, y) / d;
}

BiRat BiRat::partial(char var) const {
  return BiRat(num_.partial(var) * den_ - num_ * den_.partial(var), den_ * den_);
}

BiRat BiRat::partial_xi() const {
  static const BiPoly half_jac = BiPoly::from_terms({{0, 0, 1}, {2, 0, 1}});  // 1+x^2
  BiRat d = partial('x');
  return BiRat(half_jac * d.num_, BiPoly::constant(2) * d.den_);
}

BiRat BiRat::partial_eta() const {
  static const BiPoly half_jac = BiPoly::from_terms({{0, 0, 1}, {0, 2, 1}});  // 1+y^2
  BiRat d = partial('y');
  return BiRat(half_jac * d.num_, BiPoly::constant(2) * d.den_);
}

BiRat BiRat::operator*(const BiPoly& p) const { return BiRat(num_ * p, den_); }

} // namespace pentamap
