#pragma once

// Exact bivariate polynomials and rational functions with integer
// coefficients. Coefficients are GMP integers and are never rounded;
// evaluation (double or complex) is the only lossy step. There is no GCD
// reduction: these are evaluation-only objects.

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "pentamap/angles.hpp"

namespace pentamap {

class BiPoly {
 public:
  BiPoly() : nx_(0), ny_(0) {}

  // Dense coefficient grid, c[i][j] multiplies x^i y^j.
  static BiPoly from_terms(std::initializer_list<std::tuple<int, int, long>> terms);
  static BiPoly constant(long c);

  int deg_x() const { return nx_ - 1; }
  int deg_y() const { return ny_ - 1; }
  bool is_zero() const { return nx_ == 0; }

  const mpz_class& coeff(int i, int j) const;
  void set_coeff(int i, int j, mpz_class c);

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;

  BiPoly partial(char var) const;  // 'x' or 'y'

  cplx eval(cplx x, cplx y) const;
  double eval(double x, double y) const;

  // Term-by-term evaluation (no Horner); test oracle for eval().
  double eval_direct(double x, double y) const;

  void trim();

 private:
  int nx_, ny_;                       // grid dims (deg+1)
  std::vector<mpz_class> c_;          // row-major, c_[i*ny_+j]
  mutable std::vector<double> cd_;    // lazy double image of c_ for eval
  void ensure_double_cache() const;
  mpz_class& at(int i, int j);
  const mpz_class& at(int i, int j) const;
  friend class BiRat;
};

// num/den pair; den must not be identically zero.
class BiRat {
 public:
  BiRat() = default;
  BiRat(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  // Horner-evaluated num/den. Throws PoleHit when |den| < 1e-300.
  cplx eval(cplx x, cplx y) const;
  double eval_real(double x, double y) const;

  // Exact quotient-rule derivative (num' den - num den', den^2).
  BiRat partial(char var) const;

  // d/dxi = ((1+x^2)/2) d/dx and d/deta = ((1+y^2)/2) d/dy,
  // for forms written in x = tan(xi/2), y = tan(eta/2).
  BiRat partial_xi() const;
  BiRat partial_eta() const;

  BiRat operator*(const BiPoly& p) const;

 private:
  BiPoly num_, den_;
};

} // namespace pentamap
