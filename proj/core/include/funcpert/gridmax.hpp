#pragma once

#include <Eigen/Core>
#include <complex>
#include <functional>

namespace funcpert {

using Complex = std::complex<double>;

namespace detail {

// Finite Fourier support on a lattice rectangle: the value at (t1, t2) is
//   sum_{k,m} a(k,m) e^{i (j1min+k) t1} e^{i (j2min+m) t2}.
// BiPolynomial is the j1min = j2min = 0 case; trigonometric polynomials with
// negative frequencies carry the extra phase factor.
struct FreqRect {
  int j1min = 0;
  int j2min = 0;
  Eigen::MatrixXcd a;  // (rows x cols) = frequency span per axis

  Complex eval(double t1, double t2) const;
};

struct GridScan {
  double max_abs = 0.0;
  int i1 = 0;
  int i2 = 0;
};

// Max of |f| over the uniform n1 x n2 grid t_k = 2*pi*k/n. Evaluation is
// separable Horner, O(n1*n2*rows + rows*n2*cols) instead of pointwise Horner.
GridScan scan_abs_max(const FreqRect& f, int n1, int n2);

// Fills |f| on the same grid (for L^p quadrature).
void eval_abs_grid(const FreqRect& f, int n1, int n2, Eigen::MatrixXd& out);

// Golden-section maximization of h on [lo, hi].
struct LineMax {
  double value;
  double arg;
};
LineMax golden_max(const std::function<double(double)>& h, double lo, double hi,
                   int iters = 80);

// Coordinatewise golden-section polish of a smooth 2*pi-periodic function
// around (t1, t2); brackets start at +-step per axis. Returns the best value
// found (never below g(t1, t2)).
double polish_max(const std::function<double(double, double)>& g, double t1,
                  double t2, double step1, double step2, int rounds = 4);

// Grid scan plus polish for an arbitrary smooth periodic function; used where
// pointwise evaluation is cheap (small families, low degrees).
double torus_max_smooth(const std::function<double(double, double)>& g, int n1,
                        int n2);

}  // namespace detail
}  // namespace funcpert
