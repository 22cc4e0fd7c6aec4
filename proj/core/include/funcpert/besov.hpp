#pragma once

#include <functional>
#include <map>
#include <vector>

#include "funcpert/bipoly.hpp"

namespace funcpert {

// Smooth cutoff w >= 0 supported on [1/2, 2] with w(s) + w(s/2) = 1 on
// [1, 2]; the generator of the dyadic partition of unity. Any evaluator
// satisfying those invariants is accepted; canonical() builds one from the
// exp-based smooth step.
class DyadicBump {
 public:
  static DyadicBump canonical();
  explicit DyadicBump(std::function<double(double)> w, bool validate = true);

  double operator()(double s) const { return w_(s); }

 private:
  std::function<double(double)> w_;
};

const DyadicBump& canonical_bump();

// Trigonometric polynomial on the 2-torus: finitely supported coefficients
// on the integer lattice.
class TrigPolynomial2D {
 public:
  using Key = std::array<int, 2>;
  using Map = std::map<Key, Complex>;

  TrigPolynomial2D() = default;

  static TrigPolynomial2D from_bipoly(const BiPolynomial& f);

  void set(int j1, int j2, Complex v);     // v == 0 erases the point
  void add(int j1, int j2, Complex v);
  Complex coeff(int j1, int j2) const;

  const Map& support() const { return c_; }
  bool empty() const { return c_.empty(); }
  std::size_t support_size() const { return c_.size(); }

  // max Euclidean |j| over the support (0 for the empty polynomial)
  double support_radius() const;
  // max |j1|, |j2| over the support
  int max_abs_index(int axis) const;

  Complex eval(double t1, double t2) const;

  TrigPolynomial2D operator+(const TrigPolynomial2D& g) const;
  TrigPolynomial2D operator-(const TrigPolynomial2D& g) const;
  TrigPolynomial2D operator*(Complex s) const;

  double coeff_l1() const;
  double max_coeff_diff(const TrigPolynomial2D& g) const;

 private:
  Map c_;
};

// Littlewood-Paley multiplier at frequency j for block n. For n >= 1 this is
// w(|j|/2^n); the n = 0 multiplier is the complement 1 - sum_{n>=1}, which
// makes the partition of unity exact at every lattice point (including the
// non-integer radii such as |j| = sqrt(2) that a hard cutoff would miss).
double lp_multiplier(int n, int j1, int j2, const DyadicBump& w = canonical_bump());

// Frequency-localized block: coefficients multiplied by lp_multiplier(n, .).
TrigPolynomial2D lp_block(const TrigPolynomial2D& f, int n,
                          const DyadicBump& w = canonical_bump());

// Number of blocks that can be nonzero: blocks n >= lp_block_count(f) vanish.
int lp_block_count(const TrigPolynomial2D& f);

// L^p(T^2) norm w.r.t. normalized measure; grid quadrature for p < inf
// (exact for p = 2), polished grid max for p = inf.
double lp_norm(const TrigPolynomial2D& f, double p);

double l2_norm_parseval(const TrigPolynomial2D& f);

SupNorm sup_norm_torus(const TrigPolynomial2D& f, int oversample = 8);

// l^q norm of the block sequence {2^{n s} ||f_n||_{L^p}}.
double besov_norm(const TrigPolynomial2D& f, double s, double p, double q,
                  const DyadicBump& w = canonical_bump());

// Holder-Zygmund norm of order alpha: besov_norm with (alpha, inf, inf).
double holder_norm(const TrigPolynomial2D& f, double alpha,
                   const DyadicBump& w = canonical_bump());

// True iff the Fourier support lies in the closed nonnegative quadrant.
bool is_analytic(const TrigPolynomial2D& f);

// Modulus of continuity: nondecreasing, vanishing at 0, subadditive. The
// power kind is t^alpha; the tabulated kind interpolates concave knot data
// linearly and continues constantly beyond the last knot.
class ModulusOfContinuity {
 public:
  enum class Kind { power, tabulated };

  static ModulusOfContinuity power(double alpha);
  static ModulusOfContinuity tabulated(std::vector<double> t, std::vector<double> w);

  double operator()(double t) const;
  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }

  double last_knot() const;
  double last_value() const;
  const std::vector<double>& knot_positions() const { return knots_t_; }

 private:
  ModulusOfContinuity() = default;
  Kind kind_ = Kind::power;
  double alpha_ = 0.5;
  std::vector<double> knots_t_, knots_w_;
};

// omega_*(s) = s * integral_s^inf omega(t) / t^2 dt. Closed form for the
// power kind (s^alpha / (1-alpha), alpha < 1; alpha = 1 diverges); segmented
// adaptive quadrature plus the constant-tail term for the tabulated kind.
double omega_star(const ModulusOfContinuity& omega, double s);

// Max of |f(x) - f(y)| / omega(max coordinate chordal distance) over all
// pairs of distinct points of a grid x grid torus mesh; a lower estimate of
// the seminorm, nondecreasing in grid.
double lambda_omega_seminorm(const TrigPolynomial2D& f, const ModulusOfContinuity& omega,
                             int grid);

}  // namespace funcpert
