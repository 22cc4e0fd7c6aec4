#include "funcpert/besov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "funcpert/gridmax.hpp"

namespace funcpert {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// C^inf step: 0 for x <= 0, 1 for x >= 1.
double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double e1 = std::exp(-1.0 / x);
  const double e2 = std::exp(-1.0 / (1.0 - x));
  return e1 / (e1 + e2);
}

double canonical_w(double s) {
  if (s <= 0.5 || s >= 2.0) return 0.0;
  if (s <= 1.0) return smooth_step(2.0 * s - 1.0);
  return 1.0 - smooth_step(s - 1.0);
}

// Dense rectangle view of a trig polynomial, for separable grid evaluation.
detail::FreqRect to_rect(const TrigPolynomial2D& f) {
  detail::FreqRect rect;
  if (f.empty()) {
    rect.a = Eigen::MatrixXcd::Zero(1, 1);
    return rect;
  }
  int j1lo = 0, j1hi = 0, j2lo = 0, j2hi = 0;
  bool first = true;
  for (const auto& [key, val] : f.support()) {
    if (first) {
      j1lo = j1hi = key[0];
      j2lo = j2hi = key[1];
      first = false;
    } else {
      j1lo = std::min(j1lo, key[0]);
      j1hi = std::max(j1hi, key[0]);
      j2lo = std::min(j2lo, key[1]);
      j2hi = std::max(j2hi, key[1]);
    }
  }
  rect.j1min = j1lo;
  rect.j2min = j2lo;
  rect.a = Eigen::MatrixXcd::Zero(j1hi - j1lo + 1, j2hi - j2lo + 1);
  for (const auto& [key, val] : f.support()) rect.a(key[0] - j1lo, key[1] - j2lo) = val;
  return rect;
}

}  // namespace

DyadicBump DyadicBump::canonical() { return DyadicBump(canonical_w, false); }

DyadicBump::DyadicBump(std::function<double(double)> w, bool validate) : w_(std::move(w)) {
  if (!validate) return;
  const int samples = 4096;
  for (int i = 0; i <= samples; ++i) {
    const double s = 4.0 * i / samples;
    const double v = w_(s);
    if (!(v >= -1e-12 && v <= 1.0 + 1e-12))
      throw std::invalid_argument("DyadicBump: values must lie in [0, 1]");
    if ((s < 0.5 - 1e-12 || s > 2.0 + 1e-12) && std::abs(v) > 1e-12)
      throw std::invalid_argument("DyadicBump: support must lie in [1/2, 2]");
    if (s >= 1.0 && s <= 2.0 && std::abs(w_(s) + w_(s / 2.0) - 1.0) > 1e-12)
      throw std::invalid_argument("DyadicBump: w(s) + w(s/2) must equal 1 on [1, 2]");
  }
}

const DyadicBump& canonical_bump() {
  static const DyadicBump bump = DyadicBump::canonical();
  return bump;
}

TrigPolynomial2D TrigPolynomial2D::from_bipoly(const BiPolynomial& f) {
  TrigPolynomial2D out;
  const BiPolynomial t = f.trimmed();
  for (int k = 0; k <= t.deg1(); ++k)
    for (int m = 0; m <= t.deg2(); ++m) out.set(k, m, t.coeff(k, m));
  return out;
}

void TrigPolynomial2D::set(int j1, int j2, Complex v) {
  if (v == Complex(0.0)) {
    c_.erase({j1, j2});
  } else {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("TrigPolynomial2D: non-finite coefficient");
    c_[{j1, j2}] = v;
  }
}

void TrigPolynomial2D::add(int j1, int j2, Complex v) { set(j1, j2, coeff(j1, j2) + v); }

Complex TrigPolynomial2D::coeff(int j1, int j2) const {
  const auto it = c_.find({j1, j2});
  return it == c_.end() ? Complex(0.0) : it->second;
}

double TrigPolynomial2D::support_radius() const {
  double r = 0.0;
  for (const auto& [key, val] : c_) r = std::max(r, std::hypot(double(key[0]), double(key[1])));
  return r;
}

int TrigPolynomial2D::max_abs_index(int axis) const {
  if (axis != 0 && axis != 1) throw std::invalid_argument("max_abs_index: axis must be 0 or 1");
  int m = 0;
  for (const auto& [key, val] : c_) m = std::max(m, std::abs(key[static_cast<std::size_t>(axis)]));
  return m;
}

Complex TrigPolynomial2D::eval(double t1, double t2) const {
  Complex acc = 0.0;
  for (const auto& [key, val] : c_) acc += val * std::polar(1.0, key[0] * t1 + key[1] * t2);
  return acc;
}

TrigPolynomial2D TrigPolynomial2D::operator+(const TrigPolynomial2D& g) const {
  TrigPolynomial2D out = *this;
  for (const auto& [key, val] : g.c_) out.add(key[0], key[1], val);
  return out;
}

TrigPolynomial2D TrigPolynomial2D::operator-(const TrigPolynomial2D& g) const {
  TrigPolynomial2D out = *this;
  for (const auto& [key, val] : g.c_) out.add(key[0], key[1], -val);
  return out;
}

TrigPolynomial2D TrigPolynomial2D::operator*(Complex s) const {
  TrigPolynomial2D out;
  if (s == Complex(0.0)) return out;
  for (const auto& [key, val] : c_) out.set(key[0], key[1], s * val);
  return out;
}

double TrigPolynomial2D::coeff_l1() const {
  double acc = 0.0;
  for (const auto& [key, val] : c_) acc += std::abs(val);
  return acc;
}

double TrigPolynomial2D::max_coeff_diff(const TrigPolynomial2D& g) const {
  double m = 0.0;
  for (const auto& [key, val] : c_) m = std::max(m, std::abs(val - g.coeff(key[0], key[1])));
  for (const auto& [key, val] : g.c_) m = std::max(m, std::abs(coeff(key[0], key[1]) - val));
  return m;
}

double lp_multiplier(int n, int j1, int j2, const DyadicBump& w) {
  if (n < 0) throw std::invalid_argument("lp_multiplier: n must be >= 0");
  const double r = std::hypot(double(j1), double(j2));
  if (n >= 1) return w(r / std::exp2(n));
  double acc = 0.0;
  // w(r / 2^k) vanishes once 2^k > 2 r; r < 2^{k-1} ends the sum
  for (int k = 1; std::exp2(k - 1) <= r; ++k) acc += w(r / std::exp2(k));
  return 1.0 - acc;
}

TrigPolynomial2D lp_block(const TrigPolynomial2D& f, int n, const DyadicBump& w) {
  TrigPolynomial2D out;
  for (const auto& [key, val] : f.support()) {
    const double mult = lp_multiplier(n, key[0], key[1], w);
    if (mult != 0.0) out.set(key[0], key[1], mult * val);
  }
  return out;
}

int lp_block_count(const TrigPolynomial2D& f) {
  const double r = f.support_radius();
  if (r < 1.0) return 1;  // only the complement block can be nonzero
  // block n reaches radii down to 2^{n-1}
  return static_cast<int>(std::floor(std::log2(r))) + 2;
}

double lp_norm(const TrigPolynomial2D& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be in [1, inf]");
  if (f.empty()) return 0.0;
  if (p == kPInf) return sup_norm_torus(f).grid_max;
  const auto rect = to_rect(f);
  // 4x the per-axis support width keeps p = 2 exact and the rest spectrally
  // accurate.
  const int n1 = std::max(16, 4 * (f.max_abs_index(0) + 1));
  const int n2 = std::max(16, 4 * (f.max_abs_index(1) + 1));
  Eigen::MatrixXd vals;
  detail::eval_abs_grid(rect, n1, n2, vals);
  const double mean = vals.array().pow(p).mean();
  return std::pow(mean, 1.0 / p);
}

double l2_norm_parseval(const TrigPolynomial2D& f) {
  double acc = 0.0;
  for (const auto& [key, val] : f.support()) acc += std::norm(val);
  return std::sqrt(acc);
}

SupNorm sup_norm_torus(const TrigPolynomial2D& f, int oversample) {
  if (oversample < 4) throw std::invalid_argument("sup_norm_torus: oversample must be >= 4");
  if (f.empty()) return {0.0, 0.0};
  const auto rect = to_rect(f);
  const int n1 = std::max(8, oversample * (f.max_abs_index(0) + 1));
  const int n2 = std::max(8, oversample * (f.max_abs_index(1) + 1));
  const auto scan = detail::scan_abs_max(rect, n1, n2);
  const double polished = detail::polish_max(
      [&](double u, double v) { return std::abs(rect.eval(u, v)); },
      kTwoPi * scan.i1 / n1, kTwoPi * scan.i2 / n2, kTwoPi / n1, kTwoPi / n2);
  return {std::max(scan.max_abs, polished), f.coeff_l1()};
}

double besov_norm(const TrigPolynomial2D& f, double s, double p, double q,
                  const DyadicBump& w) {
  if (!(s > 0.0)) throw std::invalid_argument("besov_norm: s must be > 0");
  if (!(q >= 1.0)) throw std::invalid_argument("besov_norm: q must be in [1, inf]");
  const int blocks = lp_block_count(f);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(blocks));
  for (int n = 0; n < blocks; ++n) {
    const TrigPolynomial2D fn = lp_block(f, n, w);
    if (fn.empty()) {
      terms.push_back(0.0);
      continue;
    }
    terms.push_back(std::exp2(n * s) * lp_norm(fn, p));
  }
  if (q == kPInf) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, t);
    return m;
  }
  double acc = 0.0;
  for (double t : terms) acc += std::pow(t, q);
  return std::pow(acc, 1.0 / q);
}

double holder_norm(const TrigPolynomial2D& f, double alpha, const DyadicBump& w) {
  if (!(alpha > 0.0)) throw std::invalid_argument("holder_norm: alpha must be > 0");
  return besov_norm(f, alpha, kPInf, kPInf, w);
}

bool is_analytic(const TrigPolynomial2D& f) {
  for (const auto& [key, val] : f.support())
    if (key[0] < 0 || key[1] < 0) return false;
  return true;
}

ModulusOfContinuity ModulusOfContinuity::power(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("ModulusOfContinuity::power: alpha must be in (0, 1]");
  ModulusOfContinuity m;
  m.kind_ = Kind::power;
  m.alpha_ = alpha;
  return m;
}

ModulusOfContinuity ModulusOfContinuity::tabulated(std::vector<double> t, std::vector<double> w) {
  if (t.size() != w.size() || t.size() < 2)
    throw std::invalid_argument("ModulusOfContinuity::tabulated: need matching knot arrays, >= 2 knots");
  if (t.front() != 0.0 || w.front() != 0.0) {
    t.insert(t.begin(), 0.0);
    w.insert(w.begin(), 0.0);
  }
  double prev_slope = kPInf;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (!(t[i + 1] > t[i]))
      throw std::invalid_argument("ModulusOfContinuity::tabulated: knots must increase");
    if (w[i + 1] < w[i] - 1e-15)
      throw std::invalid_argument("ModulusOfContinuity::tabulated: values must be nondecreasing");
    const double slope = (w[i + 1] - w[i]) / (t[i + 1] - t[i]);
    if (slope > prev_slope * (1.0 + 1e-9) + 1e-15)
      throw std::invalid_argument("ModulusOfContinuity::tabulated: knot data must be concave");
    prev_slope = slope;
  }
  ModulusOfContinuity m;
  m.kind_ = Kind::tabulated;
  m.knots_t_ = std::move(t);
  m.knots_w_ = std::move(w);
  return m;
}

double ModulusOfContinuity::operator()(double t) const {
  if (t <= 0.0) return 0.0;
  if (kind_ == Kind::power) return std::pow(t, alpha_);
  if (t >= knots_t_.back()) return knots_w_.back();
  const auto it = std::upper_bound(knots_t_.begin(), knots_t_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - knots_t_.begin()) - 1;
  const double u = (t - knots_t_[i]) / (knots_t_[i + 1] - knots_t_[i]);
  return knots_w_[i] + u * (knots_w_[i + 1] - knots_w_[i]);
}

double ModulusOfContinuity::last_knot() const {
  if (kind_ != Kind::tabulated) throw std::logic_error("last_knot: tabulated kind only");
  return knots_t_.back();
}

double ModulusOfContinuity::last_value() const {
  if (kind_ != Kind::tabulated) throw std::logic_error("last_value: tabulated kind only");
  return knots_w_.back();
}

namespace {

// Adaptive Simpson with absolute tolerance budget.
double simpson(const std::function<double(double)>& g, double a, double b, double fa,
               double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = g(lm), frm = g(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& g, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = g(a), fm = g(m), fb = g(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(g, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

double omega_star(const ModulusOfContinuity& omega, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("omega_star: s must be > 0");
  if (omega.kind() == ModulusOfContinuity::Kind::power) {
    const double a = omega.alpha();
    if (a >= 1.0) throw std::domain_error("omega_star: divergent for the linear modulus");
    return std::pow(s, a) / (1.0 - a);
  }
  // tabulated: adaptive quadrature of omega(t)/t^2 segment by segment over
  // [s, M], then the analytic tail term. The modulus is continued constantly
  // past its last knot (a linearly growing envelope would make the integral
  // diverge), so the tail contributes omega(M)/max(s, M).
  const double big = omega.last_knot();
  const auto integrand = [&](double t) { return omega(t) / (t * t); };
  double total = 0.0;
  if (s < big) {
    const auto& kt = omega.knot_positions();
    for (std::size_t i = 0; i + 1 < kt.size(); ++i) {
      const double lo = std::max(s, kt[i]);
      const double hi = kt[i + 1];
      if (hi <= s || hi <= lo) continue;
      // each segment is linear over t^2: Simpson converges immediately
      const double rough = (hi - lo) * integrand(0.5 * (lo + hi));
      total += integrate(integrand, lo, hi, 1e-10 * std::abs(rough) + 1e-300);
    }
  }
  total += omega.last_value() / std::max(s, big);
  return s * total;
}

double lambda_omega_seminorm(const TrigPolynomial2D& f, const ModulusOfContinuity& omega,
                             int grid) {
  if (grid < 8) throw std::invalid_argument("lambda_omega_seminorm: grid must be >= 8");
  const std::size_t g = static_cast<std::size_t>(grid);
  // precompute values and the per-offset chordal distances
  std::vector<Complex> vals(g * g);
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b)
      vals[a * g + b] = f.eval(kTwoPi * double(a) / grid, kTwoPi * double(b) / grid);
  std::vector<double> om(g);
  for (std::size_t k = 0; k < g; ++k) {
    const double chord = 2.0 * std::abs(std::sin(3.141592653589793238462643 * double(k) / grid));
    om[k] = omega(chord);
  }
  double best = 0.0;
  for (std::size_t a1 = 0; a1 < g; ++a1)
    for (std::size_t b1 = 0; b1 < g; ++b1) {
      const Complex v1 = vals[a1 * g + b1];
      for (std::size_t a2 = a1; a2 < g; ++a2) {
        const std::size_t b2_start = (a2 == a1) ? b1 + 1 : 0;
        const std::size_t ka = a2 - a1;
        for (std::size_t b2 = b2_start; b2 < g; ++b2) {
          const std::size_t kb = b2 >= b1 ? b2 - b1 : b1 - b2;
          // omega is nondecreasing, so omega(max(d1, d2)) = max(om[d1], om[d2])
          const double den = std::max(om[ka], om[kb]);
          if (den <= 0.0) continue;
          const double num = std::abs(v1 - vals[a2 * g + b2]);
          if (num > best * den) best = num / den;
        }
      }
    }
  return best;
}

}  // namespace funcpert
