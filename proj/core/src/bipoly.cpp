#include "funcpert/bipoly.hpp"

#include <cmath>
#include <stdexcept>

#include "funcpert/gridmax.hpp"

namespace funcpert {

BiPolynomial::BiPolynomial(Eigen::MatrixXcd coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) coeffs_ = Eigen::MatrixXcd::Zero(1, 1);
  if (!coeffs_.allFinite()) throw std::invalid_argument("BiPolynomial: non-finite coefficient");
}

BiPolynomial BiPolynomial::constant(Complex c) {
  Eigen::MatrixXcd a(1, 1);
  a(0, 0) = c;
  return BiPolynomial(std::move(a));
}

BiPolynomial BiPolynomial::monomial(int k, int m, Complex a) {
  if (k < 0 || m < 0) throw std::invalid_argument("BiPolynomial::monomial: negative exponent");
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(k + 1, m + 1);
  c(k, m) = a;
  return BiPolynomial(std::move(c));
}

Complex BiPolynomial::coeff(int k, int m) const {
  if (k < 0 || m < 0 || k > deg1() || m > deg2()) return 0.0;
  return coeffs_(k, m);
}

bool BiPolynomial::is_zero() const { return coeffs_.cwiseAbs().maxCoeff() == 0.0; }

BiPolynomial BiPolynomial::trimmed() const {
  int r = static_cast<int>(coeffs_.rows());
  int c = static_cast<int>(coeffs_.cols());
  while (r > 1 && coeffs_.row(r - 1).cwiseAbs().maxCoeff() == 0.0) --r;
  while (c > 1 && coeffs_.topRows(r).col(c - 1).cwiseAbs().maxCoeff() == 0.0) --c;
  if (r == coeffs_.rows() && c == coeffs_.cols()) return *this;
  return BiPolynomial(coeffs_.topLeftCorner(r, c).eval());
}

double BiPolynomial::coeff_l1() const { return coeffs_.cwiseAbs().sum(); }

BiPolynomial BiPolynomial::operator+(const BiPolynomial& g) const {
  const int r = std::max(deg1(), g.deg1()) + 1;
  const int c = std::max(deg2(), g.deg2()) + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(r, c);
  out.topLeftCorner(coeffs_.rows(), coeffs_.cols()) = coeffs_;
  out.topLeftCorner(g.coeffs_.rows(), g.coeffs_.cols()) += g.coeffs_;
  return BiPolynomial(std::move(out));
}

BiPolynomial BiPolynomial::operator-(const BiPolynomial& g) const {
  return *this + g * Complex(-1.0);
}

BiPolynomial BiPolynomial::operator*(const BiPolynomial& g) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(deg1() + g.deg1() + 1, deg2() + g.deg2() + 1);
  for (int k = 0; k <= deg1(); ++k)
    for (int m = 0; m <= deg2(); ++m) {
      const Complex a = coeffs_(k, m);
      if (a == Complex(0.0)) continue;
      out.block(k, m, g.deg1() + 1, g.deg2() + 1) += a * g.coeffs_;
    }
  return BiPolynomial(std::move(out));
}

BiPolynomial BiPolynomial::operator*(Complex s) const {
  return BiPolynomial((coeffs_ * s).eval());
}

Complex evaluate(const BiPolynomial& f, Complex z1, Complex z2) {
  const auto& a = f.coeffs();
  Complex acc = 0.0;
  for (Eigen::Index k = a.rows() - 1; k >= 0; --k) {
    Complex row = 0.0;
    for (Eigen::Index m = a.cols() - 1; m >= 0; --m) row = row * z2 + a(k, m);
    acc = acc * z1 + row;
  }
  return acc;
}

BiPolynomial shift1(const BiPolynomial& f) {
  if (f.deg1() == 0) return BiPolynomial{};
  return BiPolynomial(f.coeffs().bottomRows(f.deg1()).eval()).trimmed();
}

BiPolynomial shift2(const BiPolynomial& f) {
  if (f.deg2() == 0) return BiPolynomial{};
  return BiPolynomial(f.coeffs().rightCols(f.deg2()).eval()).trimmed();
}

BiPolynomial shift_power(const BiPolynomial& f, int variable, int j) {
  if (j < 1) throw std::invalid_argument("shift_power: j must be >= 1");
  if (variable != 1 && variable != 2) throw std::invalid_argument("shift_power: variable must be 1 or 2");
  if (variable == 1) {
    if (j > f.deg1()) return BiPolynomial{};
    return BiPolynomial(f.coeffs().bottomRows(f.deg1() + 1 - j).eval()).trimmed();
  }
  if (j > f.deg2()) return BiPolynomial{};
  return BiPolynomial(f.coeffs().rightCols(f.deg2() + 1 - j).eval()).trimmed();
}

SupNorm sup_norm_torus(const BiPolynomial& f, int oversample) {
  if (oversample < 4) throw std::invalid_argument("sup_norm_torus: oversample must be >= 4");
  const BiPolynomial t = f.trimmed();
  if (t.is_zero()) return {0.0, 0.0};
  const int n1 = std::max(8, oversample * (t.deg1() + 1));
  const int n2 = std::max(8, oversample * (t.deg2() + 1));
  detail::FreqRect rect{0, 0, t.coeffs()};
  const auto scan = detail::scan_abs_max(rect, n1, n2);
  constexpr double kTwoPi = 6.283185307179586476925286766559005768;
  const double polished = detail::polish_max(
      [&](double u, double v) { return std::abs(rect.eval(u, v)); },
      kTwoPi * scan.i1 / n1, kTwoPi * scan.i2 / n2, kTwoPi / n1, kTwoPi / n2);
  return {std::max(scan.max_abs, polished), t.coeff_l1()};
}

UniPolynomial::UniPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, Complex(0.0));
  for (const auto& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("UniPolynomial: non-finite coefficient");
}

Complex UniPolynomial::coeff(int j) const {
  if (j < 0 || j > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(j)];
}

bool UniPolynomial::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != Complex(0.0)) return false;
  return true;
}

UniPolynomial UniPolynomial::trimmed() const {
  std::size_t n = coeffs_.size();
  while (n > 1 && coeffs_[n - 1] == Complex(0.0)) --n;
  return UniPolynomial(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

Complex evaluate(const UniPolynomial& f, Complex z) {
  Complex acc = 0.0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

UniPolynomial shift(const UniPolynomial& f) {
  if (f.degree() == 0) return UniPolynomial{};
  return UniPolynomial(std::vector<Complex>(f.coeffs().begin() + 1, f.coeffs().end()));
}

UniPolynomial partial_sum(const UniPolynomial& f, int j) {
  if (j < 0) return UniPolynomial{};
  const int n = std::min(j, f.degree());
  return UniPolynomial(std::vector<Complex>(f.coeffs().begin(), f.coeffs().begin() + n + 1));
}

SupNorm sup_norm_torus(const UniPolynomial& f, int oversample) {
  if (oversample < 4) throw std::invalid_argument("sup_norm_torus: oversample must be >= 4");
  const UniPolynomial t = f.trimmed();
  double l1 = 0.0;
  for (const auto& c : t.coeffs()) l1 += std::abs(c);
  if (t.is_zero()) return {0.0, 0.0};
  const int n = std::max(8, oversample * (t.degree() + 1));
  constexpr double kTwoPi = 6.283185307179586476925286766559005768;
  double best = 0.0;
  int bi = 0;
  for (int i = 0; i < n; ++i) {
    const double th = kTwoPi * i / n;
    const double v = std::abs(evaluate(t, Complex(std::cos(th), std::sin(th))));
    if (v > best) {
      best = v;
      bi = i;
    }
  }
  const auto line = detail::golden_max(
      [&](double th) { return std::abs(evaluate(t, Complex(std::cos(th), std::sin(th)))); },
      kTwoPi * bi / n - kTwoPi / n, kTwoPi * bi / n + kTwoPi / n);
  return {std::max(best, line.value), l1};
}

double shift_sum_sq(const UniPolynomial& f, int n, Complex zeta) {
  if (n < 1) throw std::invalid_argument("shift_sum_sq: n must be >= 1");
  if (std::abs(std::abs(zeta) - 1.0) > 1e-9)
    throw std::invalid_argument("shift_sum_sq: zeta must be unimodular");
  const UniPolynomial t = f.trimmed();
  const int d = t.degree();
  // tail_j(z) = sum_{k>=0} c[k+j] z^k satisfies tail_{j-1} = c[j-1] + z*tail_j;
  // walk j upward using tail_j = (tail_{j-1} - c[j-1]) / z (|z| = 1).
  Complex tail = evaluate(t, zeta);  // j = 0
  double acc = 0.0;
  const int jmax = std::min(n, d);
  for (int j = 1; j <= jmax; ++j) {
    tail = (tail - t.coeff(j - 1)) / zeta;
    acc += std::norm(tail);
  }
  return acc;
}

}  // namespace funcpert
