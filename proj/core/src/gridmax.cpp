#include "funcpert/gridmax.hpp"

#include <cmath>
#include <vector>

namespace funcpert::detail {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559005768;
}

Complex FreqRect::eval(double t1, double t2) const {
  const Complex z1(std::cos(t1), std::sin(t1));
  const Complex z2(std::cos(t2), std::sin(t2));
  Complex acc = 0.0;
  for (Eigen::Index k = a.rows() - 1; k >= 0; --k) {
    Complex row = 0.0;
    for (Eigen::Index m = a.cols() - 1; m >= 0; --m) row = row * z2 + a(k, m);
    acc = acc * z1 + row;
  }
  const Complex phase = std::polar(1.0, j1min * t1 + j2min * t2);
  return phase * acc;
}

namespace {

// Stage 1 of the separable evaluation: B(k, b) = Horner over columns at z2_b.
Eigen::MatrixXcd stage_rows(const Eigen::MatrixXcd& a,
                            const std::vector<Complex>& z2) {
  Eigen::MatrixXcd b(a.rows(), static_cast<Eigen::Index>(z2.size()));
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    for (std::size_t j = 0; j < z2.size(); ++j) {
      Complex acc = 0.0;
      for (Eigen::Index m = a.cols() - 1; m >= 0; --m) acc = acc * z2[j] + a(k, m);
      b(k, static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return b;
}

std::vector<Complex> unit_grid(int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = kTwoPi * k / n;
    z[static_cast<std::size_t>(k)] = {std::cos(t), std::sin(t)};
  }
  return z;
}

}  // namespace

GridScan scan_abs_max(const FreqRect& f, int n1, int n2) {
  const auto z1 = unit_grid(n1);
  const auto z2 = unit_grid(n2);
  const Eigen::MatrixXcd b = stage_rows(f.a, z2);
  GridScan best;
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) {
      Complex acc = 0.0;
      for (Eigen::Index k = b.rows() - 1; k >= 0; --k)
        acc = acc * z1[static_cast<std::size_t>(i)] + b(k, j);
      const double v = std::abs(acc);  // the phase factor is unimodular
      if (v > best.max_abs) {
        best.max_abs = v;
        best.i1 = i;
        best.i2 = j;
      }
    }
  }
  return best;
}

void eval_abs_grid(const FreqRect& f, int n1, int n2, Eigen::MatrixXd& out) {
  const auto z1 = unit_grid(n1);
  const auto z2 = unit_grid(n2);
  const Eigen::MatrixXcd b = stage_rows(f.a, z2);
  out.resize(n1, n2);
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) {
      Complex acc = 0.0;
      for (Eigen::Index k = b.rows() - 1; k >= 0; --k)
        acc = acc * z1[static_cast<std::size_t>(i)] + b(k, j);
      out(i, j) = std::abs(acc);
    }
  }
}

LineMax golden_max(const std::function<double(double)>& h, double lo, double hi,
                   int iters) {
  constexpr double invphi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = h(c), fd = h(d);
  for (int it = 0; it < iters && (b - a) > 1e-14; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = h(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = h(d);
    }
  }
  return fc > fd ? LineMax{fc, c} : LineMax{fd, d};
}

double polish_max(const std::function<double(double, double)>& g, double t1,
                  double t2, double step1, double step2, int rounds) {
  double u = t1, v = t2;
  double best = g(u, v);
  double s1 = step1, s2 = step2;
  for (int r = 0; r < rounds; ++r) {
    const LineMax m1 = golden_max([&](double x) { return g(x, v); }, u - s1, u + s1);
    if (m1.value > best) {
      best = m1.value;
      u = m1.arg;
    }
    const LineMax m2 = golden_max([&](double y) { return g(u, y); }, v - s2, v + s2);
    if (m2.value > best) {
      best = m2.value;
      v = m2.arg;
    }
    s1 *= 0.5;
    s2 *= 0.5;
  }
  return best;
}

double torus_max_smooth(const std::function<double(double, double)>& g, int n1,
                        int n2) {
  double best = 0.0;
  int bi = 0, bj = 0;
  bool first = true;
  for (int i = 0; i < n1; ++i) {
    const double t1 = kTwoPi * i / n1;
    for (int j = 0; j < n2; ++j) {
      const double val = g(t1, kTwoPi * j / n2);
      if (first || val > best) {
        best = val;
        bi = i;
        bj = j;
        first = false;
      }
    }
  }
  const double p = polish_max(g, kTwoPi * bi / n1, kTwoPi * bj / n2,
                              kTwoPi / n1, kTwoPi / n2);
  return std::max(best, p);
}

}  // namespace funcpert::detail
