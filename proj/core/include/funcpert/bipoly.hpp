#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace funcpert {

using Complex = std::complex<double>;

// Analytic polynomial in two variables with dense Taylor coefficients
// a(k, m), 0 <= k <= deg1, 0 <= m <= deg2. The zero polynomial is stored as
// a single zero coefficient with deg1 = deg2 = 0.
class BiPolynomial {
 public:
  BiPolynomial() : coeffs_(Eigen::MatrixXcd::Zero(1, 1)) {}
  explicit BiPolynomial(Eigen::MatrixXcd coeffs);

  static BiPolynomial constant(Complex c);
  static BiPolynomial monomial(int k, int m, Complex a = 1.0);

  int deg1() const { return static_cast<int>(coeffs_.rows()) - 1; }
  int deg2() const { return static_cast<int>(coeffs_.cols()) - 1; }
  const Eigen::MatrixXcd& coeffs() const { return coeffs_; }

  // 0 outside the stored rectangle
  Complex coeff(int k, int m) const;

  bool is_zero() const;
  // Normal form: drops trailing all-zero rows/columns. Idempotent.
  BiPolynomial trimmed() const;
  // sum |a(k,m)|
  double coeff_l1() const;

  BiPolynomial operator+(const BiPolynomial& g) const;
  BiPolynomial operator-(const BiPolynomial& g) const;
  BiPolynomial operator*(const BiPolynomial& g) const;
  BiPolynomial operator*(Complex s) const;

 private:
  Eigen::MatrixXcd coeffs_;
};

Complex evaluate(const BiPolynomial& f, Complex z1, Complex z2);

// Coefficient shifts deleting one power of z1 (resp. z2):
// shift1(f)(z) = sum a(k+1, m) z1^k z2^m, and symmetrically for shift2.
BiPolynomial shift1(const BiPolynomial& f);
BiPolynomial shift2(const BiPolynomial& f);

// j-fold composition of the shift on the given variable (1 or 2), j >= 1.
BiPolynomial shift_power(const BiPolynomial& f, int variable, int j);

struct SupNorm {
  double grid_max = 0.0;  // max |f| over the oversampled torus grid, polished
  double l1_upper = 0.0;  // sum |a(k,m)|, an upper bound for the true sup
};

// grid_max <= sup |f| <= l1_upper; grid_max is the working value of the
// L^inf(T^2) norm.
SupNorm sup_norm_torus(const BiPolynomial& f, int oversample = 8);

// One-variable analytic polynomial, coefficients c[j] of z^j.
class UniPolynomial {
 public:
  UniPolynomial() : coeffs_(1, Complex(0.0)) {}
  explicit UniPolynomial(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int j) const;
  bool is_zero() const;
  UniPolynomial trimmed() const;

 private:
  std::vector<Complex> coeffs_;
};

Complex evaluate(const UniPolynomial& f, Complex z);

// One-variable backward shift: (shift(f))(z) = sum c[j+1] z^j.
UniPolynomial shift(const UniPolynomial& f);

// Partial sum of order j (coefficients 0..j).
UniPolynomial partial_sum(const UniPolynomial& f, int j);

SupNorm sup_norm_torus(const UniPolynomial& f, int oversample = 8);

// sum_{j=1..n} |(shift^j f)(zeta)|^2 for unimodular zeta.
double shift_sum_sq(const UniPolynomial& f, int n, Complex zeta);

}  // namespace funcpert
