#include "funcpert/matnum.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "funcpert/gridmax.hpp"

namespace funcpert {

namespace {

void require_finite(const CMatrix& m, const char* who) {
  if (!m.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

}  // namespace

Eigen::VectorXd singular_values(const CMatrix& m) {
  require_finite(m, "singular_values");
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

double schatten_norm(const CMatrix& m, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: p must be in [1, inf]");
  const Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0) return 0.0;
  if (p == kPInf) return s(0);
  if (s(0) == 0.0) return 0.0;
  // factor out s(0) to keep the power sum well scaled
  double acc = 0.0;
  for (Eigen::Index j = 0; j < s.size(); ++j) acc += std::pow(s(j) / s(0), p);
  return s(0) * std::pow(acc, 1.0 / p);
}

std::pair<CMatrix, CMatrix> schatten_split(const CMatrix& q, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten_split: p must be in [1, inf]");
  require_finite(q, "schatten_split");
  Eigen::JacobiSVD<CMatrix> svd(q, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0)
    throw std::invalid_argument("schatten_split: zero matrix has no factorization");
  const Eigen::VectorXd root = s.cwiseSqrt();
  const CMatrix q1 = svd.matrixU() * root.asDiagonal() * svd.matrixV().adjoint();
  const CMatrix q2 = svd.matrixV() * root.asDiagonal() * svd.matrixV().adjoint();
  return {q1, q2};
}

double decay_fit(const Eigen::VectorXd& spectrum, double exponent) {
  if (!(exponent > 0.0)) throw std::invalid_argument("decay_fit: exponent must be > 0");
  double best = 0.0;
  for (Eigen::Index j = 0; j < spectrum.size(); ++j)
    best = std::max(best, spectrum(j) * std::pow(1.0 + double(j), exponent));
  return best;
}

double numerical_radius(const CMatrix& m, int n_angles) {
  if (m.rows() != m.cols()) throw std::invalid_argument("numerical_radius: square matrix required");
  require_finite(m, "numerical_radius");
  if (n_angles < 8) n_angles = 8;
  const auto herm_top = [&](double t) {
    const Complex phase = std::polar(1.0, t);
    const CMatrix h = 0.5 * (phase * m + std::conj(phase) * m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
  };
  constexpr double kTwoPi = 6.283185307179586476925286766559005768;
  double best = -kPInf;
  int bi = 0;
  for (int i = 0; i < n_angles; ++i) {
    const double v = herm_top(kTwoPi * i / n_angles);
    if (v > best) {
      best = v;
      bi = i;
    }
  }
  const auto line = detail::golden_max(herm_top, kTwoPi * bi / n_angles - kTwoPi / n_angles,
                                       kTwoPi * bi / n_angles + kTwoPi / n_angles);
  return std::max(best, line.value);
}

}  // namespace funcpert
