#pragma once

#include <Eigen/Core>
#include <limits>
#include <utility>

namespace funcpert {

using CMatrix = Eigen::MatrixXcd;

// p = infinity selects the operator norm.
inline constexpr double kPInf = std::numeric_limits<double>::infinity();

// Full singular spectrum, nonincreasing; length = min(rows, cols).
Eigen::VectorXd singular_values(const CMatrix& m);

double operator_norm(const CMatrix& m);

// Schatten-von Neumann norm, p in [1, inf]. p < 1 is rejected.
double schatten_norm(const CMatrix& m, double p);

// Factorization q = q1 * q2 with ||q1||_{S_2p} = ||q2||_{S_2p} = ||q||_{S_p}^{1/2},
// via the polar decomposition q = w|q|, q1 = w|q|^{1/2}, q2 = |q|^{1/2}.
// The zero matrix is rejected.
std::pair<CMatrix, CMatrix> schatten_split(const CMatrix& q, double p);

// Smallest constant c with s_j <= c * (1+j)^{-exponent} for the whole
// spectrum, i.e. max_j s_j * (1+j)^exponent. exponent > 0.
double decay_fit(const Eigen::VectorXd& spectrum, double exponent);

// max over the unit circle of the largest eigenvalue of Re(e^{i t} m),
// estimated on an angular grid with golden-section polish.
double numerical_radius(const CMatrix& m, int n_angles = 256);

}  // namespace funcpert
