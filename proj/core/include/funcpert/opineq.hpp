#pragma once

#include <vector>

#include "funcpert/funcalc.hpp"

namespace funcpert {

struct GramNorms {
  double row = 0.0;  // || sum A_j A_j* ||
  double col = 0.0;  // || sum A_j* A_j ||
};

// Finite family of operators of one square dimension. Admissible when both
// gram norms are at most 1 (+1e-10); admissible families contract every
// Schatten norm through rows, columns and the two-sided transformer.
class OperatorFamily {
 public:
  explicit OperatorFamily(std::vector<CMatrix> members);

  std::size_t size() const { return members_.size(); }
  Eigen::Index dim() const { return members_.front().rows(); }
  const CMatrix& operator[](std::size_t j) const { return members_[j]; }
  const std::vector<CMatrix>& members() const { return members_; }

 private:
  std::vector<CMatrix> members_;
};

GramNorms gram_norms(const OperatorFamily& fam);
bool is_admissible(const OperatorFamily& fam, double tol = 1e-10);

// Horizontal concatenation (A_0 Q | A_1 Q | ...), shape d x (n * cols(Q)).
CMatrix row_block(const OperatorFamily& fam, const CMatrix& q);
// Vertical concatenation of Q A_j, shape (n * rows(Q)) x d.
CMatrix col_block(const OperatorFamily& fam, const CMatrix& q);

// sum_j A_j^{(1)} Q A_j^{(2)}; families must have equal length.
CMatrix transformer(const OperatorFamily& fam1, const CMatrix& q, const OperatorFamily& fam2);

// Finite family of analytic polynomials with its square-sum sup on the torus.
class PolynomialFamily {
 public:
  explicit PolynomialFamily(std::vector<BiPolynomial> members);

  std::size_t size() const { return members_.size(); }
  const BiPolynomial& operator[](std::size_t j) const { return members_[j]; }
  const std::vector<BiPolynomial>& members() const { return members_; }

  // Polished grid sup of sum_j |f_j|^2 (a lower bound of the true sup).
  double sq_sum_max(int oversample = 8) const;

 private:
  std::vector<BiPolynomial> members_;
};

// A_j = f_j(T, R). With normalize, each member is first divided by
// sqrt(sq_sum_max) so the square-sum hypothesis holds; the gram norms of the
// result are the authoritative admissibility check.
OperatorFamily family_from_polynomials(const PolynomialFamily& polys, const ContractionPair& pair,
                                       bool normalize);

// || sum phi_j(T1,R1) Q psi_j(T2,R2) ||_{S_p} - sqrt(M1 M2) ||Q||_{S_p},
// where M_i are the square-sum sups of the two families. Nonpositive up to
// grid resolution.
double corollary33_gap(const PolynomialFamily& polys1, const PolynomialFamily& polys2,
                       const ContractionPair& pair1, const ContractionPair& pair2,
                       const CMatrix& q, double p);

}  // namespace funcpert
