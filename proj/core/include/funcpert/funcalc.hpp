#pragma once

#include "funcpert/bipoly.hpp"
#include "funcpert/matnum.hpp"

namespace funcpert {

struct ContractionTolerances {
  double contraction = 1e-10;  // allowed excess over operator norm 1
  double commutation = 1e-10;  // allowed ||TR - RT||
};

// A pair of commuting contractions of the same square dimension. The
// constructor validates both properties; the calculus is ill-defined
// otherwise.
class ContractionPair {
 public:
  ContractionPair(CMatrix t, CMatrix r, ContractionTolerances tol = {});

  const CMatrix& t() const { return t_; }
  const CMatrix& r() const { return r_; }
  Eigen::Index dim() const { return t_.rows(); }

 private:
  CMatrix t_, r_;
};

double commutation_defect(const CMatrix& t, const CMatrix& r);

// Cached powers of one pair, shared across repeated calculus applications
// (identity evaluation applies O(n) shifted polynomials to the same pair).
class PairPowers {
 public:
  PairPowers(const ContractionPair& pair, int max_deg1, int max_deg2);

  // sum a(k,m) T^k R^m; assumes f fits inside the cached degree bounds.
  CMatrix apply(const BiPolynomial& f) const;

  const CMatrix& t_power(int k) const { return t_pow_[static_cast<std::size_t>(k)]; }
  const CMatrix& r_power(int m) const { return r_pow_[static_cast<std::size_t>(m)]; }

 private:
  std::vector<CMatrix> t_pow_, r_pow_;
};

// The polynomial functional calculus: sum a(k,m) T^k R^m.
CMatrix apply(const BiPolynomial& f, const ContractionPair& pair);

// ||f(T,R)|| minus the grid value of sup |f| on the torus. Nonpositive up to
// grid resolution whenever the calculus is implemented correctly.
double von_neumann_gap(const BiPolynomial& f, const ContractionPair& pair);

CMatrix difference_direct(const BiPolynomial& f, const ContractionPair& pair1,
                          const ContractionPair& pair2);

// Right-hand side of the two-sided difference identity:
//   sum_{j>=1} ((shift2^j f)(T1,R1)) (R1-R2) R2^{j-1}
// + sum_{j>=1} T1^{j-1} (T1-T2) ((shift1^j f)(T2,R2)).
CMatrix identity_rhs(const BiPolynomial& f, const ContractionPair& pair1,
                     const ContractionPair& pair2);

CMatrix quasicommutator_direct(const BiPolynomial& f, const ContractionPair& pair1,
                               const ContractionPair& pair2, const CMatrix& q);

// Same identity with q interleaved: the difference factors become
// (R1 q - q R2) and (T1 q - q T2).
CMatrix quasicommutator_identity_rhs(const BiPolynomial& f, const ContractionPair& pair1,
                                     const ContractionPair& pair2, const CMatrix& q);

}  // namespace funcpert
