#include "funcpert/funcalc.hpp"

#include <stdexcept>

namespace funcpert {

ContractionPair::ContractionPair(CMatrix t, CMatrix r, ContractionTolerances tol)
    : t_(std::move(t)), r_(std::move(r)) {
  if (t_.rows() != t_.cols() || r_.rows() != r_.cols() || t_.rows() != r_.rows())
    throw std::invalid_argument("ContractionPair: matrices must be square of equal dimension");
  if (t_.rows() == 0) throw std::invalid_argument("ContractionPair: empty matrices");
  if (!t_.allFinite() || !r_.allFinite())
    throw std::invalid_argument("ContractionPair: non-finite entries");
  const double nt = operator_norm(t_);
  const double nr = operator_norm(r_);
  if (nt > 1.0 + tol.contraction || nr > 1.0 + tol.contraction)
    throw std::invalid_argument("ContractionPair: operator norm exceeds 1");
  const double defect = commutation_defect(t_, r_);
  if (defect > tol.commutation)
    throw std::invalid_argument("ContractionPair: commutation defect above tolerance");
}

double commutation_defect(const CMatrix& t, const CMatrix& r) {
  if (t.rows() != t.cols() || r.rows() != r.cols() || t.rows() != r.rows())
    throw std::invalid_argument("commutation_defect: square matrices of equal dimension required");
  return operator_norm(t * r - r * t);
}

PairPowers::PairPowers(const ContractionPair& pair, int max_deg1, int max_deg2) {
  const auto d = pair.dim();
  t_pow_.reserve(static_cast<std::size_t>(max_deg1) + 1);
  r_pow_.reserve(static_cast<std::size_t>(max_deg2) + 1);
  t_pow_.push_back(CMatrix::Identity(d, d));
  r_pow_.push_back(CMatrix::Identity(d, d));
  for (int k = 1; k <= max_deg1; ++k) t_pow_.push_back(t_pow_.back() * pair.t());
  for (int m = 1; m <= max_deg2; ++m) r_pow_.push_back(r_pow_.back() * pair.r());
}

CMatrix PairPowers::apply(const BiPolynomial& f) const {
  const BiPolynomial ft = f.trimmed();
  const auto& a = ft.coeffs();
  const auto d = t_pow_[0].rows();
  CMatrix out = CMatrix::Zero(d, d);
  for (int m = 0; m <= ft.deg2(); ++m) {
    CMatrix col = CMatrix::Zero(d, d);
    bool any = false;
    for (int k = 0; k <= ft.deg1(); ++k) {
      const Complex c = a(k, m);
      if (c == Complex(0.0)) continue;
      col += c * t_pow_[static_cast<std::size_t>(k)];
      any = true;
    }
    if (any) out += col * r_pow_[static_cast<std::size_t>(m)];
  }
  return out;
}

CMatrix apply(const BiPolynomial& f, const ContractionPair& pair) {
  const BiPolynomial ft = f.trimmed();
  // Horner in R with precomputed powers of T.
  const auto d = pair.dim();
  std::vector<CMatrix> t_pow;
  t_pow.reserve(static_cast<std::size_t>(ft.deg1()) + 1);
  t_pow.push_back(CMatrix::Identity(d, d));
  for (int k = 1; k <= ft.deg1(); ++k) t_pow.push_back(t_pow.back() * pair.t());
  const auto& a = ft.coeffs();
  CMatrix acc = CMatrix::Zero(d, d);
  for (int m = ft.deg2(); m >= 0; --m) {
    if (m != ft.deg2()) acc = acc * pair.r();
    for (int k = 0; k <= ft.deg1(); ++k) {
      const Complex c = a(k, m);
      if (c != Complex(0.0)) acc += c * t_pow[static_cast<std::size_t>(k)];
    }
  }
  return acc;
}

double von_neumann_gap(const BiPolynomial& f, const ContractionPair& pair) {
  return operator_norm(apply(f, pair)) - sup_norm_torus(f).grid_max;
}

namespace {

void require_same_dim(const ContractionPair& a, const ContractionPair& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("contraction pairs have mismatched dimensions");
}

}  // namespace

CMatrix difference_direct(const BiPolynomial& f, const ContractionPair& pair1,
                          const ContractionPair& pair2) {
  require_same_dim(pair1, pair2);
  return apply(f, pair1) - apply(f, pair2);
}

CMatrix identity_rhs(const BiPolynomial& f, const ContractionPair& pair1,
                     const ContractionPair& pair2) {
  require_same_dim(pair1, pair2);
  return quasicommutator_identity_rhs(f, pair1, pair2,
                                      CMatrix::Identity(pair1.dim(), pair1.dim()));
}

CMatrix quasicommutator_direct(const BiPolynomial& f, const ContractionPair& pair1,
                               const ContractionPair& pair2, const CMatrix& q) {
  require_same_dim(pair1, pair2);
  if (q.rows() != pair1.dim() || q.cols() != pair2.dim())
    throw std::invalid_argument("quasicommutator_direct: q has mismatched dimensions");
  return apply(f, pair1) * q - q * apply(f, pair2);
}

CMatrix quasicommutator_identity_rhs(const BiPolynomial& f, const ContractionPair& pair1,
                                     const ContractionPair& pair2, const CMatrix& q) {
  require_same_dim(pair1, pair2);
  if (q.rows() != pair1.dim() || q.cols() != pair2.dim())
    throw std::invalid_argument("quasicommutator_identity_rhs: q has mismatched dimensions");
  const BiPolynomial ft = f.trimmed();
  const int n = std::max(ft.deg1(), ft.deg2());
  const auto d = pair1.dim();
  CMatrix rhs = CMatrix::Zero(d, d);
  if (ft.is_zero() || n == 0) return rhs;

  PairPowers pow1(pair1, ft.deg1(), ft.deg2());
  PairPowers pow2(pair2, ft.deg1(), ft.deg2());

  // sum_j ((shift2^j f)(T1,R1)) (R1 q - q R2) R2^{j-1}; terms with j beyond
  // deg2 vanish and are skipped.
  const CMatrix rq = pair1.r() * q - q * pair2.r();
  for (int j = 1; j <= std::min(n, ft.deg2()); ++j) {
    const BiPolynomial g = shift_power(ft, 2, j);
    if (g.is_zero()) continue;
    rhs += pow1.apply(g) * rq * pow2.r_power(j - 1);
  }

  const CMatrix tq = pair1.t() * q - q * pair2.t();
  for (int j = 1; j <= std::min(n, ft.deg1()); ++j) {
    const BiPolynomial h = shift_power(ft, 1, j);
    if (h.is_zero()) continue;
    rhs += pow1.t_power(j - 1) * tq * pow2.apply(h);
  }
  return rhs;
}

}  // namespace funcpert
