#include "funcpert/opineq.hpp"

#include <cmath>
#include <stdexcept>

#include "funcpert/gridmax.hpp"

namespace funcpert {

OperatorFamily::OperatorFamily(std::vector<CMatrix> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("OperatorFamily: empty family");
  const auto d = members_.front().rows();
  for (const auto& m : members_) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("OperatorFamily: members must be square of one dimension");
    if (!m.allFinite()) throw std::invalid_argument("OperatorFamily: non-finite entries");
  }
}

GramNorms gram_norms(const OperatorFamily& fam) {
  const auto d = fam.dim();
  CMatrix row = CMatrix::Zero(d, d), col = CMatrix::Zero(d, d);
  for (const auto& a : fam.members()) {
    row += a * a.adjoint();
    col += a.adjoint() * a;
  }
  return {operator_norm(row), operator_norm(col)};
}

bool is_admissible(const OperatorFamily& fam, double tol) {
  const auto g = gram_norms(fam);
  return g.row <= 1.0 + tol && g.col <= 1.0 + tol;
}

CMatrix row_block(const OperatorFamily& fam, const CMatrix& q) {
  if (q.rows() != fam.dim()) throw std::invalid_argument("row_block: dimension mismatch");
  const auto n = static_cast<Eigen::Index>(fam.size());
  CMatrix out(fam.dim(), n * q.cols());
  for (Eigen::Index j = 0; j < n; ++j)
    out.middleCols(j * q.cols(), q.cols()) = fam[static_cast<std::size_t>(j)] * q;
  return out;
}

CMatrix col_block(const OperatorFamily& fam, const CMatrix& q) {
  if (q.cols() != fam.dim()) throw std::invalid_argument("col_block: dimension mismatch");
  const auto n = static_cast<Eigen::Index>(fam.size());
  CMatrix out(n * q.rows(), fam.dim());
  for (Eigen::Index j = 0; j < n; ++j)
    out.middleRows(j * q.rows(), q.rows()) = q * fam[static_cast<std::size_t>(j)];
  return out;
}

CMatrix transformer(const OperatorFamily& fam1, const CMatrix& q, const OperatorFamily& fam2) {
  if (fam1.size() != fam2.size()) throw std::invalid_argument("transformer: family length mismatch");
  if (q.rows() != fam1.dim() || q.cols() != fam2.dim())
    throw std::invalid_argument("transformer: dimension mismatch");
  CMatrix out = CMatrix::Zero(fam1.dim(), fam2.dim());
  for (std::size_t j = 0; j < fam1.size(); ++j) out += fam1[j] * q * fam2[j];
  return out;
}

PolynomialFamily::PolynomialFamily(std::vector<BiPolynomial> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("PolynomialFamily: empty family");
}

double PolynomialFamily::sq_sum_max(int oversample) const {
  int deg1 = 0, deg2 = 0;
  for (const auto& f : members_) {
    const auto t = f.trimmed();
    deg1 = std::max(deg1, t.deg1());
    deg2 = std::max(deg2, t.deg2());
  }
  const int n1 = std::max(16, oversample * (deg1 + 1));
  const int n2 = std::max(16, oversample * (deg2 + 1));
  const auto sq = [this](double u, double v) {
    const Complex z1(std::cos(u), std::sin(u));
    const Complex z2(std::cos(v), std::sin(v));
    double acc = 0.0;
    for (const auto& f : members_) acc += std::norm(evaluate(f, z1, z2));
    return acc;
  };
  return detail::torus_max_smooth(sq, n1, n2);
}

OperatorFamily family_from_polynomials(const PolynomialFamily& polys, const ContractionPair& pair,
                                       bool normalize) {
  double scale = 1.0;
  if (normalize) {
    const double m = polys.sq_sum_max();
    if (m <= 0.0)
      throw std::invalid_argument("family_from_polynomials: zero family cannot be normalized");
    scale = 1.0 / std::sqrt(m);
  }
  std::vector<CMatrix> members;
  members.reserve(polys.size());
  for (const auto& f : polys.members()) members.push_back(apply(f * Complex(scale), pair));
  return OperatorFamily(std::move(members));
}

double corollary33_gap(const PolynomialFamily& polys1, const PolynomialFamily& polys2,
                       const ContractionPair& pair1, const ContractionPair& pair2,
                       const CMatrix& q, double p) {
  if (polys1.size() != polys2.size())
    throw std::invalid_argument("corollary33_gap: family length mismatch");
  const OperatorFamily fam1 = family_from_polynomials(polys1, pair1, false);
  const OperatorFamily fam2 = family_from_polynomials(polys2, pair2, false);
  const double lhs = schatten_norm(transformer(fam1, q, fam2), p);
  const double m1 = polys1.sq_sum_max();
  const double m2 = polys2.sq_sum_max();
  return lhs - std::sqrt(m1 * m2) * schatten_norm(q, p);
}

}  // namespace funcpert
