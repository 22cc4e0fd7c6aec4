#include "funcpert/pairs.hpp"

#include <cmath>
#include <stdexcept>

namespace funcpert {

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::diagonal: return "diagonal";
    case SchemeKind::poly_of_contraction: return "poly";
    case SchemeKind::triangular: return "triangular";
  }
  return "?";
}

SchemeKind scheme_kind_from_string(const std::string& name) {
  if (name == "diagonal") return SchemeKind::diagonal;
  if (name == "poly" || name == "poly_of_contraction") return SchemeKind::poly_of_contraction;
  if (name == "triangular") return SchemeKind::triangular;
  throw std::invalid_argument("unknown pair scheme: " + name);
}

namespace {

constexpr int kPolyDegreeCap = 4;

Eigen::VectorXcd draw_disk_vector(Rng& rng, int n, double radius = 1.0) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.disk(radius);
  return v;
}

CMatrix nilpotent_shift(int d) {
  CMatrix n = CMatrix::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) n(i, i + 1) = 1.0;
  return n;
}

CMatrix poly_of_matrix(const Eigen::VectorXcd& coef, const CMatrix& base) {
  const auto d = base.rows();
  CMatrix acc = CMatrix::Zero(d, d);
  for (Eigen::Index k = coef.size() - 1; k >= 0; --k) {
    if (k != coef.size() - 1) acc = acc * base;
    acc += coef(k) * CMatrix::Identity(d, d);
  }
  return acc;
}

// Scale coefficients so the evaluated matrix is a contraction; returns the
// rescaled coefficients and the matrix.
std::pair<Eigen::VectorXcd, CMatrix> normalize_poly(Eigen::VectorXcd coef, const CMatrix& base) {
  // first by the grid sup of the scalar polynomial (a von Neumann bound),
  // then by the actual operator norm, which is authoritative
  std::vector<Complex> c(coef.data(), coef.data() + coef.size());
  const double sup = sup_norm_torus(UniPolynomial(c)).grid_max;
  if (sup > 1.0) coef /= sup;
  CMatrix m = poly_of_matrix(coef, base);
  const double nm = operator_norm(m);
  if (nm > 1.0) {
    coef /= nm;
    m /= nm;
  }
  return {coef, m};
}

SampledPair make_diagonal(Rng& rng, int d) {
  Eigen::VectorXcd t = draw_disk_vector(rng, d);
  Eigen::VectorXcd r = draw_disk_vector(rng, d);
  ContractionPair pair{CMatrix(t.asDiagonal()), CMatrix(r.asDiagonal())};
  return SampledPair{SchemeKind::diagonal, std::move(pair), std::move(t), std::move(r), {}, {}, {}};
}

SampledPair make_poly(Rng& rng, int d) {
  CMatrix c(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  const double nc = operator_norm(c);
  if (nc > 1e-12)
    c /= nc;
  else
    c = CMatrix::Identity(d, d);
  const int deg_p = rng.uniform_int(1, kPolyDegreeCap);
  const int deg_q = rng.uniform_int(1, kPolyDegreeCap);
  auto [ct, t] = normalize_poly(draw_disk_vector(rng, deg_p + 1), c);
  auto [cr, r] = normalize_poly(draw_disk_vector(rng, deg_q + 1), c);
  // polynomials in one matrix commute up to roundoff
  ContractionPair pair{std::move(t), std::move(r), {1e-10, 1e-10}};
  return SampledPair{SchemeKind::poly_of_contraction, std::move(pair), {}, {}, std::move(c),
                     std::move(ct), std::move(cr)};
}

// Coefficients over the shared nilpotent shift, rescaled so the operator
// norm is exactly 1 (attained; the pairs are genuinely non-normal).
std::pair<Eigen::VectorXcd, CMatrix> normalize_nilpotent(Eigen::VectorXcd coef, const CMatrix& n) {
  CMatrix m = poly_of_matrix(coef, n);
  double nm = operator_norm(m);
  if (nm < 1e-12) {
    coef(0) = 0.5;
    m = poly_of_matrix(coef, n);
    nm = operator_norm(m);
  }
  coef /= nm;
  m /= nm;
  return {coef, m};
}

SampledPair make_triangular(Rng& rng, int d) {
  const CMatrix n = nilpotent_shift(d);
  const int terms = std::min(d, kPolyDegreeCap + 1);
  auto [ct, t] = normalize_nilpotent(draw_disk_vector(rng, terms), n);
  auto [cr, r] = normalize_nilpotent(draw_disk_vector(rng, terms), n);
  ContractionPair pair{std::move(t), std::move(r), {1e-10, 1e-10}};
  return SampledPair{SchemeKind::triangular, std::move(pair), {}, {}, n, std::move(ct),
                     std::move(cr)};
}

Complex clamp_disk(Complex z) {
  const double a = std::abs(z);
  return a > 1.0 ? z / a : z;
}

}  // namespace

SampledPair gen_pair(const PairScheme& scheme) {
  if (scheme.dim < 1) throw std::invalid_argument("gen_pair: dim must be >= 1");
  Rng rng(scheme.seed);
  switch (scheme.kind) {
    case SchemeKind::diagonal: return make_diagonal(rng, scheme.dim);
    case SchemeKind::poly_of_contraction: return make_poly(rng, scheme.dim);
    case SchemeKind::triangular: return make_triangular(rng, scheme.dim);
  }
  throw std::logic_error("gen_pair: unreachable");
}

SampledPair perturb_pair(const SampledPair& sp, double eps, std::uint64_t seed) {
  if (eps < 0.0) throw std::invalid_argument("perturb_pair: eps must be >= 0");
  Rng rng(seed);
  switch (sp.kind) {
    case SchemeKind::diagonal: {
      Eigen::VectorXcd t = sp.diag_t, r = sp.diag_r;
      for (Eigen::Index i = 0; i < t.size(); ++i) t(i) = clamp_disk(t(i) + rng.disk(eps));
      for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = clamp_disk(r(i) + rng.disk(eps));
      ContractionPair pair{CMatrix(t.asDiagonal()), CMatrix(r.asDiagonal())};
      return SampledPair{sp.kind, std::move(pair), std::move(t), std::move(r), {}, {}, {}};
    }
    case SchemeKind::poly_of_contraction:
    case SchemeKind::triangular: {
      // half of eps moves the coefficients, the other half absorbs the
      // renormalization, so the total distance stays below eps
      Eigen::VectorXcd ct = sp.coef_t, cr = sp.coef_r;
      if (sp.kind == SchemeKind::poly_of_contraction) {
        const double step_t = 0.5 * eps / double(ct.size());
        const double step_r = 0.5 * eps / double(cr.size());
        for (Eigen::Index k = 0; k < ct.size(); ++k) ct(k) += rng.disk(step_t);
        for (Eigen::Index k = 0; k < cr.size(); ++k) cr(k) += rng.disk(step_r);
      } else {
        // move only the constant coefficient: the shared diagonal
        ct(0) += rng.disk(0.5 * eps);
        cr(0) += rng.disk(0.5 * eps);
      }
      CMatrix t = poly_of_matrix(ct, sp.base);
      CMatrix r = poly_of_matrix(cr, sp.base);
      const double nt = operator_norm(t);
      if (nt > 1.0) {
        ct /= nt;
        t /= nt;
      }
      const double nr = operator_norm(r);
      if (nr > 1.0) {
        cr /= nr;
        r /= nr;
      }
      ContractionPair pair{std::move(t), std::move(r), {1e-10, 1e-10}};
      return SampledPair{sp.kind, std::move(pair), {}, {}, sp.base, std::move(ct), std::move(cr)};
    }
  }
  throw std::logic_error("perturb_pair: unreachable");
}

}  // namespace funcpert
