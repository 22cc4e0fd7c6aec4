#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "funcpert/funcalc.hpp"
#include "funcpert/rng.hpp"

namespace funcpert {

enum class SchemeKind { diagonal, poly_of_contraction, triangular };

std::string to_string(SchemeKind kind);
SchemeKind scheme_kind_from_string(const std::string& name);

struct PairScheme {
  SchemeKind kind = SchemeKind::diagonal;
  int dim = 4;
  std::uint64_t seed = 0;
  double perturbation_scale = 0.0;

  // Reported c with max{||T1-T2||, ||R1-R2||} <= c * eps for every
  // perturbation produced by perturb_pair.
  double distance_factor() const { return 1.0; }
};

// A generated pair together with the scheme data needed to perturb it
// within the same exactly-commuting family.
struct SampledPair {
  SchemeKind kind;
  ContractionPair pair;
  Eigen::VectorXcd diag_t, diag_r;  // diagonal kind: the eigenvalues
  CMatrix base;                     // poly kind: the contraction C
  Eigen::VectorXcd coef_t, coef_r;  // poly/triangular: normalized coefficients
};

// diagonal: i.i.d. eigenvalues uniform on the closed unit disk (commute
// exactly). poly_of_contraction: T = p(C), R = q(C) for a random contraction
// C and random polynomials, normalized to contractions. triangular: T, R
// polynomials in the shared nilpotent shift, rescaled to operator norm 1.
SampledPair gen_pair(const PairScheme& scheme);

// Moves the generating data by at most eps (per scheme: eigenvalues with a
// radial clamp back into the disk, or polynomial coefficients split across
// degrees); the result commutes exactly and stays within distance_factor *
// eps of the input in both operator norms.
SampledPair perturb_pair(const SampledPair& sp, double eps, std::uint64_t seed);

}  // namespace funcpert
