#ifndef PQP_CORE_HPP
#define PQP_CORE_HPP

#include <vector>

#include "pqp/linalg.hpp"
#include "pqp/rat.hpp"

namespace pqp {

// f(mu) = constant + mu * slope, evaluated exactly at rational mu.
struct AffineScalar {
  Rat constant;
  Rat slope;

  Rat at(const Rat& mu) const { return constant + mu * slope; }
  bool operator==(const AffineScalar&) const = default;
};

using AffineVec = std::vector<AffineScalar>;

RatVec affine_at(const AffineVec& v, const Rat& mu);
RatVec affine_constants(const AffineVec& v);
RatVec affine_slopes(const AffineVec& v);

// minimize  x^T Q x + c(mu)^T x   subject to  A x >= b(mu), x >= 0,
// for mu in [mu_min, mu_max]. Q symmetric positive semidefinite.
struct ParametricQP {
  int n = 0;  // variables
  int m = 0;  // constraints
  RatMat Q;   // n x n
  RatMat A;   // m x n
  AffineVec c;  // n
  AffineVec b;  // m
  Rat mu_min, mu_max;
};

// Shape, symmetry, interval ordering and (optionally) positive
// semidefiniteness. Throws StructureError on the first violation.
void validate_qp(const ParametricQP& qp, bool check_psd = true);

Rat objective_value(const ParametricQP& qp, const Rat& mu, const RatVec& x);

// Exact PSD test by symmetric rational elimination: at every step all
// remaining diagonal entries must be >= 0 and any zero-diagonal row must be
// entirely zero. Throws StructureError when Q is not square symmetric.
bool validate_psd(const RatMat& q);

// Number of strictly positive pivots in the same elimination; equals rank
// when the matrix is PSD.
int psd_rank(const RatMat& q);

// find w, z >= 0 with w - M z = q(mu) and w^T z = 0. Produced from a QP by
// qp_to_lcp; the first n_orig entries of z recover the QP solution x.
struct ParametricLCP {
  int k = 0;
  RatMat M;     // k x k
  AffineVec q;  // k
  int n_orig = 0;
  Rat mu_min, mu_max;

  RatVec q_at(const Rat& mu) const { return affine_at(q, mu); }
};

// KKT reduction: M = [[2Q, -A^T], [A, 0]], q(mu) = (c(mu), -b(mu)).
// Symmetry of Q is checked unconditionally; the PSD check can be skipped.
ParametricLCP qp_to_lcp(const ParametricQP& qp, bool check_psd = true);

// Componentwise s + eps * t for a symbolic, arbitrarily small eps > 0. Sign
// of component j is sign(s_j) when nonzero, otherwise sign(t_j).
struct EpsVector {
  RatVec base;
  RatVec pert;

  int size() const { return static_cast<int>(base.size()); }
  int sign_at(int j) const {
    int s = sgn(base[j]);
    return s != 0 ? s : sgn(pert[j]);
  }
  bool nonneg_at(int j) const { return sign_at(j) >= 0; }
};

// Right-hand side for tracing upward from mu: q(mu + eps) = q(mu) + eps * q'.
EpsVector eps_rhs_at(const ParametricLCP& lcp, const Rat& mu);

// q(mu) with no perturbation (numeric solve at exactly mu).
EpsVector fixed_rhs_at(const ParametricLCP& lcp, const Rat& mu);

// Back-map from a split (sign-free variables doubled) solution space to the
// original one: x_orig[i] = x[i] - x[minus_col[i]] when variable i was free.
struct FreeSplit {
  int n_orig = 0;
  int n_split = 0;
  std::vector<int> minus_col;  // -1 for variables that were not split

  RatVec fold(const RatVec& x_split) const;
};

struct EmbeddedQP {
  RatMat Q;
  RatMat A;
  AffineVec c;
  FreeSplit split;
};

// Rewrites sign-free variables as differences of nonnegative pairs so the
// problem fits the standard form. Minus columns are appended after the
// original block; Q stays PSD (it becomes singular whenever a variable is
// split). b is unaffected.
EmbeddedQP embed_free_variables(const RatMat& Q, const RatMat& A, const AffineVec& c,
                                const std::vector<bool>& free_mask);

}  // namespace pqp

#endif
