#include "pqp/core.hpp"

namespace pqp {

RatVec affine_at(const AffineVec& v, const Rat& mu) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].at(mu);
  return out;
}

RatVec affine_constants(const AffineVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].constant;
  return out;
}

RatVec affine_slopes(const AffineVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].slope;
  return out;
}

void validate_qp(const ParametricQP& qp, bool check_psd) {
  if (qp.n < 1) throw StructureError("problem needs at least one variable");
  if (qp.m < 0) throw StructureError("negative constraint count");
  if (qp.Q.rows() != qp.n || qp.Q.cols() != qp.n)
    throw StructureError("Q must be n x n");
  if (qp.m > 0 && (qp.A.rows() != qp.m || qp.A.cols() != qp.n))
    throw StructureError("A must be m x n");
  if (static_cast<int>(qp.c.size()) != qp.n) throw StructureError("c must have n entries");
  if (static_cast<int>(qp.b.size()) != qp.m) throw StructureError("b must have m entries");
  if (qp.mu_min > qp.mu_max) throw StructureError("mu_min exceeds mu_max");
  if (!is_symmetric(qp.Q)) throw StructureError("Q is not symmetric");
  if (check_psd && !validate_psd(qp.Q))
    throw StructureError("Q is not positive semidefinite");
}

Rat objective_value(const ParametricQP& qp, const Rat& mu, const RatVec& x) {
  if (static_cast<int>(x.size()) != qp.n) throw StructureError("objective_value: bad x size");
  Rat acc;
  for (int i = 0; i < qp.n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < qp.n; ++j) {
      if (sgn(qp.Q.at(i, j)) == 0 || sgn(x[j]) == 0) continue;
      acc += x[i] * qp.Q.at(i, j) * x[j];
    }
  }
  for (int i = 0; i < qp.n; ++i) {
    if (sgn(x[i]) == 0) continue;
    acc += qp.c[i].at(mu) * x[i];
  }
  return acc;
}

namespace {

// Symmetric elimination shared by validate_psd and psd_rank. Returns the
// positive pivot count, or -1 when the matrix is not PSD.
int psd_eliminate(RatMat s) {
  const int n = s.rows();
  std::vector<bool> active(n, true);
  int remaining = n;
  int positive_pivots = 0;
  while (remaining > 0) {
    // Diagonal signs first; zero-diagonal rows must be entirely zero.
    for (int i = 0; i < n; ++i) {
      if (!active[i]) continue;
      int ds = sgn(s.at(i, i));
      if (ds < 0) return -1;
      if (ds == 0) {
        for (int j = 0; j < n; ++j)
          if (active[j] && j != i && sgn(s.at(i, j)) != 0) return -1;
        active[i] = false;
        --remaining;
      }
    }
    if (remaining == 0) break;
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (active[i] && sgn(s.at(i, i)) > 0) {
        piv = i;
        break;
      }
    if (piv < 0) break;  // all remaining rows were zero
    ++positive_pivots;
    const Rat d = s.at(piv, piv);
    for (int i = 0; i < n; ++i) {
      if (!active[i] || i == piv || sgn(s.at(i, piv)) == 0) continue;
      Rat f = s.at(i, piv) / d;
      for (int j = 0; j < n; ++j) {
        if (!active[j] || j == piv) continue;
        if (sgn(s.at(piv, j)) == 0) continue;
        s.at(i, j) -= f * s.at(piv, j);
      }
    }
    active[piv] = false;
    --remaining;
  }
  return positive_pivots;
}

}  // namespace

bool validate_psd(const RatMat& q) {
  if (q.rows() != q.cols()) throw StructureError("PSD test on non-square matrix");
  if (!is_symmetric(q)) throw StructureError("PSD test on non-symmetric matrix");
  return psd_eliminate(q) >= 0;
}

int psd_rank(const RatMat& q) {
  if (q.rows() != q.cols() || !is_symmetric(q))
    throw StructureError("rank computation expects a symmetric matrix");
  int r = psd_eliminate(q);
  if (r < 0) throw StructureError("rank computation expects a PSD matrix");
  return r;
}

ParametricLCP qp_to_lcp(const ParametricQP& qp, bool check_psd) {
  validate_qp(qp, check_psd);
  const int n = qp.n, m = qp.m, k = n + m;
  ParametricLCP lcp;
  lcp.k = k;
  lcp.n_orig = n;
  lcp.mu_min = qp.mu_min;
  lcp.mu_max = qp.mu_max;
  lcp.M = RatMat(k, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lcp.M.at(i, j) = 2 * qp.Q.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      lcp.M.at(j, n + i) = -qp.A.at(i, j);
      lcp.M.at(n + i, j) = qp.A.at(i, j);
    }
  lcp.q.resize(k);
  for (int i = 0; i < n; ++i) lcp.q[i] = qp.c[i];
  for (int i = 0; i < m; ++i)
    lcp.q[n + i] = AffineScalar{-qp.b[i].constant, -qp.b[i].slope};
  return lcp;
}

EpsVector eps_rhs_at(const ParametricLCP& lcp, const Rat& mu) {
  return EpsVector{lcp.q_at(mu), affine_slopes(lcp.q)};
}

EpsVector fixed_rhs_at(const ParametricLCP& lcp, const Rat& mu) {
  return EpsVector{lcp.q_at(mu), RatVec(lcp.k)};
}

RatVec FreeSplit::fold(const RatVec& x_split) const {
  if (static_cast<int>(x_split.size()) != n_split)
    throw StructureError("fold: split solution has wrong size");
  RatVec x(n_orig);
  for (int i = 0; i < n_orig; ++i) {
    x[i] = x_split[i];
    if (minus_col[i] >= 0) x[i] -= x_split[minus_col[i]];
  }
  return x;
}

EmbeddedQP embed_free_variables(const RatMat& Q, const RatMat& A, const AffineVec& c,
                                const std::vector<bool>& free_mask) {
  const int n = Q.rows();
  if (Q.cols() != n) throw StructureError("embed: Q must be square");
  if (static_cast<int>(c.size()) != n) throw StructureError("embed: c size mismatch");
  if (static_cast<int>(free_mask.size()) != n) throw StructureError("embed: mask size mismatch");
  const int m = A.rows();
  if (m > 0 && A.cols() != n) throw StructureError("embed: A column count mismatch");

  EmbeddedQP out;
  out.split.n_orig = n;
  out.split.minus_col.assign(n, -1);
  int extra = 0;
  for (int i = 0; i < n; ++i)
    if (free_mask[i]) out.split.minus_col[i] = n + extra++;
  const int ns = n + extra;
  out.split.n_split = ns;

  // x_orig = B x_split with B = [I | -E]; Q' = B^T Q B keeps the form PSD.
  out.Q = RatMat(ns, ns);
  std::vector<int> orig(ns);      // original variable behind each split column
  std::vector<int> colsign(ns);   // +1 for plus part, -1 for minus part
  for (int j = 0; j < n; ++j) {
    orig[j] = j;
    colsign[j] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (out.split.minus_col[i] >= 0) {
      orig[out.split.minus_col[i]] = i;
      colsign[out.split.minus_col[i]] = -1;
    }
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      out.Q.at(i, j) = colsign[i] * colsign[j] * Q.at(orig[i], orig[j]);

  out.A = RatMat(m, ns);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < ns; ++j) out.A.at(r, j) = colsign[j] * A.at(r, orig[j]);

  out.c.resize(ns);
  for (int j = 0; j < ns; ++j)
    out.c[j] = AffineScalar{colsign[j] * c[orig[j]].constant, colsign[j] * c[orig[j]].slope};
  return out;
}

}  // namespace pqp
