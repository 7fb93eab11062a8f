#include "pqp/linalg.hpp"

#include <utility>

namespace pqp {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat transpose(const RatMat& a) {
  RatMat t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

RatMat matmul(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw StructureError("matmul dimension mismatch");
  RatMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      const Rat& ail = a.at(i, l);
      if (sgn(ail) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (sgn(b.at(l, j)) == 0) continue;
        c.at(i, j) += ail * b.at(l, j);
      }
    }
  return c;
}

RatVec matvec(const RatMat& a, const RatVec& x) {
  if (a.cols() != static_cast<int>(x.size())) throw StructureError("matvec dimension mismatch");
  RatVec y(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (sgn(a.at(i, j)) == 0 || sgn(x[j]) == 0) continue;
      y[i] += a.at(i, j) * x[j];
    }
  return y;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw StructureError("dot dimension mismatch");
  Rat acc;
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
    acc += a[i] * b[i];
  }
  return acc;
}

bool is_symmetric(const RatMat& a) {
  if (a.rows() != a.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (a.at(i, j) != a.at(j, i)) return false;
  return true;
}

std::optional<RatVec> solve_system(RatMat a, RatVec b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw StructureError("solve_system expects square system");
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (sgn(a.at(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      std::swap(b[piv], b[col]);
    }
    for (int i = col + 1; i < n; ++i) {
      if (sgn(a.at(i, col)) == 0) continue;
      Rat f = a.at(i, col) / a.at(col, col);
      a.at(i, col) = 0;
      for (int j = col + 1; j < n; ++j) {
        if (sgn(a.at(col, j)) == 0) continue;
        a.at(i, j) -= f * a.at(col, j);
      }
      if (sgn(b[col]) != 0) b[i] -= f * b[col];
    }
  }
  RatVec x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat acc = b[i];
    for (int j = i + 1; j < n; ++j)
      if (sgn(a.at(i, j)) != 0 && sgn(x[j]) != 0) acc -= a.at(i, j) * x[j];
    x[i] = acc / a.at(i, i);
  }
  return x;
}

std::optional<RatMat> try_invert(RatMat a) {
  const int n = a.rows();
  if (a.cols() != n) throw StructureError("try_invert expects square matrix");
  RatMat inv = RatMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (sgn(a.at(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      if (sgn(a.at(col, j)) != 0) a.at(col, j) /= d;
      if (sgn(inv.at(col, j)) != 0) inv.at(col, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || sgn(a.at(i, col)) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        if (sgn(a.at(col, j)) != 0) a.at(i, j) -= f * a.at(col, j);
        if (sgn(inv.at(col, j)) != 0) inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace pqp
