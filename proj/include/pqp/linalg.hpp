#ifndef PQP_LINALG_HPP
#define PQP_LINALG_HPP

#include <optional>
#include <vector>

#include "pqp/rat.hpp"

namespace pqp {

using RatVec = std::vector<Rat>;

// Dense row-major rational matrix. The solver exploits sparsity by skipping
// zero entries in its inner loops, not through the storage format.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const RatMat&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

RatMat transpose(const RatMat& a);
RatMat matmul(const RatMat& a, const RatMat& b);
RatVec matvec(const RatMat& a, const RatVec& x);
Rat dot(const RatVec& a, const RatVec& b);
bool is_symmetric(const RatMat& a);

// Exact Gaussian elimination, pivoting on the first nonzero entry of each
// column. Returns nullopt when the matrix is singular.
std::optional<RatVec> solve_system(RatMat a, RatVec b);

// Exact Gauss-Jordan inverse; nullopt when singular.
std::optional<RatMat> try_invert(RatMat a);

}  // namespace pqp

#endif
