#ifndef PQP_CRISSCROSS_HPP
#define PQP_CRISSCROSS_HPP

#include <functional>
#include <variant>
#include <vector>

#include "pqp/core.hpp"

namespace pqp {

// Complementary index set B: index j selects w_j as basic when j is in B,
// z_j otherwise. The full set is always a basis (M_B = I).
class Basis {
 public:
  Basis() = default;
  explicit Basis(int k) : members_(k, true) {}
  Basis(int k, std::vector<bool> members) : members_(std::move(members)) {
    if (static_cast<int>(members_.size()) != k) throw StructureError("basis size mismatch");
  }

  int k() const { return static_cast<int>(members_.size()); }
  bool contains(int j) const { return members_[j]; }
  bool full() const;
  int count() const;
  const std::vector<bool>& members() const { return members_; }

  Basis flipped(int j) const {
    Basis b = *this;
    b.members_[j] = !b.members_[j];
    return b;
  }

  bool operator==(const Basis&) const = default;

 private:
  std::vector<bool> members_;
};

enum class PivotKind { Diagonal, Exchange };

// r: least index with negative basic value; s: least index with a positive
// entry in dictionary row r; p = max(r, s). Diagonal when the dictionary's
// (p, p) entry is nonzero, exchange otherwise.
struct PivotChoice {
  int r = -1;
  int s = -1;
  int p = -1;
  PivotKind kind = PivotKind::Diagonal;
};

// B xor {p} for a diagonal pivot, B xor {r, s} for an exchange pivot.
Basis apply_pivot(const Basis& basis, const PivotChoice& choice);

struct BasicSolution {
  Basis basis;
  EpsVector lambda;  // basic value at index j (w_j if j in B, z_j otherwise)
  EpsVector w, z;
};

BasicSolution scatter_solution(const Basis& basis, const EpsVector& lambda);

// Case (a) of the method: dictionary row r is entirely nonpositive while the
// basic value at r is negative, so no nonnegative solution exists. The row
// does not depend on the right-hand side, hence not on mu or eps.
struct InfeasibilityCertificate {
  Basis basis;
  int r = -1;
  RatVec dictionary_row;
  Rat lambda_base, lambda_pert;  // the offending basic value s + eps t
};

struct SolveStats {
  long pivots = 0;
};

struct SolveResult {
  std::variant<BasicSolution, InfeasibilityCertificate> outcome;
  SolveStats stats;

  bool solved() const { return std::holds_alternative<BasicSolution>(outcome); }
  const BasicSolution& solution() const { return std::get<BasicSolution>(outcome); }
  const InfeasibilityCertificate& certificate() const {
    return std::get<InfeasibilityCertificate>(outcome);
  }
};

struct SolveOptions {
  long max_pivots = 1000000;
  // Visited-set non-repetition check plus the exchange-pivot antisymmetry
  // assertion. Off by default; every violation is an InvariantFault.
  bool check_invariants = false;
  // Observer called on the initial basis and after every pivot.
  std::function<void(const Basis&, const EpsVector&)> on_iterate;
};

// Pivoting state for one LCP matrix: the current basis and the exact inverse
// of M_B. Dictionary rows and columns are formed on demand from the inverse;
// pivots update the inverse in place in O(k^2) instead of refactorizing.
class Dictionary {
 public:
  Dictionary(const ParametricLCP& lcp, Basis basis);

  int k() const { return lcp_->k; }
  const ParametricLCP& lcp() const { return *lcp_; }
  const Basis& basis() const { return basis_; }
  const RatMat& inverse() const { return inv_; }

  // lambda_B = M_B^{-1} q for both components of q.
  EpsVector basic_values(const EpsVector& q) const;

  RatVec row(int r) const;
  RatVec column(int j) const;

  // Pivot steps. `col_*` are dictionary columns previously obtained from
  // column(); `lambda` (when given) is co-transformed so it stays equal to
  // basic_values(q) for the untouched right-hand side.
  void pivot_diagonal(int p, const RatVec& col_p, EpsVector* lambda = nullptr);
  void pivot_exchange(int r, int s, const RatVec& col_r, const RatVec& col_s,
                      EpsVector* lambda = nullptr);
  void apply(const PivotChoice& choice);

  // Re-invert M_B from scratch (used when jumping to an unrelated basis).
  void reset(Basis basis);

 private:
  void rebuild();

  const ParametricLCP* lcp_;
  Basis basis_;
  RatMat inv_;
};

// One criss-cross run on an existing dictionary; the dictionary is left at
// the final basis so path tracing can continue from it.
SolveResult criss_cross_run(Dictionary& dict, const EpsVector& q, const SolveOptions& opts = {});

// Least-index criss-cross method from a given start basis. Requires M PSD
// (guaranteed for LCPs built by qp_to_lcp).
SolveResult criss_cross_solve(const ParametricLCP& lcp, const EpsVector& q, const Basis& start,
                              const SolveOptions& opts = {});

// Basic solution for one basis (fresh factorization).
BasicSolution basic_solution(const ParametricLCP& lcp, const Basis& basis, const EpsVector& q);

// Row r of the dictionary -M_B^{-1} M_N (fresh factorization).
RatVec dictionary_row(const ParametricLCP& lcp, const Basis& basis, int r);

}  // namespace pqp

#endif
