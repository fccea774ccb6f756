#pragma once

#include <optional>
#include <vector>

#include "conmod/matrix.hpp"

namespace conmod {

// U * A * V = D with U, V invertible over O and D = diag(w^v_0, w^v_1, ...) where w is the
// uniformizer, v_0 <= v_1 <= ... and zero diagonal entries last.
struct SnfResult {
  Matrix U;
  Matrix D;
  Matrix V;
  std::vector<Valuation> diagonal_valuations;  // length min(rows, cols)

  std::size_t rank() const;
};

SnfResult snf(const Matrix& a);

// Diagonal valuations only; cheaper than snf() because no transforms are tracked.
std::vector<Valuation> snf_valuations(const Matrix& a);

std::size_t rank(const Matrix& a);

// Columns form an O-basis of {x : a x = 0}.
Matrix kernel_basis(const Matrix& a);

// Some x over O with a x = b, if one exists.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Column span membership and solving against one matrix, many right-hand sides.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& a);

  std::optional<Vector> solve(const Vector& b) const;
  bool contains(const Vector& b) const { return solve(b).has_value(); }
  // Every column of b lies in the column span of a.
  bool contains_all(const Matrix& b) const;
  std::size_t rank() const { return rank_; }

 private:
  DvrSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  Matrix u_;
  Matrix v_;
  std::vector<Valuation> diag_;
  std::size_t rank_ = 0;
};

// coker(O^cols -> O^rows) for the map given by the columns of a.
struct CokernelInvariants {
  long free_rank = 0;
  std::vector<long> torsion_valuations;  // positive entries only, non-decreasing

  long torsion_length() const;
};

CokernelInvariants cokernel_invariants(const Matrix& a);

// An O-basis of the column span of g (columns of the result are independent).
Matrix column_basis(const Matrix& g);

// Checks U A V = D exactly, D diagonal of normalized uniformizer powers in sorted order,
// and that U, V are invertible over O. Dispatches to integer arithmetic for ZLocal.
bool verify_snf(const Matrix& a, const SnfResult& r);

// Determinant of a square matrix, exact.
DvrElement determinant(const Matrix& a);

namespace detail {
// Large square ZLocal inputs: transforms from a pivoted elimination modulo p^N and an exact
// inverse by p-adic lifting; returns nothing when its certificates cannot be established.
std::optional<SnfResult> snf_lifted(const Matrix& a);
SnfResult snf_elimination(const Matrix& a);
// Residues of a matrix over O modulo the uniformizer have full rank.
bool invertible_mod_uniformizer(const Matrix& a);
}  // namespace detail

}  // namespace conmod
