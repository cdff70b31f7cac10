#pragma once

#include <map>

#include "holonet/linalg.hpp"

namespace holonet {

/// Bounded operator on l2(N) (x) C^c in normal form
///
///   T = sum_{k>0} S^k (1 (x) M_k) + (1 (x) M_0) + sum_{k>0} (1 (x) M_{-k}) S*^k + F,
///
/// where S is the unilateral shift and F is a finite block matrix supported
/// on the first N summands. Block (m, n) of the Toeplitz part is M_{m-n}.
/// The relations S*S = 1 and SS* = 1 - P0 are absorbed into F, so the
/// representation is unique and products are exact up to rounding.
class ShiftOperator {
 public:
  explicit ShiftOperator(Index colors = 1);

  static ShiftOperator shift(Index colors);    // S (x) 1
  static ShiftOperator coshift(Index colors);  // S* (x) 1
  static ShiftOperator constant(const Matrix& m);  // 1 (x) M
  static ShiftOperator identity(Index colors);
  /// Finite block matrix on the first rows/colors summands.
  static ShiftOperator finite(const Matrix& block, Index colors);
  /// Projection onto summand 0.
  static ShiftOperator p0(Index colors);

  Index colors() const { return colors_; }
  const std::map<int, Matrix>& symbol() const { return symbol_; }
  const Matrix& finite_part() const { return finite_; }
  /// Number of summands carrying the finite part.
  Index support() const { return finite_.rows() / colors_; }

  /// Largest positive and negative symbol degree (zero if absent).
  int up() const;
  int down() const;

  /// The operator compressed to summands [0, rows) x [0, cols), as a dense
  /// matrix of size rows*c x cols*c.
  Matrix window(Index rows, Index cols) const;

  ShiftOperator operator+(const ShiftOperator& o) const;
  ShiftOperator operator-(const ShiftOperator& o) const;
  ShiftOperator operator*(const ShiftOperator& o) const;
  ShiftOperator operator*(Complex s) const;
  ShiftOperator adjoint() const;

  /// Sum of coefficient norms of the symbol; zero iff the operator is compact.
  double symbol_norm() const;
  /// symbol_norm plus the norm of the finite part; zero iff the operator is 0.
  double norm_bound() const;
  bool is_compact(double tol) const { return symbol_norm() <= tol; }

  /// Drop symbol coefficients below `tol` and trailing zero blocks of F.
  ShiftOperator pruned(double tol) const;

  /// 1 (x) (L (x) X_color (x) R) applied to every summand.
  ShiftOperator color_kron(const Matrix& left, const Matrix& right) const;

  /// Multiply every summand's color by a constant on either side.
  ShiftOperator left_color(const Matrix& m) const;
  ShiftOperator right_color(const Matrix& m) const;

  bool operator==(const ShiftOperator& o) const;

 private:
  Index colors_;
  std::map<int, Matrix> symbol_;
  Matrix finite_;

  void set_finite(Matrix f);
};

/// Certificate that the symbol is a direct sum of pure shift channels: the
/// coefficients M_k are partial isometries with mutually orthogonal initial
/// spaces summing to C^c and mutually orthogonal final spaces. Then every
/// kernel vector is supported in the first support() + max(up, down) + 1
/// summands.
bool has_channel_certificate(const ShiftOperator& t, double tol);

/// Stabilization bound for kernel windows of a certified operator.
Index kernel_window(const ShiftOperator& t);

/// Orthonormal basis of ker T as columns of a window of `kernel_window + extra`
/// summands. Throws NotFredholm without a channel certificate.
Matrix shift_kernel(const ShiftOperator& t, double threshold, Index extra = 0);

}  // namespace holonet
