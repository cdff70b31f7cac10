#pragma once

#include <variant>

#include "holonet/linalg.hpp"
#include "holonet/shift_operator.hpp"

namespace holonet {

/// Operators on a module fiber: dense matrices on C^c, or shift-calculus
/// operators on l2(N) (x) C^c.
using Operator = std::variant<Matrix, ShiftOperator>;

enum class Ampliation { Dense, Shift };

Ampliation kind_of(const Operator& a);
Index colors_of(const Operator& a);

/// 1 (x) u in the given ampliation.
Operator ampliate(Ampliation kind, const Matrix& u);

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator adjoint(const Operator& a);

/// Conjugation ad u (x) 1: u a u^*.
Operator conjugate(const Operator& a, const Matrix& u);

/// Upper bound for the operator norm, zero exactly for the zero operator.
double norm_bound(const Operator& a);

/// Norm of the image in the Calkin algebra (bounded above); dense operators
/// act on finite-dimensional spaces and are always compact.
double essential_norm(const Operator& a);

/// Kernel basis: SVD threshold for dense matrices, certified window for
/// shift operators (vectors in the first `rows/c` summands).
Matrix kernel_basis(const Operator& a, double threshold);

/// Apply 1 (x) m to window vectors with c colors per summand.
Matrix apply_color(const Matrix& m, const Matrix& vectors);

}  // namespace holonet
