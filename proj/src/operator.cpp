#include "holonet/operator.hpp"

#include "holonet/errors.hpp"

namespace holonet {

namespace {

template <class F>
Operator binary(const Operator& a, const Operator& b, F f) {
  if (a.index() != b.index())
    throw Error(ErrorCode::FiberMismatch, "cannot combine dense and shift operators");
  if (colors_of(a) != colors_of(b)) throw Error(ErrorCode::FiberMismatch, "operator sizes differ");
  if (const auto* x = std::get_if<Matrix>(&a)) return Operator(Matrix(f(*x, std::get<Matrix>(b))));
  return Operator(f(std::get<ShiftOperator>(a), std::get<ShiftOperator>(b)));
}

}  // namespace

Ampliation kind_of(const Operator& a) {
  return std::holds_alternative<Matrix>(a) ? Ampliation::Dense : Ampliation::Shift;
}

Index colors_of(const Operator& a) {
  if (const auto* m = std::get_if<Matrix>(&a)) return m->rows();
  return std::get<ShiftOperator>(a).colors();
}

Operator ampliate(Ampliation kind, const Matrix& u) {
  if (kind == Ampliation::Dense) return u;
  return ShiftOperator::constant(u);
}

Operator operator+(const Operator& a, const Operator& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Operator operator-(const Operator& a, const Operator& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Operator operator*(const Operator& a, const Operator& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Operator adjoint(const Operator& a) {
  if (const auto* m = std::get_if<Matrix>(&a)) return Matrix(m->adjoint());
  return std::get<ShiftOperator>(a).adjoint();
}

Operator conjugate(const Operator& a, const Matrix& u) {
  if (const auto* m = std::get_if<Matrix>(&a)) return Matrix(u * *m * u.adjoint());
  return std::get<ShiftOperator>(a).left_color(u).right_color(u.adjoint());
}

double norm_bound(const Operator& a) {
  if (const auto* m = std::get_if<Matrix>(&a)) return op_norm(*m);
  return std::get<ShiftOperator>(a).norm_bound();
}

double essential_norm(const Operator& a) {
  if (std::holds_alternative<Matrix>(a)) return 0.0;
  return std::get<ShiftOperator>(a).symbol_norm();
}

Matrix kernel_basis(const Operator& a, double threshold) {
  if (const auto* m = std::get_if<Matrix>(&a)) return null_space(*m, threshold);
  return shift_kernel(std::get<ShiftOperator>(a), threshold);
}

Matrix apply_color(const Matrix& m, const Matrix& vectors) {
  const Index c = m.cols();
  if (c == 0 || vectors.rows() % c != 0) throw Error(ErrorCode::FiberMismatch, "vectors are not whole summands");
  Matrix out(vectors.rows(), vectors.cols());
  for (Index s = 0; s < vectors.rows() / c; ++s) out.middleRows(s * c, c) = m * vectors.middleRows(s * c, c);
  return out;
}

}  // namespace holonet
