#include "holonet/shift_operator.hpp"

#include <algorithm>

#include "holonet/errors.hpp"

namespace holonet {

namespace {

Matrix pad(const Matrix& f, Index size) {
  Matrix out = Matrix::Zero(size, size);
  out.topLeftCorner(f.rows(), f.cols()) = f;
  return out;
}

}  // namespace

ShiftOperator::ShiftOperator(Index colors) : colors_(colors), finite_(0, 0) {
  if (colors_ <= 0) throw Error(ErrorCode::FiberMismatch, "shift operators need at least one color");
}

ShiftOperator ShiftOperator::shift(Index colors) {
  ShiftOperator t(colors);
  t.symbol_[1] = Matrix::Identity(colors, colors);
  return t;
}

ShiftOperator ShiftOperator::coshift(Index colors) {
  ShiftOperator t(colors);
  t.symbol_[-1] = Matrix::Identity(colors, colors);
  return t;
}

ShiftOperator ShiftOperator::constant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::FiberMismatch, "color matrix must be square");
  ShiftOperator t(m.rows());
  t.symbol_[0] = m;
  return t;
}

ShiftOperator ShiftOperator::identity(Index colors) { return constant(Matrix::Identity(colors, colors)); }

ShiftOperator ShiftOperator::finite(const Matrix& block, Index colors) {
  ShiftOperator t(colors);
  t.set_finite(block);
  return t;
}

ShiftOperator ShiftOperator::p0(Index colors) { return finite(Matrix::Identity(colors, colors), colors); }

void ShiftOperator::set_finite(Matrix f) {
  if (f.rows() != f.cols() || f.rows() % colors_ != 0)
    throw Error(ErrorCode::FiberMismatch, "finite part must be square and a whole number of summands");
  finite_ = std::move(f);
}

int ShiftOperator::up() const {
  return symbol_.empty() ? 0 : std::max(0, symbol_.rbegin()->first);
}

int ShiftOperator::down() const {
  return symbol_.empty() ? 0 : std::max(0, -symbol_.begin()->first);
}

Matrix ShiftOperator::window(Index rows, Index cols) const {
  const Index c = colors_;
  Matrix out = Matrix::Zero(rows * c, cols * c);
  for (const auto& [k, m] : symbol_)
    for (Index n = 0; n < cols; ++n) {
      const Index row = n + k;
      if (row >= 0 && row < rows) out.block(row * c, n * c, c, c) = m;
    }
  const Index f = std::min(finite_.rows(), rows * c);
  const Index g = std::min(finite_.cols(), cols * c);
  out.topLeftCorner(f, g) += finite_.topLeftCorner(f, g);
  return out;
}

ShiftOperator ShiftOperator::operator+(const ShiftOperator& o) const {
  if (o.colors_ != colors_) throw Error(ErrorCode::FiberMismatch, "color dimensions differ");
  ShiftOperator out = *this;
  for (const auto& [k, m] : o.symbol_) {
    auto it = out.symbol_.find(k);
    if (it == out.symbol_.end())
      out.symbol_.emplace(k, m);
    else
      it->second += m;
  }
  const Index size = std::max(finite_.rows(), o.finite_.rows());
  out.finite_ = pad(finite_, size) + pad(o.finite_, size);
  return out.pruned(0.0);
}

ShiftOperator ShiftOperator::operator-(const ShiftOperator& o) const { return *this + o * Complex(-1.0); }

ShiftOperator ShiftOperator::operator*(Complex s) const {
  ShiftOperator out = *this;
  for (auto& [k, m] : out.symbol_) m *= s;
  out.finite_ *= s;
  return out.pruned(0.0);
}

ShiftOperator ShiftOperator::operator*(const ShiftOperator& o) const {
  if (o.colors_ != colors_) throw Error(ErrorCode::FiberMismatch, "color dimensions differ");
  ShiftOperator sym(colors_);
  for (const auto& [i, a] : symbol_)
    for (const auto& [j, b] : o.symbol_) {
      auto it = sym.symbol_.find(i + j);
      if (it == sym.symbol_.end())
        sym.symbol_.emplace(i + j, a * b);
      else
        it->second += a * b;
    }
  // T(a)T(b) - T(ab) and the finite-part products live in this corner
  const Index w = std::max(support(), o.support()) + std::max(up(), o.down());
  ShiftOperator out = sym;
  if (w > 0) {
    const Index inner = w + down() + 1;
    out.finite_ = window(w, inner) * o.window(inner, w) - sym.window(w, w);
  }
  return out.pruned(0.0);
}

ShiftOperator ShiftOperator::adjoint() const {
  ShiftOperator out(colors_);
  for (const auto& [k, m] : symbol_) out.symbol_.emplace(-k, m.adjoint());
  out.finite_ = finite_.adjoint();
  return out;
}

double ShiftOperator::symbol_norm() const {
  double s = 0.0;
  for (const auto& [k, m] : symbol_) s += op_norm(m);
  return s;
}

double ShiftOperator::norm_bound() const { return symbol_norm() + op_norm(finite_); }

ShiftOperator ShiftOperator::pruned(double tol) const {
  ShiftOperator out(colors_);
  for (const auto& [k, m] : symbol_)
    if (m.size() > 0 && m.cwiseAbs().maxCoeff() > tol) out.symbol_.emplace(k, m);
  Index n = support();
  while (n > 0) {
    const Index lo = (n - 1) * colors_;
    const double edge = std::max(finite_.middleRows(lo, colors_).leftCols(n * colors_).cwiseAbs().maxCoeff(),
                                 finite_.middleCols(lo, colors_).topRows(n * colors_).cwiseAbs().maxCoeff());
    if (edge > tol) break;
    --n;
  }
  out.finite_ = finite_.topLeftCorner(n * colors_, n * colors_);
  return out;
}

ShiftOperator ShiftOperator::color_kron(const Matrix& left, const Matrix& right) const {
  const Index c = colors_;
  ShiftOperator out(left.rows() * c * right.rows());
  for (const auto& [k, m] : symbol_) out.symbol_.emplace(k, kron(left, kron(m, right)));
  const Index n = support();
  const Index nc = out.colors_;
  Matrix f = Matrix::Zero(n * nc, n * nc);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      f.block(i * nc, j * nc, nc, nc) = kron(left, kron(finite_.block(i * c, j * c, c, c), right));
  out.finite_ = std::move(f);
  return out;
}

ShiftOperator ShiftOperator::left_color(const Matrix& m) const {
  ShiftOperator out = *this;
  for (auto& [k, s] : out.symbol_) s = m * s;
  for (Index i = 0; i < support(); ++i)
    out.finite_.middleRows(i * colors_, colors_) = m * finite_.middleRows(i * colors_, colors_);
  return out.pruned(0.0);
}

ShiftOperator ShiftOperator::right_color(const Matrix& m) const {
  ShiftOperator out = *this;
  for (auto& [k, s] : out.symbol_) s = s * m;
  for (Index i = 0; i < support(); ++i)
    out.finite_.middleCols(i * colors_, colors_) = finite_.middleCols(i * colors_, colors_) * m;
  return out.pruned(0.0);
}

bool ShiftOperator::operator==(const ShiftOperator& o) const {
  if (colors_ != o.colors_) return false;
  const ShiftOperator a = pruned(0.0);
  const ShiftOperator b = o.pruned(0.0);
  return a.symbol_ == b.symbol_ && a.finite_ == b.finite_;
}

bool has_channel_certificate(const ShiftOperator& t, double tol) {
  const Index c = t.colors();
  Matrix total = Matrix::Zero(c, c);
  std::vector<Matrix> initial, final;
  for (const auto& [k, m] : t.symbol()) {
    if (op_norm(m * m.adjoint() * m - m) > tol) return false;
    initial.push_back(m.adjoint() * m);
    final.push_back(m * m.adjoint());
    total += initial.back();
  }
  if (op_norm(total - Matrix::Identity(c, c)) > tol) return false;
  for (std::size_t i = 0; i < initial.size(); ++i)
    for (std::size_t j = i + 1; j < initial.size(); ++j)
      if (op_norm(initial[i] * initial[j]) > tol || op_norm(final[i] * final[j]) > tol) return false;
  return true;
}

Index kernel_window(const ShiftOperator& t) { return t.support() + std::max(t.up(), t.down()) + 1; }

Matrix shift_kernel(const ShiftOperator& t, double threshold, Index extra) {
  if (!has_channel_certificate(t, 1e-9))
    throw Error(ErrorCode::NotFredholm, "symbol is not a sum of shift channels; kernel window is not certified");
  const Index w = kernel_window(t) + extra;
  return null_space(t.window(w + t.up(), w), threshold);
}

}  // namespace holonet
