#include "holonet/star_algebra.hpp"

#include <algorithm>
#include <numeric>

#include "holonet/errors.hpp"

namespace holonet {

Index algebra_dimension(const FiberShape& shape) {
  Index n = 0;
  for (Index b : shape) n += b * b;
  return n;
}

std::vector<FiberElement> matrix_units(const FiberShape& shape) {
  std::vector<FiberElement> out;
  for (std::size_t k = 0; k < shape.size(); ++k)
    for (Index i = 0; i < shape[k]; ++i)
      for (Index j = 0; j < shape[k]; ++j) {
        FiberElement e = fiber_zero(shape);
        e[k](i, j) = 1.0;
        out.push_back(std::move(e));
      }
  return out;
}

FiberElement fiber_identity(const FiberShape& shape) {
  FiberElement x;
  for (Index b : shape) x.push_back(Matrix::Identity(b, b));
  return x;
}

FiberElement fiber_zero(const FiberShape& shape) {
  FiberElement x;
  for (Index b : shape) x.push_back(Matrix::Zero(b, b));
  return x;
}

bool fits(const FiberElement& x, const FiberShape& shape) {
  if (x.size() != shape.size()) return false;
  for (std::size_t k = 0; k < shape.size(); ++k)
    if (x[k].rows() != shape[k] || x[k].cols() != shape[k]) return false;
  return true;
}

double fiber_distance(const FiberElement& a, const FiberElement& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::FiberMismatch, "fiber elements of different shape");
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, op_norm(a[k] - b[k]));
  return d;
}

Matrix block_diagonal(const FiberElement& x) {
  Matrix out(0, 0);
  for (const Matrix& b : x) out = direct_sum(out, b);
  return out;
}

StarHom::StarHom(FiberShape source, FiberShape target, Eigen::MatrixXi multiplicity,
                 std::vector<Matrix> unitaries)
    : source_(std::move(source)),
      target_(std::move(target)),
      mult_(std::move(multiplicity)),
      unitaries_(std::move(unitaries)) {
  const auto ns = static_cast<Index>(source_.size());
  const auto nt = static_cast<Index>(target_.size());
  if (mult_.rows() != nt || mult_.cols() != ns)
    throw Error(ErrorCode::FiberMismatch, "multiplicity matrix does not match the block counts");
  if (unitaries_.size() != target_.size())
    throw Error(ErrorCode::FiberMismatch, "one unitary per target block is required");
  for (Index j = 0; j < nt; ++j) {
    Index used = 0;
    for (Index i = 0; i < ns; ++i) {
      if (mult_(j, i) < 0) throw Error(ErrorCode::FiberMismatch, "negative multiplicity");
      used += mult_(j, i) * source_[i];
    }
    if (used > target_[j])
      throw Error(ErrorCode::FiberMismatch,
                  "target block " + std::to_string(j) + " is too small for its multiplicities");
    if (unitaries_[j].rows() != target_[j] || unitaries_[j].cols() != target_[j])
      throw Error(ErrorCode::FiberMismatch,
                  "unitary for target block " + std::to_string(j) + " has the wrong size");
  }
}

StarHom StarHom::isomorphism(const FiberShape& shape, const std::vector<std::size_t>& perm,
                             std::vector<Matrix> unitaries) {
  const auto n = static_cast<Index>(shape.size());
  if (perm.size() != shape.size())
    throw Error(ErrorCode::FiberMismatch, "block permutation has the wrong length");
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  std::vector<bool> hit(shape.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= shape.size() || hit[perm[i]])
      throw Error(ErrorCode::FiberMismatch, "block map is not a permutation");
    if (shape[perm[i]] != shape[i])
      throw Error(ErrorCode::FiberMismatch, "block permutation changes a block size");
    hit[perm[i]] = true;
    m(static_cast<Index>(perm[i]), static_cast<Index>(i)) = 1;
  }
  return StarHom(shape, shape, std::move(m), std::move(unitaries));
}

StarHom StarHom::identity(const FiberShape& shape) {
  std::vector<std::size_t> perm(shape.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Matrix> w;
  for (Index b : shape) w.push_back(Matrix::Identity(b, b));
  return isomorphism(shape, perm, std::move(w));
}

StarHom StarHom::conjugation(const Matrix& w) {
  return isomorphism({w.rows()}, {0}, {w});
}

bool StarHom::unital() const {
  for (Index j = 0; j < mult_.rows(); ++j) {
    Index used = 0;
    for (Index i = 0; i < mult_.cols(); ++i) used += mult_(j, i) * source_[i];
    if (used != target_[j]) return false;
  }
  return true;
}

bool StarHom::is_isomorphism() const {
  if (source_ != target_ || !unital()) return false;
  for (Index j = 0; j < mult_.rows(); ++j)
    if (mult_.row(j).sum() != 1) return false;
  for (Index i = 0; i < mult_.cols(); ++i)
    if (mult_.col(i).sum() != 1) return false;
  return true;
}

std::vector<std::size_t> StarHom::permutation() const {
  if (!is_isomorphism()) throw Error(ErrorCode::FiberMismatch, "not a *-isomorphism");
  std::vector<std::size_t> perm(source_.size());
  for (Index i = 0; i < mult_.cols(); ++i)
    for (Index j = 0; j < mult_.rows(); ++j)
      if (mult_(j, i) == 1) perm[i] = static_cast<std::size_t>(j);
  return perm;
}

FiberElement StarHom::apply(const FiberElement& x) const {
  if (!fits(x, source_)) throw Error(ErrorCode::FiberMismatch, "element does not fit the source algebra");
  FiberElement y;
  y.reserve(target_.size());
  for (Index j = 0; j < mult_.rows(); ++j) {
    Matrix d = Matrix::Zero(target_[j], target_[j]);
    Index off = 0;
    for (Index i = 0; i < mult_.cols(); ++i)
      for (int r = 0; r < mult_(j, i); ++r) {
        d.block(off, off, source_[i], source_[i]) = x[i];
        off += source_[i];
      }
    y.push_back(unitaries_[j] * d * unitaries_[j].adjoint());
  }
  return y;
}

Matrix StarHom::apply_matrix(const FiberElement& x) const { return block_diagonal(apply(x)); }

StarHom StarHom::after(const StarHom& first) const {
  if (first.target_ != source_) throw Error(ErrorCode::FiberMismatch, "composed maps do not chain");
  const auto pa = first.permutation();
  const auto pb = permutation();
  std::vector<std::size_t> perm(pa.size());
  std::vector<Matrix> w(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) {
    perm[i] = pb[pa[i]];
    w[perm[i]] = unitaries_[pb[pa[i]]] * first.unitaries_[pa[i]];
  }
  return isomorphism(first.source_, perm, std::move(w));
}

StarHom StarHom::inverse() const {
  const auto p = permutation();
  std::vector<std::size_t> inv(p.size());
  std::vector<Matrix> w(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    inv[p[i]] = i;
    w[i] = unitaries_[p[i]].adjoint();
  }
  return isomorphism(target_, inv, std::move(w));
}

Matrix StarHom::vectorized() const {
  std::vector<Index> src_off(source_.size() + 1, 0), dst_off(target_.size() + 1, 0);
  for (std::size_t i = 0; i < source_.size(); ++i) src_off[i + 1] = src_off[i] + source_[i] * source_[i];
  for (std::size_t j = 0; j < target_.size(); ++j) dst_off[j + 1] = dst_off[j] + target_[j] * target_[j];
  Matrix out = Matrix::Zero(dst_off.back(), src_off.back());
  for (Index j = 0; j < mult_.rows(); ++j) {
    Index off = 0;
    for (Index i = 0; i < mult_.cols(); ++i)
      for (int r = 0; r < mult_(j, i); ++r) {
        const Matrix a = unitaries_[j].middleCols(off, source_[i]);
        out.block(dst_off[j], src_off[i], target_[j] * target_[j], source_[i] * source_[i]) +=
            kron(a.conjugate(), a);
        off += source_[i];
      }
  }
  return out;
}

double hom_distance(const StarHom& a, const StarHom& b) {
  if (a.source() != b.source() || a.target() != b.target())
    throw Error(ErrorCode::FiberMismatch, "homomorphisms between different algebras");
  double d = 0.0;
  for (const auto& e : matrix_units(a.source())) d = std::max(d, fiber_distance(a.apply(e), b.apply(e)));
  return d;
}

}  // namespace holonet
