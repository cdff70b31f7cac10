#pragma once

#include <vector>

#include "holonet/linalg.hpp"

namespace holonet {

/// A finite-dimensional C*-algebra, M_{n_1} + ... + M_{n_k}.
using FiberShape = std::vector<Index>;

/// Element of a fiber algebra: one square matrix per block.
using FiberElement = std::vector<Matrix>;

Index algebra_dimension(const FiberShape& shape);

/// Matrix units e^{(k)}_{ij} of every block, ordered by (block, i, j).
std::vector<FiberElement> matrix_units(const FiberShape& shape);

FiberElement fiber_identity(const FiberShape& shape);
FiberElement fiber_zero(const FiberShape& shape);
bool fits(const FiberElement& x, const FiberShape& shape);
double fiber_distance(const FiberElement& a, const FiberElement& b);

/// Block-diagonal image: the element as one matrix.
Matrix block_diagonal(const FiberElement& x);

/// *-homomorphism between finite-dimensional C*-algebras in Bratteli normal
/// form: target block j receives W_j diag(x_i repeated mult(j,i) times) W_j*,
/// with source blocks in ascending order and zero padding if the block is
/// not filled (non-unital maps).
class StarHom {
 public:
  StarHom(FiberShape source, FiberShape target, Eigen::MatrixXi multiplicity,
          std::vector<Matrix> unitaries);

  /// Isomorphism: source block i goes to target block perm[i], conjugated by
  /// unitaries[perm[i]].
  static StarHom isomorphism(const FiberShape& shape, const std::vector<std::size_t>& perm,
                             std::vector<Matrix> unitaries);
  static StarHom identity(const FiberShape& shape);
  /// x -> W x W* on a single block M_n.
  static StarHom conjugation(const Matrix& w);

  const FiberShape& source() const { return source_; }
  const FiberShape& target() const { return target_; }
  const Eigen::MatrixXi& multiplicity() const { return mult_; }
  const std::vector<Matrix>& unitaries() const { return unitaries_; }

  bool unital() const;
  bool is_isomorphism() const;
  /// For isomorphisms: target block of each source block.
  std::vector<std::size_t> permutation() const;

  FiberElement apply(const FiberElement& x) const;
  /// Single-block target convenience: the image as one matrix.
  Matrix apply_matrix(const FiberElement& x) const;

  /// (*this) after `first`; both must be isomorphisms.
  StarHom after(const StarHom& first) const;
  StarHom inverse() const;

  /// Linear map on the concatenated column-major vectorization of fibers.
  Matrix vectorized() const;

 private:
  FiberShape source_, target_;
  Eigen::MatrixXi mult_;
  std::vector<Matrix> unitaries_;
};

/// max over matrix units of the image distance; matches isomorphisms up to
/// the per-block phase ambiguity of the encoding.
double hom_distance(const StarHom& a, const StarHom& b);

}  // namespace holonet
