#include "holonet/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace holonet {

Matrix identity(Index n) { return Matrix::Identity(n, n); }

double op_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

namespace {

// Full SVD with U and V; Eigen's JacobiSVD sorts singular values descending.
Eigen::JacobiSVD<Matrix> full_svd(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

Index numerical_rank(const Matrix& m, double threshold) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  return static_cast<Index>(std::count_if(s.data(), s.data() + s.size(),
                                          [&](double v) { return v >= threshold; }));
}

Matrix null_space(const Matrix& m, double threshold) {
  const Index cols = m.cols();
  if (cols == 0) return Matrix(0, 0);
  if (m.rows() == 0) return identity(cols);
  auto svd = full_svd(m);
  const Index rank = numerical_rank(m, threshold);
  return svd.matrixV().rightCols(cols - rank);
}

Matrix range_basis(const Matrix& m, double threshold) {
  if (m.size() == 0) return Matrix(m.rows(), 0);
  auto svd = full_svd(m);
  const Index rank = numerical_rank(m, threshold);
  return svd.matrixU().leftCols(rank);
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return op_norm(m.adjoint() * m - identity(m.rows())) <= tol;
}

bool is_self_adjoint(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return op_norm(m - m.adjoint()) <= tol;
}

Matrix random_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) out(i, j) = Complex(normal(rng), normal(rng));
  return out;
}

Matrix random_unitary(Index n, std::mt19937_64& rng) {
  // QR of a Ginibre matrix, with the phases of R's diagonal folded back into Q.
  Matrix g = random_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * identity(n);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

Matrix random_hermitian(Index n, std::mt19937_64& rng) {
  Matrix g = random_matrix(n, n, rng);
  return (g + g.adjoint()) / 2.0;
}

std::vector<Complex> eigenvalues(const Matrix& m) {
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Matrix> solver(m, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Complex& x : a) {
    std::size_t best = b.size();
    double best_dist = tol;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(x - b[j]);
      if (dist <= best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == b.size()) return false;
    used[best] = true;
  }
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace holonet
