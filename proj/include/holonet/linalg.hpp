#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace holonet {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Numerical thresholds shared by every check in the library.
struct Tolerances {
  double identity = 1e-10;      // identity / intertwining checks
  double construction = 1e-12;  // net relations at construction time
  double kernel = 1e-8;         // singular values below this count as zero
  double invariance = 1e-9;     // holonomy invariance of operators and kernels
};

Matrix identity(Index n);

/// Largest singular value; zero for empty matrices.
double op_norm(const Matrix& m);

/// Orthonormal basis (as columns) of the null space; singular values below
/// `threshold` are treated as zero.
Matrix null_space(const Matrix& m, double threshold);

/// Orthonormal basis of the range, same thresholding as null_space.
Matrix range_basis(const Matrix& m, double threshold);

Index numerical_rank(const Matrix& m, double threshold);

bool is_unitary(const Matrix& m, double tol);
bool is_self_adjoint(const Matrix& m, double tol);

/// Haar-distributed unitary.
Matrix random_unitary(Index n, std::mt19937_64& rng);

/// Random Hermitian matrix with standard Gaussian entries.
Matrix random_hermitian(Index n, std::mt19937_64& rng);

Matrix random_matrix(Index rows, Index cols, std::mt19937_64& rng);

/// Eigenvalues of a normal matrix.
std::vector<Complex> eigenvalues(const Matrix& m);

/// True iff the two lists agree as multisets, pairing entries within `tol`.
bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol);

Matrix kron(const Matrix& a, const Matrix& b);

/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace holonet
