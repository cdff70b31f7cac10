#pragma once

#include <vector>

#include "holonet/representation.hpp"

namespace holonet {

/// Even net of finite-dimensional spectral triples: a representation on a
/// graded Hilbert net bundle and one odd self-adjoint D_o per element.
struct NetSpectralTriple {
  NetRepresentation rep;
  std::vector<Matrix> D;
};

/// delta(x) = D x - (Gamma x Gamma) D.
Matrix superderivation(const Matrix& d, const Matrix& grading, const Matrix& x);

/// Defects of: the representation, grading present, D_o self-adjoint and odd,
/// ad U_{o'o}(D_o) = D_{o'}, theta-summability (finite trace, recorded),
/// boundedness of delta_o on matrix units and its covariance along edges.
Report validate_triple(const NetSpectralTriple& t, const Tolerances& tol = {});

/// Equivariant triple at the base point.
struct EquivariantTriple {
  Matrix grading;
  CovariantPair pair;
  Matrix D;
};

/// Throws NotANetBundle, InvalidRepresentation, NotInvariant (D is not
/// transported by ad U, or D_a does not commute with the holonomy).
EquivariantTriple to_equivariant(const NetSpectralTriple& t, const GroupPresentation& p,
                                 const Tolerances& tol = {});

/// D_o := D on the bundles rebuilt from the covariant pair. Throws
/// NotInvariant, NotCovariant, RelatorNotSatisfied.
NetSpectralTriple from_equivariant(const EquivariantTriple& e, const Poset& k, const GroupPresentation& p,
                                   const PathFrame& f, const Tolerances& tol = {});

/// Tr exp(-beta D^2). Throws NotSelfAdjoint; beta must be positive
/// (RelationDefect otherwise).
double theta_trace(const Matrix& d, double beta, const Tolerances& tol = {});

}  // namespace holonet
