#include "holonet/spectral.hpp"

#include <cmath>

#include "holonet/errors.hpp"

namespace holonet {

Matrix superderivation(const Matrix& d, const Matrix& grading, const Matrix& x) {
  return d * x - grading * x * grading * d;
}

Report validate_triple(const NetSpectralTriple& t, const Tolerances& tol) {
  Report r = validate_representation(t.rep, tol);
  const HilbertNetBundle& b = t.rep.target;
  const Poset& k = b.poset();
  if (t.D.size() != k.size()) {
    r.defects.push_back({"structure", "one operator per element is required", 1.0});
    return r;
  }
  if (!b.graded()) {
    r.defects.push_back({"structure", "spectral triples need a graded bundle", 1.0});
    return r;
  }
  for (Element o = 0; o < k.size(); ++o) {
    const Matrix& d = t.D[o];
    if (d.rows() != b.dim() || d.cols() != b.dim()) {
      r.defects.push_back({"structure", "D at " + k.id(o) + " has the wrong size", 1.0});
      return r;
    }
    const Matrix& g = b.grading(o);
    r.check("self-adjoint", k.id(o), op_norm(d - d.adjoint()), tol.identity);
    r.check("odd", k.id(o), op_norm(g * d + d * g), tol.identity);
    // finite dimension: the trace is always finite, recorded as a check
    double theta = 0.0;
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(d).singularValues();
    for (Index i = 0; i < sv.size(); ++i) theta += std::exp(-sv(i) * sv(i));
    r.check("theta-summable", k.id(o), std::isfinite(theta) ? 0.0 : 1.0, tol.identity);
    double unbounded = 0.0;
    for (const auto& e : matrix_units(t.rep.net.fiber(o)))
      if (!std::isfinite(op_norm(superderivation(d, g, t.rep.pi[o].apply_matrix(e))))) unbounded = 1.0;
    r.check("superderivation domain", k.id(o), unbounded, tol.identity);
  }
  for (const auto& [e, u] : b.inclusions()) {
    const std::string where = k.id(e.lower) + " < " + k.id(e.upper);
    r.check("transport", where, op_norm(u * t.D[e.lower] * u.adjoint() - t.D[e.upper]), tol.identity);
    double cov = 0.0;
    for (const auto& unit : matrix_units(t.rep.net.fiber(e.lower))) {
      const Matrix x = t.rep.pi[e.lower].apply_matrix(unit);
      const Matrix lhs = superderivation(t.D[e.upper], b.grading(e.upper), u * x * u.adjoint());
      const Matrix rhs = u * superderivation(t.D[e.lower], b.grading(e.lower), x) * u.adjoint();
      cov = std::max(cov, op_norm(lhs - rhs));
    }
    r.check("superderivation covariance", where, cov, tol.identity);
  }
  return r;
}

namespace {

void require_invariant(const UnitaryRep& u, const Matrix& d, const Tolerances& tol) {
  for (std::size_t g = 0; g < u.generators.size(); ++g) {
    const double c = op_norm(u.generators[g] * d - d * u.generators[g]);
    if (!(c <= tol.identity))
      throw Error(ErrorCode::NotInvariant,
                  "D does not commute with generator " + std::to_string(g) + " (defect " + std::to_string(c) + ")");
  }
}

}  // namespace

EquivariantTriple to_equivariant(const NetSpectralTriple& t, const GroupPresentation& p, const Tolerances& tol) {
  if (!t.rep.target.graded()) throw Error(ErrorCode::InvalidRepresentation, "spectral triples need a grading");
  for (const auto& d : validate_triple(t, tol).defects)
    if (d.relation == "transport" || d.relation == "superderivation covariance")
      throw Error(ErrorCode::NotInvariant, d.relation + " fails at " + d.where);
  EquivariantTriple e{t.rep.target.grading(p.base), covariantize(t.rep, p, tol), t.D.at(p.base)};
  require_invariant(e.pair.u, e.D, tol);
  return e;
}

NetSpectralTriple from_equivariant(const EquivariantTriple& e, const Poset& k, const GroupPresentation& p,
                                   const PathFrame& f, const Tolerances& tol) {
  require_invariant(e.pair.u, e.D, tol);
  for (std::size_t g = 0; g < e.pair.u.generators.size(); ++g)
    if (!(op_norm(e.pair.u.generators[g] * e.grading - e.grading * e.pair.u.generators[g]) <= tol.identity))
      throw Error(ErrorCode::NotCovariant, "generator " + std::to_string(g) + " does not preserve the grading");
  NetRepresentation r = netify(e.pair, k, p, f, tol);
  r.target = r.target.with_grading(std::vector<Matrix>(k.size(), e.grading));
  // invariant D is a section of ad U, so every D_o equals D
  return {std::move(r), std::vector<Matrix>(k.size(), e.D)};
}

double theta_trace(const Matrix& d, double beta, const Tolerances& tol) {
  if (!is_self_adjoint(d, tol.identity)) throw Error(ErrorCode::NotSelfAdjoint, "D must be self-adjoint");
  if (!(beta > 0.0)) throw Error(ErrorCode::RelationDefect, "beta must be positive");
  Eigen::SelfAdjointEigenSolver<Matrix> es(d, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    s += std::exp(-beta * l * l);
  }
  return s;
}

}  // namespace holonet
