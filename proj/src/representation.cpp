#include "holonet/representation.hpp"

#include <algorithm>

#include "holonet/errors.hpp"

namespace holonet {

NetOfAlgebras::NetOfAlgebras(Poset k, std::vector<FiberShape> fibers, std::map<Edge, StarHom> incl)
    : k_(std::move(k)), fibers_(std::move(fibers)), incl_(std::move(incl)) {
  if (fibers_.size() != k_.size())
    throw Error(ErrorCode::InvalidRepresentation, "one fiber algebra per element is required");
  std::size_t expected = k_.strict_pairs().size();
  if (incl_.size() != expected)
    throw Error(ErrorCode::InvalidRepresentation, "every strict pair needs an inclusion");
  for (const auto& [e, h] : incl_) {
    if (e.lower >= k_.size() || e.upper >= k_.size() || !k_.less(e.lower, e.upper))
      throw Error(ErrorCode::InvalidRepresentation, "inclusion given for a non-strict pair");
    if (h.source() != fibers_[e.lower] || h.target() != fibers_[e.upper])
      throw Error(ErrorCode::InvalidRepresentation,
                  "inclusion (" + k_.id(e.lower) + ", " + k_.id(e.upper) + ") has the wrong fibers");
    if (!h.unital())
      throw Error(ErrorCode::InvalidRepresentation, "inclusions must be unital");
    for (Index i = 0; i < h.multiplicity().cols(); ++i)
      if (h.multiplicity().col(i).sum() == 0)
        throw Error(ErrorCode::InvalidRepresentation, "inclusions must be injective");
  }
  for (const auto& f : fibers_) ids_.push_back(StarHom::identity(f));
}

NetOfAlgebras NetOfAlgebras::from_bundle(const CStarNetBundle& b) {
  return NetOfAlgebras(b.poset(), std::vector<FiberShape>(b.poset().size(), b.shape()), b.inclusions());
}

const StarHom& NetOfAlgebras::incl(Element lower, Element upper) const {
  if (lower == upper) return ids_.at(lower);
  auto it = incl_.find({lower, upper});
  if (it == incl_.end()) throw Error(ErrorCode::NotComparable, "no inclusion between these elements");
  return it->second;
}

bool NetOfAlgebras::is_bundle() const {
  for (const auto& f : fibers_)
    if (f != fibers_.front()) return false;
  return std::all_of(incl_.begin(), incl_.end(), [](const auto& kv) { return kv.second.is_isomorphism(); });
}

CStarNetBundle NetOfAlgebras::as_bundle() const {
  if (!is_bundle()) throw Error(ErrorCode::NotANetBundle, "some inclusion is not an isomorphism");
  return CStarNetBundle(k_, fibers_.front(), incl_);
}

Report validate_net(const NetOfAlgebras& n, const Tolerances& tol) {
  Report r;
  const Poset& k = n.poset();
  for (const auto& [e, h] : n.inclusions())
    for (std::size_t j = 0; j < h.unitaries().size(); ++j)
      r.check("unitary", k.id(e.lower) + " < " + k.id(e.upper),
              op_norm(h.unitaries()[j].adjoint() * h.unitaries()[j] - identity(h.target()[j])),
              tol.construction);
  for (Element a = 0; a < k.size(); ++a)
    for (Element m = 0; m < k.size(); ++m) {
      if (!k.less(a, m)) continue;
      for (Element c = 0; c < k.size(); ++c) {
        if (!k.less(m, c)) continue;
        const std::string where = k.id(a) + " < " + k.id(m) + " < " + k.id(c);
        const StarHom& ac = n.incl(a, c);
        const StarHom& am = n.incl(a, m);
        const StarHom& mc = n.incl(m, c);
        if (ac.multiplicity() != mc.multiplicity() * am.multiplicity()) {
          r.defects.push_back({"multiplicity", where, 1.0});
          continue;
        }
        double d = 0.0;
        for (const auto& t : matrix_units(n.fiber(a)))
          d = std::max(d, fiber_distance(ac.apply(t), mc.apply(am.apply(t))));
        r.check("net", where, d, tol.construction);
      }
    }
  return r;
}

Report validate_representation(const NetRepresentation& r, const Tolerances& tol) {
  Report out = validate_bundle(r.target, tol);
  out.merge(validate_net(r.net, tol));
  const Poset& k = r.net.poset();
  if (!(r.target.poset() == k) || r.pi.size() != k.size()) {
    out.defects.push_back({"structure", "representation does not match its net", 1.0});
    return out;
  }
  for (Element o = 0; o < k.size(); ++o) {
    const StarHom& p = r.pi[o];
    if (p.source() != r.net.fiber(o) || p.target() != FiberShape{r.target.dim()}) {
      out.defects.push_back({"structure", "pi at " + k.id(o) + " has the wrong shape", 1.0});
      return out;
    }
    for (std::size_t j = 0; j < p.unitaries().size(); ++j)
      out.check("unitary", "pi at " + k.id(o),
                op_norm(p.unitaries()[j].adjoint() * p.unitaries()[j] - identity(p.target()[j])),
                tol.identity);
  }
  for (const auto& [e, h] : r.net.inclusions()) {
    const Matrix& u = r.target.incl(e.lower, e.upper);
    double d = 0.0;
    for (const auto& t : matrix_units(r.net.fiber(e.lower)))
      d = std::max(d, op_norm(u * r.pi[e.lower].apply_matrix(t) * u.adjoint() -
                              r.pi[e.upper].apply_matrix(h.apply(t))));
    out.check("morphism", k.id(e.lower) + " < " + k.id(e.upper), d, tol.identity);
  }
  return out;
}

double covariance_defect(const CovariantPair& c) {
  double d = 0.0;
  for (std::size_t g = 0; g < c.u.generators.size(); ++g) {
    const Matrix& u = c.u.generators[g];
    for (const auto& t : matrix_units(c.pi.source()))
      d = std::max(d, op_norm(c.pi.apply_matrix(c.alpha.generators.at(g).apply(t)) -
                              u * c.pi.apply_matrix(t) * u.adjoint()));
  }
  return d;
}

CovariantPair covariantize(const NetRepresentation& r, const GroupPresentation& p, const Tolerances& tol) {
  const CStarNetBundle algebras = r.net.as_bundle();
  const Report rep = validate_representation(r, tol);
  if (!rep.ok())
    throw Error(ErrorCode::InvalidRepresentation,
                rep.defects.front().relation + " relation fails at " + rep.defects.front().where);
  CovariantPair c{r.pi.at(p.base), holonomy_rep(r.target, p, tol), holonomy_rep(algebras, p, tol)};
  const double d = covariance_defect(c);
  if (!(d <= tol.identity))
    throw Error(ErrorCode::InvalidRepresentation, "covariance defect " + std::to_string(d));
  return c;
}

NetRepresentation netify(const CovariantPair& c, const Poset& k, const GroupPresentation& p,
                         const PathFrame& f, const Tolerances& tol) {
  if (c.pi.source() != c.alpha.shape || c.pi.target() != FiberShape{c.u.dim})
    throw Error(ErrorCode::NotCovariant, "representation, action and unitaries do not fit together");
  if (c.u.generators.size() != c.alpha.generators.size())
    throw Error(ErrorCode::NotCovariant, "unitaries and automorphisms have different generator counts");
  for (const Matrix& u : c.u.generators)
    if (!is_unitary(u, tol.identity)) throw Error(ErrorCode::NotCovariant, "a generator is not unitary");
  const double d = covariance_defect(c);
  if (!(d <= tol.identity)) throw Error(ErrorCode::NotCovariant, "covariance defect " + std::to_string(d));

  HilbertNetBundle target = bundle_from_rep(k, p, f, c.u, tol);
  CStarNetBundle algebras = bundle_from_rep(k, p, f, c.alpha, tol);
  return NetRepresentation{NetOfAlgebras::from_bundle(algebras), std::move(target),
                           std::vector<StarHom>(k.size(), c.pi)};
}

double check_path_compatibility(const NetRepresentation& r, const Path& p) {
  const CStarNetBundle algebras = r.net.as_bundle();
  const Matrix u = evaluate_path(r.target, p);
  const StarHom j = evaluate_path(algebras, p);
  double d = 0.0;
  for (const auto& t : matrix_units(algebras.shape()))
    d = std::max(d, op_norm(u * r.pi.at(p.start()).apply_matrix(t) * u.adjoint() -
                            r.pi.at(p.end()).apply_matrix(j.apply(t))));
  return d;
}

FiberElement enveloping_normal_form(const CStarNetBundle& b, const Path& p, const FiberElement& t) {
  if (!fits(t, b.shape())) throw Error(ErrorCode::FiberMismatch, "element does not fit the fiber");
  return evaluate_path(b, p).apply(t);
}

}  // namespace holonet
