#pragma once

#include <map>
#include <vector>

#include "holonet/net_bundle.hpp"

namespace holonet {

/// Net of finite-dimensional C*-algebras with injective unital inclusions.
class NetOfAlgebras {
 public:
  /// Structural checks only. Throws InvalidRepresentation.
  NetOfAlgebras(Poset k, std::vector<FiberShape> fibers, std::map<Edge, StarHom> incl);

  static NetOfAlgebras from_bundle(const CStarNetBundle& b);

  const Poset& poset() const { return k_; }
  const FiberShape& fiber(Element o) const { return fibers_.at(o); }
  const StarHom& incl(Element lower, Element upper) const;
  const std::map<Edge, StarHom>& inclusions() const { return incl_; }

  /// All inclusions are isomorphisms onto one common fiber.
  bool is_bundle() const;
  /// Throws NotANetBundle.
  CStarNetBundle as_bundle() const;

 private:
  Poset k_;
  std::vector<FiberShape> fibers_;
  std::map<Edge, StarHom> incl_;
  std::vector<StarHom> ids_;
};

/// Net relations on matrix units plus multiplicity-matrix composition.
Report validate_net(const NetOfAlgebras& n, const Tolerances& tol = {});

/// pi_o : A_o -> B(H_o) for every element, into a Hilbert net bundle.
struct NetRepresentation {
  NetOfAlgebras net;
  HilbertNetBundle target;
  std::vector<StarHom> pi;
};

/// ad U_{o'o} o pi_o = pi_{o'} o j_{o'o} on matrix units, plus the
/// structural sanity of each pi_o.
Report validate_representation(const NetRepresentation& r, const Tolerances& tol = {});

/// Base-point data of a representation of a net bundle.
struct CovariantPair {
  StarHom pi;              // pi_a
  UnitaryRep u;            // holonomy of the Hilbert bundle
  AutomorphismRep alpha;   // holonomy of the algebra bundle
};

/// Covariance defect max ||pi(alpha_g(t)) - U_g pi(t) U_g^*|| over
/// generators and matrix units.
double covariance_defect(const CovariantPair& c);

/// Throws NotANetBundle, InvalidRepresentation.
CovariantPair covariantize(const NetRepresentation& r, const GroupPresentation& p,
                           const Tolerances& tol = {});

/// eta_{*,o} := eta on the bundles rebuilt from (V, alpha). Throws
/// NotCovariant, RelatorNotSatisfied.
NetRepresentation netify(const CovariantPair& c, const Poset& k, const GroupPresentation& p,
                         const PathFrame& f, const Tolerances& tol = {});

/// max over matrix units t of ||ad U_p(pi_o(t)) - pi_e(j_p(t))|| for p : o -> e.
/// Throws NotANetBundle.
double check_path_compatibility(const NetRepresentation& r, const Path& p);

/// Normal form of the pair (p, t) in the enveloping fiber: j_p(t) at end(p).
/// Throws PathOutsidePoset, FiberMismatch.
FiberElement enveloping_normal_form(const CStarNetBundle& b, const Path& p, const FiberElement& t);

}  // namespace holonet
