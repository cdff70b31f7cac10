#pragma once

#include <map>
#include <optional>
#include <vector>

#include "holonet/homotopy.hpp"
#include "holonet/linalg.hpp"
#include "holonet/poset.hpp"
#include "holonet/report.hpp"
#include "holonet/star_algebra.hpp"

namespace holonet {

/// Unitary matrices assigned to the generators of a presentation.
struct UnitaryRep {
  Index dim = 0;
  std::vector<Matrix> generators;

  /// rho(w) = rho(w_0) rho(w_1) ...
  Matrix evaluate(const Word& w) const;

  static UnitaryRep trivial(Index dim, std::size_t generators);
};

/// *-automorphisms of one fiber algebra assigned to the generators.
struct AutomorphismRep {
  FiberShape shape;
  std::vector<StarHom> generators;

  StarHom evaluate(const Word& w) const;
};

/// Hilbert net bundle with common fiber C^d. Only strict pairs are stored;
/// U_oo is the identity.
class HilbertNetBundle {
 public:
  /// Structural checks only (every strict pair present, sizes, grading
  /// length); the net relations are checked by validate_bundle. Throws
  /// InvalidBundle.
  HilbertNetBundle(Poset k, Index dim, std::map<Edge, Matrix> incl,
                   std::optional<std::vector<Matrix>> grading = std::nullopt);

  static HilbertNetBundle constant(Poset k, Index dim);

  const Poset& poset() const { return k_; }
  Index dim() const { return dim_; }
  /// U_{upper, lower}.
  const Matrix& incl(Element lower, Element upper) const;
  const std::map<Edge, Matrix>& inclusions() const { return incl_; }

  bool graded() const { return grading_.has_value(); }
  const Matrix& grading(Element o) const { return grading_->at(o); }
  const std::optional<std::vector<Matrix>>& gradings() const { return grading_; }

  HilbertNetBundle with_grading(std::vector<Matrix> grading) const;

 private:
  Poset k_;
  Index dim_;
  std::map<Edge, Matrix> incl_;
  std::optional<std::vector<Matrix>> grading_;
  Matrix id_;
};

/// C*-net bundle over one finite-dimensional fiber algebra; the inclusions
/// are *-isomorphisms.
class CStarNetBundle {
 public:
  /// Throws InvalidBundle.
  CStarNetBundle(Poset k, FiberShape shape, std::map<Edge, StarHom> incl);

  static CStarNetBundle constant(Poset k, FiberShape shape);
  /// The adjoint bundle ad U acting on M_d.
  static CStarNetBundle adjoint_of(const HilbertNetBundle& b);

  const Poset& poset() const { return k_; }
  const FiberShape& shape() const { return shape_; }
  const StarHom& incl(Element lower, Element upper) const;
  const std::map<Edge, StarHom>& inclusions() const { return incl_; }

 private:
  Poset k_;
  FiberShape shape_;
  std::map<Edge, StarHom> incl_;
  StarHom id_;
};

Report validate_bundle(const HilbertNetBundle& b, const Tolerances& tol = {});
Report validate_bundle(const CStarNetBundle& b, const Tolerances& tol = {});

/// U_p = U_{b_n} ... U_{b_1}, with U_b = U_{|b| d0b}^* U_{|b| d1b}.
/// Throws PathOutsidePoset.
Matrix evaluate_path(const HilbertNetBundle& b, const Path& p);
StarHom evaluate_path(const CStarNetBundle& b, const Path& p);

/// Holonomy of every generator's edge loop. Throws InvalidBundle.
UnitaryRep holonomy_rep(const HilbertNetBundle& b, const GroupPresentation& p,
                        const Tolerances& tol = {});
AutomorphismRep holonomy_rep(const CStarNetBundle& b, const GroupPresentation& p,
                             const Tolerances& tol = {});

/// Largest relator defect ||rho(r) - 1||, with the index of the worst relator.
std::pair<double, std::size_t> relator_defect(const UnitaryRep& rho, const GroupPresentation& p);

/// U_{o'o} := rho(edge_loop_word(o, o')). Throws RelatorNotSatisfied.
HilbertNetBundle bundle_from_rep(const Poset& k, const GroupPresentation& p, const PathFrame& f,
                                 const UnitaryRep& rho, const Tolerances& tol = {});
CStarNetBundle bundle_from_rep(const Poset& k, const GroupPresentation& p, const PathFrame& f,
                               const AutomorphismRep& alpha, const Tolerances& tol = {});

/// A section: one value per element.
struct HilbertSection {
  std::vector<Vector> values;
};
struct CStarSection {
  std::vector<FiberElement> values;
};

/// Basis of the section space, built from the joint fixed space of the
/// holonomy at the base and transported along the path frame.
/// Throws InvalidBundle.
std::vector<HilbertSection> compute_sections(const HilbertNetBundle& b, const GroupPresentation& p,
                                             const Tolerances& tol = {});
std::vector<CStarSection> compute_sections(const CStarNetBundle& b, const GroupPresentation& p,
                                           const Tolerances& tol = {});

/// max over strict pairs of ||U_{o'o} T_o - T_{o'}||.
double section_defect(const HilbertNetBundle& b, const HilbertSection& s);
double section_defect(const CStarNetBundle& b, const CStarSection& s);

/// V_o : fiber of bundle_from_rep(holonomy_rep(b)) -> fiber of b, with
/// V_{o'} U'_{o'o} = U_{o'o} V_o. Throws InvalidBundle.
std::vector<Matrix> roundtrip_iso(const HilbertNetBundle& b, const GroupPresentation& p,
                                  const PathFrame& f, const Tolerances& tol = {});

/// max over strict pairs of ||V_{o'} U'_{o'o} - U_{o'o} V_o||.
double intertwiner_defect(const HilbertNetBundle& target, const HilbertNetBundle& source,
                          const std::vector<Matrix>& v);

}  // namespace holonet
