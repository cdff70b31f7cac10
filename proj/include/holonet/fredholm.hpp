#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "holonet/net_bundle.hpp"
#include "holonet/operator.hpp"
#include "holonet/representation.hpp"
#include "holonet/virtual_rep.hpp"

namespace holonet {

enum class Parity { Even, Odd };

/// Fiber geometry of a module: a color-level Hilbert net bundle (graded for
/// even modules), ampliated either trivially (fibers C^c) or to
/// l2(N) (x) C^c with U_{o'o} acting as 1 (x) u_{o'o}.
struct ModuleSpace {
  HilbertNetBundle colors;
  Ampliation kind = Ampliation::Dense;

  Operator incl(Element lower, Element upper) const { return ampliate(kind, colors.incl(lower, upper)); }
  Operator grading(Element o) const;
};

/// Fredholm module over a net: per element the images of a generating set
/// of the local algebra and the operator F_o.
struct FredholmModule {
  ModuleSpace space;
  std::vector<std::vector<Operator>> algebra;
  std::vector<Operator> F;
  Parity parity = Parity::Even;
};

/// Dense module from a graded net representation, with the images of the
/// matrix units as generators.
FredholmModule module_from_representation(const NetRepresentation& r, std::vector<Matrix> F,
                                          Parity parity = Parity::Even);

/// Every relation defect of the module: covariance U F = F U, self-adjoint F,
/// F^2 - 1 and [F, pi(t)] compact, grading odd/even, plus the color bundle.
Report validate_module(const FredholmModule& m, const Tolerances& tol = {});

/// Module data fixed at a single element.
struct LocalizedModule {
  ModuleSpace space;
  std::vector<std::vector<Operator>> algebra;
  Element a = 0;
  Operator F;
  Parity parity = Parity::Even;
};

/// The localized relations: F_a^2 - 1, [F_a, ad U_p(pi_o(t))] and
/// ad U_q(F_a) - F_a compact; F_a self-adjoint and odd.
Report validate_localized(const LocalizedModule& m, const Tolerances& tol = {});

LocalizedModule localize(const FredholmModule& m, Element a);

/// F_e := ad U_p(F_a) for p : a -> e. Throws PathMismatch.
LocalizedModule transport(const LocalizedModule& m, Element e, const Path& p);

struct ObstructionWitness {
  std::size_t generator = 0;
  double defect = 0.0;
};

/// F_o := ad U_{p_oa}(F_a) when F_a is holonomy invariant, otherwise the
/// first generator that moves it. Throws PathMismatch when the frame is not
/// based at a.
std::variant<FredholmModule, ObstructionWitness> extend_localized(const LocalizedModule& m,
                                                                   const GroupPresentation& p,
                                                                   const PathFrame& f,
                                                                   const Tolerances& tol = {});

/// Equivariant cycle (eta, V, phi) at the base point.
struct EquivariantCycle {
  Ampliation kind = Ampliation::Dense;
  Matrix grading;  // color level; identity for odd cycles
  UnitaryRep u;    // color level
  std::vector<Operator> eta;
  Operator F;
  Parity parity = Parity::Even;
  /// V_g F = F V_g for every generator.
  bool strongly_equivariant = false;
};

/// Cycle relations: unitarity, [V_g, grading] = 0, phi self-adjoint and odd,
/// phi^2 - 1 and [phi, eta(t)] compact.
Report validate_cycle(const EquivariantCycle& c, const Tolerances& tol = {});

/// Throws PathMismatch (a is not the base), RelationDefect.
EquivariantCycle equivariant_cycle(const LocalizedModule& m, const GroupPresentation& p,
                                   const Tolerances& tol = {});

/// Localized module on the bundle rebuilt from V. Throws NotCovariant,
/// RelationDefect, RelatorNotSatisfied.
LocalizedModule from_cycle(const EquivariantCycle& c, const Poset& k, const GroupPresentation& p,
                           const PathFrame& f, const Tolerances& tol = {});

/// [ker F restricted to H+] - [ker F restricted to H-] with the holonomy
/// acting on both kernels. Throws RelationDefect (odd cycle), NotFredholm,
/// KernelNotInvariant.
VirtualRep pi_index(const EquivariantCycle& c, const Tolerances& tol = {});
VirtualRep pi_index(const FredholmModule& m, const GroupPresentation& p, const Tolerances& tol = {});

/// Doubled shift module of a holonomy representation u: fibers
/// (l2(N) (x) C^d)^2, grading (1, -1), F = [[0, S], [S*, 0]]. The default
/// algebra is (C1 + K(H_0)) (x) 1_d through the generators 1, e00, e01, e10.
/// A custom algebra is given as operators on l2(N) (x) C^d.
/// Throws RelatorNotSatisfied.
FredholmModule build_shift_module(const Poset& k, const GroupPresentation& p, const PathFrame& f,
                                  const UnitaryRep& u,
                                  const std::optional<std::vector<ShiftOperator>>& algebra = std::nullopt,
                                  const Tolerances& tol = {});

/// Toy data of a sector with holonomy: block sizes d_k of L, rho into the
/// block-diagonal unitaries of L, candidate local operators T_j with their
/// images toy[j][k] = pi'_k(T_j) on l2(N) (x) C^m, and the position of the
/// cyclic vector w among the m colors.
struct SectorSpec {
  std::vector<Index> dims;
  UnitaryRep rho;
  Index iota_colors = 1;
  std::vector<std::vector<ShiftOperator>> toy;
  Index cyclic = 0;
};

/// Default candidates: the identity, the rank-one projection onto w and
/// (when m > 1) the color projection onto w, identical in every sector.
std::vector<std::vector<ShiftOperator>> default_sector_toys(Index iota_colors, std::size_t sectors,
                                                            Index cyclic = 0);

/// S_w: the unilateral shift of l2(N) (x) C^m in the basis starting at w.
ShiftOperator cyclic_shift(Index iota_colors, Index cyclic = 0);

struct SectorModule {
  FredholmModule module;
  std::vector<bool> admitted;  // dual-net membership of each candidate
  Index topological_dimension = 0;
  Index statistical_dimension = 0;
};

/// Sector module with F = [[0, S_w* (x) 1], [S_w (x) 1, 0]] and grading
/// (-1, +1). Throws CentralityViolated, RelatorNotSatisfied.
SectorModule build_sector_module(const Poset& k, const GroupPresentation& p, const PathFrame& f,
                                 const SectorSpec& spec, const Tolerances& tol = {});

/// [pi(T), F] compact.
bool in_dual_net(const Operator& image, const Operator& F, const Tolerances& tol = {});

/// Dimension of the unital *-algebra generated by the matrices.
Index generated_algebra_dimension(const std::vector<Matrix>& generators, double threshold = 1e-8);

/// D (1 + D^2)^{-1}. Throws NotSelfAdjoint.
Matrix bounded_transform(const Matrix& d, const Tolerances& tol = {});

/// Unitary equivalence by a color-level family V_o.
FredholmModule conjugate_module(const FredholmModule& m, const std::vector<Matrix>& v);

}  // namespace holonet
