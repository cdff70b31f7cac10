#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "holonet/fredholm.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace holonet;

namespace {

const double kPi = 3.14159265358979323846;

Complex phase(double turns) { return std::polar(1.0, 2 * kPi * turns); }

Matrix diag(std::initializer_list<Complex> values) {
  Vector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (Complex c : values) v(i++) = c;
  return v.asDiagonal();
}

Matrix sigma_x() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = s(1, 0) = 1.0;
  return s;
}

struct Hexagon {
  Poset k = fixtures::hexagon();
  GroupPresentation p = fundamental_presentation(k, 0);
  PathFrame f = build_path_frame(p);
};

std::vector<double> index_phases(const VirtualRep& v) {
  std::vector<double> out;
  for (const auto& r : v.plus) {
    auto ph = oracles::eigenphases(r.generators.at(0));
    out.insert(out.end(), ph.begin(), ph.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void expect_phases_near(std::vector<double> a, std::vector<double> b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  // compare on the circle
  for (auto* v : {&a, &b})
    for (double& t : *v)
      if (t > 1.0 - tol) t -= 1.0;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol);
}

// Dense graded module over the hexagon: colors C^2 with grading diag(1, -1),
// holonomy `twist` on the V12 -> U1 edge, F = sigma_x at U1.
LocalizedModule dense_localized(const Matrix& twist) {
  HilbertNetBundle colors = fixtures::hexagon_bundle(twist).with_grading(
      std::vector<Matrix>(6, diag({1.0, -1.0})));
  const std::vector<std::vector<Operator>> algebra(6, std::vector<Operator>{Operator(identity(2))});
  return LocalizedModule{{colors, Ampliation::Dense}, algebra, 0, Operator(sigma_x()), Parity::Even};
}

Path direct_down(const Poset& k) { return Path(k, {{k.index("U1"), k.index("V12"), k.index("U1")}}); }

Path the_long_way(const Poset& k) {
  auto e = [&](const char* s) { return k.index(s); };
  return Path(k, {{e("U1"), e("V31"), e("U1")}, {e("U3"), e("U3"), e("V31")}, {e("U3"), e("V23"), e("U3")},
                  {e("U2"), e("U2"), e("V23")}, {e("U2"), e("V12"), e("U2")}});
}

const Matrix& dense(const Operator& a) { return std::get<Matrix>(a); }

}  // namespace

// ------------------------------------------------------------ validation

TEST(FredholmModule, OddSymmetryFromRepresentationIsValid) {
  const Poset k = fixtures::chain(3);
  const NetOfAlgebras net = NetOfAlgebras::from_bundle(CStarNetBundle::constant(k, {1}));
  const HilbertNetBundle target =
      HilbertNetBundle::constant(k, 2).with_grading(std::vector<Matrix>(3, diag({1.0, -1.0})));
  Eigen::MatrixXi mult(1, 1);
  mult << 2;
  const StarHom pi({1}, {2}, mult, {identity(2)});
  const NetRepresentation r{net, target, std::vector<StarHom>(3, pi)};
  const FredholmModule m = module_from_representation(r, std::vector<Matrix>(3, sigma_x()));
  const Report rep = validate_module(m);
  EXPECT_TRUE(rep.ok()) << rep.max_defect();
}

TEST(FredholmModule, CovarianceDefectIsReported) {
  Hexagon h;
  FredholmModule m = build_shift_module(h.k, h.p, h.f, UnitaryRep::trivial(1, h.p.generators.size()));
  m.F[2] = conjugate(m.F[2], diag({1.0, -1.0}));  // -F: still odd and self-adjoint
  const Report r = validate_module(m);
  EXPECT_FALSE(r.ok());
  bool covariance = false;
  for (const auto& d : r.defects) covariance = covariance || d.relation == "covariance";
  EXPECT_TRUE(covariance);
}

TEST(FredholmModule, NonOddOperatorIsReported) {
  LocalizedModule m = dense_localized(identity(2));
  m.F = Operator(Matrix(diag({1.0, -1.0})));
  const Report r = validate_localized(m);
  EXPECT_FALSE(r.ok());
}

TEST(FredholmModule, ShiftModulePassesValidation) {
  Hexagon h;
  for (Index d : {1, 2, 3}) {
    std::mt19937_64 rng(d);
    const UnitaryRep u{d, {random_unitary(d, rng)}};
    const FredholmModule m = build_shift_module(h.k, h.p, h.f, u);
    const Report r = validate_module(m);
    EXPECT_TRUE(r.ok()) << r.max_defect();
    EXPECT_LE(r.max_defect(), 1e-10);
  }
}

TEST(FredholmModule, ShiftModuleWithCustomAlgebra) {
  Hexagon h;
  const UnitaryRep u{2, {diag({phase(0.25), phase(0.5)})}};
  const std::vector<ShiftOperator> algebra{ShiftOperator::identity(2), ShiftOperator::shift(2),
                                           ShiftOperator::p0(2)};
  const FredholmModule m = build_shift_module(h.k, h.p, h.f, u, algebra);
  EXPECT_TRUE(validate_module(m).ok());
  EXPECT_ERROR_CODE(build_shift_module(h.k, h.p, h.f, u, std::vector<ShiftOperator>{ShiftOperator::identity(3)}),
                    ErrorCode::FiberMismatch);
}

TEST(FredholmModule, ShiftModuleRejectsRelatorViolation) {
  const Poset k = fixtures::hexagon_with_top();
  const GroupPresentation p = fundamental_presentation(k, 0);
  const PathFrame f = build_path_frame(p);
  ASSERT_FALSE(p.generators.empty());
  UnitaryRep u = UnitaryRep::trivial(1, p.generators.size());
  u.generators[0] = Matrix::Constant(1, 1, phase(0.3));
  EXPECT_ERROR_CODE(build_shift_module(k, p, f, u), ErrorCode::RelatorNotSatisfied);
}

// ------------------------------------------------------------ transport

TEST(Transport, TrivialPathIsIdentity) {
  const LocalizedModule m = dense_localized(diag({phase(0.1), phase(0.4)}));
  const LocalizedModule t = transport(m, 0, Path::trivial(0));
  EXPECT_EQ(dense(t.F), dense(m.F));
  EXPECT_EQ(t.a, 0u);
}

TEST(Transport, RoundTripRecoversOperator) {
  const Matrix twist = diag({phase(0.1), phase(0.4)});
  const LocalizedModule m = dense_localized(twist);
  const Poset& k = m.space.colors.poset();
  for (const Path& p : {direct_down(k), the_long_way(k)}) {
    const LocalizedModule there = transport(m, p.end(), p);
    EXPECT_EQ(there.a, k.index("V12"));
    EXPECT_TRUE(validate_localized(there).ok());
    const LocalizedModule back = transport(there, 0, p.opposite());
    EXPECT_LE(op_norm(dense(back.F) - dense(m.F)), 1e-12);
  }
}

TEST(Transport, NonHomotopicPathsDifferByHolonomy) {
  const Matrix twist = diag({phase(0.1), phase(0.4)});
  const LocalizedModule m = dense_localized(twist);
  const Poset& k = m.space.colors.poset();
  const Matrix f1 = dense(transport(m, k.index("V12"), direct_down(k)).F);
  const Matrix f2 = dense(transport(m, k.index("V12"), the_long_way(k)).F);
  // going down V12 <= U1 applies twist*, the long way only identities
  EXPECT_LE(op_norm(f1 - twist.adjoint() * sigma_x() * twist), 1e-14);
  EXPECT_LE(op_norm(f2 - sigma_x()), 1e-14);
  EXPECT_GT(op_norm(f1 - f2), 0.5);
}

TEST(Transport, PathMustStartAtBase) {
  const LocalizedModule m = dense_localized(identity(2));
  const Poset& k = m.space.colors.poset();
  EXPECT_ERROR_CODE(transport(m, 0, direct_down(k).opposite()), ErrorCode::PathMismatch);
  EXPECT_ERROR_CODE(transport(m, k.index("U2"), direct_down(k)), ErrorCode::PathMismatch);
}

// ------------------------------------------------------------ extension

TEST(Extension, NonInvariantOperatorYieldsWitness) {
  const LocalizedModule m = dense_localized(diag({phase(0.1), phase(0.4)}));
  const GroupPresentation p = fundamental_presentation(m.space.colors.poset(), 0);
  const auto out = extend_localized(m, p, build_path_frame(p));
  ASSERT_TRUE(std::holds_alternative<ObstructionWitness>(out));
  const auto& w = std::get<ObstructionWitness>(out);
  EXPECT_EQ(w.generator, 0u);
  // ad diag(a, b) sigma_x - sigma_x has norm |a conj(b) - 1|
  EXPECT_NEAR(w.defect, std::abs(phase(0.1) * std::conj(phase(0.4)) - 1.0), 1e-12);
}

TEST(Extension, InvariantOperatorExtendsToValidModule) {
  const LocalizedModule m = dense_localized(diag({phase(0.3), phase(0.3)}));
  const GroupPresentation p = fundamental_presentation(m.space.colors.poset(), 0);
  const auto out = extend_localized(m, p, build_path_frame(p));
  ASSERT_TRUE(std::holds_alternative<FredholmModule>(out));
  const Report r = validate_module(std::get<FredholmModule>(out));
  EXPECT_TRUE(r.ok());
  EXPECT_LE(r.max_defect(), 1e-10);
}

TEST(Extension, SimplyConnectedAlwaysExtends) {
  std::mt19937_64 rng(17);
  const Poset k = fixtures::hexagon_with_top();
  const GroupPresentation p = fundamental_presentation(k, 0);
  HilbertNetBundle colors = fixtures::random_gauge(HilbertNetBundle::constant(k, 2), rng);
  // keep the grading compatible: gauge by unitaries commuting with it
  std::map<Edge, Matrix> incl;
  for (const auto& [e, u] : colors.inclusions()) incl.emplace(e, identity(2));
  colors = HilbertNetBundle(k, 2, incl, std::vector<Matrix>(k.size(), diag({1.0, -1.0})));
  const Matrix x = random_hermitian(2, rng);
  Matrix odd = Matrix::Zero(2, 2);
  odd(0, 1) = phase(x(0, 0).real());
  odd(1, 0) = std::conj(odd(0, 1));
  const LocalizedModule m{{colors, Ampliation::Dense},
                          std::vector<std::vector<Operator>>(k.size()), 0, Operator(odd), Parity::Even};
  const auto out = extend_localized(m, p, build_path_frame(p));
  ASSERT_TRUE(std::holds_alternative<FredholmModule>(out));
  EXPECT_TRUE(validate_module(std::get<FredholmModule>(out)).ok());
}

TEST(Extension, FrameMustBeBasedAtLocalization) {
  const LocalizedModule m = dense_localized(identity(2));
  const GroupPresentation p = fundamental_presentation(m.space.colors.poset(), 1);
  EXPECT_ERROR_CODE(extend_localized(m, p, build_path_frame(p)), ErrorCode::PathMismatch);
}

// ------------------------------------------------------------ cycles

TEST(Cycle, ShiftModuleGivesStronglyEquivariantCycle) {
  Hexagon h;
  std::mt19937_64 rng(5);
  const UnitaryRep u{3, {random_unitary(3, rng)}};
  const FredholmModule m = build_shift_module(h.k, h.p, h.f, u);
  const EquivariantCycle c = equivariant_cycle(localize(m, 0), h.p);
  EXPECT_TRUE(c.strongly_equivariant);
  EXPECT_TRUE(validate_cycle(c).ok());
  EXPECT_EQ(c.u.generators.size(), 1u);
}

TEST(Cycle, RoundTripsAreExact) {
  Hexagon h;
  std::mt19937_64 rng(6);
  const UnitaryRep u{2, {random_unitary(2, rng)}};
  const LocalizedModule m = localize(build_shift_module(h.k, h.p, h.f, u), 0);
  const EquivariantCycle c = equivariant_cycle(m, h.p);

  const LocalizedModule back = from_cycle(c, h.k, h.p, h.f);
  EXPECT_TRUE(back.F == m.F);
  EXPECT_EQ(back.a, m.a);
  EXPECT_EQ(back.space.colors.inclusions(), m.space.colors.inclusions());
  EXPECT_EQ(back.space.colors.gradings(), m.space.colors.gradings());

  const EquivariantCycle again = equivariant_cycle(back, h.p);
  EXPECT_EQ(again.grading, c.grading);
  EXPECT_EQ(again.u.generators, c.u.generators);
  EXPECT_TRUE(again.F == c.F);
  EXPECT_EQ(again.strongly_equivariant, c.strongly_equivariant);
}

TEST(Cycle, NonInvariantPhiIsNotStrongAndDoesNotExtend) {
  Hexagon h;
  EquivariantCycle c{Ampliation::Dense, diag({1.0, -1.0}), UnitaryRep{2, {diag({phase(0.1), phase(0.35)})}},
                     {Operator(identity(2))}, Operator(sigma_x()), Parity::Even, false};
  const LocalizedModule m = from_cycle(c, h.k, h.p, h.f);
  EXPECT_FALSE(equivariant_cycle(m, h.p).strongly_equivariant);
  EXPECT_TRUE(std::holds_alternative<ObstructionWitness>(extend_localized(m, h.p, h.f)));

  c.u.generators[0] = diag({phase(0.1), phase(0.1)});
  const LocalizedModule inv = from_cycle(c, h.k, h.p, h.f);
  EXPECT_TRUE(equivariant_cycle(inv, h.p).strongly_equivariant);
  EXPECT_TRUE(std::holds_alternative<FredholmModule>(extend_localized(inv, h.p, h.f)));
}

TEST(Cycle, RejectsBrokenCovariance) {
  Hexagon h;
  // holonomy that does not preserve the grading
  EquivariantCycle c{Ampliation::Dense, diag({1.0, -1.0}), UnitaryRep{2, {sigma_x()}},
                     {}, Operator(sigma_x()), Parity::Even, false};
  EXPECT_ERROR_CODE(from_cycle(c, h.k, h.p, h.f), ErrorCode::NotCovariant);
  c.u.generators[0] = 2.0 * identity(2);
  EXPECT_ERROR_CODE(from_cycle(c, h.k, h.p, h.f), ErrorCode::NotCovariant);
  c.u.generators[0] = identity(2);
  c.F = Operator(Matrix(diag({1.0, -1.0})));
  EXPECT_ERROR_CODE(from_cycle(c, h.k, h.p, h.f), ErrorCode::RelationDefect);
}

TEST(Cycle, LocalizationMustMatchBase) {
  Hexagon h;
  const LocalizedModule m = localize(build_shift_module(h.k, h.p, h.f, UnitaryRep::trivial(1, 1)), 2);
  EXPECT_ERROR_CODE(equivariant_cycle(m, h.p), ErrorCode::PathMismatch);
}

// ------------------------------------------------------------ index

TEST(PiIndex, InvertibleOperatorHasZeroIndex) {
  const EquivariantCycle c{Ampliation::Dense, diag({1.0, -1.0}), UnitaryRep{2, {identity(2)}}, {},
                           Operator(sigma_x()), Parity::Even, true};
  const VirtualRep v = pi_index(c);
  EXPECT_EQ(v.rank(), 0);
  EXPECT_TRUE(v.plus.empty());
  EXPECT_TRUE(v.minus.empty());
}

TEST(PiIndex, DenseKernelSplitsByGrading) {
  // F = 0 on C^2: both graded pieces are kernel
  const EquivariantCycle c{Ampliation::Dense, diag({1.0, -1.0}), UnitaryRep{2, {diag({phase(0.2), phase(0.7)})}},
                           {}, Operator(Matrix(Matrix::Zero(2, 2))), Parity::Even, true};
  const VirtualRep v = pi_index(c);
  EXPECT_EQ(v.rank(), 0);
  ASSERT_EQ(v.plus.size(), 1u);
  ASSERT_EQ(v.minus.size(), 1u);
  EXPECT_NEAR(std::abs(v.plus[0].generators[0](0, 0) - phase(0.2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(v.minus[0].generators[0](0, 0) - phase(0.7)), 0.0, 1e-12);
}

TEST(PiIndex, OddCycleIsRejected) {
  const EquivariantCycle c{Ampliation::Dense, identity(2), UnitaryRep{2, {identity(2)}}, {},
                           Operator(sigma_x()), Parity::Odd, true};
  EXPECT_ERROR_CODE(pi_index(c), ErrorCode::RelationDefect);
}

TEST(PiIndex, KernelMovedByHolonomyIsRejected) {
  Matrix zero = Matrix::Zero(3, 3);
  zero(1, 2) = zero(2, 1) = 1.0;
  // kernel spanned by e0 only, but the holonomy mixes e0 and e1 (same grading)
  Matrix mix = identity(3);
  mix.topLeftCorner(2, 2) = sigma_x();
  const EquivariantCycle c{Ampliation::Dense, diag({1.0, 1.0, -1.0}), UnitaryRep{3, {mix}}, {},
                           Operator(zero), Parity::Even, false};
  EXPECT_ERROR_CODE(pi_index(c), ErrorCode::KernelNotInvariant);
}

TEST(PiIndex, NonChannelShiftIsNotFredholm) {
  const ShiftOperator bad = ShiftOperator::shift(1) + ShiftOperator::coshift(1);
  const EquivariantCycle c{Ampliation::Shift, identity(1), UnitaryRep{1, {identity(1)}}, {}, Operator(bad),
                           Parity::Even, true};
  EXPECT_ERROR_CODE(pi_index(c), ErrorCode::NotFredholm);
}

TEST(PiIndex, TrivialShiftModule) {
  Hexagon h;
  const FredholmModule m = build_shift_module(h.k, h.p, h.f, UnitaryRep::trivial(1, 1));
  const VirtualRep v = pi_index(m, h.p);
  EXPECT_EQ(v.rank(), 1);
  ASSERT_EQ(v.plus.size(), 1u);
  EXPECT_TRUE(v.minus.empty());
  EXPECT_LE(op_norm(v.plus[0].generators[0] - identity(1)), 1e-12);
}

TEST(PiIndex, ThirdRootOfUnity) {
  Hexagon h;
  const Complex w = phase(1.0 / 3.0);
  const FredholmModule m = build_shift_module(h.k, h.p, h.f, UnitaryRep{1, {Matrix::Constant(1, 1, w)}});
  const VirtualRep v = pi_index(m, h.p);
  ASSERT_EQ(v.rank(), 1);
  EXPECT_NEAR(std::abs(v.plus[0].generators[0](0, 0) - w), 0.0, 1e-12);
}

TEST(PiIndex, RandomU3IsRecovered) {
  Hexagon h;
  std::mt19937_64 rng(33);
  const UnitaryRep u{3, {random_unitary(3, rng)}};
  const VirtualRep v = pi_index(build_shift_module(h.k, h.p, h.f, u), h.p);
  EXPECT_EQ(v.rank(), 3);
  EXPECT_TRUE(equivalent(v, VirtualRep::of(u), 1e-9));
  expect_phases_near(index_phases(v), oracles::eigenphases(u.generators[0]), 1e-9);
}

TEST(PiIndex, RandomHolonomyProperty) {
  Hexagon h;
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = std::uniform_int_distribution<Index>(1, 8)(rng);
    const UnitaryRep u{d, {random_unitary(d, rng)}};
    const VirtualRep v = pi_index(build_shift_module(h.k, h.p, h.f, u), h.p);
    ASSERT_EQ(v.rank(), d);
    expect_phases_near(index_phases(v), oracles::eigenphases(u.generators[0]), 1e-9);
  }
}

TEST(PiIndex, InvariantUnderUnitaryEquivalence) {
  Hexagon h;
  std::mt19937_64 rng(8);
  const UnitaryRep u{2, {random_unitary(2, rng)}};
  const FredholmModule m = build_shift_module(h.k, h.p, h.f, u);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Matrix> v;
    for (std::size_t o = 0; o < h.k.size(); ++o) v.push_back(random_unitary(4, rng));
    const FredholmModule c = conjugate_module(m, v);
    EXPECT_TRUE(validate_module(c).ok());
    EXPECT_TRUE(characters_match(pi_index(c, h.p), pi_index(m, h.p), 1e-9));
  }
}

// ------------------------------------------------------------ sectors

TEST(Sector, SingleTrivialSector) {
  Hexagon h;
  const SectorSpec spec{{2}, UnitaryRep::trivial(2, 1), 1, default_sector_toys(1, 1), 0};
  const SectorModule s = build_sector_module(h.k, h.p, h.f, spec);
  EXPECT_EQ(s.statistical_dimension, 2);
  EXPECT_EQ(s.topological_dimension, 1);
  EXPECT_TRUE(validate_module(s.module).ok());
  const VirtualRep v = pi_index(s.module, h.p);
  EXPECT_EQ(v.rank(), 2);
  EXPECT_TRUE(equivalent(v, VirtualRep::of(UnitaryRep::trivial(2, 1)), 1e-9));
}

TEST(Sector, TwoPhases) {
  Hexagon h;
  for (Index m : {1, 3}) {
    for (Index w = 0; w < m; ++w) {
      const UnitaryRep rho{2, {diag({phase(0.15), phase(0.6)})}};
      const SectorSpec spec{{1, 1}, rho, m, default_sector_toys(m, 2, w), w};
      const SectorModule s = build_sector_module(h.k, h.p, h.f, spec);
      EXPECT_EQ(s.statistical_dimension, 2);
      EXPECT_EQ(s.topological_dimension, 2);
      EXPECT_TRUE(validate_module(s.module).ok());
      const VirtualRep v = pi_index(s.module, h.p);
      EXPECT_TRUE(equivalent(v, VirtualRep::of(rho), 1e-9));
      expect_phases_near(index_phases(v), {0.15, 0.6}, 1e-9);
    }
  }
}

TEST(Sector, EqualPhasesHaveTopologicalDimensionOne) {
  Hexagon h;
  const UnitaryRep rho{2, {diag({phase(0.15), phase(0.15)})}};
  const SectorModule s = build_sector_module(h.k, h.p, h.f, {{1, 1}, rho, 2, default_sector_toys(2, 2), 0});
  EXPECT_EQ(s.topological_dimension, 1);
  EXPECT_EQ(s.statistical_dimension, 2);
}

TEST(Sector, LargerBlocks) {
  Hexagon h;
  std::mt19937_64 rng(12);
  const Matrix r = direct_sum(random_unitary(2, rng), random_unitary(3, rng));
  const UnitaryRep rho{5, {r}};
  const SectorModule s = build_sector_module(h.k, h.p, h.f, {{2, 3}, rho, 2, default_sector_toys(2, 2), 1});
  EXPECT_EQ(s.statistical_dimension, 5);
  // one generic unitary generates a commutative algebra: one dimension per
  // distinct eigenvalue
  EXPECT_EQ(s.topological_dimension, 5);
  EXPECT_TRUE(equivalent(pi_index(s.module, h.p), VirtualRep::of(rho), 1e-9));
}

TEST(Sector, DualNetExcludesNonCommutingCandidate) {
  Hexagon h;
  const UnitaryRep rho = UnitaryRep::trivial(2, 1);
  const SectorModule s = build_sector_module(h.k, h.p, h.f, {{1, 1}, rho, 3, default_sector_toys(3, 2), 0});
  // identity and the compact projection commute with F modulo compacts;
  // the color projection onto w does not
  ASSERT_EQ(s.admitted.size(), 3u);
  EXPECT_TRUE(s.admitted[0]);
  EXPECT_TRUE(s.admitted[1]);
  EXPECT_FALSE(s.admitted[2]);
  EXPECT_EQ(s.module.algebra[0].size(), 2u);

  // with a single color the same projection is the identity and is admitted
  const SectorModule one = build_sector_module(h.k, h.p, h.f, {{1, 1}, rho, 1, default_sector_toys(1, 2), 0});
  for (bool a : one.admitted) EXPECT_TRUE(a);
}

TEST(Sector, CentralityIsEnforced) {
  Hexagon h;
  Matrix mix = Matrix::Zero(2, 2);
  mix(0, 1) = mix(1, 0) = 1.0;
  EXPECT_ERROR_CODE(build_sector_module(h.k, h.p, h.f, {{1, 1}, UnitaryRep{2, {mix}}, 1, {}, 0}),
                    ErrorCode::CentralityViolated);
}

TEST(Sector, CyclicShiftIsAnIsometryWithOneDimensionalCokernel) {
  for (Index m : {1, 2, 4})
    for (Index w = 0; w < m; ++w) {
      const ShiftOperator s = cyclic_shift(m, w);
      EXPECT_TRUE(s.adjoint() * s == ShiftOperator::identity(m));
      Matrix pw = Matrix::Zero(m, m);
      pw(w, w) = 1.0;
      EXPECT_TRUE(s * s.adjoint() == ShiftOperator::identity(m) - ShiftOperator::finite(pw, m));
    }
  EXPECT_ERROR_CODE(cyclic_shift(2, 2), ErrorCode::FiberMismatch);
}

TEST(Sector, GeneratedAlgebraDimension) {
  EXPECT_EQ(generated_algebra_dimension({}), 1);
  EXPECT_EQ(generated_algebra_dimension({identity(3)}), 1);
  EXPECT_EQ(generated_algebra_dimension({diag({1.0, phase(0.2), phase(0.4)})}), 3);
  std::mt19937_64 rng(4);
  EXPECT_EQ(generated_algebra_dimension({random_unitary(3, rng), random_unitary(3, rng)}), 9);
}

// ------------------------------------------------------------ bounded transform

TEST(BoundedTransform, Examples) {
  EXPECT_EQ(bounded_transform(Matrix::Zero(3, 3)), Matrix::Zero(3, 3));
  const Matrix f = bounded_transform(diag({1.0, -1.0}));
  EXPECT_LE(op_norm(f - diag({0.5, -0.5})), 1e-15);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  EXPECT_ERROR_CODE(bounded_transform(bad), ErrorCode::NotSelfAdjoint);
}

TEST(BoundedTransform, SpectralMapping) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix d = random_hermitian(4, rng);
    Eigen::SelfAdjointEigenSolver<Matrix> es(d);
    const Eigen::VectorXd l = es.eigenvalues();
    Vector mapped(4);
    for (Index i = 0; i < 4; ++i) mapped(i) = l(i) / (1.0 + l(i) * l(i));
    const Matrix expected = es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint();
    EXPECT_LE(op_norm(bounded_transform(d) - expected), 1e-12);
  }
}
