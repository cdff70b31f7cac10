#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "holonet/net_bundle.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace holonet;

namespace {

const double kPi = 3.14159265358979323846;

Matrix rotation(double theta) {
  Matrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

Matrix diag(std::initializer_list<Complex> values) {
  Vector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (Complex c : values) v(i++) = c;
  return v.asDiagonal();
}

Path hexagon_loop(const Poset& k) {
  auto e = [&](const char* s) { return k.index(s); };
  return Path(k, {{e("U1"), e("U1"), e("V12")}, {e("U1"), e("V31"), e("U1")}, {e("U3"), e("U3"), e("V31")},
                  {e("U3"), e("V23"), e("U3")}, {e("U2"), e("U2"), e("V23")}, {e("U2"), e("V12"), e("U2")}});
}

// Random path from `start` through random 1-simplices.
Path random_path(const Poset& k, Element start, std::size_t steps, std::mt19937_64& rng) {
  const auto all = enumerate_one_simplices(k);
  std::vector<OneSimplex> seq;
  Element at = start;
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<OneSimplex> from;
    for (const auto& b : all)
      if (b.face1 == at) from.push_back(b);
    seq.push_back(from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)]);
    at = seq.back().face0;
  }
  return Path(k, seq);
}

// Random elementary homotopy move: expand a simplex through its support,
// insert a backtrack, or collapse two simplices sharing a support.
Path random_move(const Poset& k, const Path& p, std::mt19937_64& rng) {
  auto s = p.simplices();
  const std::size_t at = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
  const OneSimplex b = s[at];
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      s.erase(s.begin() + at);
      s.insert(s.begin() + at, {{b.support, b.support, b.face1}, {b.support, b.face0, b.support}});
      break;
    case 1:
      s.insert(s.begin() + at + 1, {b.opposite(), b});
      break;
    default: {
      // (s'; f0', f1') after (s; f0, f1) -> one simplex in any common upper bound
      if (at + 1 < s.size()) {
        const OneSimplex c = s[at + 1];
        for (Element u = 0; u < k.size(); ++u)
          if (k.leq(b.face1, u) && k.leq(c.face0, u) && k.leq(b.support, u) && k.leq(c.support, u)) {
            s.erase(s.begin() + at, s.begin() + at + 2);
            s.insert(s.begin() + at, OneSimplex{u, c.face0, b.face1});
            break;
          }
      }
    }
  }
  return Path(k, s);
}

}  // namespace

TEST(Validate, ConstantBundleIsValid) {
  EXPECT_TRUE(validate_bundle(HilbertNetBundle::constant(fixtures::chain(4), 3)).ok());
}

TEST(Validate, HexagonRotationBundleIsValid) {
  EXPECT_TRUE(validate_bundle(fixtures::hexagon_bundle(rotation(0.7))).ok());
}

TEST(Validate, BrokenChainRelationIsReported) {
  const Poset k = fixtures::chain(3);
  std::map<Edge, Matrix> incl;
  for (const Edge& e : k.strict_pairs()) incl.emplace(e, identity(2));
  incl[{0, 2}] = rotation(0.3);
  const Report r = validate_bundle(HilbertNetBundle(k, 2, incl));
  ASSERT_EQ(r.defects.size(), 1u);
  EXPECT_EQ(r.defects[0].relation, "net");
  EXPECT_NEAR(r.defects[0].norm, op_norm(rotation(0.3) - identity(2)), 1e-12);
}

TEST(Validate, GradingRelations) {
  const Poset k = fixtures::chain(2);
  const Matrix g = diag({1.0, -1.0});
  auto b = HilbertNetBundle::constant(k, 2).with_grading({g, g});
  EXPECT_TRUE(validate_bundle(b).ok());
  auto bad = HilbertNetBundle::constant(k, 2).with_grading({g, Matrix(-g)});
  EXPECT_FALSE(validate_bundle(bad).ok());
}

TEST(Validate, StructuralErrors) {
  const Poset k = fixtures::chain(2);
  EXPECT_ERROR_CODE(HilbertNetBundle(k, 2, {}), ErrorCode::InvalidBundle);
  EXPECT_ERROR_CODE(HilbertNetBundle(k, 2, {{Edge{0, 1}, identity(3)}}), ErrorCode::InvalidBundle);
}

TEST(EvaluatePath, TrivialAndOpposite) {
  std::mt19937_64 rng(1);
  const auto rb = fixtures::random_bundle(8, 4, rng);
  const Index d = rb.bundle.dim();
  EXPECT_LT(op_norm(evaluate_path(rb.bundle, Path::trivial(0)) - identity(d)), 1e-14);
  const Path p = random_path(rb.poset, 0, 5, rng);
  EXPECT_LT(op_norm(evaluate_path(rb.bundle, compose_paths(p, p, true)) - identity(d)), 1e-10);
}

TEST(EvaluatePath, HexagonLoopGivesTheTwist) {
  const Matrix r = rotation(0.9);
  const auto b = fixtures::hexagon_bundle(r);
  EXPECT_LT(op_norm(evaluate_path(b, hexagon_loop(b.poset())) - r), 1e-12);
}

TEST(EvaluatePath, Functorial) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rb = fixtures::random_bundle(8, 4, rng);
    const Path q = random_path(rb.poset, 0, 4, rng);
    const Path p = random_path(rb.poset, q.end(), 4, rng);
    const Matrix lhs = evaluate_path(rb.bundle, compose_paths(p, q));
    EXPECT_LT(op_norm(lhs - evaluate_path(rb.bundle, p) * evaluate_path(rb.bundle, q)), 1e-12);
  }
}

TEST(EvaluatePath, HomotopyInvariance) {
  std::mt19937_64 rng(4);
  int pairs = 0;
  while (pairs < 200) {
    const auto rb = fixtures::random_bundle(10, 4, rng);
    for (int i = 0; i < 20; ++i, ++pairs) {
      Path p = random_path(rb.poset, 0, 6, rng);
      Path q = p;
      for (int m = 0; m < 4; ++m) q = random_move(rb.poset, q, rng);
      EXPECT_LT(op_norm(evaluate_path(rb.bundle, p) - evaluate_path(rb.bundle, q)), 1e-10);
    }
  }
}

TEST(EvaluatePath, LoopsEvaluateThroughTheirWords) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rb = fixtures::random_bundle(9, 3, rng);
    const UnitaryRep rho = holonomy_rep(rb.bundle, rb.presentation);
    const Element a = rb.presentation.base;
    const Path out = random_path(rb.poset, a, 5, rng);
    const Path loop = compose_paths(rb.frame.from(out.end()), out);
    EXPECT_LT(op_norm(evaluate_path(rb.bundle, loop) -
                      rho.evaluate(path_to_word(rb.poset, rb.presentation, loop))),
              1e-10);
  }
}

TEST(Holonomy, ConstantBundleIsTrivial) {
  const Poset k = fixtures::hexagon();
  const auto p = fundamental_presentation(k, 0);
  const UnitaryRep rho = holonomy_rep(HilbertNetBundle::constant(k, 2), p);
  ASSERT_EQ(rho.generators.size(), 1u);
  EXPECT_LT(op_norm(rho.generators[0] - identity(2)), 1e-15);
}

TEST(Holonomy, HexagonRotation) {
  const Matrix r = rotation(1.1);
  const auto b = fixtures::hexagon_bundle(r);
  const auto p = fundamental_presentation(b.poset(), b.poset().index("V12"));
  const UnitaryRep rho = holonomy_rep(b, p);
  ASSERT_EQ(rho.generators.size(), 1u);
  // the generator loop runs the same way round as hexagon_loop or against it
  const Matrix g = rho.generators[0];
  EXPECT_LT(std::min(op_norm(g - r), op_norm(g - r.adjoint())), 1e-12);
  EXPECT_LT(op_norm(rho.evaluate(path_to_word(b.poset(), p, hexagon_loop(b.poset()))) - r), 1e-12);
}

TEST(Holonomy, ChainHasNoFreeGenerators) {
  const Poset k = fixtures::chain(3);
  const auto p = fundamental_presentation(k, 0);
  const auto s = simplify_presentation(p);
  EXPECT_TRUE(s.presentation.generators.empty());
  const UnitaryRep rho = holonomy_rep(HilbertNetBundle::constant(k, 2), p);
  for (const auto& g : rho.generators) EXPECT_LT(op_norm(g - identity(2)), 1e-15);
}

TEST(Holonomy, InvalidBundleRejected) {
  const Poset k = fixtures::chain(3);
  std::map<Edge, Matrix> incl;
  for (const Edge& e : k.strict_pairs()) incl.emplace(e, identity(2));
  incl[{0, 2}] = rotation(0.3);
  EXPECT_ERROR_CODE(holonomy_rep(HilbertNetBundle(k, 2, incl), fundamental_presentation(k, 0)),
                    ErrorCode::InvalidBundle);
}

TEST(FromRep, TrivialGivesConstant) {
  const Poset k = fixtures::hexagon();
  const auto p = fundamental_presentation(k, 0);
  const auto b = bundle_from_rep(k, p, build_path_frame(p), UnitaryRep::trivial(2, 1));
  for (const auto& [e, u] : b.inclusions()) EXPECT_EQ(u, identity(2));
}

TEST(FromRep, HexagonPhaseOnOneEdge) {
  const Poset k = fixtures::hexagon();
  const auto p = fundamental_presentation(k, 0);
  const Complex phase = std::polar(1.0, 2 * kPi * 0.3);
  const auto b = bundle_from_rep(k, p, build_path_frame(p), {1, {diag({phase})}});
  int twisted = 0;
  for (const auto& [e, u] : b.inclusions())
    if (std::abs(u(0, 0) - 1.0) > 1e-12) {
      ++twisted;
      EXPECT_EQ(e, p.generators[0]);
      EXPECT_LT(std::abs(u(0, 0) - phase), 1e-15);
    }
  EXPECT_EQ(twisted, 1);
  EXPECT_TRUE(validate_bundle(b).ok());
}

TEST(FromRep, ViolatedRelatorOnTopPoset) {
  const Poset k = fixtures::hexagon_with_top();
  const auto p = fundamental_presentation(k, 0);
  UnitaryRep rho = UnitaryRep::trivial(1, p.generators.size());
  rho.generators[0] = diag({std::polar(1.0, 0.4)});
  EXPECT_ERROR_CODE(bundle_from_rep(k, p, build_path_frame(p), rho), ErrorCode::RelatorNotSatisfied);
}

TEST(FromRep, HolonomyRoundTripIsExact) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rb = fixtures::random_bundle(12, 6, rng);
    const auto b = bundle_from_rep(rb.poset, rb.presentation, rb.frame, rb.rho);
    const UnitaryRep back = holonomy_rep(b, rb.presentation);
    ASSERT_EQ(back.generators.size(), rb.rho.generators.size());
    for (std::size_t g = 0; g < back.generators.size(); ++g) EXPECT_EQ(back.generators[g], rb.rho.generators[g]);
  }
}

TEST(RoundTripIso, IntertwinesRandomBundles) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rb = fixtures::random_bundle(12, 6, rng);
    const auto rebuilt = bundle_from_rep(rb.poset, rb.presentation, rb.frame, holonomy_rep(rb.bundle, rb.presentation));
    const auto v = roundtrip_iso(rb.bundle, rb.presentation, rb.frame);
    EXPECT_LE(intertwiner_defect(rb.bundle, rebuilt, v), 1e-10);
    for (const auto& m : v) EXPECT_TRUE(is_unitary(m, 1e-10));
  }
}

TEST(RoundTripIso, ConstantBundleGivesIdentities) {
  const Poset k = fixtures::hexagon();
  const auto p = fundamental_presentation(k, 0);
  for (const auto& v : roundtrip_iso(HilbertNetBundle::constant(k, 3), p, build_path_frame(p)))
    EXPECT_EQ(v, identity(3));
}

TEST(RoundTripIso, SimplyConnectedRebuildsConstant) {
  std::mt19937_64 rng(10);
  const Poset k = fixtures::hexagon_with_top();
  const auto p = fundamental_presentation(k, 0);
  const auto b = fixtures::random_gauge(HilbertNetBundle::constant(k, 3), rng);
  const auto rebuilt = bundle_from_rep(k, p, build_path_frame(p), holonomy_rep(b, p));
  for (const auto& [e, u] : rebuilt.inclusions()) EXPECT_LT(op_norm(u - identity(3)), 1e-10);
}

TEST(Sections, ConstantBundleHasFullSpace) {
  const Poset k = fixtures::hexagon();
  const auto b = HilbertNetBundle::constant(k, 3);
  const auto s = compute_sections(b, fundamental_presentation(k, 0));
  EXPECT_EQ(s.size(), 3u);
  for (const auto& x : s) EXPECT_LT(section_defect(b, x), 1e-10);
}

TEST(Sections, HexagonExamples) {
  const auto b1 = fixtures::hexagon_bundle(diag({1.0, -1.0}));
  EXPECT_EQ(compute_sections(b1, fundamental_presentation(b1.poset(), 0)).size(), 1u);
  const auto b2 = fixtures::hexagon_bundle(diag({Complex(0, 1), Complex(0, -1)}));
  EXPECT_EQ(compute_sections(b2, fundamental_presentation(b2.poset(), 0)).size(), 0u);
}

TEST(Sections, MatchIndependentFixedSpace) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rb = fixtures::random_bundle(10, 5, rng);
    // holonomy with a forced trivial block, so fixed spaces of every size occur
    const Index d = rb.rho.dim;
    const Index fixed = std::uniform_int_distribution<Index>(0, d)(rng);
    const auto s = simplify_presentation(rb.presentation);
    UnitaryRep free = UnitaryRep::trivial(d, rb.presentation.generators.size());
    if (s.presentation.relators.empty())
      for (std::size_t g : s.presentation.generators)
        free.generators[g] = direct_sum(identity(fixed), random_unitary(d - fixed, rng));
    UnitaryRep rho{d, {}};
    for (std::size_t g = 0; g < free.generators.size(); ++g) rho.generators.push_back(free.evaluate(s.express(g)));
    const auto b = fixtures::random_gauge(bundle_from_rep(rb.poset, rb.presentation, rb.frame, rho), rng);
    const auto sections = compute_sections(b, rb.presentation);
    const auto hol = holonomy_rep(b, rb.presentation).generators;
    EXPECT_EQ(static_cast<Index>(sections.size()), oracles::fixed_dimension(d, hol));
    for (const auto& x : sections) EXPECT_LT(section_defect(b, x), 1e-10);
  }
}

TEST(CStar, AdjointBundleHolonomyAndSections) {
  const Matrix r = diag({1.0, Complex(0, 1), Complex(0, 1)});
  const auto hb = fixtures::hexagon_bundle(r);
  const auto cb = CStarNetBundle::adjoint_of(hb);
  EXPECT_TRUE(validate_bundle(cb).ok());
  const auto p = fundamental_presentation(hb.poset(), 0);
  const auto sections = compute_sections(cb, p);
  // commutant of diag(1, i, i) in M_3: C + M_2
  EXPECT_EQ(sections.size(), 5u);
  for (const auto& s : sections) EXPECT_LT(section_defect(cb, s), 1e-10);
}

TEST(CStar, BlockSwapHolonomy) {
  const Poset k = fixtures::hexagon();
  const auto p = fundamental_presentation(k, 0);
  const FiberShape shape{2, 2};
  std::mt19937_64 rng(13);
  AutomorphismRep alpha{shape, {StarHom::isomorphism(shape, {1, 0}, {random_unitary(2, rng), random_unitary(2, rng)})}};
  const auto b = bundle_from_rep(k, p, build_path_frame(p), alpha);
  EXPECT_TRUE(validate_bundle(b).ok());
  const auto back = holonomy_rep(b, p);
  EXPECT_LT(hom_distance(back.generators[0], alpha.generators[0]), 1e-12);
  // fixed points (x, W_1 x W_1^*) with x in the commutant of W_0 W_1,
  // which is two-dimensional for a generic unitary
  EXPECT_EQ(compute_sections(b, p).size(), 2u);
}

TEST(CStar, BrokenNetRelationReported) {
  const Poset k = fixtures::chain(3);
  std::mt19937_64 rng(14);
  std::map<Edge, StarHom> incl;
  for (const Edge& e : k.strict_pairs()) incl.emplace(e, StarHom::identity({2}));
  incl.at({0, 2}) = StarHom::conjugation(random_unitary(2, rng));
  EXPECT_FALSE(validate_bundle(CStarNetBundle(k, {2}, incl)).ok());
}
