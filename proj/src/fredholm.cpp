#include "holonet/fredholm.hpp"

#include <algorithm>

#include "holonet/errors.hpp"

namespace holonet {

namespace {

Operator identity_op(Ampliation kind, Index c) { return ampliate(kind, Matrix::Identity(c, c)); }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

void check_operator_relations(Report& r, const std::string& where, const Operator& F,
                              const std::vector<Operator>& algebra, const Operator& gamma, Parity parity,
                              const Tolerances& tol) {
  const Ampliation kind = kind_of(F);
  const Index c = colors_of(F);
  r.check("self-adjoint", where, norm_bound(F - adjoint(F)), tol.identity);
  r.check("F^2-1 compact", where, essential_norm(F * F - identity_op(kind, c)), tol.invariance);
  for (std::size_t t = 0; t < algebra.size(); ++t)
    r.check("[F,pi] compact", where + " generator " + std::to_string(t),
            essential_norm(commutator(F, algebra[t])), tol.invariance);
  if (parity == Parity::Even) {
    r.check("odd", where, norm_bound(gamma * F + F * gamma), tol.identity);
    for (std::size_t t = 0; t < algebra.size(); ++t)
      r.check("even representation", where + " generator " + std::to_string(t),
              norm_bound(commutator(gamma, algebra[t])), tol.identity);
  }
}

Matrix color_grading(const ModuleSpace& s, Element o) {
  return s.colors.graded() ? s.colors.grading(o) : identity(s.colors.dim());
}

}  // namespace

Operator ModuleSpace::grading(Element o) const { return ampliate(kind, color_grading(*this, o)); }

FredholmModule module_from_representation(const NetRepresentation& r, std::vector<Matrix> F, Parity parity) {
  const Poset& k = r.net.poset();
  if (F.size() != k.size()) throw Error(ErrorCode::RelationDefect, "one operator per element is required");
  FredholmModule m{{r.target, Ampliation::Dense}, {}, {}, parity};
  for (Element o = 0; o < k.size(); ++o) {
    std::vector<Operator> images;
    for (const auto& t : matrix_units(r.net.fiber(o))) images.emplace_back(r.pi[o].apply_matrix(t));
    m.algebra.push_back(std::move(images));
    if (F[o].rows() != r.target.dim() || F[o].cols() != r.target.dim())
      throw Error(ErrorCode::RelationDefect, "F at " + k.id(o) + " has the wrong size");
    m.F.emplace_back(std::move(F[o]));
  }
  return m;
}

Report validate_module(const FredholmModule& m, const Tolerances& tol) {
  Report r = validate_bundle(m.space.colors, tol);
  const Poset& k = m.space.colors.poset();
  if (m.F.size() != k.size() || m.algebra.size() != k.size()) {
    r.defects.push_back({"structure", "module data does not cover the poset", 1.0});
    return r;
  }
  if (m.parity == Parity::Even && !m.space.colors.graded())
    r.defects.push_back({"structure", "even module without grading", 1.0});
  for (Element o = 0; o < k.size(); ++o)
    check_operator_relations(r, k.id(o), m.F[o], m.algebra[o], m.space.grading(o), m.parity, tol);
  for (const auto& [e, u] : m.space.colors.inclusions()) {
    const Operator U = m.space.incl(e.lower, e.upper);
    r.check("covariance", k.id(e.lower) + " < " + k.id(e.upper), norm_bound(U * m.F[e.lower] - m.F[e.upper] * U),
            tol.identity);
  }
  return r;
}

Report validate_localized(const LocalizedModule& m, const Tolerances& tol) {
  Report r = validate_bundle(m.space.colors, tol);
  const Poset& k = m.space.colors.poset();
  if (m.algebra.size() != k.size()) {
    r.defects.push_back({"structure", "algebra data does not cover the poset", 1.0});
    return r;
  }
  if (m.parity == Parity::Even && !m.space.colors.graded())
    r.defects.push_back({"structure", "even module without grading", 1.0});
  check_operator_relations(r, k.id(m.a), m.F, {}, m.space.grading(m.a), m.parity, tol);

  const GroupPresentation p = fundamental_presentation(k, m.a);
  const PathFrame f = build_path_frame(p);
  for (Element o = 0; o < k.size(); ++o) {
    const Matrix up = evaluate_path(m.space.colors, f.from(o));  // o -> a
    for (std::size_t t = 0; t < m.algebra[o].size(); ++t)
      r.check("[F,ad U pi] compact", k.id(o) + " generator " + std::to_string(t),
              essential_norm(commutator(m.F, conjugate(m.algebra[o][t], up))), tol.invariance);
  }
  const UnitaryRep hol = holonomy_rep(m.space.colors, p, tol);
  for (std::size_t g = 0; g < hol.generators.size(); ++g)
    r.check("holonomy compact", "generator " + std::to_string(g),
            essential_norm(conjugate(m.F, hol.generators[g]) - m.F), tol.invariance);
  return r;
}

LocalizedModule localize(const FredholmModule& m, Element a) {
  return {m.space, m.algebra, a, m.F.at(a), m.parity};
}

LocalizedModule transport(const LocalizedModule& m, Element e, const Path& p) {
  if (p.start() != m.a || p.end() != e)
    throw Error(ErrorCode::PathMismatch, "transport path must run from the localization point to the target");
  LocalizedModule out = m;
  out.a = e;
  out.F = conjugate(m.F, evaluate_path(m.space.colors, p));
  return out;
}

std::variant<FredholmModule, ObstructionWitness> extend_localized(const LocalizedModule& m,
                                                                   const GroupPresentation& p,
                                                                   const PathFrame& f,
                                                                   const Tolerances& tol) {
  if (p.base != m.a || f.base != m.a)
    throw Error(ErrorCode::PathMismatch, "presentation and frame must be based at the localization point");
  const UnitaryRep hol = holonomy_rep(m.space.colors, p, tol);
  for (std::size_t g = 0; g < hol.generators.size(); ++g) {
    const double d = norm_bound(conjugate(m.F, hol.generators[g]) - m.F);
    if (!(d <= tol.invariance)) return ObstructionWitness{g, d};
  }
  FredholmModule out{m.space, m.algebra, {}, m.parity};
  for (Element o = 0; o < m.space.colors.poset().size(); ++o)
    out.F.push_back(conjugate(m.F, evaluate_path(m.space.colors, f.to(o))));
  return out;
}

Report validate_cycle(const EquivariantCycle& c, const Tolerances& tol) {
  Report r;
  const Index d = c.u.dim;
  for (std::size_t g = 0; g < c.u.generators.size(); ++g) {
    r.check("unitary", "generator " + std::to_string(g),
            op_norm(c.u.generators[g].adjoint() * c.u.generators[g] - identity(d)), tol.identity);
    if (c.parity == Parity::Even)
      r.check("graded action", "generator " + std::to_string(g),
              op_norm(c.u.generators[g] * c.grading - c.grading * c.u.generators[g]), tol.identity);
  }
  check_operator_relations(r, "base", c.F, c.eta, ampliate(c.kind, c.grading), c.parity, tol);
  return r;
}

EquivariantCycle equivariant_cycle(const LocalizedModule& m, const GroupPresentation& p, const Tolerances& tol) {
  if (p.base != m.a) throw Error(ErrorCode::PathMismatch, "presentation is not based at the localization point");
  const Report r = validate_localized(m, tol);
  if (!r.ok())
    throw Error(ErrorCode::RelationDefect, r.defects.front().relation + " fails at " + r.defects.front().where);
  EquivariantCycle c{m.space.kind, color_grading(m.space, m.a), holonomy_rep(m.space.colors, p, tol),
                     m.algebra.at(m.a), m.F, m.parity, true};
  for (const Matrix& g : c.u.generators)
    if (!(norm_bound(conjugate(m.F, g) - m.F) <= tol.identity)) c.strongly_equivariant = false;
  return c;
}

LocalizedModule from_cycle(const EquivariantCycle& c, const Poset& k, const GroupPresentation& p,
                           const PathFrame& f, const Tolerances& tol) {
  const Report r = validate_cycle(c, tol);
  for (const auto& d : r.defects)
    if (d.relation == "unitary" || d.relation == "graded action")
      throw Error(ErrorCode::NotCovariant, d.relation + " fails at " + d.where);
  if (!r.ok())
    throw Error(ErrorCode::RelationDefect, r.defects.front().relation + " fails at " + r.defects.front().where);
  HilbertNetBundle colors = bundle_from_rep(k, p, f, c.u, tol);
  if (c.parity == Parity::Even) colors = colors.with_grading(std::vector<Matrix>(k.size(), c.grading));
  return LocalizedModule{{std::move(colors), c.kind}, std::vector<std::vector<Operator>>(k.size(), c.eta),
                         p.base, c.F, c.parity};
}

VirtualRep pi_index(const EquivariantCycle& c, const Tolerances& tol) {
  if (c.parity != Parity::Even) throw Error(ErrorCode::RelationDefect, "the index needs an even cycle");
  const Index d = c.u.dim;
  const Matrix kernel = kernel_basis(c.F, tol.kernel);
  VirtualRep out = VirtualRep::zero(c.u.generators.size());
  for (int sign : {+1, -1}) {
    const Matrix proj = (identity(d) + sign * c.grading) / 2.0;
    const Matrix part = kernel.cols() == 0 ? Matrix(kernel.rows(), 0)
                                           : range_basis(apply_color(proj, kernel), tol.kernel);
    UnitaryRep rep{part.cols(), {}};
    for (std::size_t g = 0; g < c.u.generators.size(); ++g) {
      const Matrix moved = apply_color(c.u.generators[g], part);
      const Matrix restricted = part.adjoint() * moved;
      const double defect = part.cols() == 0 ? 0.0 : op_norm(moved - part * restricted);
      if (!(defect <= tol.invariance))
        throw Error(ErrorCode::KernelNotInvariant,
                    "holonomy generator " + std::to_string(g) + " moves the kernel by " + std::to_string(defect));
      rep.generators.push_back(restricted);
    }
    if (rep.dim > 0) (sign > 0 ? out.plus : out.minus).push_back(std::move(rep));
  }
  return out;
}

VirtualRep pi_index(const FredholmModule& m, const GroupPresentation& p, const Tolerances& tol) {
  return pi_index(equivariant_cycle(localize(m, p.base), p, tol), tol);
}

// ------------------------------------------------------------- builders

FredholmModule build_shift_module(const Poset& k, const GroupPresentation& p, const PathFrame& f,
                                  const UnitaryRep& u, const std::optional<std::vector<ShiftOperator>>& algebra,
                                  const Tolerances& tol) {
  const HilbertNetBundle base = bundle_from_rep(k, p, f, u, tol);
  const Index d = u.dim;
  const Index c = 2 * d;
  Matrix e01 = Matrix::Zero(2, 2), e10 = Matrix::Zero(2, 2), gamma2 = Matrix::Identity(2, 2);
  e01(0, 1) = 1.0;
  e10(1, 0) = 1.0;
  gamma2(1, 1) = -1.0;

  std::map<Edge, Matrix> incl;
  for (const auto& [e, m] : base.inclusions()) incl.emplace(e, kron(identity(2), m));
  HilbertNetBundle colors(k, c, std::move(incl),
                          std::vector<Matrix>(k.size(), kron(gamma2, identity(d))));

  const ShiftOperator F = ShiftOperator::shift(c).left_color(kron(e01, identity(d))) +
                          ShiftOperator::coshift(c).left_color(kron(e10, identity(d)));

  std::vector<Operator> images;
  if (algebra) {
    for (const auto& t : *algebra) {
      if (t.colors() != d) throw Error(ErrorCode::FiberMismatch, "algebra operators must act on l2(N) (x) C^d");
      images.emplace_back(t.color_kron(identity(2), identity(1)));
    }
  } else {
    images.emplace_back(ShiftOperator::identity(c));
    Matrix unit = Matrix::Zero(2 * c, 2 * c);
    unit.topLeftCorner(c, c) = identity(c);
    images.emplace_back(ShiftOperator::finite(unit.topLeftCorner(c, c), c));
    Matrix e = Matrix::Zero(2 * c, 2 * c);
    e.block(0, c, c, c) = identity(c);
    images.emplace_back(ShiftOperator::finite(e, c));
    images.emplace_back(ShiftOperator::finite(Matrix(e.adjoint()), c));
  }
  return FredholmModule{{std::move(colors), Ampliation::Shift},
                        std::vector<std::vector<Operator>>(k.size(), images),
                        std::vector<Operator>(k.size(), F), Parity::Even};
}

ShiftOperator cyclic_shift(Index m, Index cyclic) {
  if (m <= 0 || cyclic < 0 || cyclic >= m) throw Error(ErrorCode::FiberMismatch, "cyclic vector out of range");
  Matrix n = Matrix::Zero(m, m), wrap = Matrix::Zero(m, m);
  for (Index i = 0; i + 1 < m; ++i) n(i + 1, i) = 1.0;
  wrap(0, m - 1) = 1.0;
  ShiftOperator s = ShiftOperator::constant(n) + ShiftOperator::shift(m).left_color(wrap);
  if (cyclic == 0) return s;
  Matrix swap = identity(m);
  swap.row(0).swap(swap.row(cyclic));
  return s.left_color(swap).right_color(swap.adjoint());
}

std::vector<std::vector<ShiftOperator>> default_sector_toys(Index m, std::size_t sectors, Index cyclic) {
  Matrix pw = Matrix::Zero(m, m);
  pw(cyclic, cyclic) = 1.0;
  Matrix rank_one = Matrix::Zero(m, m);
  rank_one(cyclic, cyclic) = 1.0;
  std::vector<std::vector<ShiftOperator>> toys;
  toys.push_back(std::vector<ShiftOperator>(sectors, ShiftOperator::identity(m)));
  toys.push_back(std::vector<ShiftOperator>(sectors, ShiftOperator::finite(rank_one, m)));
  if (m > 1) toys.push_back(std::vector<ShiftOperator>(sectors, ShiftOperator::constant(pw)));
  return toys;
}

bool in_dual_net(const Operator& image, const Operator& F, const Tolerances& tol) {
  return essential_norm(commutator(image, F)) <= tol.invariance;
}

Index generated_algebra_dimension(const std::vector<Matrix>& generators, double threshold) {
  if (generators.empty()) return 1;
  const Index d = generators.front().rows();
  std::vector<Matrix> letters;
  for (const auto& g : generators) {
    letters.push_back(g);
    letters.push_back(g.adjoint());
  }
  std::vector<Matrix> basis{identity(d)};
  Matrix span = Eigen::Map<const Vector>(basis[0].data(), d * d);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& l : letters) {
      const Matrix cand = basis[i] * l;
      Matrix trial(d * d, span.cols() + 1);
      trial << span, Eigen::Map<const Vector>(cand.data(), d * d);
      if (numerical_rank(trial, threshold) > span.cols()) {
        span = trial;
        basis.push_back(cand);
      }
    }
  return static_cast<Index>(basis.size());
}

SectorModule build_sector_module(const Poset& k, const GroupPresentation& p, const PathFrame& f,
                                 const SectorSpec& spec, const Tolerances& tol) {
  Index dim_l = 0;
  for (Index d : spec.dims) {
    if (d <= 0) throw Error(ErrorCode::FiberMismatch, "sector dimensions must be positive");
    dim_l += d;
  }
  if (spec.rho.dim != dim_l) throw Error(ErrorCode::FiberMismatch, "rho must act on the sum of the sector spaces");
  std::vector<Matrix> central;
  Index off = 0;
  for (Index d : spec.dims) {
    Matrix e = Matrix::Zero(dim_l, dim_l);
    e.block(off, off, d, d) = identity(d);
    central.push_back(e);
    off += d;
  }
  for (std::size_t g = 0; g < spec.rho.generators.size(); ++g)
    for (std::size_t s = 0; s < central.size(); ++s) {
      const Matrix& r = spec.rho.generators[g];
      const double d = op_norm(r * central[s] - central[s] * r);
      if (!(d <= tol.identity))
        throw Error(ErrorCode::CentralityViolated,
                    "rho(g" + std::to_string(g) + ") does not commute with e_" + std::to_string(s + 1));
    }

  const HilbertNetBundle base = bundle_from_rep(k, p, f, spec.rho, tol);
  const Index m = spec.iota_colors;
  const Index c = 2 * m * dim_l;
  Matrix e01 = Matrix::Zero(2, 2), e10 = Matrix::Zero(2, 2), gamma2 = Matrix::Identity(2, 2);
  e01(0, 1) = 1.0;
  e10(1, 0) = 1.0;
  gamma2(0, 0) = -1.0;

  std::map<Edge, Matrix> incl;
  for (const auto& [e, u] : base.inclusions()) incl.emplace(e, kron(identity(2 * m), u));
  HilbertNetBundle colors(k, c, std::move(incl), std::vector<Matrix>(k.size(), kron(gamma2, identity(m * dim_l))));

  const ShiftOperator sw = cyclic_shift(m, spec.cyclic);
  const ShiftOperator F = sw.adjoint().color_kron(e01, identity(dim_l)) + sw.color_kron(e10, identity(dim_l));

  std::vector<bool> flags;
  std::vector<Operator> admitted;
  for (const auto& images : spec.toy) {
    if (images.size() != spec.dims.size())
      throw Error(ErrorCode::FiberMismatch, "each candidate needs one image per sector");
    ShiftOperator pi(c);
    for (std::size_t s = 0; s < images.size(); ++s) {
      if (images[s].colors() != m) throw Error(ErrorCode::FiberMismatch, "toy images must act on l2(N) (x) C^m");
      pi = pi + images[s].color_kron(identity(2), central[s]);
    }
    const bool member = in_dual_net(pi, F, tol);
    flags.push_back(member);
    if (member) admitted.emplace_back(std::move(pi));
  }
  return SectorModule{FredholmModule{{std::move(colors), Ampliation::Shift},
                                     std::vector<std::vector<Operator>>(k.size(), admitted),
                                     std::vector<Operator>(k.size(), F), Parity::Even},
                      std::move(flags), generated_algebra_dimension(spec.rho.generators, tol.kernel), dim_l};
}

Matrix bounded_transform(const Matrix& d, const Tolerances& tol) {
  if (!is_self_adjoint(d, tol.identity)) throw Error(ErrorCode::NotSelfAdjoint, "D must be self-adjoint");
  const Matrix a = identity(d.rows()) + d * d;
  return a.llt().solve(d);  // (1 + D^2)^{-1} D = D (1 + D^2)^{-1}
}

FredholmModule conjugate_module(const FredholmModule& m, const std::vector<Matrix>& v) {
  const Poset& k = m.space.colors.poset();
  if (v.size() != k.size()) throw Error(ErrorCode::FiberMismatch, "one unitary per element is required");
  std::map<Edge, Matrix> incl;
  for (const auto& [e, u] : m.space.colors.inclusions()) incl.emplace(e, v[e.upper] * u * v[e.lower].adjoint());
  std::optional<std::vector<Matrix>> grading;
  if (m.space.colors.graded()) {
    grading.emplace();
    for (Element o = 0; o < k.size(); ++o) grading->push_back(v[o] * m.space.colors.grading(o) * v[o].adjoint());
  }
  FredholmModule out{{HilbertNetBundle(k, m.space.colors.dim(), std::move(incl), std::move(grading)), m.space.kind},
                     {}, {}, m.parity};
  for (Element o = 0; o < k.size(); ++o) {
    std::vector<Operator> images;
    for (const auto& t : m.algebra[o]) images.push_back(conjugate(t, v[o]));
    out.algebra.push_back(std::move(images));
    out.F.push_back(conjugate(m.F[o], v[o]));
  }
  return out;
}

}  // namespace holonet
