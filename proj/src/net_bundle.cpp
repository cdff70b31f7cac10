#include "holonet/net_bundle.hpp"

#include <algorithm>
#include <cmath>

#include "holonet/errors.hpp"

namespace holonet {

namespace {

std::string pair_name(const Poset& k, Element lo, Element hi) {
  return "(" + k.id(lo) + ", " + k.id(hi) + ")";
}

void check_pairs(const Poset& k, const std::vector<Edge>& keys) {
  const auto pairs = k.strict_pairs();
  for (const Edge& e : keys)
    if (e.lower >= k.size() || e.upper >= k.size() || !k.less(e.lower, e.upper))
      throw Error(ErrorCode::InvalidBundle, "inclusion given for a non-strict pair");
  if (keys.size() != pairs.size())
    throw Error(ErrorCode::InvalidBundle, "every strict pair needs an inclusion map");
}

template <class Map>
std::vector<Edge> keys_of(const Map& m) {
  std::vector<Edge> out;
  for (const auto& kv : m) out.push_back(kv.first);
  return out;
}

}  // namespace

Matrix UnitaryRep::evaluate(const Word& w) const {
  Matrix out = Matrix::Identity(dim, dim);
  for (const Letter& l : w.letters()) {
    const Matrix& g = generators.at(l.generator);
    out = l.inverse ? Matrix(out * g.adjoint()) : Matrix(out * g);
  }
  return out;
}

UnitaryRep UnitaryRep::trivial(Index dim, std::size_t generators) {
  return {dim, std::vector<Matrix>(generators, Matrix::Identity(dim, dim))};
}

StarHom AutomorphismRep::evaluate(const Word& w) const {
  StarHom out = StarHom::identity(shape);
  // rho(w_0) rho(w_1) ...: the last letter acts first
  for (const Letter& l : w.letters()) {
    const StarHom& g = generators.at(l.generator);
    out = out.after(l.inverse ? g.inverse() : g);
  }
  return out;
}

// ------------------------------------------------------------ Hilbert

HilbertNetBundle::HilbertNetBundle(Poset k, Index dim, std::map<Edge, Matrix> incl,
                                   std::optional<std::vector<Matrix>> grading)
    : k_(std::move(k)), dim_(dim), incl_(std::move(incl)), grading_(std::move(grading)) {
  if (dim_ <= 0) throw Error(ErrorCode::InvalidBundle, "fiber dimension must be positive");
  check_pairs(k_, keys_of(incl_));
  for (const auto& [e, u] : incl_)
    if (u.rows() != dim_ || u.cols() != dim_)
      throw Error(ErrorCode::InvalidBundle,
                  "inclusion " + pair_name(k_, e.lower, e.upper) + " is not " +
                      std::to_string(dim_) + "x" + std::to_string(dim_));
  if (grading_) {
    if (grading_->size() != k_.size())
      throw Error(ErrorCode::InvalidBundle, "one grading operator per element is required");
    for (const Matrix& g : *grading_)
      if (g.rows() != dim_ || g.cols() != dim_)
        throw Error(ErrorCode::InvalidBundle, "grading operator has the wrong size");
  }
  id_ = Matrix::Identity(dim_, dim_);
}

HilbertNetBundle HilbertNetBundle::constant(Poset k, Index dim) {
  std::map<Edge, Matrix> incl;
  for (const Edge& e : k.strict_pairs()) incl.emplace(e, Matrix::Identity(dim, dim));
  return HilbertNetBundle(std::move(k), dim, std::move(incl));
}

const Matrix& HilbertNetBundle::incl(Element lower, Element upper) const {
  if (lower == upper) return id_;
  auto it = incl_.find({lower, upper});
  if (it == incl_.end()) throw Error(ErrorCode::NotComparable, "no inclusion between these elements");
  return it->second;
}

HilbertNetBundle HilbertNetBundle::with_grading(std::vector<Matrix> grading) const {
  return HilbertNetBundle(k_, dim_, incl_, std::move(grading));
}

Report validate_bundle(const HilbertNetBundle& b, const Tolerances& tol) {
  Report r;
  const Poset& k = b.poset();
  for (const auto& [e, u] : b.inclusions())
    r.check("unitary", pair_name(k, e.lower, e.upper),
            op_norm(u.adjoint() * u - identity(b.dim())), tol.construction);
  for (Element a = 0; a < k.size(); ++a)
    for (Element m = 0; m < k.size(); ++m) {
      if (!k.less(a, m)) continue;
      for (Element c = 0; c < k.size(); ++c)
        if (k.less(m, c))
          r.check("net", k.id(a) + " < " + k.id(m) + " < " + k.id(c),
                  op_norm(b.incl(a, c) - b.incl(m, c) * b.incl(a, m)), tol.construction);
    }
  if (b.graded()) {
    for (Element o = 0; o < k.size(); ++o) {
      const Matrix& g = b.grading(o);
      r.check("grading-involution", k.id(o), op_norm(g * g - identity(b.dim())), tol.construction);
      r.check("grading-unitary", k.id(o), op_norm(g.adjoint() * g - identity(b.dim())),
              tol.construction);
    }
    for (const auto& [e, u] : b.inclusions())
      r.check("grading-covariance", pair_name(k, e.lower, e.upper),
              op_norm(b.grading(e.upper) * u - u * b.grading(e.lower)), tol.construction);
  }
  return r;
}

Matrix evaluate_path(const HilbertNetBundle& b, const Path& p) {
  p.check_in(b.poset());
  Matrix out = identity(b.dim());
  for (const OneSimplex& s : p.simplices())
    out = (b.incl(s.face0, s.support).adjoint() * b.incl(s.face1, s.support) * out).eval();
  return out;
}

std::pair<double, std::size_t> relator_defect(const UnitaryRep& rho, const GroupPresentation& p) {
  double worst = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const double d = op_norm(rho.evaluate(p.relators[i]) - identity(rho.dim));
    if (d > worst || std::isnan(d)) {
      worst = d;
      at = i;
    }
  }
  return {worst, at};
}

UnitaryRep holonomy_rep(const HilbertNetBundle& b, const GroupPresentation& p, const Tolerances& tol) {
  if (!(b.poset() == p.poset)) throw Error(ErrorCode::InvalidBundle, "presentation built on another poset");
  const Report r = validate_bundle(b, tol);
  if (!r.ok())
    throw Error(ErrorCode::InvalidBundle, r.defects.front().relation + " relation fails at " +
                                              r.defects.front().where);
  const PathFrame f = build_path_frame(p);
  UnitaryRep rho{b.dim(), {}};
  for (const Edge& e : p.generators) {
    const Path up(b.poset(), {{e.upper, e.upper, e.lower}});
    rho.generators.push_back(evaluate_path(b, compose_paths(f.from(e.upper), compose_paths(up, f.to(e.lower)))));
  }
  return rho;
}

HilbertNetBundle bundle_from_rep(const Poset& k, const GroupPresentation& p, const PathFrame& f,
                                 const UnitaryRep& rho, const Tolerances& tol) {
  if (rho.generators.size() != p.generators.size())
    throw Error(ErrorCode::RelatorNotSatisfied, "representation has " +
                                                    std::to_string(rho.generators.size()) +
                                                    " generators, presentation has " +
                                                    std::to_string(p.generators.size()));
  if (rho.dim <= 0) throw Error(ErrorCode::InvalidBundle, "fiber dimension must be positive");
  for (std::size_t g = 0; g < rho.generators.size(); ++g) {
    const Matrix& u = rho.generators[g];
    if (u.rows() != rho.dim || u.cols() != rho.dim || !is_unitary(u, tol.identity))
      throw Error(ErrorCode::RelatorNotSatisfied, "generator " + std::to_string(g) + " is not unitary");
  }
  const auto [worst, at] = relator_defect(rho, p);
  if (!(worst <= tol.identity))
    throw Error(ErrorCode::RelatorNotSatisfied,
                "relator " + p.relators[at].to_string() + " has defect " + std::to_string(worst));
  std::map<Edge, Matrix> incl;
  for (const Edge& e : k.strict_pairs())
    incl.emplace(e, rho.evaluate(edge_loop_word(p, f, e.lower, e.upper)));
  return HilbertNetBundle(k, rho.dim, std::move(incl));
}

std::vector<HilbertSection> compute_sections(const HilbertNetBundle& b, const GroupPresentation& p,
                                             const Tolerances& tol) {
  const UnitaryRep rho = holonomy_rep(b, p, tol);
  const Index d = b.dim();
  Matrix stacked(d * static_cast<Index>(rho.generators.size()), d);
  for (std::size_t g = 0; g < rho.generators.size(); ++g)
    stacked.middleRows(static_cast<Index>(g) * d, d) = rho.generators[g] - identity(d);
  const Matrix fixed = rho.generators.empty() ? identity(d) : null_space(stacked, tol.kernel);

  const PathFrame f = build_path_frame(p);
  std::vector<Matrix> transport;
  for (Element o = 0; o < b.poset().size(); ++o) transport.push_back(evaluate_path(b, f.to(o)));
  std::vector<HilbertSection> out;
  for (Index c = 0; c < fixed.cols(); ++c) {
    HilbertSection s;
    for (const Matrix& t : transport) s.values.push_back(t * fixed.col(c));
    out.push_back(std::move(s));
  }
  return out;
}

double section_defect(const HilbertNetBundle& b, const HilbertSection& s) {
  double d = 0.0;
  for (const auto& [e, u] : b.inclusions())
    d = std::max(d, (u * s.values.at(e.lower) - s.values.at(e.upper)).norm());
  return d;
}

std::vector<Matrix> roundtrip_iso(const HilbertNetBundle& b, const GroupPresentation& p,
                                  const PathFrame& f, const Tolerances& tol) {
  holonomy_rep(b, p, tol);  // validates
  std::vector<Matrix> v;
  for (Element o = 0; o < b.poset().size(); ++o) v.push_back(evaluate_path(b, f.to(o)));
  return v;
}

double intertwiner_defect(const HilbertNetBundle& target, const HilbertNetBundle& source,
                          const std::vector<Matrix>& v) {
  double d = 0.0;
  for (const auto& [e, u] : target.inclusions())
    d = std::max(d, op_norm(v.at(e.upper) * source.incl(e.lower, e.upper) - u * v.at(e.lower)));
  return d;
}

// ----------------------------------------------------------------- C*

CStarNetBundle::CStarNetBundle(Poset k, FiberShape shape, std::map<Edge, StarHom> incl)
    : k_(std::move(k)), shape_(std::move(shape)), incl_(std::move(incl)), id_(StarHom::identity(shape_)) {
  if (shape_.empty()) throw Error(ErrorCode::InvalidBundle, "fiber algebra has no blocks");
  for (Index n : shape_)
    if (n <= 0) throw Error(ErrorCode::InvalidBundle, "block sizes must be positive");
  check_pairs(k_, keys_of(incl_));
  for (const auto& [e, h] : incl_)
    if (h.source() != shape_ || !h.is_isomorphism())
      throw Error(ErrorCode::InvalidBundle,
                  "inclusion " + pair_name(k_, e.lower, e.upper) + " is not a *-isomorphism of the fiber");
}

CStarNetBundle CStarNetBundle::constant(Poset k, FiberShape shape) {
  std::map<Edge, StarHom> incl;
  for (const Edge& e : k.strict_pairs()) incl.emplace(e, StarHom::identity(shape));
  return CStarNetBundle(std::move(k), std::move(shape), std::move(incl));
}

CStarNetBundle CStarNetBundle::adjoint_of(const HilbertNetBundle& b) {
  std::map<Edge, StarHom> incl;
  for (const auto& [e, u] : b.inclusions()) incl.emplace(e, StarHom::conjugation(u));
  return CStarNetBundle(b.poset(), {b.dim()}, std::move(incl));
}

const StarHom& CStarNetBundle::incl(Element lower, Element upper) const {
  if (lower == upper) return id_;
  auto it = incl_.find({lower, upper});
  if (it == incl_.end()) throw Error(ErrorCode::NotComparable, "no inclusion between these elements");
  return it->second;
}

Report validate_bundle(const CStarNetBundle& b, const Tolerances& tol) {
  Report r;
  const Poset& k = b.poset();
  for (const auto& [e, h] : b.inclusions())
    for (std::size_t j = 0; j < h.unitaries().size(); ++j)
      r.check("unitary", pair_name(k, e.lower, e.upper) + " block " + std::to_string(j),
              op_norm(h.unitaries()[j].adjoint() * h.unitaries()[j] - identity(b.shape()[j])),
              tol.construction);
  for (Element a = 0; a < k.size(); ++a)
    for (Element m = 0; m < k.size(); ++m) {
      if (!k.less(a, m)) continue;
      for (Element c = 0; c < k.size(); ++c)
        if (k.less(m, c))
          r.check("net", k.id(a) + " < " + k.id(m) + " < " + k.id(c),
                  hom_distance(b.incl(a, c), b.incl(m, c).after(b.incl(a, m))), tol.construction);
    }
  return r;
}

StarHom evaluate_path(const CStarNetBundle& b, const Path& p) {
  p.check_in(b.poset());
  StarHom out = StarHom::identity(b.shape());
  for (const OneSimplex& s : p.simplices())
    out = b.incl(s.face0, s.support).inverse().after(b.incl(s.face1, s.support)).after(out);
  return out;
}

AutomorphismRep holonomy_rep(const CStarNetBundle& b, const GroupPresentation& p, const Tolerances& tol) {
  if (!(b.poset() == p.poset)) throw Error(ErrorCode::InvalidBundle, "presentation built on another poset");
  const Report r = validate_bundle(b, tol);
  if (!r.ok())
    throw Error(ErrorCode::InvalidBundle, r.defects.front().relation + " relation fails at " +
                                              r.defects.front().where);
  const PathFrame f = build_path_frame(p);
  AutomorphismRep alpha{b.shape(), {}};
  for (const Edge& e : p.generators) {
    const Path up(b.poset(), {{e.upper, e.upper, e.lower}});
    alpha.generators.push_back(
        evaluate_path(b, compose_paths(f.from(e.upper), compose_paths(up, f.to(e.lower)))));
  }
  return alpha;
}

CStarNetBundle bundle_from_rep(const Poset& k, const GroupPresentation& p, const PathFrame& f,
                               const AutomorphismRep& alpha, const Tolerances& tol) {
  if (alpha.generators.size() != p.generators.size())
    throw Error(ErrorCode::RelatorNotSatisfied, "action has the wrong number of generators");
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const double d = hom_distance(alpha.evaluate(p.relators[i]), StarHom::identity(alpha.shape));
    if (!(d <= tol.identity))
      throw Error(ErrorCode::RelatorNotSatisfied,
                  "relator " + p.relators[i].to_string() + " has defect " + std::to_string(d));
  }
  std::map<Edge, StarHom> incl;
  for (const Edge& e : k.strict_pairs())
    incl.emplace(e, alpha.evaluate(edge_loop_word(p, f, e.lower, e.upper)));
  return CStarNetBundle(k, alpha.shape, std::move(incl));
}

std::vector<CStarSection> compute_sections(const CStarNetBundle& b, const GroupPresentation& p,
                                           const Tolerances& tol) {
  const AutomorphismRep alpha = holonomy_rep(b, p, tol);
  const Index n = algebra_dimension(b.shape());
  Matrix stacked(n * static_cast<Index>(alpha.generators.size()), n);
  for (std::size_t g = 0; g < alpha.generators.size(); ++g)
    stacked.middleRows(static_cast<Index>(g) * n, n) = alpha.generators[g].vectorized() - identity(n);
  const Matrix fixed = alpha.generators.empty() ? identity(n) : null_space(stacked, tol.kernel);

  const PathFrame f = build_path_frame(p);
  std::vector<StarHom> transport;
  for (Element o = 0; o < b.poset().size(); ++o) transport.push_back(evaluate_path(b, f.to(o)));
  std::vector<CStarSection> out;
  for (Index c = 0; c < fixed.cols(); ++c) {
    FiberElement x;
    Index off = 0;
    for (Index s : b.shape()) {
      x.push_back(Eigen::Map<const Matrix>(fixed.col(c).data() + off, s, s));
      off += s * s;
    }
    CStarSection sec;
    for (const StarHom& t : transport) sec.values.push_back(t.apply(x));
    out.push_back(std::move(sec));
  }
  return out;
}

double section_defect(const CStarNetBundle& b, const CStarSection& s) {
  double d = 0.0;
  for (const auto& [e, h] : b.inclusions())
    d = std::max(d, fiber_distance(h.apply(s.values.at(e.lower)), s.values.at(e.upper)));
  return d;
}

}  // namespace holonet
