#include "holonet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "holonet/errors.hpp"
#include "holonet/fredholm.hpp"
#include "holonet/representation.hpp"
#include "holonet/spectral.hpp"

namespace holonet::cli {

namespace {

using json = nlohmann::ordered_json;

const double kTwoPi = 6.28318530717958647692;

// ------------------------------------------------------------ parsing

[[noreturn]] void schema_error(const std::string& ptr, const std::string& msg) {
  throw Error(ErrorCode::SchemaError, (ptr.empty() ? std::string("/") : ptr) + ": " + msg);
}

[[noreturn]] void reference_error(const std::string& ptr, const std::string& msg) {
  throw Error(ErrorCode::ReferenceError, (ptr.empty() ? std::string("/") : ptr) + ": " + msg);
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& ptr) {
  if (!obj.is_object()) schema_error(ptr, "expected an object");
  for (const auto& [k, v] : obj.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      schema_error(child(ptr, k), "unknown key");
}

const json& need(const json& obj, const char* key, const std::string& ptr) {
  if (!obj.contains(key)) schema_error(child(ptr, key), "missing");
  return obj.at(key);
}

std::string get_string(const json& v, const std::string& ptr) {
  if (!v.is_string()) schema_error(ptr, "expected a string");
  return v.get<std::string>();
}

double get_number(const json& v, const std::string& ptr) {
  if (!v.is_number()) schema_error(ptr, "expected a number");
  return v.get<double>();
}

Index get_count(const json& v, const std::string& ptr, Index min) {
  if (!v.is_number_integer()) schema_error(ptr, "expected an integer");
  const auto n = v.get<long long>();
  if (n < min) schema_error(ptr, "must be at least " + std::to_string(min));
  return static_cast<Index>(n);
}

const json& get_array(const json& v, const std::string& ptr) {
  if (!v.is_array()) schema_error(ptr, "expected an array");
  return v;
}

Complex get_complex(const json& v, const std::string& ptr) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    schema_error(ptr, "expected a complex number [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

Matrix get_matrix(const json& v, const std::string& ptr, std::optional<Index> size) {
  const json& rows = get_array(v, ptr);
  const auto n = static_cast<Index>(rows.size());
  if (n == 0) schema_error(ptr, "empty matrix");
  if (size && n != *size)
    schema_error(ptr, "matrix has " + std::to_string(n) + " rows, expected " + std::to_string(*size));
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const std::string rp = child(ptr, static_cast<std::size_t>(i));
    const json& row = get_array(rows[static_cast<std::size_t>(i)], rp);
    if (static_cast<Index>(row.size()) != n)
      schema_error(rp, "row length " + std::to_string(row.size()) + ", expected " + std::to_string(n));
    for (Index j = 0; j < n; ++j) m(i, j) = get_complex(row[static_cast<std::size_t>(j)], child(rp, j));
  }
  return m;
}

Rational get_rational(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  const std::string s = get_string(v, ptr);
  try {
    return parse_rational(s);
  } catch (const Error&) {
    schema_error(ptr, "not a rational number: '" + s + "'");
  }
}

ExactPhase get_phase(const json& v, const std::string& ptr, const std::set<std::string>& declared) {
  only_keys(v, {"rat", "irr"}, ptr);
  ExactPhase z;
  if (v.contains("rat")) z.rat = get_rational(v.at("rat"), child(ptr, "rat"));
  if (v.contains("irr")) {
    const std::string ip = child(ptr, "irr");
    if (!v.at("irr").is_object()) schema_error(ip, "expected an object");
    for (const auto& [name, c] : v.at("irr").items()) {
      if (!declared.count(name)) reference_error(child(ip, name), "undeclared irrational '" + name + "'");
      z = z + ExactPhase::irrational(name, get_rational(c, child(ip, name)));
    }
  }
  return z;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

json phase_json(const ExactPhase& z) {
  json out{{"rat", to_string(z.rat)}};
  if (!z.irr.empty()) {
    json irr = json::object();
    for (const auto& [n, c] : z.irr) irr[n] = to_string(c);
    out["irr"] = irr;
  }
  return out;
}

Matrix diagonal_of(const std::vector<ExactPhase>& phases, const IrrationalBasis& basis) {
  Vector v(static_cast<Index>(phases.size()));
  for (std::size_t i = 0; i < phases.size(); ++i)
    v(static_cast<Index>(i)) = std::polar(1.0, kTwoPi * phases[i].value(basis));
  return v.asDiagonal();
}

Poset poset_of(const InputDocument& d) {
  try {
    return Poset(d.elements, d.relations);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownElement) reference_error("/poset/relations", e.what());
    schema_error(e.code() == ErrorCode::DuplicateElement ? "/poset/elements" : "/poset/relations", e.what());
  }
}

Element base_of(const InputDocument& d, const Poset& k) { return d.base ? k.index(*d.base) : 0; }

// ------------------------------------------------------------ report helpers

double num(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

json complex_json(Complex c) { return json::array({num(c.real()), num(c.imag())}); }

json phases_json(const Matrix& u) {
  std::vector<double> out;
  for (const Complex& l : eigenvalues(u)) {
    double t = num(std::arg(l) / kTwoPi);
    if (t < 0) t = num(t + 1.0);
    if (t >= 1.0) t = 0.0;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

json defects_json(const Report& r) {
  json out = json::array();
  for (const auto& d : r.defects) out.push_back({{"relation", d.relation}, {"where", d.where}, {"norm", d.norm}});
  return out;
}

json rep_json(const UnitaryRep& u) {
  json gens = json::array();
  for (const auto& g : u.generators)
    gens.push_back({{"eigenphases", phases_json(g)}, {"trace", complex_json(g.trace())}});
  return {{"dim", u.dim}, {"generators", gens}};
}

json virtual_json(const VirtualRep& v) {
  json plus = json::array(), minus = json::array();
  for (const auto& r : v.plus) plus.push_back(rep_json(r));
  for (const auto& r : v.minus) minus.push_back(rep_json(r));
  json characters = json::array();
  for (std::size_t g = 0; g < v.generators; ++g) characters.push_back(complex_json(v.character(Word::generator(g))));
  return {{"rank", v.rank()}, {"plus", plus}, {"minus", minus}, {"characters", characters}};
}

json ccs_json(const CCSClass& c) {
  json odd = json::object();
  for (const auto& [n, q] : c.odd.irr) odd[n] = to_string(q);
  return {{"class", c.to_string()}, {"rank", c.rank}, {"odd", odd}};
}

// ------------------------------------------------------------ run context

struct Context {
  const InputDocument& doc;
  const RunOptions& options;
  Poset k;
  GroupPresentation p;
  PathFrame f;
  Tolerances tol;
  IrrationalBasis basis;
  json report;
  json verdicts = json::object();

  Context(const InputDocument& d, const RunOptions& o)
      : doc(d), options(o), k(poset_of(d)), p(fundamental_presentation(k, base_of(d, k))),
        f(build_path_frame(p)), basis(d.irrationals) {
    if (o.tolerance) tol.identity = *o.tolerance;
  }

  void verdict(const std::string& name, bool ok) { verdicts[name] = ok; }

  const BundleSection& bundle_section() const {
    if (!doc.bundle) schema_error("/bundle", "this command needs a bundle section");
    return *doc.bundle;
  }
  const RepresentationSection& rep_section() const {
    if (!doc.representation) schema_error("/representation", "this command needs a representation section");
    return *doc.representation;
  }
  const ModuleSection& module_section() const {
    if (!doc.module) schema_error("/module", "this command needs a module section");
    return *doc.module;
  }

  HilbertNetBundle bundle(std::optional<Matrix> grading = std::nullopt) const {
    const BundleSection& s = bundle_section();
    std::map<Edge, Matrix> incl;
    for (const Edge& e : k.strict_pairs()) incl.emplace(e, identity(s.dim));
    for (const auto& [lo, up, m] : s.edges) incl[{k.index(lo), k.index(up)}] = m;
    if (!grading) grading = s.grading;
    std::optional<std::vector<Matrix>> g;
    if (grading) g = std::vector<Matrix>(k.size(), *grading);
    return HilbertNetBundle(k, s.dim, std::move(incl), std::move(g));
  }

  UnitaryRep rep() const {
    const RepresentationSection& s = rep_section();
    UnitaryRep u{s.dim, {}};
    for (const auto& g : s.generators) u.generators.push_back(g.matrix ? *g.matrix : diagonal_of(*g.phases, basis));
    return u;
  }

  /// Every declared exact phase.
  std::vector<ExactPhase> pool() const {
    std::vector<ExactPhase> out;
    if (doc.representation)
      for (const auto& g : doc.representation->generators)
        if (g.phases) out.insert(out.end(), g.phases->begin(), g.phases->end());
    return out;
  }

  FredholmModule module() const {
    const ModuleSection& m = module_section();
    if (m.type == "shift") return build_shift_module(k, p, f, rep(), std::nullopt, tol);
    if (m.type == "sector") return sector().module;
    const LocalizedModule loc = localized();
    FredholmModule out{loc.space, loc.algebra, {}, loc.parity};
    for (Element o = 0; o < k.size(); ++o) out.F.push_back(conjugate(loc.F, evaluate_path(loc.space.colors, f.to(o))));
    return out;
  }

  SectorModule sector() const {
    const ModuleSection& m = module_section();
    if (m.type != "sector") schema_error("/module/type", "this command needs a sector module");
    const SectorSpec spec{m.dims, rep(), m.iota_colors,
                          default_sector_toys(m.iota_colors, m.dims.size(), m.cyclic), m.cyclic};
    return build_sector_module(k, p, f, spec, tol);
  }

  LocalizedModule localized() const {
    const ModuleSection& m = module_section();
    if (m.type != "dense") schema_error("/module/type", "this command needs a dense module");
    const HilbertNetBundle colors = bundle(m.grading);
    const std::vector<std::vector<Operator>> algebra(k.size(), {Operator(identity(colors.dim()))});
    return {{colors, Ampliation::Dense}, algebra, p.base, Operator(*m.F), Parity::Even};
  }

  /// ccs of a virtual representation when exact phase data is available.
  void maybe_ccs(const VirtualRep& v, const char* key) {
    const std::vector<ExactPhase> z = pool();
    if (z.empty()) return;
    try {
      report[key] = ccs_json(ccs_of_virtual(p, v, basis, z, tol.invariance));
      const std::size_t g = infinite_cyclic_generator(p);
      json exact = json::object();
      for (const auto& [name, part] : {std::pair{"plus", &v.plus}, std::pair{"minus", &v.minus}}) {
        json list = json::array();
        for (const auto& r : *part)
          for (const auto& x : recover_phases(r.generators.at(g), z, basis, tol.invariance)) list.push_back(x.to_string());
        exact[name] = list;
      }
      report["index_exact_phases"] = exact;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotInfiniteCyclic) throw;
    }
  }
};

// ------------------------------------------------------------ commands

void cmd_pi1(Context& c) {
  const SimplifiedPresentation s = simplify_presentation(c.p);
  json gens = json::array();
  for (const Edge& e : c.p.generators) gens.push_back(c.k.id(e.lower) + "<" + c.k.id(e.upper));
  json words = json::array();
  for (const Word& w : s.presentation.relators) words.push_back(w.to_string());
  c.report["base"] = c.k.id(c.p.base);
  c.report["generators"] = c.p.generators.size();
  c.report["relators"] = c.p.relators.size();
  c.report["generator_edges"] = gens;
  c.report["simplified"] = {{"generators", s.presentation.generators.size()}, {"relators", words}};
  c.report["abelianization"] = s.abelianization.to_string();
  c.report["verdict"] = to_string(s.verdict);
  c.verdict("connected", true);
}

bool check_bundle(Context& c, const HilbertNetBundle& b) {
  const Report r = validate_bundle(b, c.tol);
  c.report["bundle"] = {{"dim", b.dim()}, {"max_defect", r.max_defect()}, {"defects", defects_json(r)}};
  c.verdict("bundle_valid", r.ok());
  return r.ok();
}

void cmd_holonomy(Context& c) {
  const HilbertNetBundle b = c.bundle();
  if (!check_bundle(c, b)) return;
  const UnitaryRep u = holonomy_rep(b, c.p, c.tol);
  json gens = json::array();
  for (std::size_t g = 0; g < u.generators.size(); ++g) {
    const Edge& e = c.p.generators[g];
    gens.push_back({{"edge", json::array({c.k.id(e.lower), c.k.id(e.upper)})},
                    {"eigenphases", phases_json(u.generators[g])},
                    {"trace", complex_json(u.generators[g].trace())}});
  }
  c.report["holonomy"] = gens;
  const double d = relator_defect(u, c.p).first;
  c.report["relator_defect"] = d;
  c.verdict("relators_satisfied", d <= c.tol.identity);
}

void cmd_sections(Context& c) {
  const HilbertNetBundle b = c.bundle();
  if (!check_bundle(c, b)) return;
  const auto sections = compute_sections(b, c.p, c.tol);
  double worst = 0.0;
  for (const auto& s : sections) worst = std::max(worst, section_defect(b, s));
  c.report["dimension"] = sections.size();
  c.report["max_section_defect"] = worst;
  c.verdict("sections_flat", worst <= c.tol.identity);
}

void cmd_rep_check(Context& c) {
  const UnitaryRep u = c.rep();
  double unitary = 0.0;
  for (const auto& g : u.generators) unitary = std::max(unitary, op_norm(g.adjoint() * g - identity(u.dim)));
  const double relators = relator_defect(u, c.p).first;
  c.report["unitarity_defect"] = unitary;
  c.report["relator_defect"] = relators;
  c.verdict("unitary", unitary <= c.tol.identity);
  c.verdict("relators_satisfied", relators <= c.tol.identity);
  if (!(unitary <= c.tol.identity && relators <= c.tol.identity)) return;

  const HilbertNetBundle b = bundle_from_rep(c.k, c.p, c.f, u, c.tol);
  check_bundle(c, b);
  const UnitaryRep back = holonomy_rep(b, c.p, c.tol);
  double d = 0.0;
  for (std::size_t g = 0; g < u.generators.size(); ++g)
    d = std::max(d, op_norm(back.generators[g] - u.generators[g]));
  c.report["holonomy_roundtrip_defect"] = d;
  c.verdict("holonomy_roundtrip", d <= c.tol.identity);

  std::vector<StarHom> alpha;
  for (const auto& g : u.generators) alpha.push_back(StarHom::conjugation(g));
  const CovariantPair pair{StarHom::identity({u.dim}), u, AutomorphismRep{{u.dim}, alpha}};
  const NetRepresentation r = netify(pair, c.k, c.p, c.f, c.tol);
  const Report rr = validate_representation(r, c.tol);
  c.verdict("representation_valid", rr.ok());
  const CovariantPair again = covariantize(r, c.p, c.tol);
  c.report["covariance_defect"] = covariance_defect(again);
  c.verdict("covariant_roundtrip", again.u.generators == u.generators);
}

void cmd_roundtrip(Context& c) {
  const HilbertNetBundle b = c.bundle();
  if (!check_bundle(c, b)) return;
  const UnitaryRep u = holonomy_rep(b, c.p, c.tol);
  const HilbertNetBundle rebuilt = bundle_from_rep(c.k, c.p, c.f, u, c.tol);
  const UnitaryRep again = holonomy_rep(rebuilt, c.p, c.tol);
  const bool exact = again.generators == u.generators;
  const double iso = intertwiner_defect(b, rebuilt, roundtrip_iso(b, c.p, c.f, c.tol));
  c.report["holonomy_exact"] = exact;
  c.report["intertwiner_defect"] = iso;
  c.verdict("holonomy_bundle_holonomy", exact);
  c.verdict("bundle_holonomy_bundle", iso <= 1e-10);
}

void cmd_fredholm_verify(Context& c) {
  const FredholmModule m = c.module();
  const Report r = validate_module(m, c.tol);
  c.report["module"] = c.module_section().type;
  c.report["max_defect"] = r.max_defect();
  c.report["defects"] = defects_json(r);
  c.verdict("module_valid", r.ok());
}

void cmd_extend(Context& c) {
  const LocalizedModule loc = c.localized();
  const Report r = validate_localized(loc, c.tol);
  c.report["localized_at"] = c.k.id(loc.a);
  c.report["localized_defects"] = defects_json(r);
  c.verdict("localized_valid", r.ok());
  const auto out = extend_localized(loc, c.p, c.f, c.tol);
  if (const auto* w = std::get_if<ObstructionWitness>(&out)) {
    const Edge& e = c.p.generators.at(w->generator);
    c.report["obstruction"] = {{"generator", w->generator},
                               {"edge", json::array({c.k.id(e.lower), c.k.id(e.upper)})},
                               {"defect", num(w->defect)}};
    c.verdict("extends", false);
    return;
  }
  const Report full = validate_module(std::get<FredholmModule>(out), c.tol);
  c.report["module_max_defect"] = full.max_defect();
  c.verdict("extends", true);
  c.verdict("extended_module_valid", full.ok());
}

void index_of(Context& c, const FredholmModule& m, bool compare) {
  const VirtualRep v = pi_index(m, c.p, c.tol);
  c.report["index"] = virtual_json(v);
  if (compare) {
    const VirtualRep expected = VirtualRep::of(c.rep());
    c.verdict("index_matches_holonomy", equivalent(v, expected, c.tol.invariance, c.options.seed));
  }
  c.maybe_ccs(v, "index_ccs");
}

void cmd_index(Context& c) {
  const FredholmModule m = c.module();
  index_of(c, m, c.module_section().type != "dense");
  c.verdict("index_computed", true);
}

void cmd_ccs(Context& c) {
  const RepresentationSection& s = c.rep_section();
  const std::size_t g = infinite_cyclic_generator(c.p);
  const GeneratorSection& gen = s.generators.at(g);
  CCSClass x = gen.phases && !gen.matrix ? ccs_of_rep(c.p, *gen.phases, c.basis)
                                         : ccs_of_rep(c.p, c.rep(), c.basis, c.pool(), c.tol.invariance);
  c.report["generator"] = g;
  c.report["ccs"] = ccs_json(x);
  c.verdict("exact", true);
}

void cmd_shift_demo(Context& c) {
  const UnitaryRep u = c.rep();
  const FredholmModule m = build_shift_module(c.k, c.p, c.f, u, std::nullopt, c.tol);
  const Report r = validate_module(m, c.tol);
  c.report["module_max_defect"] = r.max_defect();
  c.verdict("module_valid", r.ok());
  index_of(c, m, true);
  if (c.report.contains("index_ccs")) {
    c.report["holonomy_ccs"] = ccs_json(ccs_of_rep(c.p, u, c.basis, c.pool(), c.tol.invariance));
    c.verdict("ccs_consistent", c.report["index_ccs"] == c.report["holonomy_ccs"]);
  }
}

void cmd_sector_demo(Context& c) {
  const SectorModule s = c.sector();
  c.report["statistical_dimension"] = s.statistical_dimension;
  c.report["topological_dimension"] = s.topological_dimension;
  c.report["admitted"] = s.admitted;
  const Report r = validate_module(s.module, c.tol);
  c.report["module_max_defect"] = r.max_defect();
  c.verdict("module_valid", r.ok());
  index_of(c, s.module, true);
}

void cmd_spectral_verify(Context& c) {
  if (!c.doc.triple) schema_error("/triple", "this command needs a triple section");
  const TripleSection& t = *c.doc.triple;
  const UnitaryRep u = c.rep();
  std::vector<StarHom> alpha;
  for (const auto& g : u.generators) alpha.push_back(StarHom::conjugation(g));
  const EquivariantTriple e{t.grading, {StarHom::identity({u.dim}), u, AutomorphismRep{{u.dim}, alpha}}, t.D};
  const NetSpectralTriple net = from_equivariant(e, c.k, c.p, c.f, c.tol);
  const Report r = validate_triple(net, c.tol);
  c.report["max_defect"] = r.max_defect();
  c.report["defects"] = defects_json(r);
  c.verdict("triple_valid", r.ok());
  const EquivariantTriple back = to_equivariant(net, c.p, c.tol);
  c.verdict("roundtrip_exact", back.D == e.D && back.grading == e.grading &&
                                   back.pair.u.generators == e.pair.u.generators);
  c.report["beta"] = t.beta;
  c.report["theta_trace"] = num(theta_trace(t.D, t.beta, c.tol));
}

const std::vector<std::pair<std::string, std::function<void(Context&)>>>& table() {
  static const std::vector<std::pair<std::string, std::function<void(Context&)>>> t{
      {"pi1", cmd_pi1},
      {"holonomy", cmd_holonomy},
      {"sections", cmd_sections},
      {"rep-check", cmd_rep_check},
      {"fredholm-verify", cmd_fredholm_verify},
      {"extend", cmd_extend},
      {"index", cmd_index},
      {"ccs", cmd_ccs},
      {"shift-demo", cmd_shift_demo},
      {"sector-demo", cmd_sector_demo},
      {"spectral-verify", cmd_spectral_verify},
      {"roundtrip", cmd_roundtrip},
  };
  return t;
}

bool input_error(ErrorCode code) {
  return code == ErrorCode::SyntaxError || code == ErrorCode::SchemaError || code == ErrorCode::ReferenceError ||
         code == ErrorCode::UnknownCommand;
}

std::string render(const json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::string out;
  for (const auto& [k, v] : report.items()) out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

}  // namespace

// ------------------------------------------------------------ documents

InputDocument parse_input(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.rfind(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
  only_keys(root, {"poset", "irrationals", "bundle", "representation", "module", "triple"}, "");
  InputDocument d;

  const json& poset = need(root, "poset", "");
  only_keys(poset, {"elements", "relations", "base"}, "/poset");
  const json& elements = get_array(need(poset, "elements", "/poset"), "/poset/elements");
  if (elements.empty()) schema_error("/poset/elements", "a poset needs at least one element");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string ptr = child("/poset/elements", i);
    std::string id = get_string(elements[i], ptr);
    if (id.empty()) schema_error(ptr, "empty identifier");
    if (!ids.insert(id).second) schema_error(ptr, "duplicate element '" + id + "'");
    d.elements.push_back(std::move(id));
  }
  if (poset.contains("relations")) {
    const json& rel = get_array(poset.at("relations"), "/poset/relations");
    for (std::size_t i = 0; i < rel.size(); ++i) {
      const std::string ptr = child("/poset/relations", i);
      if (!rel[i].is_array() || rel[i].size() != 2) schema_error(ptr, "expected a pair [lower, upper]");
      std::pair<std::string, std::string> pr{get_string(rel[i][0], child(ptr, 0)), get_string(rel[i][1], child(ptr, 1))};
      if (!ids.count(pr.first)) reference_error(child(ptr, 0), "unknown element '" + pr.first + "'");
      if (!ids.count(pr.second)) reference_error(child(ptr, 1), "unknown element '" + pr.second + "'");
      d.relations.push_back(std::move(pr));
    }
  }
  if (poset.contains("base")) {
    d.base = get_string(poset.at("base"), "/poset/base");
    if (!ids.count(*d.base)) reference_error("/poset/base", "unknown element '" + *d.base + "'");
  }
  const Poset k = poset_of(d);
  if (!check_connected(k)) schema_error("/poset", "the comparability graph is not connected");

  std::set<std::string> declared;
  if (root.contains("irrationals")) {
    const json& irr = root.at("irrationals");
    if (!irr.is_object()) schema_error("/irrationals", "expected an object");
    for (const auto& [name, v] : irr.items()) {
      d.irrationals.emplace_back(name, get_number(v, child("/irrationals", name)));
      declared.insert(name);
    }
  }

  if (root.contains("bundle")) {
    const json& b = root.at("bundle");
    only_keys(b, {"dim", "edges", "grading"}, "/bundle");
    BundleSection s;
    s.dim = get_count(need(b, "dim", "/bundle"), "/bundle/dim", 1);
    std::set<std::pair<std::string, std::string>> seen;
    if (b.contains("edges")) {
      const json& edges = get_array(b.at("edges"), "/bundle/edges");
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string ptr = child("/bundle/edges", i);
        only_keys(edges[i], {"lower", "upper", "matrix"}, ptr);
        const std::string lo = get_string(need(edges[i], "lower", ptr), child(ptr, "lower"));
        const std::string up = get_string(need(edges[i], "upper", ptr), child(ptr, "upper"));
        if (!ids.count(lo)) reference_error(child(ptr, "lower"), "unknown element '" + lo + "'");
        if (!ids.count(up)) reference_error(child(ptr, "upper"), "unknown element '" + up + "'");
        if (!k.less(k.index(lo), k.index(up))) schema_error(ptr, lo + " < " + up + " is not a strict pair");
        if (!seen.insert({lo, up}).second) schema_error(ptr, "edge listed twice");
        s.edges.emplace_back(lo, up, get_matrix(need(edges[i], "matrix", ptr), child(ptr, "matrix"), s.dim));
      }
    }
    if (b.contains("grading")) s.grading = get_matrix(b.at("grading"), "/bundle/grading", s.dim);
    d.bundle = std::move(s);
  }

  if (root.contains("representation")) {
    const json& r = root.at("representation");
    only_keys(r, {"dim", "generators"}, "/representation");
    RepresentationSection s;
    s.dim = get_count(need(r, "dim", "/representation"), "/representation/dim", 1);
    const json& gens = get_array(need(r, "generators", "/representation"), "/representation/generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string ptr = child("/representation/generators", i);
      only_keys(gens[i], {"matrix", "phases"}, ptr);
      GeneratorSection g;
      if (gens[i].contains("matrix")) g.matrix = get_matrix(gens[i].at("matrix"), child(ptr, "matrix"), s.dim);
      if (gens[i].contains("phases")) {
        const std::string pp = child(ptr, "phases");
        const json& ph = get_array(gens[i].at("phases"), pp);
        if (static_cast<Index>(ph.size()) != s.dim)
          schema_error(pp, std::to_string(ph.size()) + " phases, expected " + std::to_string(s.dim));
        g.phases.emplace();
        for (std::size_t j = 0; j < ph.size(); ++j) g.phases->push_back(get_phase(ph[j], child(pp, j), declared));
      }
      if (!g.matrix && !g.phases) schema_error(ptr, "a generator needs a matrix or phases");
      s.generators.push_back(std::move(g));
    }
    const GroupPresentation p = fundamental_presentation(k, base_of(d, k));
    if (s.generators.size() != p.generators.size())
      schema_error("/representation/generators", std::to_string(s.generators.size()) + " generators, the poset has " +
                                                     std::to_string(p.generators.size()));
    d.representation = std::move(s);
  }

  if (root.contains("module")) {
    const json& m = root.at("module");
    only_keys(m, {"type", "dims", "iota_colors", "cyclic", "F", "grading"}, "/module");
    ModuleSection s;
    s.type = get_string(need(m, "type", "/module"), "/module/type");
    if (s.type != "shift" && s.type != "sector" && s.type != "dense")
      schema_error("/module/type", "unknown module type '" + s.type + "' (shift, sector, dense)");
    if (m.contains("dims")) {
      const json& dims = get_array(m.at("dims"), "/module/dims");
      for (std::size_t i = 0; i < dims.size(); ++i) s.dims.push_back(get_count(dims[i], child("/module/dims", i), 1));
    }
    if (m.contains("iota_colors")) s.iota_colors = get_count(m.at("iota_colors"), "/module/iota_colors", 1);
    if (m.contains("cyclic")) s.cyclic = get_count(m.at("cyclic"), "/module/cyclic", 0);
    if (s.cyclic >= s.iota_colors) schema_error("/module/cyclic", "must be below iota_colors");
    if (s.type == "sector") {
      if (s.dims.empty()) schema_error("/module/dims", "a sector module needs block sizes");
      Index total = 0;
      for (Index x : s.dims) total += x;
      if (d.representation && d.representation->dim != total)
        schema_error("/module/dims", "block sizes add up to " + std::to_string(total) +
                                         ", the representation has dimension " +
                                         std::to_string(d.representation->dim));
    }
    if (s.type == "dense") {
      if (!d.bundle) schema_error("/module", "a dense module needs a bundle section");
      s.F = get_matrix(need(m, "F", "/module"), "/module/F", d.bundle->dim);
      s.grading = get_matrix(need(m, "grading", "/module"), "/module/grading", d.bundle->dim);
    }
    d.module = std::move(s);
  }

  if (root.contains("triple")) {
    const json& t = root.at("triple");
    only_keys(t, {"grading", "D", "beta"}, "/triple");
    TripleSection s;
    s.grading = get_matrix(need(t, "grading", "/triple"), "/triple/grading", std::nullopt);
    s.D = get_matrix(need(t, "D", "/triple"), "/triple/D", s.grading.rows());
    if (d.representation && d.representation->dim != s.D.rows())
      schema_error("/triple/D", "size differs from the representation dimension");
    if (t.contains("beta")) {
      s.beta = get_number(t.at("beta"), "/triple/beta");
      if (!(s.beta > 0.0)) schema_error("/triple/beta", "must be positive");
    }
    d.triple = std::move(s);
  }
  return d;
}

InputDocument parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SchemaError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

std::string print_document(const InputDocument& d) {
  json root;
  json poset{{"elements", d.elements}};
  json rel = json::array();
  for (const auto& [a, b] : d.relations) rel.push_back(json::array({a, b}));
  poset["relations"] = rel;
  if (d.base) poset["base"] = *d.base;
  root["poset"] = poset;
  if (!d.irrationals.empty()) {
    json irr = json::object();
    for (const auto& [n, v] : d.irrationals) irr[n] = v;
    root["irrationals"] = irr;
  }
  if (d.bundle) {
    json edges = json::array();
    for (const auto& [lo, up, m] : d.bundle->edges)
      edges.push_back({{"lower", lo}, {"upper", up}, {"matrix", matrix_json(m)}});
    json b{{"dim", d.bundle->dim}, {"edges", edges}};
    if (d.bundle->grading) b["grading"] = matrix_json(*d.bundle->grading);
    root["bundle"] = b;
  }
  if (d.representation) {
    json gens = json::array();
    for (const auto& g : d.representation->generators) {
      json x = json::object();
      if (g.matrix) x["matrix"] = matrix_json(*g.matrix);
      if (g.phases) {
        json ph = json::array();
        for (const auto& z : *g.phases) ph.push_back(phase_json(z));
        x["phases"] = ph;
      }
      gens.push_back(x);
    }
    root["representation"] = {{"dim", d.representation->dim}, {"generators", gens}};
  }
  if (d.module) {
    const ModuleSection& m = *d.module;
    json x{{"type", m.type}};
    if (!m.dims.empty()) x["dims"] = m.dims;
    x["iota_colors"] = m.iota_colors;
    x["cyclic"] = m.cyclic;
    if (m.F) x["F"] = matrix_json(*m.F);
    if (m.grading) x["grading"] = matrix_json(*m.grading);
    root["module"] = x;
  }
  if (d.triple)
    root["triple"] = {{"grading", matrix_json(d.triple->grading)}, {"D", matrix_json(d.triple->D)},
                      {"beta", d.triple->beta}};
  return root.dump(2) + "\n";
}

// ------------------------------------------------------------ running

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : table()) out.push_back(n);
    return out;
  }();
  return names;
}

RunResult run(const std::string& command, const InputDocument& doc, const RunOptions& options) {
  const auto it = std::find_if(table().begin(), table().end(), [&](const auto& e) { return e.first == command; });
  if (it == table().end()) throw Error(ErrorCode::UnknownCommand, "unknown command '" + command + "'");
  const auto start = std::chrono::steady_clock::now();
  Context c(doc, options);
  c.report["command"] = command;
  c.report["seed"] = options.seed;
  try {
    it->second(c);
  } catch (const Error& e) {
    if (input_error(e.code())) throw;
    c.report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    c.verdict("completed", false);
  }
  bool pass = true;
  for (const auto& [name, v] : c.verdicts.items()) pass = pass && v.get<bool>();
  c.report["verdicts"] = c.verdicts;
  c.report["pass"] = pass;
  if (options.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    c.report["timing_ms"] = ms;
  }
  return {pass ? 0 : 1, render(c.report, options.format)};
}

RunResult run_text(const std::string& command, std::string_view text, const RunOptions& options) {
  try {
    return run(command, parse_input(text), options);
  } catch (const Error& e) {
    if (!input_error(e.code())) throw;
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace holonet::cli
