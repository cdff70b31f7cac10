#include "holonet/char_class.hpp"

#include <cmath>
#include <regex>

#include "holonet/errors.hpp"

namespace holonet {

namespace {

const double kTwoPi = 6.28318530717958647692;

void normalize(ExactPhase& z) {
  for (auto it = z.irr.begin(); it != z.irr.end();)
    it = it->second == 0 ? z.irr.erase(it) : std::next(it);
}

Rational floor_of(const Rational& r) {
  using boost::multiprecision::cpp_int;
  cpp_int n = numerator(r), d = denominator(r);
  cpp_int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return Rational(q);
}

void check_names(const ExactPhase& z, const IrrationalBasis& basis) {
  for (const auto& [name, c] : z.irr)
    if (!basis.contains(name)) throw Error(ErrorCode::BasisMismatch, "undeclared irrational " + name);
}

CCSClass scaled(const CCSClass& a, long long k) { return {a.rank * k, a.basis, a.odd.scaled(k)}; }

void same_basis(const CCSClass& a, const CCSClass& b) {
  if (a.basis != b.basis) throw Error(ErrorCode::BasisMismatch, "classes use different irrational bases");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex form(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, form))
    throw Error(ErrorCode::SchemaError, "not a rational number: '" + std::string(text) + "'");
  using boost::multiprecision::cpp_int;
  const cpp_int num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  const cpp_int den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw Error(ErrorCode::SchemaError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

IrrationalBasis::IrrationalBasis(std::vector<std::pair<std::string, double>> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[i].first == entries_[j].first)
        throw Error(ErrorCode::BasisMismatch, "irrational " + entries_[i].first + " declared twice");
}

std::vector<std::string> IrrationalBasis::names() const {
  std::vector<std::string> out;
  for (const auto& [n, v] : entries_) out.push_back(n);
  return out;
}

bool IrrationalBasis::contains(const std::string& name) const {
  for (const auto& [n, v] : entries_)
    if (n == name) return true;
  return false;
}

double IrrationalBasis::value(const std::string& name) const {
  for (const auto& [n, v] : entries_)
    if (n == name) return v;
  throw Error(ErrorCode::BasisMismatch, "undeclared irrational " + name);
}

ExactPhase ExactPhase::rational(Rational r) { return {std::move(r), {}}; }

ExactPhase ExactPhase::irrational(const std::string& name, Rational c) {
  ExactPhase z;
  z.irr[name] = std::move(c);
  normalize(z);
  return z;
}

ExactPhase ExactPhase::operator+(const ExactPhase& o) const {
  ExactPhase z = *this;
  z.rat += o.rat;
  for (const auto& [n, c] : o.irr) z.irr[n] += c;
  normalize(z);
  return z;
}

ExactPhase ExactPhase::operator-() const { return scaled(-1); }

ExactPhase ExactPhase::operator-(const ExactPhase& o) const { return *this + (-o); }

ExactPhase ExactPhase::scaled(const Rational& k) const {
  ExactPhase z = *this;
  z.rat *= k;
  for (auto& [n, c] : z.irr) c *= k;
  normalize(z);
  return z;
}

ExactPhase ExactPhase::mod_one() const {
  ExactPhase z = *this;
  z.rat -= floor_of(z.rat);
  return z;
}

ExactPhase ExactPhase::mod_q() const {
  ExactPhase z = *this;
  z.rat = 0;
  return z;
}

double ExactPhase::value(const IrrationalBasis& basis) const {
  double v = rat.convert_to<double>();
  for (const auto& [n, c] : irr) v += c.convert_to<double>() * basis.value(n);
  return v;
}

std::string ExactPhase::to_string() const {
  std::string out;
  auto term = [&](const Rational& c, const std::string& name) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out = c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (name.empty())
      out += a.str();
    else
      out += (a == 1 ? "" : a.str() + "*") + name;
  };
  if (rat != 0) term(rat, "");
  for (const auto& [n, c] : irr) term(c, n);
  return out.empty() ? "0" : out;
}

std::string CCSClass::to_string() const {
  return "(" + std::to_string(rank) + ", " + (odd.irr.empty() ? "0" : "[" + odd.to_string() + "]") + ")";
}

std::size_t infinite_cyclic_generator(const GroupPresentation& p) {
  const SimplifiedPresentation s = simplify_presentation(p);
  if (!s.infinite_cyclic())
    throw Error(ErrorCode::NotInfiniteCyclic, "homotopy group is not recognized as Z (abelianization " +
                                                  s.abelianization.to_string() + ")");
  return s.presentation.generators.front();
}

CCSClass ccs_of_rep(const GroupPresentation& p, const std::vector<ExactPhase>& phases,
                    const IrrationalBasis& basis) {
  infinite_cyclic_generator(p);
  CCSClass c{static_cast<long long>(phases.size()), basis.names(), {}};
  for (const auto& z : phases) {
    check_names(z, basis);
    c.odd = c.odd + z.mod_q();
  }
  return c;
}

std::vector<ExactPhase> recover_phases(const Matrix& u, const std::vector<ExactPhase>& pool,
                                       const IrrationalBasis& basis, double tol) {
  if (pool.empty()) throw Error(ErrorCode::InexactPhase, "no exact phase data supplied for the eigenvalues");
  std::vector<Complex> targets;
  for (const auto& z : pool) targets.push_back(std::polar(1.0, kTwoPi * z.value(basis)));
  std::vector<ExactPhase> out;
  for (const Complex& l : eigenvalues(u)) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < targets.size(); ++i)
      if (std::abs(l - targets[i]) < std::abs(l - targets[best])) best = i;
    const double dist = std::abs(l - targets[best]);
    if (!(dist <= tol))
      throw Error(ErrorCode::PhaseRecoveryFailed, "eigenvalue at angle " + std::to_string(std::arg(l) / kTwoPi) +
                                                      " matches no declared phase");
    out.push_back(pool[best]);
  }
  return out;
}

CCSClass ccs_of_rep(const GroupPresentation& p, const UnitaryRep& u, const IrrationalBasis& basis,
                    const std::vector<ExactPhase>& pool, double tol) {
  const std::size_t g = infinite_cyclic_generator(p);
  if (u.dim == 0) return {0, basis.names(), {}};
  return ccs_of_rep(p, recover_phases(u.generators.at(g), pool, basis, tol), basis);
}

CCSClass ccs_of_virtual(const GroupPresentation& p, const VirtualRep& v, const IrrationalBasis& basis,
                        const std::vector<ExactPhase>& pool, double tol) {
  infinite_cyclic_generator(p);
  CCSClass out{0, basis.names(), {}};
  for (const auto& r : v.plus) out = sum(out, ccs_of_rep(p, r, basis, pool, tol));
  for (const auto& r : v.minus) out = sum(out, scaled(ccs_of_rep(p, r, basis, pool, tol), -1));
  return out;
}

CCSClass ccs_of_module(const FredholmModule& m, const GroupPresentation& p, const IrrationalBasis& basis,
                       const std::vector<ExactPhase>& pool, const Tolerances& tol) {
  return ccs_of_virtual(p, pi_index(m, p, tol), basis, pool, tol.invariance);
}

CCSClass sum(const CCSClass& a, const CCSClass& b) {
  same_basis(a, b);
  return {a.rank + b.rank, a.basis, a.odd + b.odd};
}

CCSClass tensor(const CCSClass& a, const CCSClass& b) {
  same_basis(a, b);
  // rank part: d d' + d' d - d d'
  return {a.rank * b.rank, a.basis, b.odd.scaled(a.rank) + a.odd.scaled(b.rank)};
}

}  // namespace holonet
