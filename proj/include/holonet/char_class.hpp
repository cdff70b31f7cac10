#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "holonet/fredholm.hpp"
#include "holonet/homotopy.hpp"
#include "holonet/virtual_rep.hpp"

namespace holonet {

using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p", "-p", "p/q". Throws SchemaError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Declared formal irrationals with numeric values used only to match
/// computed eigenvalues; they are assumed linearly independent over Q.
class IrrationalBasis {
 public:
  IrrationalBasis() = default;
  /// Throws BasisMismatch on duplicate names.
  explicit IrrationalBasis(std::vector<std::pair<std::string, double>> entries);

  const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }
  std::vector<std::string> names() const;
  bool contains(const std::string& name) const;
  /// Throws BasisMismatch.
  double value(const std::string& name) const;

  bool operator==(const IrrationalBasis&) const = default;

 private:
  std::vector<std::pair<std::string, double>> entries_;
};

/// z = rat + sum_i c_i alpha_i with exact rational coefficients.
struct ExactPhase {
  Rational rat = 0;
  std::map<std::string, Rational> irr;  // zero coefficients are dropped

  static ExactPhase rational(Rational r);
  static ExactPhase irrational(const std::string& name, Rational c = 1);

  ExactPhase operator+(const ExactPhase& o) const;
  ExactPhase operator-(const ExactPhase& o) const;
  ExactPhase operator-() const;
  ExactPhase scaled(const Rational& k) const;

  /// Rational part reduced into [0, 1).
  ExactPhase mod_one() const;
  /// Rational part dropped.
  ExactPhase mod_q() const;
  bool is_rational() const { return irr.empty(); }

  /// Numeric value; throws BasisMismatch for undeclared irrationals.
  double value(const IrrationalBasis& basis) const;

  std::string to_string() const;
  bool operator==(const ExactPhase&) const = default;
};

/// rank + [odd] in Z + R/Q over the declared basis names.
struct CCSClass {
  long long rank = 0;
  std::vector<std::string> basis;
  ExactPhase odd;  // rational part always zero

  std::string to_string() const;
  bool operator==(const CCSClass&) const = default;
};

/// The surviving generator of an infinite cyclic presentation. Throws
/// NotInfiniteCyclic.
std::size_t infinite_cyclic_generator(const GroupPresentation& p);

/// ccs of the representation whose generator has the given eigenphases:
/// (d, [sum z_j] mod Q). Throws NotInfiniteCyclic, BasisMismatch.
CCSClass ccs_of_rep(const GroupPresentation& p, const std::vector<ExactPhase>& phases,
                    const IrrationalBasis& basis);

/// Matches each eigenvalue of u against exp(2 pi i z) for z in the pool.
/// Throws InexactPhase (empty pool), PhaseRecoveryFailed.
std::vector<ExactPhase> recover_phases(const Matrix& u, const std::vector<ExactPhase>& pool,
                                       const IrrationalBasis& basis, double tol = 1e-9);

CCSClass ccs_of_rep(const GroupPresentation& p, const UnitaryRep& u, const IrrationalBasis& basis,
                    const std::vector<ExactPhase>& pool, double tol = 1e-9);

/// Signed sum over the plus and minus parts.
CCSClass ccs_of_virtual(const GroupPresentation& p, const VirtualRep& v, const IrrationalBasis& basis,
                        const std::vector<ExactPhase>& pool, double tol = 1e-9);

/// ccs of the index of the module.
CCSClass ccs_of_module(const FredholmModule& m, const GroupPresentation& p, const IrrationalBasis& basis,
                       const std::vector<ExactPhase>& pool, const Tolerances& tol = {});

/// Direct sum. Throws BasisMismatch.
CCSClass sum(const CCSClass& a, const CCSClass& b);
/// ccs(u (x) u') = d ccs(u') + d' ccs(u) - d d'. Throws BasisMismatch.
CCSClass tensor(const CCSClass& a, const CCSClass& b);

}  // namespace holonet
