#pragma once

#include <string>
#include <vector>

namespace holonet {

/// One violated relation together with its norm defect.
struct Defect {
  std::string relation;  // e.g. "net", "unitary", "grading"
  std::string where;     // human-readable location
  double norm = 0.0;
};

struct Report {
  std::vector<Defect> defects;

  bool ok() const { return defects.empty(); }

  /// Record a defect when `norm` exceeds `tol` (NaN always counts).
  void check(const std::string& relation, const std::string& where, double norm, double tol) {
    if (!(norm <= tol)) defects.push_back({relation, where, norm});
  }

  void merge(const Report& other) {
    defects.insert(defects.end(), other.defects.begin(), other.defects.end());
  }

  double max_defect() const {
    double m = 0.0;
    for (const auto& d : defects) m = d.norm > m ? d.norm : m;
    return m;
  }
};

}  // namespace holonet
