#pragma once

#include <cstdint>
#include <vector>

#include "holonet/net_bundle.hpp"

namespace holonet {

/// Formal difference [plus] - [minus] of finite-dimensional unitary
/// representations of a finitely presented group.
struct VirtualRep {
  std::size_t generators = 0;
  std::vector<UnitaryRep> plus;
  std::vector<UnitaryRep> minus;

  static VirtualRep zero(std::size_t generators) { return {generators, {}, {}}; }
  static VirtualRep of(const UnitaryRep& u);

  /// Virtual dimension.
  Index rank() const;
  Complex character(const Word& w) const;
};

/// Characters agree on every generator, its inverse and `samples` words of
/// length at most 4 drawn with `seed`.
bool characters_match(const VirtualRep& a, const VirtualRep& b, double tol, std::uint64_t seed = 0,
                      int samples = 64);

/// Eigenvalues of generator g: plus(a) + minus(b) equals plus(b) + minus(a)
/// as multisets.
bool eigenphases_match(const VirtualRep& a, const VirtualRep& b, std::size_t g, double tol);

/// characters_match and eigenphases_match on every generator.
bool equivalent(const VirtualRep& a, const VirtualRep& b, double tol, std::uint64_t seed = 0);

VirtualRep direct_sum(const VirtualRep& a, const VirtualRep& b);
/// Kronecker product of representatives, with the sign rule of a ring.
VirtualRep tensor(const VirtualRep& a, const VirtualRep& b);

UnitaryRep tensor(const UnitaryRep& a, const UnitaryRep& b);

}  // namespace holonet
