#include "holonet/virtual_rep.hpp"

#include <random>

#include "holonet/errors.hpp"

namespace holonet {

VirtualRep VirtualRep::of(const UnitaryRep& u) { return {u.generators.size(), {u}, {}}; }

Index VirtualRep::rank() const {
  Index r = 0;
  for (const auto& u : plus) r += u.dim;
  for (const auto& u : minus) r -= u.dim;
  return r;
}

Complex VirtualRep::character(const Word& w) const {
  Complex c = 0.0;
  for (const auto& u : plus) c += u.evaluate(w).trace();
  for (const auto& u : minus) c -= u.evaluate(w).trace();
  return c;
}

bool characters_match(const VirtualRep& a, const VirtualRep& b, double tol, std::uint64_t seed, int samples) {
  if (a.generators != b.generators) return false;
  std::vector<Word> words{Word()};
  for (std::size_t g = 0; g < a.generators; ++g) {
    words.push_back(Word::generator(g));
    words.push_back(Word::generator(g, true));
  }
  if (a.generators > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> gen(0, a.generators - 1);
    std::uniform_int_distribution<int> len(1, 4);
    std::bernoulli_distribution inv(0.5);
    for (int s = 0; s < samples; ++s) {
      std::vector<Letter> l;
      for (int i = len(rng); i > 0; --i) l.push_back({gen(rng), inv(rng)});
      words.emplace_back(l);
    }
  }
  for (const Word& w : words)
    if (!(std::abs(a.character(w) - b.character(w)) <= tol)) return false;
  return true;
}

bool eigenphases_match(const VirtualRep& a, const VirtualRep& b, std::size_t g, double tol) {
  std::vector<Complex> lhs, rhs;
  auto add = [g](std::vector<Complex>& out, const std::vector<UnitaryRep>& reps) {
    for (const auto& u : reps) {
      const auto ev = eigenvalues(u.generators.at(g));
      out.insert(out.end(), ev.begin(), ev.end());
    }
  };
  add(lhs, a.plus);
  add(lhs, b.minus);
  add(rhs, b.plus);
  add(rhs, a.minus);
  return same_multiset(lhs, rhs, tol);
}

bool equivalent(const VirtualRep& a, const VirtualRep& b, double tol, std::uint64_t seed) {
  if (!characters_match(a, b, tol, seed)) return false;
  for (std::size_t g = 0; g < a.generators; ++g)
    if (!eigenphases_match(a, b, g, tol)) return false;
  return true;
}

VirtualRep direct_sum(const VirtualRep& a, const VirtualRep& b) {
  if (a.generators != b.generators) throw Error(ErrorCode::BasisMismatch, "representations of different groups");
  VirtualRep out = a;
  out.plus.insert(out.plus.end(), b.plus.begin(), b.plus.end());
  out.minus.insert(out.minus.end(), b.minus.begin(), b.minus.end());
  return out;
}

UnitaryRep tensor(const UnitaryRep& a, const UnitaryRep& b) {
  if (a.generators.size() != b.generators.size())
    throw Error(ErrorCode::BasisMismatch, "representations of different groups");
  UnitaryRep out{a.dim * b.dim, {}};
  for (std::size_t g = 0; g < a.generators.size(); ++g) out.generators.push_back(kron(a.generators[g], b.generators[g]));
  return out;
}

VirtualRep tensor(const VirtualRep& a, const VirtualRep& b) {
  if (a.generators != b.generators) throw Error(ErrorCode::BasisMismatch, "representations of different groups");
  VirtualRep out = VirtualRep::zero(a.generators);
  for (const auto& x : a.plus) {
    for (const auto& y : b.plus) out.plus.push_back(tensor(x, y));
    for (const auto& y : b.minus) out.minus.push_back(tensor(x, y));
  }
  for (const auto& x : a.minus) {
    for (const auto& y : b.plus) out.minus.push_back(tensor(x, y));
    for (const auto& y : b.minus) out.plus.push_back(tensor(x, y));
  }
  return out;
}

}  // namespace holonet
