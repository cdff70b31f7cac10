#pragma once

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "holonet/errors.hpp"
#include "holonet/homotopy.hpp"
#include "holonet/net_bundle.hpp"
#include "holonet/poset.hpp"

#define EXPECT_ERROR_CODE(stmt, expected)                                        \
  do {                                                                           \
    try {                                                                        \
      stmt;                                                                      \
      ADD_FAILURE() << "expected " << ::holonet::to_string(expected);            \
    } catch (const ::holonet::Error& e_) {                                       \
      EXPECT_EQ(e_.code(), expected) << e_.what();                               \
    }                                                                            \
  } while (0)

namespace fixtures {

using namespace holonet;

/// Six arcs of a circle: three open sets U_i and their overlaps V_ij.
inline Poset hexagon() {
  return build_poset({"U1", "U2", "U3", "V12", "V23", "V31"},
                     {{"V12", "U1"}, {"V12", "U2"}, {"V23", "U2"}, {"V23", "U3"},
                      {"V31", "U3"}, {"V31", "U1"}});
}

inline Poset chain(int n) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 1; i <= n; ++i) {
    ids.push_back("o" + std::to_string(i));
    if (i > 1) rel.emplace_back("o" + std::to_string(i - 1), "o" + std::to_string(i));
  }
  return build_poset(ids, rel);
}

/// The hexagon with a greatest element on top.
inline Poset hexagon_with_top() {
  std::vector<std::pair<std::string, std::string>> rel = {
      {"V12", "U1"}, {"V12", "U2"}, {"V23", "U2"}, {"V23", "U3"}, {"V31", "U3"}, {"V31", "U1"},
      {"U1", "T"},   {"U2", "T"},   {"U3", "T"}};
  return build_poset({"U1", "U2", "U3", "V12", "V23", "V31", "T"}, rel);
}

/// Random connected poset on n elements named p00, p01, ... (index order is
/// a linear extension).
inline Poset random_poset(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back((i < 10 ? "p0" : "p") + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  std::bernoulli_distribution coin(density);
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) {
        rel.emplace_back(ids[i], ids[j]);
        parent[find(i)] = find(j);
      }
  for (std::size_t j = 1; j < n; ++j)
    if (find(0) != find(j)) {
      std::uniform_int_distribution<std::size_t> pick(0, j - 1);
      std::size_t i = pick(rng);
      while (find(i) == find(j)) i = pick(rng);
      rel.emplace_back(ids[i], ids[j]);
      parent[find(i)] = find(j);
    }
  return build_poset(ids, rel);
}

/// Random connected poset of height one: minimal elements below maximal
/// ones, like the nerve of a cover. Fundamental groups are free.
inline Poset random_cover_poset(std::size_t n, std::mt19937_64& rng) {
  const std::size_t low = std::max<std::size_t>(1, n / 2);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back((i < 10 ? "q0" : "q") + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  std::bernoulli_distribution coin(0.4);
  for (std::size_t j = low; j < n; ++j) {
    // one guaranteed edge keeps the graph connected, the rest create cycles
    rel.emplace_back(ids[0], ids[j]);
    for (std::size_t i = 0; i < low; ++i)
      if (coin(rng)) rel.emplace_back(ids[i], ids[j]);
  }
  for (std::size_t i = 1; i < low; ++i)
    rel.emplace_back(ids[i], ids[std::uniform_int_distribution<std::size_t>(low, n - 1)(rng)]);
  return build_poset(ids, rel);
}

/// A representation that kills every relator: random unitaries on the
/// generators surviving Tietze elimination when no relator survives, the
/// trivial representation otherwise.
inline UnitaryRep random_rep(const GroupPresentation& p, Index d, std::mt19937_64& rng) {
  const SimplifiedPresentation s = simplify_presentation(p);
  UnitaryRep free{d, std::vector<Matrix>(p.generators.size(), Matrix::Identity(d, d))};
  if (s.presentation.relators.empty())
    for (std::size_t g : s.presentation.generators) free.generators[g] = random_unitary(d, rng);
  UnitaryRep rho{d, {}};
  for (std::size_t g = 0; g < p.generators.size(); ++g) rho.generators.push_back(free.evaluate(s.express(g)));
  return rho;
}

/// Gauge transform W_o' U_o'o W_o^* of a bundle by random unitaries.
inline HilbertNetBundle random_gauge(const HilbertNetBundle& b, std::mt19937_64& rng) {
  std::vector<Matrix> w;
  for (Element o = 0; o < b.poset().size(); ++o) w.push_back(random_unitary(b.dim(), rng));
  std::map<Edge, Matrix> incl;
  for (const auto& [e, u] : b.inclusions()) incl.emplace(e, w[e.upper] * u * w[e.lower].adjoint());
  return HilbertNetBundle(b.poset(), b.dim(), incl);
}

struct RandomBundle {
  Poset poset;
  GroupPresentation presentation;
  PathFrame frame;
  UnitaryRep rho;
  HilbertNetBundle bundle;
};

inline RandomBundle random_bundle(std::size_t max_elements, Index max_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(2, max_elements);
  std::uniform_int_distribution<Index> dim(1, max_dim);
  std::uniform_real_distribution<double> dens(0.15, 0.45);
  Poset k = std::bernoulli_distribution(0.5)(rng) ? random_cover_poset(size(rng), rng)
                                                  : random_poset(size(rng), dens(rng), rng);
  std::uniform_int_distribution<Element> base(0, k.size() - 1);
  GroupPresentation p = fundamental_presentation(k, base(rng));
  PathFrame f = build_path_frame(p);
  UnitaryRep rho = random_rep(p, dim(rng), rng);
  HilbertNetBundle b = random_gauge(bundle_from_rep(k, p, f, rho), rng);
  return {k, p, f, rho, b};
}

/// Hexagon bundle with every inclusion trivial except U1 >= V12.
inline HilbertNetBundle hexagon_bundle(const Matrix& twist) {
  const Poset k = hexagon();
  const Index d = twist.rows();
  std::map<Edge, Matrix> incl;
  for (const Edge& e : k.strict_pairs()) incl.emplace(e, Matrix::Identity(d, d));
  incl[{k.index("V12"), k.index("U1")}] = twist;
  return HilbertNetBundle(k, d, incl);
}

}  // namespace fixtures
