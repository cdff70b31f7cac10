#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace holonet {

/// Elements are addressed by their position in the lexicographically sorted
/// identifier list, so index order is identifier order.
using Element = std::size_t;

/// A strict comparability pair lower < upper.
struct Edge {
  Element lower = 0;
  Element upper = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Finite partially ordered set, stored as the full reflexive-transitive
/// order matrix.
class Poset {
 public:
  /// `relations` lists pairs (lower, upper); covering pairs suffice, the
  /// closure is computed. Throws DuplicateElement, UnknownElement, or
  /// CycleInOrder.
  Poset(std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& relations);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(Element e) const { return ids_.at(e); }
  const std::vector<std::string>& ids() const { return ids_; }

  /// Throws UnknownElement.
  Element index(const std::string& id) const;

  bool leq(Element a, Element b) const { return order_[a * size() + b]; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  /// All strict pairs, sorted lexicographically by (lower, upper).
  std::vector<Edge> strict_pairs() const;

  /// Neighbours in the comparability graph, ascending.
  std::vector<Element> comparable_to(Element e) const;

  bool operator==(const Poset&) const = default;

 private:
  std::vector<std::string> ids_;
  std::vector<bool> order_;
};

/// A 1-simplex (support; face0, face1): a segment from face1 to face0
/// inside the support.
struct OneSimplex {
  Element support = 0;
  Element face0 = 0;
  Element face1 = 0;

  OneSimplex opposite() const { return {support, face1, face0}; }
  bool degenerate() const { return support == face0 && support == face1; }
  bool valid_in(const Poset& k) const { return k.leq(face0, support) && k.leq(face1, support); }

  auto operator<=>(const OneSimplex&) const = default;
};

/// Composable chain of 1-simplices. `simplices[0]` is traversed first.
class Path {
 public:
  /// Throws EndpointMismatch when consecutive simplices do not chain, and
  /// PathOutsidePoset when a simplex violates its face relations.
  Path(const Poset& k, std::vector<OneSimplex> simplices);

  /// The trivial path (a; a, a).
  static Path trivial(Element a);

  Element start() const { return simplices_.front().face1; }
  Element end() const { return simplices_.back().face0; }
  bool is_loop() const { return start() == end(); }
  const std::vector<OneSimplex>& simplices() const { return simplices_; }
  std::size_t length() const { return simplices_.size(); }

  Path opposite() const;

  /// Re-check the face relations against `k` (paths may outlive the poset
  /// they were built on). Throws PathOutsidePoset.
  void check_in(const Poset& k) const;

  bool operator==(const Path&) const = default;

 private:
  explicit Path(std::vector<OneSimplex> simplices) : simplices_(std::move(simplices)) {}

  std::vector<OneSimplex> simplices_;

  friend Path compose_paths(const Path&, const Path&, bool);
};

/// Convenience: build a poset from string literals.
Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& relations);

/// Every triple (s; f0, f1) with f0, f1 <= s, ordered lexicographically by
/// (support, face0, face1).
std::vector<OneSimplex> enumerate_one_simplices(const Poset& k);

/// p * q: q is traversed first. With `reverse_q`, q is replaced by its
/// opposite before composing. Throws EndpointMismatch.
Path compose_paths(const Path& p, const Path& q, bool reverse_q = false);

/// Connectivity of the comparability graph.
bool check_connected(const Poset& k);

}  // namespace holonet
