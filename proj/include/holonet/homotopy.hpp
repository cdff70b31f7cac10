#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holonet/poset.hpp"

namespace holonet {

struct Letter {
  std::size_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word over signed generators.
///
/// Letters are stored in multiplication order: the word g1 g2 evaluates to
/// rho(g1) rho(g2), so for a loop the last traversed segment comes first.
/// This makes word(p * q) == word(p) * word(q).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces

  static Word generator(std::size_t g, bool inverse = false) { return Word({{g, inverse}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;

  /// Cyclic reduction: strip letters that cancel around the cycle.
  Word cyclically_reduced() const;

  /// Net exponent of each generator, sized to `generators`.
  std::vector<long long> exponent_sums(std::size_t generators) const;

  /// Replace every occurrence of `g` by `replacement` (inverse occurrences
  /// by its inverse).
  Word substitute(std::size_t g, const Word& replacement) const;

  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Abstract finite presentation over the listed generator indices (after
/// simplification, survivors keep their original indices).
struct Presentation {
  std::vector<std::size_t> generators;
  std::vector<Word> relators;

  static Presentation free(std::size_t rank, std::vector<Word> relators = {});
};

/// Presentation of the homotopy group of a poset at `base`, read off the
/// 2-skeleton of the order complex with a BFS spanning tree collapsed.
struct GroupPresentation {
  Poset poset;
  Element base = 0;
  std::vector<Edge> tree;        // spanning tree of the comparability graph
  std::vector<Edge> generators;  // non-tree strict pairs, lexicographic
  std::vector<Word> relators;    // one per 2-chain o < o' < o''

  /// Generator index of a strict pair, or nothing for tree edges.
  std::optional<std::size_t> generator_of(Edge e) const;

  Presentation presentation() const;
};

/// Chosen paths p_oa : a -> o for every element.
struct PathFrame {
  Element base = 0;
  std::vector<Path> paths;  // indexed by element

  const Path& to(Element o) const { return paths.at(o); }
  /// p_ao, the opposite of p_oa.
  Path from(Element o) const { return paths.at(o).opposite(); }
};

enum class Triviality { Trivial, Nontrivial, Unknown };

std::string to_string(Triviality t);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion_i.
struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

Abelianization abelianize(const Presentation& p);

struct SimplifiedPresentation {
  Presentation presentation;
  Triviality verdict = Triviality::Unknown;
  Abelianization abelianization;
  /// Eliminated generators in order, each expressed through survivors.
  std::vector<std::pair<std::size_t, Word>> eliminated;

  /// Any original generator as a word in the surviving generators.
  Word express(std::size_t original) const;

  /// One surviving generator and no remaining relators.
  bool infinite_cyclic() const;
};

/// Throws UnknownElement, NotConnected.
GroupPresentation fundamental_presentation(const Poset& k, Element base);

/// Word of a loop at the presentation base; each 1-simplex b is expanded as
/// the up-edge face1 -> support followed by the down-edge support -> face0.
/// Throws NotALoopAtBase, PathOutsidePoset.
Word path_to_word(const Poset& k, const GroupPresentation& p, const Path& loop);

/// Frame following spanning-tree edges from the base.
PathFrame build_path_frame(const GroupPresentation& p);

/// Word of p_ao' * (o'; o', o) * p_oa. Throws NotComparable.
Word edge_loop_word(const GroupPresentation& p, const PathFrame& frame, Element o, Element upper);

/// Tietze elimination plus an abelianization check; never claims more than
/// it can prove.
SimplifiedPresentation simplify_presentation(const Presentation& p);
SimplifiedPresentation simplify_presentation(const GroupPresentation& p);

}  // namespace holonet
