#include "holonet/homotopy.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "holonet/errors.hpp"

namespace holonet {

// ---------------------------------------------------------------- Word

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverted())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverted());
  return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(letters_.begin() + lo, letters_.begin() + hi));
}

std::vector<long long> Word::exponent_sums(std::size_t generators) const {
  std::vector<long long> out(generators, 0);
  for (const Letter& l : letters_) out.at(l.generator) += l.inverse ? -1 : 1;
  return out;
}

Word Word::substitute(std::size_t g, const Word& replacement) const {
  const Word inv = replacement.inverse();
  std::vector<Letter> out;
  for (const Letter& l : letters_) {
    if (l.generator != g) {
      out.push_back(l);
      continue;
    }
    const auto& r = l.inverse ? inv.letters() : replacement.letters();
    out.insert(out.end(), r.begin(), r.end());
  }
  return Word(std::move(out));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'g' << letters_[i].generator;
    if (letters_[i].inverse) os << "^-1";
  }
  return os.str();
}

Presentation Presentation::free(std::size_t rank, std::vector<Word> relators) {
  Presentation p;
  p.generators.resize(rank);
  std::iota(p.generators.begin(), p.generators.end(), std::size_t{0});
  p.relators = std::move(relators);
  return p;
}

// ---------------------------------------------------------- presentation

std::optional<std::size_t> GroupPresentation::generator_of(Edge e) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), e);
  if (it == generators.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - generators.begin());
}

Presentation GroupPresentation::presentation() const {
  return Presentation::free(generators.size(), relators);
}

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::Trivial: return "Trivial";
    case Triviality::Nontrivial: return "Nontrivial";
    case Triviality::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string Abelianization::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (long long t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

namespace {

// Diagonalize an integer matrix by unimodular row and column operations and
// return the nonzero diagonal (Smith normal form invariant factors).
std::vector<long long> invariant_factors(std::vector<std::vector<long long>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<long long> diag;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the remaining submatrix
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = r; i < rows; ++i)
        for (std::size_t j = c; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return diag;  // remaining block is zero
      std::swap(m[r], m[pi]);
      for (auto& row : m) std::swap(row[c], row[pj]);

      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        const long long q = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        const long long q = m[r][j] / m[r][c];
        for (std::size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
        if (m[r][j] != 0) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the rest of the submatrix
      bool divides = true;
      for (std::size_t i = r + 1; i < rows && divides; ++i)
        for (std::size_t j = c + 1; j < cols; ++j)
          if (m[i][j] % m[r][c] != 0) {
            for (std::size_t k = c; k < cols; ++k) m[r][k] += m[i][k];
            divides = false;
            break;
          }
      if (!divides) continue;

      diag.push_back(std::llabs(m[r][c]));
      ++r;
      break;
    }
  }
  return diag;
}

}  // namespace

Abelianization abelianize(const Presentation& p) {
  const std::size_t n = p.generators.size();
  std::vector<std::size_t> position;  // original index -> column
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t g = p.generators[i];
    if (g >= position.size()) position.resize(g + 1, n);
    position[g] = i;
  }
  std::vector<std::vector<long long>> rows;
  for (const Word& r : p.relators) {
    std::vector<long long> row(n, 0);
    for (const Letter& l : r.letters()) row.at(position.at(l.generator)) += l.inverse ? -1 : 1;
    rows.push_back(std::move(row));
  }
  const auto factors = invariant_factors(std::move(rows), n);
  Abelianization out;
  out.free_rank = n - factors.size();
  for (long long f : factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

Word SimplifiedPresentation::express(std::size_t original) const {
  for (const auto& [g, w] : eliminated)
    if (g == original) return w;
  return Word::generator(original);
}

bool SimplifiedPresentation::infinite_cyclic() const {
  return presentation.generators.size() == 1 && presentation.relators.empty();
}

// --------------------------------------------------------------- builders

GroupPresentation fundamental_presentation(const Poset& k, Element base) {
  if (base >= k.size()) throw Error(ErrorCode::UnknownElement, "base point is not in the poset");
  if (!check_connected(k)) throw Error(ErrorCode::NotConnected, "the comparability graph is disconnected");

  GroupPresentation p{k, base, {}, {}, {}};
  std::vector<bool> seen(k.size(), false);
  std::queue<Element> todo;
  todo.push(base);
  seen[base] = true;
  while (!todo.empty()) {
    const Element e = todo.front();
    todo.pop();
    for (Element o : k.comparable_to(e)) {
      if (seen[o]) continue;
      seen[o] = true;
      p.tree.push_back(k.less(e, o) ? Edge{e, o} : Edge{o, e});
      todo.push(o);
    }
  }
  std::sort(p.tree.begin(), p.tree.end());
  for (const Edge& e : k.strict_pairs())
    if (!std::binary_search(p.tree.begin(), p.tree.end(), e)) p.generators.push_back(e);

  auto edge_word = [&](Element lo, Element hi) {
    auto g = p.generator_of({lo, hi});
    return g ? Word::generator(*g) : Word();
  };
  for (Element a = 0; a < k.size(); ++a)
    for (Element b = 0; b < k.size(); ++b)
      if (k.less(a, b))
        for (Element c = 0; c < k.size(); ++c)
          if (k.less(b, c))
            p.relators.push_back(edge_word(a, c).inverse() * edge_word(b, c) * edge_word(a, b));
  return p;
}

Word path_to_word(const Poset& k, const GroupPresentation& p, const Path& loop) {
  if (!loop.is_loop() || loop.start() != p.base)
    throw Error(ErrorCode::NotALoopAtBase, "path is not a loop at the presentation base");
  loop.check_in(k);

  std::vector<Letter> traversed;
  for (const OneSimplex& b : loop.simplices()) {
    if (b.face1 != b.support)
      if (auto g = p.generator_of({b.face1, b.support})) traversed.push_back({*g, false});
    if (b.face0 != b.support)
      if (auto g = p.generator_of({b.face0, b.support})) traversed.push_back({*g, true});
  }
  std::reverse(traversed.begin(), traversed.end());
  return Word(std::move(traversed));
}

PathFrame build_path_frame(const GroupPresentation& p) {
  const Poset& k = p.poset;
  const std::size_t n = k.size();
  std::vector<std::vector<Element>> adj(n);
  for (const Edge& e : p.tree) {
    adj[e.lower].push_back(e.upper);
    adj[e.upper].push_back(e.lower);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<std::vector<OneSimplex>> chains(n);
  std::vector<bool> seen(n, false);
  std::queue<Element> todo;
  todo.push(p.base);
  seen[p.base] = true;
  chains[p.base] = {{p.base, p.base, p.base}};
  while (!todo.empty()) {
    const Element x = todo.front();
    todo.pop();
    for (Element y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      chains[y] = x == p.base ? std::vector<OneSimplex>{} : chains[x];
      // the comparability edge realized as the simplex inside the larger element
      chains[y].push_back(k.less(x, y) ? OneSimplex{y, y, x} : OneSimplex{x, y, x});
      todo.push(y);
    }
  }
  PathFrame frame{p.base, {}};
  frame.paths.reserve(n);
  for (Element o = 0; o < n; ++o) frame.paths.emplace_back(k, chains[o]);
  return frame;
}

Word edge_loop_word(const GroupPresentation& p, const PathFrame& frame, Element o, Element upper) {
  const Poset& k = p.poset;
  if (o >= k.size() || upper >= k.size() || !k.leq(o, upper))
    throw Error(ErrorCode::NotComparable, "edge loops need o <= o'");
  const Path up(k, {{upper, upper, o}});
  const Path loop = compose_paths(frame.from(upper), compose_paths(up, frame.to(o)));
  return path_to_word(k, p, loop);
}

SimplifiedPresentation simplify_presentation(const Presentation& input) {
  SimplifiedPresentation out;
  std::vector<std::size_t> alive = input.generators;
  std::vector<Word> rels;
  for (const Word& r : input.relators) rels.push_back(r.cyclically_reduced());

  for (;;) {
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word& w) { return w.empty(); }),
               rels.end());
    // shortest relator with a generator occurring exactly once
    std::size_t best_rel = rels.size();
    std::size_t best_gen = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      std::map<std::size_t, int> count;
      for (const Letter& l : rels[i].letters()) ++count[l.generator];
      for (const auto& [g, c] : count) {
        if (c != 1) continue;
        if (best_rel == rels.size() || rels[i].length() < rels[best_rel].length()) {
          best_rel = i;
          best_gen = g;
        }
        break;
      }
    }
    if (best_rel == rels.size()) break;

    // r = A x^e B = 1  =>  x^e = A^-1 B^-1
    const auto& letters = rels[best_rel].letters();
    std::size_t at = 0;
    while (letters[at].generator != best_gen) ++at;
    const Word a(std::vector<Letter>(letters.begin(), letters.begin() + at));
    const Word b(std::vector<Letter>(letters.begin() + at + 1, letters.end()));
    Word value = a.inverse() * b.inverse();
    if (letters[at].inverse) value = value.inverse();

    rels.erase(rels.begin() + best_rel);
    for (Word& r : rels) r = r.substitute(best_gen, value).cyclically_reduced();
    for (auto& [g, w] : out.eliminated) w = w.substitute(best_gen, value);
    out.eliminated.emplace_back(best_gen, value);
    alive.erase(std::find(alive.begin(), alive.end(), best_gen));
  }

  out.presentation.generators = alive;
  out.presentation.relators = rels;
  out.abelianization = abelianize(out.presentation);
  if (alive.empty())
    out.verdict = Triviality::Trivial;
  else if (!out.abelianization.trivial())
    out.verdict = Triviality::Nontrivial;
  else
    out.verdict = Triviality::Unknown;
  return out;
}

SimplifiedPresentation simplify_presentation(const GroupPresentation& p) {
  return simplify_presentation(p.presentation());
}

}  // namespace holonet
