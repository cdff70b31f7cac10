#include "holonet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "holonet/errors.hpp"

namespace holonet {

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& relations)
    : ids_(std::move(elements)) {
  std::sort(ids_.begin(), ids_.end());
  if (auto dup = std::adjacent_find(ids_.begin(), ids_.end()); dup != ids_.end())
    throw Error(ErrorCode::DuplicateElement, "element '" + *dup + "' declared twice");

  const std::size_t n = ids_.size();
  order_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) order_[i * n + i] = true;
  for (const auto& [lo, hi] : relations) order_[index(lo) * n + index(hi)] = true;

  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (order_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (order_[k * n + j]) order_[i * n + j] = true;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (order_[i * n + j] && order_[j * n + i])
        throw Error(ErrorCode::CycleInOrder, "'" + ids_[i] + "' and '" + ids_[j] +
                                                 "' precede each other");
}

Element Poset::index(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    throw Error(ErrorCode::UnknownElement, "no element named '" + id + "'");
  return static_cast<Element>(it - ids_.begin());
}

std::vector<Edge> Poset::strict_pairs() const {
  std::vector<Edge> out;
  for (Element a = 0; a < size(); ++a)
    for (Element b = 0; b < size(); ++b)
      if (less(a, b)) out.push_back({a, b});
  return out;
}

std::vector<Element> Poset::comparable_to(Element e) const {
  std::vector<Element> out;
  for (Element o = 0; o < size(); ++o)
    if (o != e && comparable(e, o)) out.push_back(o);
  return out;
}

Path::Path(const Poset& k, std::vector<OneSimplex> simplices) : simplices_(std::move(simplices)) {
  if (simplices_.empty()) throw Error(ErrorCode::EndpointMismatch, "a path needs at least one simplex");
  for (std::size_t i = 0; i + 1 < simplices_.size(); ++i)
    if (simplices_[i + 1].face1 != simplices_[i].face0)
      throw Error(ErrorCode::EndpointMismatch,
                  "simplex " + std::to_string(i + 1) + " does not start where simplex " +
                      std::to_string(i) + " ends");
  check_in(k);
}

Path Path::trivial(Element a) { return Path(std::vector<OneSimplex>{{a, a, a}}); }

Path Path::opposite() const {
  std::vector<OneSimplex> out;
  out.reserve(simplices_.size());
  for (auto it = simplices_.rbegin(); it != simplices_.rend(); ++it) out.push_back(it->opposite());
  return Path(std::move(out));
}

void Path::check_in(const Poset& k) const {
  for (const auto& b : simplices_) {
    if (b.support >= k.size() || b.face0 >= k.size() || b.face1 >= k.size() || !b.valid_in(k))
      throw Error(ErrorCode::PathOutsidePoset, "simplex faces are not below its support");
  }
}

Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& relations) {
  return Poset(std::move(elements), relations);
}

std::vector<OneSimplex> enumerate_one_simplices(const Poset& k) {
  std::vector<OneSimplex> out;
  for (Element s = 0; s < k.size(); ++s)
    for (Element f0 = 0; f0 < k.size(); ++f0)
      if (k.leq(f0, s))
        for (Element f1 = 0; f1 < k.size(); ++f1)
          if (k.leq(f1, s)) out.push_back({s, f0, f1});
  return out;
}

Path compose_paths(const Path& p, const Path& q, bool reverse_q) {
  const Path first = reverse_q ? q.opposite() : q;
  if (first.end() != p.start())
    throw Error(ErrorCode::EndpointMismatch, "the second path does not end where the first starts");
  std::vector<OneSimplex> out = first.simplices();
  out.insert(out.end(), p.simplices().begin(), p.simplices().end());
  return Path(std::move(out));
}

bool check_connected(const Poset& k) {
  if (k.size() == 0) return false;
  std::vector<bool> seen(k.size(), false);
  std::queue<Element> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const Element e = todo.front();
    todo.pop();
    for (Element o : k.comparable_to(e)) {
      if (seen[o]) continue;
      seen[o] = true;
      ++count;
      todo.push(o);
    }
  }
  return count == k.size();
}

}  // namespace holonet
