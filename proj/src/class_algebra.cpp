#include "cpl/class_algebra.hpp"

#include <algorithm>
#include <deque>

namespace cpl {

ConjugacyClass conjugacy_class_of(const Group& g, int x) {
  g.check_id(x);
  // Orbit under conjugation by generators equals the orbit under the whole
  // group.
  std::vector<char> in(g.order(), 0);
  std::deque<int> todo;
  in[x] = 1;
  todo.push_back(x);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    for (int gen : g.generator_ids()) {
      int c = g.conj(cur, gen);
      if (!in[c]) {
        in[c] = 1;
        todo.push_back(c);
      }
    }
  }
  std::vector<int> members;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (in[i]) members.push_back(static_cast<int>(i));
  return ConjugacyClass{&g, members.front(), std::move(members)};
}

std::vector<ConjugacyClass> all_conjugacy_classes(const Group& g) {
  std::vector<char> assigned(g.order(), 0);
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    ConjugacyClass c = conjugacy_class_of(g, static_cast<int>(i));
    for (int m : c.members) assigned[m] = 1;
    classes.push_back(std::move(c));
  }
  // Scanning ids in order already yields rep-id order.
  return classes;
}

std::vector<int> product_of_subsets(const Group& g, const std::vector<int>& a,
                                    const std::vector<int>& b) {
  std::vector<char> in(g.order(), 0);
  for (int x : a) g.check_id(x);
  for (int y : b) g.check_id(y);
  for (int x : a)
    for (int y : b) in[g.mul(x, y)] = 1;
  std::vector<int> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool is_normal_subset(const Group& g, const std::vector<int>& x) {
  std::vector<char> in(g.order(), 0);
  for (int id : x) {
    g.check_id(id);
    in[id] = 1;
  }
  for (int id : x)
    for (int gen : g.generator_ids())
      if (!in[g.conj(id, gen)]) return false;
  return true;
}

ClassProductReport decompose_normal_subset(const Group& g,
                                           const std::vector<int>& x) {
  if (x.empty()) throw EmptySet("decompose_normal_subset: empty set");
  if (!is_normal_subset(g, x))
    throw NotNormalSubset(
        "decompose_normal_subset: set is not closed under conjugation");

  std::vector<char> pending(g.order(), 0);
  for (int id : x) pending[id] = 1;

  ClassProductReport report;
  std::vector<int> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  std::size_t covered = 0;
  for (int id : sorted) {
    if (!pending[id]) continue;
    ConjugacyClass c = conjugacy_class_of(g, id);
    for (int m : c.members) pending[m] = 0;
    covered += c.size();
    report.constituents.push_back(c.rep_id);
  }
  report.eta = static_cast<int>(report.constituents.size());
  report.product_size = covered;
  return report;
}

int eta(const Group& g, const ConjugacyClass& a, const ConjugacyClass& b) {
  return decompose_normal_subset(g, product_of_subsets(g, a.members, b.members))
      .eta;
}

ConjugacyClass inverse_class(const Group& g, const ConjugacyClass& a) {
  return conjugacy_class_of(g, g.inv(a.rep_id));
}

}  // namespace cpl
