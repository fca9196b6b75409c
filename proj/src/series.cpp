#include "cpl/series.hpp"

#include <algorithm>
#include <set>

#include "cpl/class_algebra.hpp"
#include "cpl/numeric.hpp"

namespace cpl {

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::derived: return "derived";
    case SeriesKind::lower_central: return "lower_central";
    case SeriesKind::upper_central: return "upper_central";
    case SeriesKind::chief: return "chief";
  }
  return "?";
}

SeriesReport derived_series(const Group& g) {
  SeriesReport report{SeriesKind::derived, {whole_group(g)}, false, {}};
  for (;;) {
    const Subgroup& last = report.terms.back();
    if (last.is_trivial()) break;
    Subgroup next = commutator_subgroup(g, last, last);
    if (next == last) break;
    report.terms.push_back(std::move(next));
  }
  report.stabilized = true;
  if (report.terms.back().is_trivial())
    report.length = static_cast<int>(report.terms.size()) - 1;
  return report;
}

SeriesReport lower_central_series(const Group& g) {
  SeriesReport report{SeriesKind::lower_central, {whole_group(g)}, false, {}};
  Subgroup whole = whole_group(g);
  for (;;) {
    const Subgroup& last = report.terms.back();
    if (last.is_trivial()) break;
    Subgroup next = commutator_subgroup(g, last, whole);
    if (next == last) break;
    report.terms.push_back(std::move(next));
  }
  report.stabilized = true;
  if (report.terms.back().is_trivial())
    report.length = static_cast<int>(report.terms.size()) - 1;
  return report;
}

SeriesReport upper_central_series(const Group& g) {
  SeriesReport report{SeriesKind::upper_central, {trivial_subgroup(g)}, false, {}};
  for (;;) {
    const Subgroup& last = report.terms.back();
    if (last.is_whole_group()) break;
    QuotientGroup q = quotient(g, last);
    Subgroup next = preimage(g, q, center(q.group).members());
    if (next == last) break;
    report.terms.push_back(std::move(next));
  }
  report.stabilized = true;
  if (report.terms.back().is_whole_group())
    report.length = static_cast<int>(report.terms.size()) - 1;
  return report;
}

Subgroup ith_center(const Group& g, int i) {
  if (i < 0) throw InvalidElementId("ith_center: i must be >= 0");
  SeriesReport ucs = upper_central_series(g);
  std::size_t idx = std::min<std::size_t>(i, ucs.terms.size() - 1);
  return ucs.terms[idx];
}

std::optional<int> derived_length(const Group& g) {
  return derived_series(g).length;
}

std::optional<int> nilpotency_class(const Group& g) {
  return lower_central_series(g).length;
}

bool is_solvable(const Group& g) { return derived_length(g).has_value(); }

bool is_nilpotent(const Group& g) { return nilpotency_class(g).has_value(); }

std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  if (g.order() == 1)
    throw TrivialGroup("minimal_normal_subgroups: group is trivial");
  // Every minimal normal subgroup is <x^G> for any of its nontrivial
  // elements, so the minimal elements among class closures are exactly the
  // minimal normal subgroups.
  std::vector<Subgroup> candidates;
  std::set<std::vector<int>> seen;
  for (const ConjugacyClass& c : all_conjugacy_classes(g)) {
    if (c.rep_id == g.identity_id()) continue;
    Subgroup n = subgroup_generated(g, c.members);
    if (seen.insert(n.members()).second) candidates.push_back(std::move(n));
  }
  std::vector<Subgroup> minimal;
  for (const Subgroup& n : candidates) {
    bool ok = true;
    for (const Subgroup& m : candidates)
      if (m.size() < n.size() && is_subset(m, n)) {
        ok = false;
        break;
      }
    if (ok) minimal.push_back(n);
  }
  return minimal;
}

SeriesReport chief_series(const Group& g) {
  SeriesReport report{SeriesKind::chief, {trivial_subgroup(g)}, false, {}};
  while (!report.terms.back().is_whole_group()) {
    QuotientGroup q = quotient(g, report.terms.back());
    std::vector<Subgroup> mins = minimal_normal_subgroups(q.group);
    // Deterministic choice: smallest order, then lexicographic members.
    const Subgroup* pick = &mins.front();
    for (const Subgroup& m : mins)
      if (m.size() < pick->size() ||
          (m.size() == pick->size() && m.members() < pick->members()))
        pick = &m;
    report.terms.push_back(preimage(g, q, pick->members()));
  }
  report.stabilized = true;
  report.length = static_cast<int>(report.terms.size()) - 1;
  return report;
}

bool is_supersolvable(const Group& g) {
  if (g.order() == 1) return true;
  // Finite nilpotent groups are supersolvable; this also keeps the large
  // catalog products away from chief-series construction.
  if (is_nilpotent(g)) return true;
  SeriesReport cs = chief_series(g);
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
    std::size_t factor = cs.terms[i + 1].size() / cs.terms[i].size();
    if (!is_prime(factor)) return false;
  }
  return true;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<ConjugacyClass> classes = all_conjugacy_classes(g);
  if (classes.size() > 24)
    throw TooManyClasses("normal_subgroups: refusing group with " +
                         std::to_string(classes.size()) + " classes (> 24)");

  std::set<std::vector<int>> found;
  found.insert(trivial_subgroup(g).members());
  std::vector<std::vector<int>> worklist;
  for (const ConjugacyClass& c : classes) {
    if (c.rep_id == g.identity_id()) continue;
    std::vector<int> n = subgroup_generated(g, c.members).members();
    if (found.insert(n).second) worklist.push_back(std::move(n));
  }
  // Normal subgroups are closed under join, and every one is a join of
  // class closures of its member classes.
  std::vector<std::vector<int>> all(found.begin(), found.end());
  while (!worklist.empty()) {
    std::vector<int> cur = std::move(worklist.back());
    worklist.pop_back();
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::vector<int> seed = cur;
      seed.insert(seed.end(), all[i].begin(), all[i].end());
      std::vector<int> join = subgroup_generated(g, seed).members();
      if (found.insert(join).second) {
        all.push_back(join);
        worklist.push_back(std::move(join));
      }
    }
  }

  std::vector<Subgroup> out;
  for (const auto& members : found) out.emplace_back(g, members);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::optional<int> section_derived_length(const Subgroup& num,
                                          const Subgroup& den) {
  if (&num.parent() != &den.parent())
    throw InvalidElementId("section: numerator and denominator parents differ");
  if (!is_subset(den, num))
    throw NotNormal("section: denominator is not contained in numerator");

  SubgroupAsGroup n = materialize(num);
  // Translate denominator ids: members are positions within num's sorted ids.
  std::vector<int> den_ids;
  for (int id : den.members()) {
    auto it = std::lower_bound(n.to_parent.begin(), n.to_parent.end(), id);
    den_ids.push_back(static_cast<int>(it - n.to_parent.begin()));
  }
  Subgroup den_in_num(n.group, std::move(den_ids));
  if (!is_normal(n.group, den_in_num))
    throw NotNormal("section: denominator is not normal in numerator");
  return derived_length(quotient(n.group, den_in_num).group);
}

}  // namespace cpl
