#include "cpl/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

namespace cpl {

namespace {

// Build a membership bitmap over parent ids.
std::vector<char> bitmap(std::size_t n, const std::vector<int>& ids) {
  std::vector<char> in(n, 0);
  for (int i : ids) in[i] = 1;
  return in;
}

// Allocation-free commutation test: pq == qp pointwise.
bool commutes(const Permutation& p, const Permutation& q) {
  for (int i = 0; i < p.degree(); ++i)
    if (q[p[i]] != p[q[i]]) return false;
  return true;
}

}  // namespace

Group Group::from_generators(int degree, std::vector<Permutation> generators,
                             std::string name, std::size_t max_order) {
  if (max_order == 0) throw OrderGuardExceeded("max_order guard must be > 0");
  for (const auto& p : generators)
    if (p.degree() != degree)
      throw DegreeMismatch("generator degree does not match group degree");

  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  Permutation id(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& gen : generators) {
      Permutation prod = compose(cur, gen);
      if (seen.insert(prod).second) {
        if (seen.size() > max_order)
          throw OrderGuardExceeded("closure of <" + name + "> exceeds order guard " +
                                   std::to_string(max_order));
        todo.push_back(std::move(prod));
      }
    }
  }

  Group g;
  g.degree_ = degree;
  g.name_ = std::move(name);
  g.elements_.assign(seen.begin(), seen.end());  // std::set is already sorted
  g.generators_ = std::move(generators);
  g.finalize();
  return g;
}

Group Group::from_elements(int degree, std::vector<Permutation> elements,
                           std::vector<Permutation> generators,
                           std::string name) {
  for (const auto& p : elements)
    if (p.degree() != degree)
      throw DegreeMismatch("element degree does not match group degree");
  Group g;
  g.degree_ = degree;
  g.name_ = std::move(name);
  g.elements_ = std::move(elements);
  std::sort(g.elements_.begin(), g.elements_.end());
  g.elements_.erase(std::unique(g.elements_.begin(), g.elements_.end()),
                    g.elements_.end());
  g.generators_ = std::move(generators);
  g.finalize();
  return g;
}

void Group::finalize() {
  index_.reserve(elements_.size() * 2);
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
    index_.emplace(elements_[i], i);

  Permutation id(degree_);
  auto it = index_.find(id);
  if (it == index_.end())
    throw InvalidElementId("group element set does not contain the identity");
  identity_id_ = it->second;

  generator_ids_.clear();
  for (const auto& gen : generators_) generator_ids_.push_back(index_of(gen));

  inverse_.resize(elements_.size());
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
    inverse_[i] = index_of(elements_[i].inverse());

  // Full multiplication table only at small orders; larger groups fall back
  // to compose + hash lookup.
  const std::size_t n = elements_.size();
  if (n <= 1024 && n * n * static_cast<std::size_t>(degree_) <= 300'000'000) {
    mul_table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        mul_table_[a * n + b] = index_of(compose(elements_[a], elements_[b]));
  }
}

const Permutation& Group::element(int id) const {
  check_id(id);
  return elements_[id];
}

void Group::check_id(int id) const {
  if (id < 0 || id >= static_cast<int>(elements_.size()))
    throw InvalidElementId("element id " + std::to_string(id) +
                           " out of range for group " + name_);
}

std::optional<int> Group::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Group::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw InvalidElementId("permutation is not an element of group " + name_);
  return it->second;
}

int Group::mul(int a, int b) const {
  if (!mul_table_.empty()) return mul_table_[a * elements_.size() + b];
  check_id(a);
  check_id(b);
  return index_of(compose(elements_[a], elements_[b]));
}

int Group::inv(int a) const {
  check_id(a);
  return inverse_[a];
}

int Group::conj(int x, int g) const { return mul(mul(inv(g), x), g); }

int Group::element_order(int id) const {
  check_id(id);
  int ord = 1;
  int cur = id;
  while (cur != identity_id_) {
    cur = mul(cur, id);
    ++ord;
  }
  return ord;
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (compose(generators_[i], generators_[j]) !=
          compose(generators_[j], generators_[i]))
        return false;
  return true;
}

Subgroup::Subgroup(const Group& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int id : members_) parent.check_id(id);
  if (members_.empty() || !contains(parent.identity_id()))
    throw InvalidElementId("subgroup must contain the identity");
}

bool Subgroup::contains(int id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

std::vector<int> Subgroup::small_generating_set() const {
  std::vector<int> gens;
  std::vector<char> covered = bitmap(parent_->order(), {parent_->identity_id()});
  for (int m : members_) {
    if (covered[m]) continue;
    gens.push_back(m);
    covered = bitmap(parent_->order(),
                     subgroup_generated(*parent_, gens).members());
  }
  return gens;
}

Subgroup trivial_subgroup(const Group& g) {
  return Subgroup(g, {g.identity_id()});
}

Subgroup whole_group(const Group& g) {
  std::vector<int> all(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) all[i] = static_cast<int>(i);
  return Subgroup(g, std::move(all));
}

Subgroup subgroup_generated(const Group& g, const std::vector<int>& seed) {
  for (int id : seed) g.check_id(id);
  std::vector<char> in(g.order(), 0);
  std::deque<int> todo;
  in[g.identity_id()] = 1;
  todo.push_back(g.identity_id());
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    for (int s : seed) {
      int p = g.mul(cur, s);
      if (!in[p]) {
        in[p] = 1;
        todo.push_back(p);
      }
    }
  }
  std::vector<int> members;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (in[i]) members.push_back(static_cast<int>(i));
  return Subgroup(g, std::move(members));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

bool is_subset(const Subgroup& inner, const Subgroup& outer) {
  return std::includes(outer.members().begin(), outer.members().end(),
                       inner.members().begin(), inner.members().end());
}

bool is_normal(const Group& g, const Subgroup& h) {
  if (h.is_whole_group()) return true;
  // h^x = h for all x iff every generator of h stays in h under conjugation
  // by every generator of g.
  for (int s : h.small_generating_set())
    for (int x : g.generator_ids())
      if (!h.contains(g.conj(s, x))) return false;
  return true;
}

Subgroup centralizer_of_subset(const Group& g, const std::vector<int>& xs) {
  for (int id : xs) g.check_id(id);
  if (xs.empty()) return whole_group(g);

  // C_G(X) = C_G(<X>), so a small subset of xs generating everything in xs
  // suffices for the commutation sweep.
  std::vector<int> reps;
  std::vector<char> covered = bitmap(g.order(), {g.identity_id()});
  std::vector<int> sorted_xs = xs;
  std::sort(sorted_xs.begin(), sorted_xs.end());
  for (int x : sorted_xs) {
    if (covered[x]) continue;
    reps.push_back(x);
    covered = bitmap(g.order(), subgroup_generated(g, reps).members());
  }

  std::vector<const Permutation*> rep_perms;
  for (int r : reps) rep_perms.push_back(&g.element(r));

  std::vector<int> members;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Permutation& e = g.elements()[i];
    bool ok = true;
    for (const Permutation* r : rep_perms) {
      if (!commutes(e, *r)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(static_cast<int>(i));
  }
  return Subgroup(g, std::move(members));
}

Subgroup center(const Group& g) {
  std::vector<int> members;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Permutation& e = g.elements()[i];
    bool ok = true;
    for (const Permutation& gen : g.generators()) {
      if (!commutes(e, gen)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(static_cast<int>(i));
  }
  return Subgroup(g, std::move(members));
}

namespace {

// Closure of seed under the subgroup operation plus conjugation by conjugators.
Subgroup conjugation_closed_subgroup(const Group& g, std::vector<int> seed,
                                     const std::vector<int>& conjugators) {
  Subgroup cur = subgroup_generated(g, seed);
  for (;;) {
    bool grew = false;
    for (int m : cur.small_generating_set()) {
      for (int c : conjugators) {
        int cm = g.conj(m, c);
        if (!cur.contains(cm)) {
          seed.push_back(cm);
          grew = true;
        }
      }
    }
    if (!grew) return cur;
    cur = subgroup_generated(g, seed);
  }
}

}  // namespace

Subgroup commutator_subgroup(const Group& g, const Subgroup& h,
                             const Subgroup& k) {
  // [H,K] is the normal closure in <H,K> of the generator commutators.
  std::vector<int> hg =
      h.is_whole_group() ? g.generator_ids() : h.small_generating_set();
  std::vector<int> kg =
      k.is_whole_group() ? g.generator_ids() : k.small_generating_set();
  std::vector<int> seed;
  for (int x : hg)
    for (int y : kg)
      seed.push_back(g.mul(g.mul(g.mul(g.inv(x), g.inv(y)), x), y));
  std::vector<int> conjugators = hg;
  conjugators.insert(conjugators.end(), kg.begin(), kg.end());
  return conjugation_closed_subgroup(g, std::move(seed), conjugators);
}

Subgroup normal_closure(const Group& g, const std::vector<int>& seed) {
  return conjugation_closed_subgroup(g, seed, g.generator_ids());
}

QuotientGroup quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n))
    throw NotNormal("quotient: subgroup is not normal in " + g.name());

  if (n.is_trivial()) {
    // G/1 = G on the original points; the regular coset action below would
    // blow the degree up to |G| for nothing.
    std::vector<int> ids(g.order());
    std::iota(ids.begin(), ids.end(), 0);
    QuotientGroup q{Group::from_elements(g.degree(), g.elements(),
                                         g.generators(), g.name() + "/1"),
                    ids, std::move(ids)};
    return q;
  }

  const std::size_t order = g.order();
  const std::size_t ncosets = order / n.size();

  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;  // ascending, so each rep is the coset minimum
  for (std::size_t x = 0; x < order; ++x) {
    if (coset_of[x] != -1) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int m : n.members()) coset_of[g.mul(static_cast<int>(x), m)] = c;
  }

  // Regular action on cosets: coset d maps to coset of (rep_d * rep_c).
  std::vector<Permutation> perms;
  perms.reserve(ncosets);
  for (std::size_t c = 0; c < ncosets; ++c) {
    std::vector<int> images(ncosets);
    for (std::size_t d = 0; d < ncosets; ++d)
      images[d] = coset_of[g.mul(reps[d], reps[c])];
    perms.emplace_back(std::move(images));
  }

  std::vector<Permutation> gen_perms;
  for (int gid : g.generator_ids()) gen_perms.push_back(perms[coset_of[gid]]);

  QuotientGroup q{Group::from_elements(static_cast<int>(ncosets), perms,
                                       std::move(gen_perms), g.name() + "/N"),
                  {},
                  {}};

  std::vector<int> coset_to_qid(ncosets);
  q.coset_reps.resize(ncosets);
  for (std::size_t c = 0; c < ncosets; ++c) {
    int qid = q.group.index_of(perms[c]);
    coset_to_qid[c] = qid;
    q.coset_reps[qid] = reps[c];
  }
  q.projection.resize(order);
  for (std::size_t x = 0; x < order; ++x)
    q.projection[x] = coset_to_qid[coset_of[x]];
  return q;
}

Subgroup preimage(const Group& parent, const QuotientGroup& q,
                  const std::vector<int>& quotient_member_ids) {
  std::vector<char> in(q.group.order(), 0);
  for (int id : quotient_member_ids) {
    q.group.check_id(id);
    in[id] = 1;
  }
  std::vector<int> members;
  for (std::size_t x = 0; x < parent.order(); ++x)
    if (in[q.projection[x]]) members.push_back(static_cast<int>(x));
  return Subgroup(parent, std::move(members));
}

SubgroupAsGroup materialize(const Subgroup& h) {
  const Group& p = h.parent();
  std::vector<Permutation> elems;
  elems.reserve(h.size());
  for (int id : h.members()) elems.push_back(p.element(id));
  std::vector<Permutation> gens;
  for (int id : h.small_generating_set()) gens.push_back(p.element(id));

  SubgroupAsGroup out{Group::from_elements(p.degree(), elems, std::move(gens),
                                           p.name() + ".sub"),
                      h.members()};
  // Parent elements are sorted and members is a sorted id subset, so the
  // materialized ordering matches members positionally.
  return out;
}

}  // namespace cpl
