#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpl/permutation.hpp"

namespace cpl {

// Global desk-scale guard; the CLI can override via CPL_MAX_ORDER.
inline constexpr std::size_t kDefaultMaxOrder = 32768;

/// A fully enumerated finite permutation group.
///
/// Elements are stored sorted lexicographically on their image lists, so
/// element ids are deterministic across runs. The identity is always id 0
/// (it is the lexicographic minimum among permutations).
class Group {
 public:
  static Group from_generators(int degree, std::vector<Permutation> generators,
                               std::string name,
                               std::size_t max_order = kDefaultMaxOrder);

  // `elements` must already be closed under product and inverse; this is
  // checked lightly (identity present, generators present), full closure
  // sanity lives in the test suite.
  static Group from_elements(int degree, std::vector<Permutation> elements,
                             std::vector<Permutation> generators,
                             std::string name);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int id) const;
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& generator_ids() const { return generator_ids_; }
  int identity_id() const { return identity_id_; }

  std::optional<int> find(const Permutation& p) const;
  int index_of(const Permutation& p) const;  // throws InvalidElementId

  int mul(int a, int b) const;  // id of element(a) * element(b)
  int inv(int a) const;
  int conj(int x, int g) const;  // id of g^-1 x g
  int element_order(int id) const;
  bool is_abelian() const;
  void check_id(int id) const;

 private:
  Group() = default;
  void finalize();

  std::string name_;
  int degree_ = 1;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::vector<int> generator_ids_;
  int identity_id_ = 0;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<int> inverse_;
  std::vector<int32_t> mul_table_;  // only built when affordable
};

/// A subgroup of a parent Group, as a sorted list of element ids.
class Subgroup {
 public:
  Subgroup(const Group& parent, std::vector<int> members);

  const Group& parent() const { return *parent_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(int id) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole_group() const { return members_.size() == parent_->order(); }

  // Greedy generating set, deterministic (smallest ids first).
  std::vector<int> small_generating_set() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const Group* parent_;
  std::vector<int> members_;
};

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

Subgroup subgroup_generated(const Group& g, const std::vector<int>& seed);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subset(const Subgroup& inner, const Subgroup& outer);
bool is_normal(const Group& g, const Subgroup& h);

// C_G(xs); centralizer of the empty set is all of G.
Subgroup centralizer_of_subset(const Group& g, const std::vector<int>& xs);
Subgroup center(const Group& g);

// Subgroup generated by all [x, y] = x^-1 y^-1 x y with x in h, y in k.
Subgroup commutator_subgroup(const Group& g, const Subgroup& h,
                             const Subgroup& k);

// Smallest normal subgroup of g containing seed.
Subgroup normal_closure(const Group& g, const std::vector<int>& seed);

/// G/N realized as a genuine permutation group via the regular action on
/// left cosets, so every downstream operation applies to quotients too.
struct QuotientGroup {
  Group group;
  std::vector<int> projection;  // parent element id -> quotient element id
  std::vector<int> coset_reps;  // quotient element id -> a parent rep id
};

QuotientGroup quotient(const Group& g, const Subgroup& n);  // throws NotNormal

// Parent-side subgroup {x : projection(x) in quotient_member_ids}.
Subgroup preimage(const Group& parent, const QuotientGroup& q,
                  const std::vector<int>& quotient_member_ids);

/// A Subgroup re-materialized as a standalone Group (same permutations),
/// with the id translation back to the parent.
struct SubgroupAsGroup {
  Group group;
  std::vector<int> to_parent;  // new id -> parent id
};

SubgroupAsGroup materialize(const Subgroup& h);

}  // namespace cpl
