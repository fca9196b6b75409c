#pragma once

#include <vector>

#include "cpl/group.hpp"

namespace cpl {

/// Full conjugation orbit of an element; rep_id is the smallest member id.
struct ConjugacyClass {
  const Group* parent;
  int rep_id;
  std::vector<int> members;  // sorted

  std::size_t size() const { return members.size(); }
  friend bool operator==(const ConjugacyClass& a, const ConjugacyClass& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

/// Decomposition of a normal subset into conjugacy classes.
struct ClassProductReport {
  int eta = 0;
  std::vector<int> constituents;  // class rep ids, ascending
  std::size_t product_size = 0;
};

ConjugacyClass conjugacy_class_of(const Group& g, int x);

// Partition of all element ids into classes, ordered by rep id.
std::vector<ConjugacyClass> all_conjugacy_classes(const Group& g);

// {xy : x in A, y in B} as a sorted set of ids (no multiplicities).
std::vector<int> product_of_subsets(const Group& g, const std::vector<int>& a,
                                    const std::vector<int>& b);

// Throws NotNormalSubset if some conjugate escapes X, EmptySet if X empty.
ClassProductReport decompose_normal_subset(const Group& g,
                                           const std::vector<int>& x);

int eta(const Group& g, const ConjugacyClass& a, const ConjugacyClass& b);

ConjugacyClass inverse_class(const Group& g, const ConjugacyClass& a);

bool is_normal_subset(const Group& g, const std::vector<int>& x);

}  // namespace cpl
