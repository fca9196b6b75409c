#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpl/group.hpp"

namespace cpl {

enum class SeriesKind { derived, lower_central, upper_central, chief };

std::string to_string(SeriesKind kind);

/// A computed subgroup chain. Descending series (derived, lower central)
/// list the outermost term first; the upper central and chief series are
/// ascending from the trivial subgroup.
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  bool stabilized = false;
  // Derived length / nilpotency class / chief length; absent when the series
  // stabilizes without reaching its target.
  std::optional<int> length;
};

SeriesReport derived_series(const Group& g);
SeriesReport lower_central_series(const Group& g);
SeriesReport upper_central_series(const Group& g);
SeriesReport chief_series(const Group& g);

// Z_i(g); clamps at the hypercenter for large i.
Subgroup ith_center(const Group& g, int i);

std::optional<int> derived_length(const Group& g);
std::optional<int> nilpotency_class(const Group& g);
bool is_solvable(const Group& g);
bool is_nilpotent(const Group& g);
bool is_supersolvable(const Group& g);

// All minimal nontrivial normal subgroups; throws TrivialGroup on |g| = 1.
std::vector<Subgroup> minimal_normal_subgroups(const Group& g);

// Every normal subgroup (including 1 and g). Normal subgroups are exactly
// the joins of class closures <x^G>; refuses groups with more than 24
// conjugacy classes.
std::vector<Subgroup> normal_subgroups(const Group& g);

// dl(num/den) for den normal in num (asserted); nullopt if the section is
// not solvable. Computed through an actual quotient group so the same code
// path serves every series statistic.
std::optional<int> section_derived_length(const Subgroup& num,
                                          const Subgroup& den);

}  // namespace cpl
