#pragma once

#include <string>
#include <vector>

#include "cpl/group.hpp"

namespace cpl {

// Cyclic group of order n on n points (n = 1 gives the trivial group).
Group cyclic(int n, std::size_t max_order = kDefaultMaxOrder);

// Dihedral group of order 2n on n points; requires n >= 3. Note the naming:
// dihedral(4) is the order-8 group often written D8.
Group dihedral(int n, std::size_t max_order = kDefaultMaxOrder);

// Symmetric group on n points, order n!.
Group symmetric(int n, std::size_t max_order = kDefaultMaxOrder);

// Quaternion group of order 8, regular representation.
Group quaternion8();

enum class ExtraspecialType { exponent_p, exponent_p_squared };

// Nonabelian group of order p^3 with center of order p, built from a Cayley
// table and converted via the right regular representation. For p = 2 the
// two types are D8 (exponent_p) and Q8 (exponent_p_squared).
Group extraspecial_p_cubed(int p, ExtraspecialType type,
                           std::size_t max_order = kDefaultMaxOrder);

// Permutation group on the disjoint union of the two point sets.
Group direct_product(const Group& g, const Group& h,
                     std::size_t max_order = kDefaultMaxOrder);

// Regular wreath product base^n : C_n, with C_n cyclically permuting the n
// coordinate blocks; acts on n * degree(base) points.
Group wreath_cyclic(const Group& base, int n,
                    std::size_t max_order = kDefaultMaxOrder);

// AGL(1,p): all maps x -> ax + b with a != 0 on p points; order p(p-1).
Group affine_prime(int p, std::size_t max_order = kDefaultMaxOrder);

/// A parsed group expression together with its normalized rendering.
///
/// Grammar:  spec := atom ( "x" atom )*
///           atom := "C"n | "D"n | "S"n | "Q8" | "ES(p,+)" | "ES(p,-)"
///                 | "AGL1(p)" | "wr(" spec "," n ")"
/// ES(p,+) is the exponent-p type, ES(p,-) the exponent-p^2 type.
struct GroupSpec {
  std::string expression;  // normalized
  Group resolved;
};

GroupSpec parse_group_spec(const std::string& text,
                           std::size_t max_order = kDefaultMaxOrder);

enum class CatalogProfile { smoke, full };

struct CatalogEntry {
  std::string spec;
  Group group;
};

// Deterministic list of test groups. smoke keeps orders <= 64; full adds the
// large wreath and extraspecial examples up to order 27000.
std::vector<CatalogEntry> catalog(CatalogProfile profile,
                                  std::size_t max_order = kDefaultMaxOrder);

}  // namespace cpl
