#include <doctest.h>

#include "cpl/constructions.hpp"
#include "cpl/errors.hpp"
#include "cpl/series.hpp"

using namespace cpl;

TEST_CASE("derived lengths of small groups") {
  CHECK(derived_length(cyclic(1)) == 0);
  CHECK(derived_length(cyclic(7)) == 1);
  CHECK(derived_length(symmetric(3)) == 2);
  CHECK(derived_length(symmetric(4)) == 3);
  CHECK(derived_length(dihedral(4)) == 2);
  CHECK(derived_length(quaternion8()) == 2);
}

TEST_CASE("A5 is perfect, hence not solvable") {
  Group a5 = Group::from_generators(
      5, {Permutation({1, 2, 3, 4, 0}), Permutation({1, 2, 0, 3, 4})}, "A5");
  REQUIRE(a5.order() == 60);
  CHECK_FALSE(is_solvable(a5));
  CHECK(derived_length(a5) == std::nullopt);
  SeriesReport s = derived_series(a5);
  CHECK(s.stabilized);
  CHECK_FALSE(s.length.has_value());
  CHECK(s.terms.back().is_whole_group());
}

TEST_CASE("nilpotency classes") {
  CHECK(nilpotency_class(cyclic(6)) == 1);
  CHECK(nilpotency_class(dihedral(4)) == 2);
  CHECK(nilpotency_class(quaternion8()) == 2);
  CHECK(nilpotency_class(dihedral(8)) == 3);
  CHECK(nilpotency_class(symmetric(3)) == std::nullopt);
  CHECK(is_nilpotent(parse_group_spec("ES(3,+)").resolved));
  CHECK_FALSE(is_nilpotent(symmetric(4)));
  CHECK(is_solvable(symmetric(4)));
}

TEST_CASE("upper and lower central series agree on class") {
  for (const char* spec : {"D4", "Q8", "D8", "ES(3,+)", "ES(3,-)",
                           "wr(C2,2)", "C2 x D4"}) {
    Group g = parse_group_spec(spec).resolved;
    SeriesReport lower = lower_central_series(g);
    SeriesReport upper = upper_central_series(g);
    REQUIRE(lower.length.has_value());
    CHECK(lower.length == upper.length);
    CHECK(lower.terms.back().is_trivial());
    CHECK(upper.terms.back().is_whole_group());
  }
}

TEST_CASE("ith_center clamps at the hypercenter") {
  Group s3 = symmetric(3);
  CHECK(ith_center(s3, 0).is_trivial());
  CHECK(ith_center(s3, 1).is_trivial());   // centerless
  CHECK(ith_center(s3, 100).is_trivial());

  Group d4 = dihedral(4);
  CHECK(ith_center(d4, 1) == center(d4));
  CHECK(ith_center(d4, 2).is_whole_group());
  CHECK(ith_center(d4, 50).is_whole_group());
}

TEST_CASE("minimal normal subgroups") {
  Group s4 = symmetric(4);
  std::vector<Subgroup> mins = minimal_normal_subgroups(s4);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].size() == 4);  // the Klein four-group

  Group c6 = cyclic(6);
  mins = minimal_normal_subgroups(c6);
  CHECK(mins.size() == 2);  // C2 and C3

  CHECK_THROWS_AS(minimal_normal_subgroups(cyclic(1)), TrivialGroup);
}

TEST_CASE("chief series of S4") {
  Group s4 = symmetric(4);
  SeriesReport chief = chief_series(s4);
  REQUIRE(chief.length == 3);  // factors V4, A4/V4, S4/A4
  std::vector<std::size_t> orders;
  for (const Subgroup& t : chief.terms) orders.push_back(t.size());
  CHECK(orders == std::vector<std::size_t>{1, 4, 12, 24});
}

TEST_CASE("supersolvability") {
  CHECK(is_supersolvable(cyclic(1)));
  CHECK(is_supersolvable(cyclic(30)));
  CHECK(is_supersolvable(symmetric(3)));
  CHECK(is_supersolvable(dihedral(6)));
  CHECK(is_supersolvable(quaternion8()));
  CHECK_FALSE(is_supersolvable(symmetric(4)));  // chief factor of order 4
  Group a4 = Group::from_generators(
      4, {Permutation({1, 0, 3, 2}), Permutation({1, 2, 0, 3})}, "A4");
  REQUIRE(a4.order() == 12);
  CHECK_FALSE(is_supersolvable(a4));
}

TEST_CASE("supersolvable is quotient-closed on the small catalog") {
  for (const char* spec : {"S3", "D4", "D6", "Q8", "ES(3,+)", "C2 x C6"}) {
    Group g = parse_group_spec(spec).resolved;
    REQUIRE(is_supersolvable(g));
    for (const Subgroup& n : normal_subgroups(g)) {
      if (n.is_whole_group()) continue;
      CHECK(is_supersolvable(quotient(g, n).group));
    }
  }
}

TEST_CASE("normal subgroup enumeration") {
  Group d4 = dihedral(4);
  CHECK(normal_subgroups(d4).size() == 6);
  Group q8 = quaternion8();
  CHECK(normal_subgroups(q8).size() == 6);
  CHECK(normal_subgroups(cyclic(12)).size() == 6);  // divisors of 12
  CHECK_THROWS_AS(normal_subgroups(cyclic(30)), TooManyClasses);
}

TEST_CASE("section derived length") {
  Group s4 = symmetric(4);
  Subgroup a4 = commutator_subgroup(s4, whole_group(s4), whole_group(s4));
  Subgroup v = commutator_subgroup(s4, a4, a4);
  REQUIRE(v.size() == 4);
  CHECK(section_derived_length(whole_group(s4), trivial_subgroup(s4)) == 3);
  CHECK(section_derived_length(a4, v) == 1);       // A4/V4 = C3
  CHECK(section_derived_length(a4, a4) == 0);
  CHECK(section_derived_length(whole_group(s4), v) == 2);  // S4/V4 = S3
  // Denominator must be normal in the numerator.
  Subgroup c2 = subgroup_generated(s4, {s4.index_of(Permutation({1, 0, 2, 3}))});
  CHECK_THROWS_AS(section_derived_length(whole_group(s4), c2), NotNormal);
}
