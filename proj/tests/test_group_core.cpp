#include <doctest.h>

#include <algorithm>

#include "cpl/class_algebra.hpp"
#include "cpl/constructions.hpp"
#include "cpl/errors.hpp"
#include "cpl/group.hpp"
#include "cpl/ingest.hpp"
#include "cpl/permutation.hpp"

using namespace cpl;

TEST_CASE("compose applies the left factor first") {
  // (0 1) then (1 2): 0 -> 1 -> 2, so the product sends 0 to 2.
  Permutation swap01({1, 0, 2});
  Permutation swap12({0, 2, 1});
  Permutation prod = compose(swap01, swap12);
  CHECK(prod[0] == 2);
  CHECK(prod[1] == 0);
  CHECK(prod[2] == 1);
  // And the other order is a different 3-cycle.
  Permutation other = compose(swap12, swap01);
  CHECK(other[0] == 1);
  CHECK(prod != other);
}

TEST_CASE("permutation basics") {
  Permutation id(4);
  CHECK(id.is_identity());
  CHECK(id.inverse() == id);

  Permutation c({1, 2, 3, 0});
  CHECK(compose(c, c.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DegreeMismatch);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), DegreeMismatch);

  // Lexicographic order puts the identity first.
  CHECK(id < Permutation({0, 1, 3, 2}));
}

TEST_CASE("conjugation is a right action") {
  Permutation x({1, 0, 2, 3});
  Permutation g({1, 2, 3, 0});
  Permutation h({0, 2, 1, 3});
  CHECK(conjugate(conjugate(x, g), h) == conjugate(x, compose(g, h)));
}

TEST_CASE("closure from generators") {
  Group s3 = Group::from_generators(
      3, {Permutation({1, 0, 2}), Permutation({1, 2, 0})}, "S3");
  CHECK(s3.order() == 6);
  CHECK(s3.identity_id() == 0);
  CHECK(s3.element(0).is_identity());

  Group d4 = dihedral(4);
  CHECK(d4.order() == 8);
  CHECK_FALSE(d4.is_abelian());
  CHECK(cyclic(12).is_abelian());
}

TEST_CASE("order guard") {
  CHECK_THROWS_AS(symmetric(8, 1000), OrderGuardExceeded);
  CHECK(symmetric(7, 5040).order() == 5040);
}

TEST_CASE("element ids are deterministic and arithmetic is consistent") {
  Group g = symmetric(4);
  Group g2 = symmetric(4);
  for (std::size_t i = 0; i < g.order(); ++i)
    CHECK(g.element(static_cast<int>(i)) == g2.element(static_cast<int>(i)));

  for (int a = 0; a < static_cast<int>(g.order()); ++a) {
    CHECK(g.mul(a, g.inv(a)) == g.identity_id());
    CHECK(g.mul(g.identity_id(), a) == a);
    int x = g.conj(a, 5);
    CHECK(g.element(x) == conjugate(g.element(a), g.element(5)));
  }
  CHECK_THROWS_AS(g.check_id(-1), InvalidElementId);
  CHECK_THROWS_AS(g.check_id(24), InvalidElementId);
}

TEST_CASE("subgroup generation, intersection and normality") {
  Group s4 = symmetric(4);
  // <(0 1 2 3)> is cyclic of order 4 and not normal in S4.
  int c4 = s4.index_of(Permutation({1, 2, 3, 0}));
  Subgroup h = subgroup_generated(s4, {c4});
  CHECK(h.size() == 4);
  CHECK_FALSE(is_normal(s4, h));

  // The Klein four-group of double transpositions is normal.
  Subgroup v = subgroup_generated(
      s4, {s4.index_of(Permutation({1, 0, 3, 2})),
           s4.index_of(Permutation({2, 3, 0, 1}))});
  CHECK(v.size() == 4);
  CHECK(is_normal(s4, v));

  Subgroup both = intersect(h, v);
  CHECK(both.size() == 2);
  CHECK(is_subset(both, h));
  CHECK(is_subset(both, v));
  CHECK(is_subset(trivial_subgroup(s4), both));
  CHECK(is_normal(s4, whole_group(s4)));
}

TEST_CASE("centralizers and center") {
  Group d4 = dihedral(4);
  Subgroup z = center(d4);
  CHECK(z.size() == 2);

  Group q8 = quaternion8();
  CHECK(center(q8).size() == 2);

  // C_G(X) = intersection of element centralizers.
  Group s4 = symmetric(4);
  std::vector<int> xs = {3, 7, 10};
  Subgroup joint = centralizer_of_subset(s4, xs);
  Subgroup manual = whole_group(s4);
  for (int x : xs) manual = intersect(manual, centralizer_of_subset(s4, {x}));
  CHECK(joint == manual);

  CHECK(centralizer_of_subset(s4, {}).is_whole_group());
}

TEST_CASE("commutator subgroups") {
  Group s4 = symmetric(4);
  Subgroup derived = commutator_subgroup(s4, whole_group(s4), whole_group(s4));
  CHECK(derived.size() == 12);  // A4

  Subgroup v = subgroup_generated(
      s4, {s4.index_of(Permutation({1, 0, 3, 2})),
           s4.index_of(Permutation({2, 3, 0, 1}))});
  Subgroup a4 = derived;
  CHECK(commutator_subgroup(s4, a4, v) == commutator_subgroup(s4, v, a4));
  CHECK(commutator_subgroup(s4, v, v).is_trivial());

  Group c6 = cyclic(6);
  CHECK(commutator_subgroup(c6, whole_group(c6), whole_group(c6)).is_trivial());
}

TEST_CASE("normal closure") {
  Group s4 = symmetric(4);
  int transposition = s4.index_of(Permutation({1, 0, 2, 3}));
  CHECK(normal_closure(s4, {transposition}).is_whole_group());
  int double_transposition = s4.index_of(Permutation({1, 0, 3, 2}));
  CHECK(normal_closure(s4, {double_transposition}).size() == 4);
}

TEST_CASE("quotient: D4 by its center is the Klein four-group") {
  Group d4 = dihedral(4);
  QuotientGroup q = quotient(d4, center(d4));
  CHECK(q.group.order() == 4);
  CHECK(q.group.is_abelian());
  for (int x = 0; x < 4; ++x)
    CHECK(q.group.mul(x, x) == q.group.identity_id());  // exponent 2
}

TEST_CASE("quotient: S3 by A3 has order two, projection is a homomorphism") {
  Group s3 = symmetric(3);
  Subgroup a3 = commutator_subgroup(s3, whole_group(s3), whole_group(s3));
  CHECK(a3.size() == 3);
  QuotientGroup q = quotient(s3, a3);
  CHECK(q.group.order() == 2);

  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(q.projection[s3.mul(a, b)] ==
            q.group.mul(q.projection[a], q.projection[b]));

  CHECK_THROWS_AS(quotient(s3, subgroup_generated(
                                   s3, {s3.index_of(Permutation({1, 0, 2}))})),
                  NotNormal);
}

TEST_CASE("quotient projection is a homomorphism across small groups") {
  for (const char* spec : {"D4", "Q8", "C2 x C6", "S4", "ES(3,+)"}) {
    Group g = parse_group_spec(spec).resolved;
    for (const Subgroup& n :
         {center(g), commutator_subgroup(g, whole_group(g), whole_group(g))}) {
      if (n.is_trivial() || n.is_whole_group()) continue;
      QuotientGroup q = quotient(g, n);
      CHECK(q.group.order() * n.size() == g.order());
      for (int a = 0; a < static_cast<int>(g.order()); ++a)
        for (int b = 0; b < static_cast<int>(g.order()); ++b)
          if (q.projection[g.mul(a, b)] !=
              q.group.mul(q.projection[a], q.projection[b]))
            FAIL("projection not a homomorphism on ", spec);
      // coset_reps is a section of the projection.
      for (std::size_t c = 0; c < q.group.order(); ++c)
        CHECK(q.projection[q.coset_reps[c]] == static_cast<int>(c));
    }
  }
}

TEST_CASE("preimage inverts projection") {
  Group d4 = dihedral(4);
  QuotientGroup q = quotient(d4, center(d4));
  Subgroup back = preimage(d4, q, {q.group.identity_id()});
  CHECK(back == center(d4));
  CHECK(preimage(d4, q, {0, 1, 2, 3}).is_whole_group());
}

TEST_CASE("materialize keeps element order and multiplication") {
  Group s4 = symmetric(4);
  Subgroup a4 = commutator_subgroup(s4, whole_group(s4), whole_group(s4));
  SubgroupAsGroup m = materialize(a4);
  CHECK(m.group.order() == 12);
  CHECK(std::is_sorted(m.to_parent.begin(), m.to_parent.end()));
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      CHECK(m.to_parent[m.group.mul(a, b)] ==
            s4.mul(m.to_parent[a], m.to_parent[b]));
}

TEST_CASE("small generating sets regenerate the subgroup") {
  Group g = dihedral(6);
  for (const Subgroup& h : {whole_group(g), center(g),
                            commutator_subgroup(g, whole_group(g),
                                                whole_group(g))}) {
    std::vector<int> gens = h.small_generating_set();
    CHECK(subgroup_generated(g, gens) == h);
    CHECK(gens.size() <= 4);
  }
}

TEST_CASE("generator ingestion") {
  Group g = ingest_generator_json(
      R"({"name": "v4", "degree": 4,
          "generators": [[1,0,3,2],[2,3,0,1]]})");
  CHECK(g.order() == 4);
  CHECK(g.name() == "v4");

  CHECK_THROWS_AS(ingest_generator_json("not json"), IngestError);
  CHECK_THROWS_AS(ingest_generator_json(R"({"degree": 3})"), IngestError);
  CHECK_THROWS_AS(
      ingest_generator_json(
          R"({"name":"x","degree":3,"generators":[[0,1]]})"),
      IngestError);
  CHECK_THROWS_AS(
      ingest_generator_json(
          R"({"name":"x","degree":3,"generators":[[0,0,1]]})"),
      IngestError);
  CHECK_THROWS_AS(ingest_generator_file("/no/such/file.json"), IngestError);
}
