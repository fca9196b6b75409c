#include <doctest.h>

#include "cpl/class_algebra.hpp"
#include "cpl/constructions.hpp"
#include "cpl/errors.hpp"
#include "cpl/harness.hpp"
#include "cpl/series.hpp"

using namespace cpl;

TEST_CASE("theorem id round-trips") {
  for (auto id : {TheoremId::A, TheoremId::B, TheoremId::T2_4, TheoremId::L4_1,
                  TheoremId::T4_2, TheoremId::ETA_PGROUP, TheoremId::EX2_2,
                  TheoremId::EX3_2, TheoremId::REMARK4})
    CHECK(theorem_id_from_string(to_string(id)) == id);
  CHECK_THROWS_AS(theorem_id_from_string("nope"), Error);
}

TEST_CASE("theorem A on abelian groups is vacuously clean") {
  VerificationReport r = verify_theorem_A(cyclic(12));
  CHECK(r.pass());
  CHECK(r.cases_checked == 144);  // 12 classes squared
}

TEST_CASE("theorem A on S3 and a direct product") {
  VerificationReport r = verify_theorem_A(symmetric(3));
  CHECK(r.pass());
  CHECK(r.cases_checked == 9);

  Group big = parse_group_spec("D8 x ES(3,+)").resolved;
  CHECK(verify_theorem_A(big).pass());
}

TEST_CASE("theorem A depth 2 subsumes depth 1") {
  for (const char* spec : {"S3", "D4", "Q8", "S4"}) {
    Group g = parse_group_spec(spec).resolved;
    VerificationReport d1 = verify_theorem_A(g, 1);
    VerificationReport d2 = verify_theorem_A(g, 2);
    CHECK(d1.pass());
    CHECK(d2.pass());
    CHECK(d2.cases_checked > d1.cases_checked);
  }
}

TEST_CASE("theorem B") {
  VerificationReport r = verify_theorem_B(symmetric(3));
  CHECK(r.pass());
  CHECK(r.cases_checked > 0);
  CHECK(verify_theorem_B(dihedral(8)).pass());
  CHECK(verify_theorem_B(parse_group_spec("ES(3,-)").resolved).pass());
  CHECK_THROWS_AS(verify_theorem_B(symmetric(4)), NotSupersolvable);
}

TEST_CASE("transfer theorem with the default bound") {
  VerificationReport r = verify_transfer_theorem(
      dihedral(8), [](int n) { return 2 * n - 1; });
  CHECK(r.pass());
  CHECK(r.cases_checked > 0);
}

TEST_CASE("planted violation: the zero bound makes the harness fail") {
  VerificationReport r =
      verify_transfer_theorem(symmetric(3), [](int) { return 0; }, "0");
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.violations.empty());
  // Replay a record: the observed section derived length is real.
  const CounterexampleRecord& c = r.violations.front();
  CHECK(c.observed > c.bound);
}

TEST_CASE("lemma 4.1 sweeps") {
  CHECK(verify_lemma_4_1(cyclic(15)).pass());
  CHECK(verify_lemma_4_1(dihedral(4)).pass());
  CHECK(verify_lemma_4_1(symmetric(4)).pass());
  CHECK(verify_lemma_4_1(parse_group_spec("wr(C2,3)").resolved).pass());
}

TEST_CASE("theorem 4.2 with a central element") {
  Group d4 = dihedral(4);
  int z = center(d4).members()[1];
  VerificationReport r = verify_theorem_4_2(d4, whole_group(d4), z);
  CHECK(r.pass());
  CHECK(r.extremal.at("minimal_m") == 0);
  CHECK(r.extremal.at("achieved_class") == 0);
}

TEST_CASE("theorem 4.2 on the wreath pair") {
  Group g1 = parse_group_spec("wr(C2,2)").resolved;
  REQUIRE(g1.order() == 8);
  int a1 = -1;
  Subgroup z1 = center(g1);
  for (std::size_t i = 1; i < g1.order(); ++i)
    if (!z1.contains(static_cast<int>(i))) {
      a1 = static_cast<int>(i);
      break;
    }
  VerificationReport r = verify_theorem_4_2(g1, whole_group(g1), a1);
  CHECK(r.pass());
  CHECK(r.extremal.at("minimal_m") == 1);
  CHECK(r.extremal.at("achieved_class") == 1);
}

TEST_CASE("theorem 4.2 rejects non-normal N") {
  Group s4 = symmetric(4);
  Subgroup c2 =
      subgroup_generated(s4, {s4.index_of(Permutation({1, 0, 2, 3}))});
  CHECK_THROWS_AS(verify_theorem_4_2(s4, c2, 0), NotNormal);
}

TEST_CASE("eta p-group bound") {
  VerificationReport r = verify_eta_pgroup_bound(dihedral(4));
  CHECK(r.pass());
  // D8's class of the rotation r has size 2 and AA^-1 = {1, r^2}: bound tight.
  CHECK(r.extremal.at("min_slack") == 0);
  CHECK(verify_eta_pgroup_bound(parse_group_spec("ES(3,+)").resolved).pass());
  CHECK(verify_eta_pgroup_bound(parse_group_spec("wr(wr(C2,2),2)").resolved)
            .pass());
  CHECK_THROWS_AS(verify_eta_pgroup_bound(symmetric(3)), NotPGroup);
}

TEST_CASE("example 2.2 small cases") {
  for (int m : {2, 3, 5, 6}) {
    VerificationReport r = reproduce_example_2_2(m);
    CHECK(r.pass());
    CHECK(r.extremal.at("quotient_order") == m);
  }
  CHECK(reproduce_example_2_2(6).extremal.at("group_order") == 8 * 27);
  CHECK_THROWS_AS(reproduce_example_2_2(1), Error);
  CHECK_THROWS_AS(reproduce_example_2_2(37), Error);  // prime too large
}

TEST_CASE("example 3.2") {
  for (int p : {3, 5, 7}) {
    VerificationReport r = reproduce_example_3_2(p);
    CHECK(r.pass());
    CHECK(r.extremal.at("index") == p - 1);
  }
  VerificationReport r13 = reproduce_example_3_2(13);
  CHECK(r13.pass());
  CHECK(r13.extremal.at("index") == 12);
  CHECK(r13.extremal.at("prime_factors_of_index") == 2);  // 12 = 2^2 * 3
  CHECK_THROWS_AS(reproduce_example_3_2(4), Error);
}

TEST_CASE("remark 4 wreath pair") {
  VerificationReport r = reproduce_remark_4();
  CHECK(r.pass());
  CHECK(r.cases_checked >= 8);
}

TEST_CASE("report JSON round-trips") {
  VerificationReport r =
      verify_transfer_theorem(symmetric(3), [](int) { return 0; }, "0");
  nlohmann::json j = r;
  VerificationReport back = j.get<VerificationReport>();
  CHECK(back.theorem_id == r.theorem_id);
  CHECK(back.group_spec == r.group_spec);
  CHECK(back.cases_checked == r.cases_checked);
  CHECK(back.violations.size() == r.violations.size());
  CHECK(back.extremal == r.extremal);
  nlohmann::json j2 = back;
  CHECK(j == j2);
}

TEST_CASE("verifiers are deterministic") {
  Group g = parse_group_spec("D6").resolved;
  nlohmann::json a = verify_theorem_A(g, 2);
  nlohmann::json b = verify_theorem_A(g, 2);
  CHECK(a.dump() == b.dump());
}
