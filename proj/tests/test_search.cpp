#include <doctest.h>

#include <set>

#include "cpl/class_algebra.hpp"
#include "cpl/constructions.hpp"
#include "cpl/search.hpp"
#include "cpl/series.hpp"

using namespace cpl;

namespace {

std::vector<CatalogEntry> single(const char* spec) {
  GroupSpec s = parse_group_spec(spec);
  std::vector<CatalogEntry> out;
  out.push_back({s.expression, std::move(s.resolved)});
  return out;
}

}  // namespace

TEST_CASE("open question: G1 reaches class 1 with m = 1") {
  OpenQuestionScan scan = open_question_scan(single("wr(C2,2)"));
  CHECK(scan.sound());
  bool found = false;
  for (const auto& r : scan.records)
    if (r.minimal_m == 1 && r.achieved_class == 1 && r.tight) found = true;
  CHECK(found);
}

TEST_CASE("open question: G2 reaches class 2 with m = 2") {
  OpenQuestionScan scan = open_question_scan(single("wr(wr(C2,2),2)"));
  CHECK(scan.sound());
  bool found = false;
  for (const auto& r : scan.records)
    if (r.minimal_m == 2 && r.achieved_class == 2 && r.tight) found = true;
  CHECK(found);
}

TEST_CASE("open question: abelian groups are all m = 0 tight") {
  OpenQuestionScan scan = open_question_scan(single("C2 x C6"));
  CHECK(scan.notes.empty());
  CHECK(scan.records.size() == 12);
  for (const auto& r : scan.records) {
    CHECK(r.minimal_m == 0);
    CHECK(r.achieved_class == 0);
    CHECK(r.tight);
  }
}

TEST_CASE("open question: centerless groups skip noncentral classes") {
  OpenQuestionScan scan = open_question_scan(single("S3"));
  CHECK(scan.sound());
  CHECK(scan.records.size() == 1);  // only the identity class qualifies
  CHECK(scan.notes.size() == 2);
}

TEST_CASE("open question: minimal_m agrees with the commutator route") {
  // a^G lies in a Z_m exactly when every [a,g] lies in Z_m.
  for (const char* spec : {"D4", "Q8", "D8", "ES(3,+)", "wr(C2,2)"}) {
    Group g = parse_group_spec(spec).resolved;
    OpenQuestionScan scan = open_question_scan(single(spec));
    for (const auto& r : scan.records) {
      std::set<int> comms;
      for (std::size_t x = 0; x < g.order(); ++x) {
        int xi = static_cast<int>(x);
        comms.insert(g.mul(g.mul(g.inv(r.element_id), g.inv(xi)),
                           g.mul(r.element_id, xi)));
      }
      int m = 0;
      while (true) {
        Subgroup z = ith_center(g, m);
        bool inside = true;
        for (int c : comms)
          if (!z.contains(c)) {
            inside = false;
            break;
          }
        if (inside) break;
        ++m;
      }
      CHECK(r.minimal_m == m);
    }
  }
}

TEST_CASE("open question: records are class-invariant") {
  Group g = dihedral(4);
  OpenQuestionScan scan = open_question_scan(single("D4"));
  for (const auto& r : scan.records) {
    ConjugacyClass cls = conjugacy_class_of(g, r.element_id);
    CHECK(cls.rep_id == r.element_id);  // one record per class, by rep
  }
  CHECK(scan.records.size() == all_conjugacy_classes(g).size());
}

TEST_CASE("open question: deterministic canonical ordering") {
  std::vector<CatalogEntry> groups;
  for (const char* s : {"Q8", "D4", "C6"}) {
    GroupSpec spec = parse_group_spec(s);
    groups.push_back({spec.expression, std::move(spec.resolved)});
  }
  OpenQuestionScan scan = open_question_scan(groups);
  for (std::size_t i = 1; i < scan.records.size(); ++i) {
    const auto& a = scan.records[i - 1];
    const auto& b = scan.records[i];
    CHECK((a.group_spec < b.group_spec ||
           (a.group_spec == b.group_spec && a.element_id < b.element_id)));
  }
}

TEST_CASE("conjecture scan on abelian groups: dl is at most 1") {
  ConjectureSummary s = conjecture_scan(single("C6"));
  REQUIRE(s.best_fit_found);
  for (const auto& d : s.data) {
    CHECK(d.eta_ab == 1);
    CHECK(d.section_dl == 0);  // centralizers collapse to G on both sides
  }
  CHECK(s.best_r == 0);
  CHECK(s.best_s == 0);
}

TEST_CASE("conjecture scan envelope stays within the proven bound") {
  std::vector<CatalogEntry> groups;
  for (const char* sp : {"S3", "D4", "Q8", "D6", "ES(3,-)"}) {
    GroupSpec spec = parse_group_spec(sp);
    groups.push_back({spec.expression, std::move(spec.resolved)});
  }
  ConjectureSummary s = conjecture_scan(groups);
  REQUIRE(s.best_fit_found);
  for (const auto& d : s.data) {
    CHECK(d.section_dl >= 0);             // all sections solvable here
    CHECK(d.section_dl <= 2 * d.eta_ab);  // supersolvable bound
  }
  CHECK(s.best_r + 2 * s.best_s <= 2 + 2 * 8);  // sane envelope
  CHECK(s.frontier <= s.best_r);
}

TEST_CASE("conjecture scan skips non-solvable groups with a note") {
  Group a5 = Group::from_generators(
      5, {Permutation({1, 2, 3, 4, 0}), Permutation({1, 2, 0, 3, 4})}, "A5");
  std::vector<CatalogEntry> groups;
  groups.push_back({"A5", std::move(a5)});
  ConjectureSummary s = conjecture_scan(groups);
  CHECK(s.data.empty());
  REQUIRE(s.notes.size() == 1);
  CHECK(s.notes[0].find("not solvable") != std::string::npos);
}
