#include "cpl/search.hpp"

#include <algorithm>

#include "cpl/class_algebra.hpp"
#include "cpl/series.hpp"

namespace cpl {

bool OpenQuestionScan::sound() const {
  for (const auto& r : records)
    if (r.achieved_class > r.minimal_m) return false;
  return true;
}

OpenQuestionScan open_question_scan(const std::vector<CatalogEntry>& groups) {
  OpenQuestionScan scan;
  for (const CatalogEntry& entry : groups) {
    const Group& g = entry.group;
    SeriesReport ucs = upper_central_series(g);
    SeriesReport lcs = lower_central_series(g);

    // One representative per class; records are class-invariant.
    for (const ConjugacyClass& cls : all_conjugacy_classes(g)) {
      const int a = cls.rep_id;
      // minimal m with a^G inside a Z_m: a^-1 x lands in Z_m for all x in a^G.
      std::optional<int> minimal_m;
      for (std::size_t m = 0; m < ucs.terms.size() && !minimal_m; ++m) {
        bool inside = true;
        for (int x : cls.members)
          if (!ucs.terms[m].contains(g.mul(g.inv(a), x))) {
            inside = false;
            break;
          }
        if (inside) minimal_m = static_cast<int>(m);
      }
      if (!minimal_m) {
        scan.notes.push_back(entry.spec + ": element " + std::to_string(a) +
                             " skipped, a^G escapes a * hypercenter");
        continue;
      }

      // class(G/C_G(a^G)) = least c with G^{c+1} inside C.
      Subgroup cent = centralizer_of_subset(g, cls.members);
      std::optional<int> achieved;
      for (std::size_t t = 0; t < lcs.terms.size() && !achieved; ++t)
        if (is_subset(lcs.terms[t], cent)) achieved = static_cast<int>(t);
      if (!achieved) {
        // Theorem 4.2 rules this out whenever minimal_m exists; surface it
        // as an unsound record rather than hiding it.
        scan.records.push_back(OpenQuestionRecord{
            entry.spec, a, *minimal_m, static_cast<int>(lcs.terms.size()) + 1,
            false});
        continue;
      }
      scan.records.push_back(OpenQuestionRecord{
          entry.spec, a, *minimal_m, *achieved, *achieved == *minimal_m});
    }
  }
  // Canonical order regardless of evaluation order.
  std::sort(scan.records.begin(), scan.records.end(),
            [](const OpenQuestionRecord& x, const OpenQuestionRecord& y) {
              if (x.group_spec != y.group_spec)
                return x.group_spec < y.group_spec;
              return x.element_id < y.element_id;
            });
  return scan;
}

ConjectureSummary conjecture_scan(const std::vector<CatalogEntry>& groups) {
  ConjectureSummary summary;
  for (const CatalogEntry& entry : groups) {
    const Group& g = entry.group;
    if (!is_solvable(g)) {
      summary.notes.push_back(entry.spec + ": skipped, not solvable");
      continue;
    }
    std::vector<ConjugacyClass> classes = all_conjugacy_classes(g);
    std::vector<Subgroup> cents;
    for (const auto& c : classes)
      cents.push_back(centralizer_of_subset(g, c.members));
    std::map<int, std::size_t> by_rep;
    for (std::size_t i = 0; i < classes.size(); ++i)
      by_rep[classes[i].rep_id] = i;

    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        std::vector<int> ab =
            product_of_subsets(g, classes[i].members, classes[j].members);
        ClassProductReport prod = decompose_normal_subset(g, ab);
        Subgroup isect = intersect(cents[i], cents[j]);
        for (int d_rep : prod.constituents) {
          const Subgroup& n = cents[by_rep.at(d_rep)];
          std::optional<int> dl = section_derived_length(n, isect);
          summary.data.push_back(ConjectureDatum{
              entry.spec, classes[i].rep_id, classes[j].rep_id, d_rep,
              prod.eta, dl ? *dl : -1});
        }
      }
    }
  }

  // Observed envelope: smallest (r, s) in 0..8 covering all data points,
  // minimizing r + s, then r.
  for (int total = 0; total <= 16 && !summary.best_fit_found; ++total) {
    for (int r = 0; r <= std::min(total, 8); ++r) {
      int s = total - r;
      if (s > 8) continue;
      bool covers = true;
      for (const ConjectureDatum& d : summary.data)
        if (d.section_dl > r * d.eta_ab + s) {
          covers = false;
          break;
        }
      if (covers) {
        summary.best_r = r;
        summary.best_s = s;
        summary.best_fit_found = true;
        break;
      }
    }
  }
  if (summary.best_fit_found) {
    for (const ConjectureDatum& d : summary.data)
      summary.frontier = std::max(
          summary.frontier, static_cast<double>(d.section_dl - summary.best_s) /
                                static_cast<double>(d.eta_ab));
  }
  return summary;
}

void to_json(nlohmann::json& j, const OpenQuestionRecord& r) {
  j = nlohmann::json{{"group_spec", r.group_spec},
                     {"element_id", r.element_id},
                     {"minimal_m", r.minimal_m},
                     {"achieved_class", r.achieved_class},
                     {"tight", r.tight}};
}

void to_json(nlohmann::json& j, const OpenQuestionScan& s) {
  j = nlohmann::json{{"records", s.records}, {"notes", s.notes},
                     {"sound", s.sound()}};
}

void to_json(nlohmann::json& j, const ConjectureDatum& d) {
  j = nlohmann::json{{"group_spec", d.group_spec}, {"rep_a", d.rep_a},
                     {"rep_b", d.rep_b},           {"rep_d", d.rep_d},
                     {"eta_ab", d.eta_ab},         {"section_dl", d.section_dl}};
}

void to_json(nlohmann::json& j, const ConjectureSummary& s) {
  j = nlohmann::json{{"data", s.data},
                     {"notes", s.notes},
                     {"best_fit_found", s.best_fit_found},
                     {"best_r", s.best_r},
                     {"best_s", s.best_s},
                     {"frontier", s.frontier}};
}

}  // namespace cpl
