#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cpl/constructions.hpp"
#include "cpl/group.hpp"

namespace cpl {

/// One (group, class rep) data point for the open question of whether
/// a^G inside a Z_m(G) can force G/C_G(a^G) to reach nilpotency class m
/// for m > 2.
struct OpenQuestionRecord {
  std::string group_spec;
  int element_id = 0;
  int minimal_m = 0;       // least m with a^G inside a Z_m(G)
  int achieved_class = 0;  // nilpotency class of G/C_G(a^G)
  bool tight = false;      // achieved_class == minimal_m
};

struct OpenQuestionScan {
  std::vector<OpenQuestionRecord> records;
  std::vector<std::string> notes;  // skipped elements / groups
  // Any record with achieved_class > minimal_m is a soundness bug.
  bool sound() const;
};

OpenQuestionScan open_question_scan(const std::vector<CatalogEntry>& groups);

/// One (A, B, D) observation for the conjecture dl <= r eta(AB) + s.
struct ConjectureDatum {
  std::string group_spec;
  int rep_a = 0, rep_b = 0, rep_d = 0;
  int eta_ab = 0;
  int section_dl = 0;
};

struct ConjectureSummary {
  std::vector<ConjectureDatum> data;
  std::vector<std::string> notes;
  // Smallest integer pair with dl <= r*eta + s over all data, minimizing
  // r + s and then r; search range 0..8. Observed only, never universal.
  int best_r = 0, best_s = 0;
  bool best_fit_found = false;
  double frontier = 0;  // max over data of (dl - best_s) / eta
};

ConjectureSummary conjecture_scan(const std::vector<CatalogEntry>& groups);

void to_json(nlohmann::json& j, const OpenQuestionRecord& r);
void to_json(nlohmann::json& j, const OpenQuestionScan& s);
void to_json(nlohmann::json& j, const ConjectureDatum& d);
void to_json(nlohmann::json& j, const ConjectureSummary& s);

}  // namespace cpl
