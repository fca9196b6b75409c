#include "cpl/runner.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

#include "cpl/class_algebra.hpp"
#include "cpl/constructions.hpp"
#include "cpl/harness.hpp"
#include "cpl/ingest.hpp"
#include "cpl/search.hpp"
#include "cpl/series.hpp"

namespace cpl {

std::string to_string(Command c) {
  switch (c) {
    case Command::info: return "info";
    case Command::classes: return "classes";
    case Command::eta: return "eta";
    case Command::verify: return "verify";
    case Command::reproduce: return "reproduce";
    case Command::scan: return "scan";
  }
  return "?";
}

nlohmann::json config_to_json(const RunConfig& c) {
  return nlohmann::json{{"command", to_string(c.command)},
                        {"group_specs", c.group_specs},
                        {"input_files", c.input_files},
                        {"catalog_profile", c.catalog_profile},
                        {"theorem", c.theorem},
                        {"union_depth", c.union_depth},
                        {"max_order", c.max_order},
                        {"rep_order", c.rep_order},
                        {"rep_index", c.rep_index},
                        {"b_rep_index", c.b_rep_index},
                        {"with_inverse", c.with_inverse},
                        {"example", c.example},
                        {"m", c.m},
                        {"p", c.p},
                        {"question", c.question},
                        {"format", c.format},
                        {"output_path", c.output_path}};
}

namespace {

std::vector<CatalogEntry> resolve_groups(const RunConfig& c) {
  std::vector<CatalogEntry> out;
  if (!c.catalog_profile.empty()) {
    CatalogProfile profile;
    if (c.catalog_profile == "smoke")
      profile = CatalogProfile::smoke;
    else if (c.catalog_profile == "full")
      profile = CatalogProfile::full;
    else
      throw Error("unknown catalog profile: " + c.catalog_profile);
    out = catalog(profile, c.max_order);
  }
  for (const std::string& s : c.group_specs) {
    GroupSpec spec = parse_group_spec(s, c.max_order);
    out.push_back({spec.expression, std::move(spec.resolved)});
  }
  for (const std::string& f : c.input_files) {
    Group g = ingest_generator_file(f, c.max_order);
    std::string name = g.name();
    out.push_back({std::move(name), std::move(g)});
  }
  if (out.empty())
    throw Error("no groups selected: pass a spec, --catalog or --from file");
  return out;
}

nlohmann::json info_report(const CatalogEntry& e) {
  const Group& g = e.group;
  std::optional<int> dl = derived_length(g);
  std::optional<int> nc = nilpotency_class(g);
  nlohmann::json j{{"group_spec", e.spec},
                   {"order", g.order()},
                   {"degree", g.degree()},
                   {"class_count", all_conjugacy_classes(g).size()},
                   {"center_order", center(g).size()},
                   {"abelian", g.is_abelian()},
                   {"solvable", dl.has_value()},
                   {"nilpotent", nc.has_value()},
                   {"supersolvable", is_supersolvable(g)}};
  if (dl) j["derived_length"] = *dl;
  if (nc) j["nilpotency_class"] = *nc;
  return j;
}

nlohmann::json classes_report(const CatalogEntry& e) {
  const Group& g = e.group;
  nlohmann::json rows = nlohmann::json::array();
  for (const ConjugacyClass& c : all_conjugacy_classes(g))
    rows.push_back(nlohmann::json{{"rep_id", c.rep_id},
                                  {"size", c.size()},
                                  {"rep_order", g.element_order(c.rep_id)},
                                  {"rep_images", g.element(c.rep_id).images()}});
  return nlohmann::json{{"group_spec", e.spec}, {"classes", rows}};
}

nlohmann::json eta_report(const CatalogEntry& e, const RunConfig& c) {
  const Group& g = e.group;
  std::vector<ConjugacyClass> classes = all_conjugacy_classes(g);

  auto pick = [&](int index) -> const ConjugacyClass& {
    if (index < 0 || index >= static_cast<int>(classes.size()))
      throw Error("class index " + std::to_string(index) + " out of range");
    return classes[index];
  };

  const ConjugacyClass* a = nullptr;
  if (c.rep_order > 0) {
    for (const auto& cls : classes)
      if (g.element_order(cls.rep_id) == c.rep_order) {
        a = &cls;
        break;
      }
    if (!a)
      throw Error("no class with representative of order " +
                  std::to_string(c.rep_order));
  } else if (c.rep_index >= 0) {
    a = &pick(c.rep_index);
  } else {
    throw Error("eta: select a class with --rep-order or --rep-index");
  }

  ConjugacyClass b = c.with_inverse ? inverse_class(g, *a)
                     : c.b_rep_index >= 0 ? pick(c.b_rep_index)
                                          : *a;

  std::vector<int> ab = product_of_subsets(g, a->members, b.members);
  ClassProductReport prod = decompose_normal_subset(g, ab);
  return nlohmann::json{{"group_spec", e.spec},
                        {"rep_a", a->rep_id},
                        {"rep_b", b.rep_id},
                        {"eta", prod.eta},
                        {"product_size", prod.product_size},
                        {"constituents", prod.constituents}};
}

// One verification report per group; catalog sweeps skip groups that do not
// meet a theorem's hypothesis, explicit specs propagate the error.
std::vector<VerificationReport> run_verify(const RunConfig& c,
                                           const std::vector<CatalogEntry>& gs) {
  if (c.theorem.empty()) throw Error("verify: --theorem is required");
  const bool sweeping = !c.catalog_profile.empty();
  TheoremId id = theorem_id_from_string(c.theorem);

  std::vector<VerificationReport> reports;
  for (const CatalogEntry& e : gs) {
    try {
      switch (id) {
        case TheoremId::A:
          reports.push_back(verify_theorem_A(e.group, c.union_depth));
          break;
        case TheoremId::B:
          reports.push_back(verify_theorem_B(e.group));
          break;
        case TheoremId::T2_4:
          reports.push_back(verify_transfer_theorem(
              e.group, [](int n) { return 2 * n - 1; }, "2n-1"));
          break;
        case TheoremId::L4_1:
          reports.push_back(verify_lemma_4_1(e.group));
          break;
        case TheoremId::T4_2: {
          // Sweep N = G with one representative a per conjugacy class.
          VerificationReport merged;
          merged.theorem_id = TheoremId::T4_2;
          merged.group_spec = e.spec;
          Subgroup whole = whole_group(e.group);
          for (const ConjugacyClass& cls : all_conjugacy_classes(e.group)) {
            VerificationReport r =
                verify_theorem_4_2(e.group, whole, cls.rep_id);
            merged.cases_checked += r.cases_checked;
            for (auto& v : r.violations)
              merged.violations.push_back(std::move(v));
            for (auto& note : r.notes) merged.notes.push_back(std::move(note));
            for (auto& [k, v] : r.extremal) {
              auto it = merged.extremal.find(k);
              if (it == merged.extremal.end() || v > it->second)
                merged.extremal[k] = v;
            }
          }
          reports.push_back(std::move(merged));
          break;
        }
        case TheoremId::ETA_PGROUP:
          reports.push_back(verify_eta_pgroup_bound(e.group));
          break;
        default:
          throw Error("theorem " + c.theorem + " is not a verify target");
      }
      reports.back().group_spec = e.spec;
    } catch (const NotSupersolvable&) {
      if (!sweeping) throw;
      VerificationReport skip;
      skip.theorem_id = id;
      skip.group_spec = e.spec;
      skip.notes.push_back("skipped: not supersolvable");
      reports.push_back(std::move(skip));
    } catch (const NotPGroup&) {
      if (!sweeping) throw;
      VerificationReport skip;
      skip.theorem_id = id;
      skip.group_spec = e.spec;
      skip.notes.push_back("skipped: order is not a prime power");
      reports.push_back(std::move(skip));
    }
  }
  return reports;
}

std::string render_text(const nlohmann::json& doc) {
  std::ostringstream out;
  out << "command: " << doc.at("command").get<std::string>() << "\n";
  for (const auto& rep : doc.at("reports")) {
    if (rep.contains("theorem_id")) {
      out << "theorem " << rep.at("theorem_id").get<std::string>() << " on "
          << rep.at("group_spec").get<std::string>() << ": "
          << (rep.at("pass").get<bool>() ? "PASS" : "FAIL") << " ("
          << rep.at("cases_checked").get<long long>() << " cases, "
          << rep.at("violations").size() << " violations)\n";
      for (const auto& [k, v] : rep.at("extremal").items())
        out << "  " << k << " = " << v.dump() << "\n";
      for (const auto& note : rep.at("notes"))
        out << "  note: " << note.get<std::string>() << "\n";
      for (const auto& v : rep.at("violations"))
        out << "  violation: " << v.dump() << "\n";
    } else {
      out << rep.dump() << "\n";
    }
  }
  return out.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string render_csv(const RunConfig& c, const nlohmann::json& doc) {
  std::ostringstream out;
  const auto& reports = doc.at("reports");
  if (c.command == Command::scan && c.question == "conjecture") {
    out << "group_spec,rep_a,rep_b,rep_d,eta_ab,section_dl\n";
    for (const auto& d : reports.at(0).at("data"))
      out << csv_escape(d.at("group_spec").get<std::string>()) << ","
          << d.at("rep_a") << "," << d.at("rep_b") << "," << d.at("rep_d")
          << "," << d.at("eta_ab") << "," << d.at("section_dl") << "\n";
    return out.str();
  }
  if (c.command == Command::scan && c.question == "open4") {
    out << "group_spec,element_id,minimal_m,achieved_class,tight\n";
    for (const auto& r : reports.at(0).at("records"))
      out << csv_escape(r.at("group_spec").get<std::string>()) << ","
          << r.at("element_id") << "," << r.at("minimal_m") << ","
          << r.at("achieved_class") << "," << r.at("tight") << "\n";
    return out.str();
  }
  if (c.command == Command::verify || c.command == Command::reproduce) {
    out << "group_spec,theorem,cases_checked,violations,pass\n";
    for (const auto& rep : reports)
      out << csv_escape(rep.at("group_spec").get<std::string>()) << ","
          << rep.at("theorem_id").get<std::string>() << ","
          << rep.at("cases_checked") << "," << rep.at("violations").size()
          << "," << (rep.at("pass").get<bool>() ? 1 : 0) << "\n";
    return out.str();
  }
  // info / classes / eta: one JSON object per row is still spreadsheet-able,
  // but emit flat columns for info.
  if (c.command == Command::info) {
    out << "group_spec,order,degree,class_count,center_order,abelian,"
           "solvable,nilpotent,supersolvable\n";
    for (const auto& rep : reports)
      out << csv_escape(rep.at("group_spec").get<std::string>()) << ","
          << rep.at("order") << "," << rep.at("degree") << ","
          << rep.at("class_count") << "," << rep.at("center_order") << ","
          << rep.at("abelian") << "," << rep.at("solvable") << ","
          << rep.at("nilpotent") << "," << rep.at("supersolvable") << "\n";
    return out.str();
  }
  for (const auto& rep : reports) out << rep.dump() << "\n";
  return out.str();
}

std::string render_jsonl(const RunConfig& c, const nlohmann::json& doc) {
  std::ostringstream out;
  const auto& rep = doc.at("reports").at(0);
  const char* key = c.question == "open4" ? "records" : "data";
  for (const auto& r : rep.at(key)) out << r.dump() << "\n";
  return out.str();
}

}  // namespace

RunResult run(const RunConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  nlohmann::json reports = nlohmann::json::array();
  int exit_code = 0;

  switch (c.command) {
    case Command::info:
      for (const CatalogEntry& e : resolve_groups(c))
        reports.push_back(info_report(e));
      break;
    case Command::classes:
      for (const CatalogEntry& e : resolve_groups(c))
        reports.push_back(classes_report(e));
      break;
    case Command::eta:
      for (const CatalogEntry& e : resolve_groups(c))
        reports.push_back(eta_report(e, c));
      break;
    case Command::verify: {
      for (VerificationReport& r : run_verify(c, resolve_groups(c))) {
        if (!r.pass()) exit_code = 1;
        reports.push_back(r);
      }
      break;
    }
    case Command::reproduce: {
      VerificationReport r;
      if (c.example == "2.2") {
        if (c.m < 2) throw Error("reproduce --example 2.2 needs --m M (>= 2)");
        r = reproduce_example_2_2(c.m, c.max_order);
      } else if (c.example == "3.2") {
        if (c.p < 3) throw Error("reproduce --example 3.2 needs --p P (odd prime)");
        r = reproduce_example_3_2(c.p);
      } else if (c.example == "remark4") {
        r = reproduce_remark_4();
      } else {
        throw Error("unknown example: " + c.example +
                    " (expected 2.2, 3.2 or remark4)");
      }
      if (!r.pass()) exit_code = 1;
      reports.push_back(r);
      break;
    }
    case Command::scan: {
      std::vector<CatalogEntry> gs = resolve_groups(c);
      if (c.question == "open4") {
        OpenQuestionScan scan = open_question_scan(gs);
        if (!scan.sound()) exit_code = 1;
        reports.push_back(scan);
      } else if (c.question == "conjecture") {
        reports.push_back(conjecture_scan(gs));
      } else {
        throw Error("unknown question: " + c.question +
                    " (expected open4 or conjecture)");
      }
      break;
    }
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  RunResult result;
  result.exit_code = exit_code;
  result.document = nlohmann::json{{"schema_version", 1},
                                   {"command", to_string(c.command)},
                                   {"config", config_to_json(c)},
                                   {"reports", reports},
                                   {"wall_time_ms", elapsed.count()}};
  if (c.format == "json")
    result.rendered = result.document.dump(2) + "\n";
  else if (c.format == "csv")
    result.rendered = render_csv(c, result.document);
  else if (c.format == "text")
    result.rendered = render_text(result.document);
  else if (c.format == "jsonl" && c.command == Command::scan)
    result.rendered = render_jsonl(c, result.document);
  else
    throw Error("unknown output format: " + c.format);
  return result;
}

}  // namespace cpl
