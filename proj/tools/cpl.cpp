#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cpl/errors.hpp"
#include "cpl/runner.hpp"

namespace {

std::size_t guard_from_env() {
  if (const char* env = std::getenv("CPL_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "cpl: ignoring malformed CPL_MAX_ORDER=" << env << "\n";
  }
  return cpl::kDefaultMaxOrder;
}

void add_group_sources(CLI::App* sub, cpl::RunConfig& cfg, bool positional) {
  if (positional)
    sub->add_option("spec", cfg.group_specs, "group spec expression(s)");
  sub->add_option("--group", cfg.group_specs, "group spec expression");
  sub->add_option("--from", cfg.input_files, "generator JSON file");
  sub->add_option("--catalog", cfg.catalog_profile, "catalog profile")
      ->check(CLI::IsMember({"smoke", "full"}));
}

void add_output_options(CLI::App* sub, cpl::RunConfig& cfg,
                        bool allow_jsonl = false) {
  std::vector<std::string> formats = {"json", "csv", "text"};
  if (allow_jsonl) formats.push_back("jsonl");
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember(formats));
  sub->add_option("-o,--output", cfg.output_path,
                  "write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group conjugacy-class computations and verification"};
  app.require_subcommand(1);

  cpl::RunConfig cfg;
  cfg.max_order = guard_from_env();
  app.add_option("--max-order", cfg.max_order,
                 "override the group order guard (default 32768)");

  CLI::App* info = app.add_subcommand("info", "order, classes, series summary");
  add_group_sources(info, cfg, true);
  add_output_options(info, cfg);

  CLI::App* classes = app.add_subcommand("classes", "list conjugacy classes");
  add_group_sources(classes, cfg, true);
  add_output_options(classes, cfg);

  CLI::App* eta = app.add_subcommand("eta", "class product decomposition");
  add_group_sources(eta, cfg, true);
  eta->add_option("--rep-order", cfg.rep_order,
                  "pick the first class whose representative has this order");
  eta->add_option("--rep-index", cfg.rep_index, "pick class A by index");
  eta->add_flag("--with-inverse", cfg.with_inverse, "B = A^-1");
  eta->add_option("--b-rep-index", cfg.b_rep_index,
                  "pick class B by index (default B = A)");
  add_output_options(eta, cfg);

  CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("--theorem", cfg.theorem, "A|B|T2.4|L4.1|T4.2|ETA_PGROUP")
      ->required();
  verify->add_option("--union-depth", cfg.union_depth,
                     "theorem A: 1 = class pairs, 2 = add two-class unions")
      ->check(CLI::Range(1, 2));
  add_group_sources(verify, cfg, false);
  add_output_options(verify, cfg);

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "re-derive a worked example");
  reproduce->add_option("--example", cfg.example, "2.2|3.2|remark4")
      ->required();
  reproduce->add_option("--m", cfg.m, "quotient order for example 2.2");
  reproduce->add_option("--p", cfg.p, "prime for example 3.2");
  add_output_options(reproduce, cfg);

  CLI::App* scan = app.add_subcommand("scan", "exploratory catalog sweep");
  scan->add_option("--question", cfg.question, "open4|conjecture")->required();
  add_group_sources(scan, cfg, false);
  add_output_options(scan, cfg, /*allow_jsonl=*/true);

  CLI11_PARSE(app, argc, argv);

  if (info->parsed()) cfg.command = cpl::Command::info;
  else if (classes->parsed()) cfg.command = cpl::Command::classes;
  else if (eta->parsed()) cfg.command = cpl::Command::eta;
  else if (verify->parsed()) cfg.command = cpl::Command::verify;
  else if (reproduce->parsed()) cfg.command = cpl::Command::reproduce;
  else if (scan->parsed()) cfg.command = cpl::Command::scan;

  try {
    cpl::RunResult result = cpl::run(cfg);
    if (cfg.output_path.empty()) {
      std::cout << result.rendered;
    } else {
      std::ofstream out(cfg.output_path);
      if (!out) {
        std::cerr << "cpl: cannot write " << cfg.output_path << "\n";
        return 2;
      }
      out << result.rendered;
    }
    return result.exit_code;
  } catch (const cpl::Error& e) {
    std::cerr << "cpl: " << e.what() << "\n";
    return 2;
  }
}
