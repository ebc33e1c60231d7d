// Command-line front door: task validation and export, object synthesis,
// equivalence/correctness/completeness checks, valid-execution enumeration,
// sequentializability verdicts and model-checking runs. Every result is a
// JSON artifact; text output is a rendering of the same JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "taskcheck/json_io.hpp"
#include "taskcheck/objects.hpp"
#include "taskcheck/task_library.hpp"

namespace tc = taskcheck;

namespace {

// Exit codes: 0 pass/true verdict, 1 property violation, 2 usage/IO error,
// 3 enumeration cap exceeded.
constexpr int exit_pass = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_explosion = 3;

struct CommonOpts {
  std::string format = "text";
  std::string out_path;
  std::uint64_t state_cap = tc::kDefaultCap;
  int workers = 1;  // accepted for interface compatibility; runs are
                    // deterministic and independent of this value
};

struct TaskSelector {
  std::string builtin;
  std::string file;
  int n = 2;
  int k = 1;
  std::string domain;  // comma-separated values for k-set agreement
};

std::vector<tc::Pid> make_pids(int n) {
  if (n < 1) throw tc::InvalidParameter("--n must be at least 1");
  std::vector<tc::Pid> pids;
  for (int i = 1; i <= n; ++i) pids.push_back(i);
  return pids;
}

std::vector<tc::Value> parse_domain(const std::string& csv, int n) {
  std::vector<tc::Value> out;
  if (csv.empty()) {
    for (int i = 1; i <= n; ++i) out.push_back(tc::Value(i));
    return out;
  }
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string token = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!token.empty()) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used == token.size())
          out.push_back(tc::Value(static_cast<std::int64_t>(v)));
        else
          out.push_back(tc::Value(token));
      } catch (const std::exception&) {
        out.push_back(tc::Value(token));
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Raised when a task file parses but breaks the task axioms; the caller
// exits with the violation report and the property-violation status.
struct TaskAxiomsViolated {
  tc::ValidityReport report;
  std::string path;
};

tc::Task load_task_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tc::SchemaError("cannot open task file '" + path + "'");
  tc::Json j = tc::Json::parse(in, nullptr, true, true);
  tc::Task t = tc::task_from_json(j);
  auto report = tc::validate_task(t);
  if (!report.valid()) throw TaskAxiomsViolated{std::move(report), path};
  return t;
}

tc::Task select_task(const TaskSelector& sel) {
  if (!sel.file.empty()) return load_task_file(sel.file);
  auto pids = make_pids(sel.n);
  if (sel.builtin == "splitter") return tc::splitter_task(pids);
  if (sel.builtin == "exchanger") return tc::exchanger_task(pids);
  if (sel.builtin == "test-and-set") return tc::test_and_set_task(pids);
  if (sel.builtin == "renaming") return tc::adaptive_renaming_task(pids);
  if (sel.builtin == "k-set-agreement")
    return tc::k_set_agreement_task(pids, sel.k, parse_domain(sel.domain, sel.n));
  throw tc::InvalidParameter("unknown task '" + sel.builtin +
                             "' (expected splitter, exchanger, test-and-set, "
                             "renaming or k-set-agreement)");
}

std::shared_ptr<tc::SeqObject> select_object(const std::string& which, const tc::Task& t,
                                             std::uint64_t cap) {
  if (which == "fig3" || which == "generic") return tc::generic_setget_object(t);
  if (which == "thm1" || which == "state-per-execution") return tc::state_per_execution_object(t, cap);
  if (which == "adhoc") {
    if (t.name == "splitter") return tc::adhoc_splitter_object(t.pids);
    if (t.name == "exchanger") return tc::adhoc_exchanger_object(t.pids);
    throw tc::InvalidParameter("no ad-hoc object for task '" + t.name + "'");
  }
  throw tc::InvalidParameter("unknown object '" + which +
                             "' (expected adhoc, fig3 or thm1)");
}

void emit(const CommonOpts& common, const tc::Json& artifact,
          const std::string& text_rendering) {
  if (!common.out_path.empty()) {
    std::ofstream out(common.out_path);
    if (!out) throw tc::SchemaError("cannot write '" + common.out_path + "'");
    out << artifact.dump(2) << "\n";
  }
  if (common.format == "json")
    std::cout << artifact.dump(2) << "\n";
  else
    std::cout << text_rendering;
}

std::string render_validity(const tc::Task& t, const tc::Json& j) {
  std::string out = "task '" + t.name + "' over " + std::to_string(t.pids.size()) +
                    " processes: ";
  if (j.at("valid").get<bool>()) return out + "valid\n";
  out += "INVALID\n";
  for (const auto& v : j.at("violations"))
    out += "  [" + v.at("rule").get<std::string>() + "] " +
           v.at("message").get<std::string>() + "\n";
  return out;
}

std::string render_verdict_line(const std::string& what, bool ok,
                                const tc::Json& artifact, const char* cex_field) {
  std::string out = what + ": " + (ok ? "yes" : "NO") + "\n";
  if (!ok && artifact.contains(cex_field) && !artifact.at(cex_field).is_null())
    out += "counterexample: " + artifact.at(cex_field).dump() + "\n";
  return out;
}

std::string render_mc(const tc::Json& j) {
  std::string out = j.at("check").get<std::string>() + " n=" +
                    std::to_string(j.at("n").get<int>()) + " variant=" +
                    j.at("variant").get<std::string>();
  if (j.at("crashes").get<bool>()) out += " +crashes";
  if (j.at("labeling").get<std::string>() != "adaptive")
    out += " labeling=" + j.at("labeling").get<std::string>();
  if (j.at("mutation").get<std::string>() != "none")
    out += " mutation=" + j.at("mutation").get<std::string>();
  out += "\n";
  for (const auto& p : j.at("properties"))
    out += "  " + p.at("property").get<std::string>() + ": " +
           (p.at("pass").get<bool>() ? "pass" : "FAIL") + "\n";
  out += "  states explored: " + std::to_string(j.at("states_explored").get<std::uint64_t>()) +
         ", max depth: " + std::to_string(j.at("max_depth").get<int>()) + "\n";
  if (!j.at("violation").is_null()) {
    out += "  first violation (" + j.at("violation").at("property").get<std::string>() +
           "):\n";
    for (const auto& step : j.at("violation").at("trace"))
      out += "    p" + std::to_string(step.at("pid").get<tc::Pid>()) + ": " +
             step.at("action").get<std::string>() + "\n";
  }
  return out;
}

void add_task_flags(CLI::App* cmd, TaskSelector& sel, bool allow_file = true) {
  auto* builtin = cmd->add_option("--task", sel.builtin,
                                  "builtin task: splitter, exchanger, test-and-set, "
                                  "renaming, k-set-agreement");
  cmd->add_option("--n", sel.n, "number of processes (pids 1..n)");
  cmd->add_option("--k", sel.k, "agreement parameter for k-set-agreement");
  cmd->add_option("--domain", sel.domain,
                  "comma-separated input domain for k-set-agreement (default 1..n)");
  if (allow_file) {
    auto* file = cmd->add_option("--file", sel.file, "task JSON file");
    file->excludes(builtin);
    builtin->excludes(file);
  } else {
    builtin->required();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for one-shot concurrent tasks, set/get "
               "sequential objects and splitter-grid renaming"};
  app.require_subcommand(1);
  app.fallthrough();  // --out/--format/--state-cap may follow the subcommand

  CommonOpts common;
  if (const char* cap_env = std::getenv("TASKCHECK_STATE_CAP"))
    common.state_cap = std::strtoull(cap_env, nullptr, 10);
  app.add_option("--format", common.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", common.out_path, "write the JSON artifact to this path");
  app.add_option("--state-cap", common.state_cap,
                 "enumeration cap (env TASKCHECK_STATE_CAP)");
  app.add_option("--workers", common.workers,
                 "worker count; results are deterministic and identical for any value")
      ->check(CLI::PositiveNumber);

  int exit_code = exit_pass;

  // task validate / task export
  auto* task_cmd = app.add_subcommand("task", "validate or export a task");
  task_cmd->require_subcommand(1);
  TaskSelector validate_sel;
  auto* validate_cmd = task_cmd->add_subcommand("validate", "check the task axioms");
  add_task_flags(validate_cmd, validate_sel);
  validate_cmd->callback([&] {
    // Axiom violations in a task file should surface as a report here, not
    // as a load failure, so bypass the validating loader.
    tc::Task t;
    if (!validate_sel.file.empty()) {
      std::ifstream in(validate_sel.file);
      if (!in) throw tc::SchemaError("cannot open task file '" + validate_sel.file + "'");
      t = tc::task_from_json(tc::Json::parse(in, nullptr, true, true));
    } else {
      t = select_task(validate_sel);
    }
    auto report = tc::validate_task(t);
    tc::Json j = tc::validity_report_to_json(report);
    emit(common, j, render_validity(t, j));
    exit_code = report.valid() ? exit_pass : exit_violation;
  });

  TaskSelector export_sel;
  auto* export_cmd = task_cmd->add_subcommand("export", "write the task as JSON");
  add_task_flags(export_cmd, export_sel);
  export_cmd->callback([&] {
    tc::Task t = select_task(export_sel);
    tc::Json j = tc::task_to_json(t);
    emit(common, j, "task '" + t.name + "' exported\n");
  });

  // synth
  TaskSelector synth_sel;
  std::string synth_method = "fig3";
  auto* synth_cmd = app.add_subcommand("synth", "synthesize the set/get object of a task");
  add_task_flags(synth_cmd, synth_sel);
  synth_cmd->add_option("--method", synth_method, "construction: fig3 or thm1")
      ->check(CLI::IsMember({"fig3", "thm1"}));
  synth_cmd->callback([&] {
    tc::Task t = select_task(synth_sel);
    auto object = select_object(synth_method, t, common.state_cap);
    tc::Json j = tc::automaton_to_json(*object, common.state_cap);
    emit(common, j,
         "automaton '" + object->kind() + "': " +
             std::to_string(j.at("states").size()) + " states, " +
             std::to_string(j.at("transitions").size()) + " transitions\n");
  });

  // eq
  TaskSelector eq_sel;
  std::string eq_left = "adhoc", eq_right = "fig3";
  auto* eq_cmd = app.add_subcommand("eq", "compare two objects' sequential specifications");
  add_task_flags(eq_cmd, eq_sel);
  eq_cmd->add_option("--left", eq_left, "adhoc, fig3 or thm1");
  eq_cmd->add_option("--right", eq_right, "adhoc, fig3 or thm1");
  eq_cmd->callback([&] {
    tc::Task t = select_task(eq_sel);
    auto left = select_object(eq_left, t, common.state_cap);
    auto right = select_object(eq_right, t, common.state_cap);
    auto result = tc::objects_equivalent(*left, *right, common.state_cap);
    tc::Json j = tc::equivalence_to_json(result);
    emit(common, j,
         render_verdict_line("equivalent(" + left->kind() + ", " + right->kind() + ")",
                             result.equivalent, j, "counterexample"));
    exit_code = result.equivalent ? exit_pass : exit_violation;
  });

  // correct / complete
  TaskSelector correct_sel;
  std::string correct_obj = "fig3";
  auto* correct_cmd =
      app.add_subcommand("correct", "object outputs stay inside the task's carrier");
  add_task_flags(correct_cmd, correct_sel);
  correct_cmd->add_option("--object", correct_obj, "adhoc, fig3 or thm1");
  correct_cmd->callback([&] {
    tc::Task t = select_task(correct_sel);
    auto object = select_object(correct_obj, t, common.state_cap);
    auto result = tc::correct_wrt_task(*object, t, common.state_cap);
    tc::Json j = tc::correctness_to_json(result);
    emit(common, j,
         render_verdict_line("correct(" + object->kind() + ", " + t.name + ")",
                             result.correct, j, "counterexample"));
    exit_code = result.correct ? exit_pass : exit_violation;
  });

  TaskSelector complete_sel;
  std::string complete_obj = "fig3";
  auto* complete_cmd =
      app.add_subcommand("complete", "object admits every valid execution of the task");
  add_task_flags(complete_cmd, complete_sel);
  complete_cmd->add_option("--object", complete_obj, "adhoc, fig3 or thm1");
  complete_cmd->callback([&] {
    tc::Task t = select_task(complete_sel);
    auto object = select_object(complete_obj, t, common.state_cap);
    auto result = tc::complete_wrt_task(*object, t, common.state_cap);
    tc::Json j = tc::completeness_to_json(result);
    emit(common, j,
         render_verdict_line("complete(" + object->kind() + ", " + t.name + ")",
                             result.complete, j, "counterexample"));
    exit_code = result.complete ? exit_pass : exit_violation;
  });

  // ve
  TaskSelector ve_sel;
  auto* ve_cmd = app.add_subcommand("ve", "enumerate the valid executions of a task");
  add_task_flags(ve_cmd, ve_sel);
  ve_cmd->callback([&] {
    tc::Task t = select_task(ve_sel);
    auto histories = tc::enumerate_VE_task(t, common.state_cap);
    tc::Json j = tc::ve_to_json(histories);
    emit(common, j,
         "task '" + t.name + "': " + std::to_string(histories.size()) +
             " valid executions\n");
  });

  // check-history
  TaskSelector check_sel;
  std::string history_path;
  auto* check_cmd = app.add_subcommand("check-history", "check a history against a task");
  check_cmd->add_option("history", history_path, "history JSON file")->required();
  add_task_flags(check_cmd, check_sel);
  check_cmd->callback([&] {
    tc::Task t = select_task(check_sel);
    std::ifstream in(history_path);
    if (!in) throw tc::SchemaError("cannot open history file '" + history_path + "'");
    tc::History h = tc::history_from_json(tc::Json::parse(in, nullptr, true, true));
    auto result = tc::satisfies_task(h, t);
    tc::Json j = tc::satisfies_to_json(result);
    std::string text = result.satisfies
                           ? "history satisfies task '" + t.name + "'\n"
                           : "history violates task '" + t.name + "' at prefix length " +
                                 std::to_string(result.failing_prefix) + "\n";
    emit(common, j, text);
    exit_code = result.satisfies ? exit_pass : exit_violation;
  });

  // sequentializable
  TaskSelector seq_sel;
  std::string candidate_out;
  auto* seq_cmd = app.add_subcommand(
      "sequentializable", "can a single-operation sequential object define the task?");
  add_task_flags(seq_cmd, seq_sel);
  seq_cmd->add_option("--candidate-out", candidate_out,
                      "write the candidate automaton to this path");
  seq_cmd->callback([&] {
    tc::Task t = select_task(seq_sel);
    auto verdict = tc::sequentializable_single_op(t, common.state_cap);
    tc::Json j = tc::sequentializability_to_json(verdict);
    if (!candidate_out.empty()) {
      std::ofstream out(candidate_out);
      if (!out) throw tc::SchemaError("cannot write '" + candidate_out + "'");
      out << tc::automaton_to_json(*verdict.candidate, common.state_cap).dump(2) << "\n";
    }
    emit(common, j,
         render_verdict_line("sequentializable(" + t.name + ")", verdict.sequential, j,
                             "counterexample"));
    exit_code = verdict.sequential ? exit_pass : exit_violation;
  });

  // bijection
  TaskSelector bij_sel;
  std::string bij_obj = "fig3";
  auto* bij_cmd = app.add_subcommand(
      "bijection", "event-wise bijection between task executions and object executions");
  add_task_flags(bij_cmd, bij_sel);
  bij_cmd->add_option("--object", bij_obj, "adhoc, fig3 or thm1");
  bij_cmd->callback([&] {
    tc::Task t = select_task(bij_sel);
    auto object = select_object(bij_obj, t, common.state_cap);
    auto result = tc::check_bijection(t, *object, common.state_cap);
    tc::Json j = tc::bijection_to_json(result);
    std::string text =
        render_verdict_line("bijection(" + t.name + ", " + object->kind() + ")",
                            result.bijection, j, "unmatched_history");
    if (result.unmatched_execution)
      text += "unmatched execution: " + j.at("unmatched_execution").dump() + "\n";
    emit(common, j, text);
    exit_code = result.bijection ? exit_pass : exit_violation;
  });

  // mc renaming / mc rw-splitter
  auto* mc_cmd = app.add_subcommand("mc", "exhaustive model checking");
  mc_cmd->require_subcommand(1);

  tc::McOptions mc_opts;
  std::string mc_variant = "setget", mc_labeling = "adaptive", mc_mutation = "none";
  bool mc_no_subsets = false;
  auto* ren_cmd = mc_cmd->add_subcommand("renaming", "splitter-grid renaming");
  ren_cmd->add_option("--n", mc_opts.n, "number of processes")->required();
  ren_cmd->add_option("--variant", mc_variant, "setget or registers")
      ->check(CLI::IsMember({"setget", "registers"}));
  ren_cmd->add_flag("--crashes", mc_opts.crashes, "inject crash steps");
  ren_cmd->add_flag("--no-subsets", mc_no_subsets,
                    "check only the full participant set");
  ren_cmd->add_option("--labeling", mc_labeling, "adaptive or original")
      ->check(CLI::IsMember({"adaptive", "original"}));
  ren_cmd->add_option("--mutation", mc_mutation,
                      "seeded fault: none, allow-extra-stop (setget), "
                      "skip-closed-write or skip-last-check (registers)");
  ren_cmd->callback([&] {
    mc_opts.variant = mc_variant == "setget" ? tc::McVariant::setget
                                             : tc::McVariant::registers;
    mc_opts.labeling = mc_labeling == "adaptive" ? tc::GridLabeling::adaptive
                                                 : tc::GridLabeling::original;
    mc_opts.subsets = !mc_no_subsets;
    mc_opts.state_cap = common.state_cap;
    if (mc_mutation == "allow-extra-stop")
      mc_opts.splitter_mutation = tc::SplitterObjectMutation::allow_extra_stop;
    else if (mc_mutation == "skip-closed-write")
      mc_opts.register_mutation = tc::RwMutation::skip_closed_write;
    else if (mc_mutation == "skip-last-check")
      mc_opts.register_mutation = tc::RwMutation::skip_last_check;
    else if (mc_mutation != "none")
      throw tc::InvalidParameter("unknown mutation '" + mc_mutation + "'");
    auto report = tc::model_check_renaming(mc_opts);
    tc::Json j = tc::mc_report_to_json(report);
    emit(common, j, render_mc(j));
    exit_code = report.pass() ? exit_pass : exit_violation;
  });

  int rw_n = 2;
  std::string rw_mutation = "none";
  auto* rw_cmd = mc_cmd->add_subcommand("rw-splitter", "read/write splitter on one cell");
  rw_cmd->add_option("--n", rw_n, "number of processes")->required();
  rw_cmd->add_option("--mutation", rw_mutation,
                     "seeded fault: none, skip-closed-write or skip-last-check");
  rw_cmd->callback([&] {
    tc::RwMutation mutation = tc::RwMutation::none;
    if (rw_mutation == "skip-closed-write")
      mutation = tc::RwMutation::skip_closed_write;
    else if (rw_mutation == "skip-last-check")
      mutation = tc::RwMutation::skip_last_check;
    else if (rw_mutation != "none")
      throw tc::InvalidParameter("unknown mutation '" + rw_mutation + "'");
    auto report = tc::check_rw_splitter(rw_n, mutation, common.state_cap);
    tc::Json j = tc::mc_report_to_json(report);
    emit(common, j, render_mc(j));
    exit_code = report.pass() ? exit_pass : exit_violation;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_pass : exit_usage;
  } catch (const TaskAxiomsViolated& e) {
    std::cerr << "task file '" << e.path << "' violates the task axioms:\n"
              << tc::validity_report_to_json(e.report).dump(2) << "\n";
    return exit_violation;
  } catch (const tc::ExplosionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_explosion;
  } catch (const tc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_code;
}
