#include <doctest.h>

#include "taskcheck/errors.hpp"
#include "taskcheck/json_io.hpp"
#include "taskcheck/renaming.hpp"
#include "taskcheck/task_library.hpp"

using namespace taskcheck;

TEST_CASE("grid layout and adaptive labeling") {
  Grid g1(1, GridLabeling::adaptive);
  CHECK(g1.position_count() == 1);
  CHECK(g1.name_at({0, 0}) == 1);

  Grid g(3, GridLabeling::adaptive);
  CHECK(g.name_at({0, 0}) == 1);
  CHECK(g.name_at({1, 0}) == 2);
  CHECK(g.name_at({0, 1}) == 3);
  CHECK(g.name_at({2, 0}) == 4);
  CHECK(g.name_at({1, 1}) == 5);
  CHECK(g.name_at({0, 2}) == 6);

  Grid g5(5, GridLabeling::adaptive);
  CHECK(g5.position_count() == 15);
  CHECK(g5.positions().size() == 15);

  CHECK_THROWS_AS(Grid(0, GridLabeling::adaptive), InvalidParameter);
}

TEST_CASE("both labelings assign distinct names covering the full range") {
  for (GridLabeling labeling : {GridLabeling::adaptive, GridLabeling::original}) {
    Grid g(4, labeling);
    std::set<int> names;
    for (const GridPos& p : g.positions()) {
      int name = g.name_at(p);
      CHECK(name >= 1);
      CHECK(name <= g.position_count());
      names.insert(name);
    }
    CHECK(static_cast<int>(names.size()) == g.position_count());
  }
}

TEST_CASE("renaming passes for one process: the sole runner takes name 1") {
  McOptions opts;
  opts.n = 1;
  auto report = model_check_renaming(opts);
  CHECK(report.pass());
  CHECK(report.runs.size() == 1);
  CHECK(report.states_explored > 0);
}

TEST_CASE("renaming passes for two processes, with and without crashes") {
  for (bool crashes : {false, true}) {
    McOptions opts;
    opts.n = 2;
    opts.crashes = crashes;
    auto report = model_check_renaming(opts);
    CHECK(report.pass());
    // full run plus the two singleton subsets
    CHECK(report.runs.size() == 3);
  }
}

TEST_CASE("register variant of renaming passes for two processes") {
  McOptions opts;
  opts.n = 2;
  opts.variant = McVariant::registers;
  auto report = model_check_renaming(opts);
  CHECK(report.pass());
}

TEST_CASE("a splitter that hands out extra stops breaks uniqueness") {
  McOptions opts;
  opts.n = 2;
  opts.splitter_mutation = SplitterObjectMutation::allow_extra_stop;
  auto report = model_check_renaming(opts);
  CHECK_FALSE(report.pass());
  REQUIRE(report.violation.has_value());
  const McViolation* uniq = report.find_violation("uniqueness");
  REQUIRE(uniq != nullptr);
  CHECK_FALSE(uniq->trace.empty());
  // both stops land on the same splitter, so splitting breaks too
  CHECK(report.find_violation("splitting") != nullptr);
}

TEST_CASE("exploration is deterministic across repeated runs") {
  McOptions opts;
  opts.n = 2;
  opts.crashes = true;
  auto a = mc_report_to_json(model_check_renaming(opts));
  auto b = mc_report_to_json(model_check_renaming(opts));
  CHECK(a == b);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("read/write splitter: solo run stops") {
  auto report = check_rw_splitter(1);
  CHECK(report.pass());
  // exactly one interleaving: write LAST, read CLOSED, write CLOSED, read LAST
  CHECK(report.runs[0].max_depth == 4);
}

TEST_CASE("read/write splitter passes exhaustively for two processes") {
  auto report = check_rw_splitter(2);
  CHECK(report.pass());
  CHECK(report.states_explored > 10);
}

TEST_CASE("skipping the CLOSED write lets two processes stop") {
  auto report = check_rw_splitter(2, RwMutation::skip_closed_write);
  CHECK_FALSE(report.pass());
  REQUIRE(report.violation.has_value());
  REQUIRE(report.violation->splitter_history.has_value());
  // the emitted history really does violate the splitter task
  auto check = satisfies_task(*report.violation->splitter_history, splitter_task({1, 2}));
  CHECK_FALSE(check.satisfies);
}

TEST_CASE("skipping the LAST re-check lets two processes stop") {
  auto report = check_rw_splitter(2, RwMutation::skip_last_check);
  CHECK_FALSE(report.pass());
  REQUIRE(report.violation.has_value());
  int stops = 0;
  for (const auto& step : report.violation->trace)
    stops += step.action.find("->stop") != std::string::npos ? 1 : 0;
  CHECK(stops == 2);
}

TEST_CASE("state caps surface as explosion errors") {
  McOptions opts;
  opts.n = 3;
  opts.state_cap = 10;
  CHECK_THROWS_AS(model_check_renaming(opts), ExplosionError);
}

TEST_CASE("step relation: everyone starts by setting at the top-left splitter") {
  McOptions opts;
  opts.n = 2;
  auto steps = mc_enabled_after(opts, {});
  REQUIRE(steps.size() == 2);
  CHECK(steps[0] == McTraceStep{1, "set@(0,0)"});
  CHECK(steps[1] == McTraceStep{2, "set@(0,0)"});

  opts.crashes = true;
  CHECK(mc_enabled_after(opts, {}).size() == 4);  // plus one crash per process
}

TEST_CASE("step relation: a get with two quiet participants branches three ways") {
  McOptions opts;
  opts.n = 2;
  auto steps = mc_enabled_after(opts, {{1, "set@(0,0)"}, {2, "set@(0,0)"}});
  std::vector<McTraceStep> expected{{1, "get@(0,0)->stop"}, {1, "get@(0,0)->down"},
                                    {1, "get@(0,0)->right"}, {2, "get@(0,0)->stop"},
                                    {2, "get@(0,0)->down"},  {2, "get@(0,0)->right"}};
  CHECK(steps == expected);

  // once someone went down, the down budget (at most p-1) is spent
  auto after_down =
      mc_enabled_after(opts, {{1, "set@(0,0)"}, {2, "set@(0,0)"}, {2, "get@(0,0)->down"}});
  std::vector<McTraceStep> expected_after{{1, "get@(0,0)->stop"},
                                          {1, "get@(0,0)->right"},
                                          {2, "set@(0,1)"}};
  CHECK(after_down == expected_after);
}

TEST_CASE("step relation: a right direction moves the process one column over") {
  McOptions opts;
  opts.n = 2;
  auto steps = mc_enabled_after(
      opts, {{1, "set@(0,0)"}, {2, "set@(0,0)"}, {1, "get@(0,0)->right"}});
  REQUIRE(steps.size() >= 1);
  CHECK(steps[0] == McTraceStep{1, "set@(1,0)"});
}

TEST_CASE("step relation: decided processes contribute no steps") {
  McOptions opts;
  opts.n = 1;
  auto steps = mc_enabled_after(opts, {{1, "set@(0,0)"}, {1, "get@(0,0)->stop"}});
  CHECK(steps.empty());
  // and a solo get is forced to stop
  auto solo = mc_enabled_after(opts, {{1, "set@(0,0)"}});
  REQUIRE(solo.size() == 1);
  CHECK(solo[0] == McTraceStep{1, "get@(0,0)->stop"});
}

TEST_CASE("step relation: register variant reads CLOSED after writing LAST") {
  McOptions opts;
  opts.n = 2;
  opts.variant = McVariant::registers;
  auto steps = mc_enabled_after(opts, {{1, "write-last@(0,0)"}});
  std::vector<McTraceStep> expected{{1, "read-closed@(0,0)->false"},
                                    {2, "write-last@(0,0)"}};
  CHECK(steps == expected);
  // once closed, a late reader is sent right
  auto late = mc_enabled_after(opts, {{1, "write-last@(0,0)"},
                                      {1, "read-closed@(0,0)->false"},
                                      {1, "write-closed@(0,0)"},
                                      {2, "write-last@(0,0)"}});
  std::vector<McTraceStep> expected_late{{1, "read-last@(0,0)->down"},
                                         {2, "read-closed@(0,0)->true"}};
  CHECK(late == expected_late);
}

TEST_CASE("register variant of renaming passes for three processes with crashes") {
  McOptions opts;
  opts.n = 3;
  opts.variant = McVariant::registers;
  opts.crashes = true;
  auto report = model_check_renaming(opts);
  CHECK(report.pass());
}
