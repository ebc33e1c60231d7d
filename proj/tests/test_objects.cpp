#include <doctest.h>

#include <algorithm>

#include "taskcheck/enumerate.hpp"
#include "taskcheck/errors.hpp"
#include "taskcheck/json_core.hpp"
#include "taskcheck/objects.hpp"
#include "taskcheck/task_library.hpp"

using namespace taskcheck;

namespace {

std::vector<Pid> first_pids(int n) {
  std::vector<Pid> pids;
  for (int i = 1; i <= n; ++i) pids.push_back(i);
  return pids;
}

// Runs one invocation and returns the state reached through the branch with
// the given output (nullopt for void).
ObjectState step_to(const SeqObject& o, const ObjectState& s, const Invocation& inv,
                    const std::optional<Value>& output) {
  for (const Branch& br : o.step_or_throw(s, inv)) {
    if (br.response.output == output) return br.next;
  }
  throw Error("branch with requested output not found");
}

std::vector<Value> get_outputs(const SeqObject& o, const ObjectState& s, Pid pid) {
  std::vector<Value> outputs;
  for (const Branch& br : o.step(s, Invocation{OpKind::get, pid, std::nullopt}))
    outputs.push_back(*br.response.output);
  std::sort(outputs.begin(), outputs.end());
  return outputs;
}

Invocation set_inv(Pid pid) { return Invocation{OpKind::set, pid, Value(pid)}; }

}  // namespace

TEST_CASE("generic splitter object: solo get is forced to stop") {
  auto obj = generic_setget_object(splitter_task({1, 2, 3}));
  ObjectState s = step_to(*obj, obj->initial_state(), set_inv(1), std::nullopt);
  CHECK(get_outputs(*obj, s, 1) == std::vector<Value>{kStop});
}

TEST_CASE("generic splitter object: full participation opens all three directions") {
  auto obj = generic_setget_object(splitter_task({1, 2, 3}));
  ObjectState s = obj->initial_state();
  for (Pid p : {1, 2, 3}) s = step_to(*obj, s, set_inv(p), std::nullopt);
  auto outputs = get_outputs(*obj, s, 1);
  std::vector<Value> expected{kStop, kDown, kRight};
  std::sort(expected.begin(), expected.end());
  CHECK(outputs == expected);
}

TEST_CASE("generic object rejects a second set and a get before set") {
  auto obj = generic_setget_object(splitter_task({1, 2}));
  ObjectState s = step_to(*obj, obj->initial_state(), set_inv(1), std::nullopt);
  CHECK(obj->step(s, set_inv(1)).empty());
  CHECK_THROWS_AS(obj->step_or_throw(s, set_inv(1)), PreconditionError);
  CHECK_THROWS_AS(
      obj->step_or_throw(obj->initial_state(), Invocation{OpKind::get, 1, std::nullopt}),
      PreconditionError);
}

TEST_CASE("generic object refuses invalid tasks") {
  Task broken = splitter_task({1, 2});
  broken.delta.erase(Simplex{{1, Value(1)}});
  CHECK_THROWS_AS(generic_setget_object(broken), InvalidParameter);
}

TEST_CASE("adhoc splitter follows the direction bounds") {
  auto obj = adhoc_splitter_object({1, 2});
  ObjectState s = step_to(*obj, obj->initial_state(), set_inv(1), std::nullopt);

  SUBCASE("lone participant must stop") {
    CHECK(get_outputs(*obj, s, 1) == std::vector<Value>{kStop});
  }

  SUBCASE("after someone stopped, the rest split between down and right") {
    s = step_to(*obj, s, set_inv(2), std::nullopt);
    s = step_to(*obj, s, Invocation{OpKind::get, 1, std::nullopt}, kStop);
    auto outputs = get_outputs(*obj, s, 2);
    std::vector<Value> expected{kDown, kRight};
    std::sort(expected.begin(), expected.end());
    CHECK(outputs == expected);
  }

  SUBCASE("get before set is disabled") {
    CHECK_THROWS_AS(
        obj->step_or_throw(obj->initial_state(), Invocation{OpKind::get, 2, std::nullopt}),
        PreconditionError);
  }
}

TEST_CASE("adhoc exchanger matches pairs and answers partners deterministically") {
  auto obj = adhoc_exchanger_object({1, 2});
  ObjectState s = obj->initial_state();
  s = step_to(*obj, s, set_inv(1), std::nullopt);
  s = step_to(*obj, s, set_inv(2), std::nullopt);

  SUBCASE("a get may take bot or any free partner") {
    auto outputs = get_outputs(*obj, s, 1);
    std::vector<Value> expected{Value::bot(), Value(2)};
    CHECK(outputs == expected);
  }

  SUBCASE("the partner of a recorded match is forced") {
    s = step_to(*obj, s, Invocation{OpKind::get, 1, std::nullopt}, Value(2));
    CHECK(get_outputs(*obj, s, 2) == std::vector<Value>{Value(1)});
  }

  SUBCASE("after a bot match the partner is gone") {
    s = step_to(*obj, s, Invocation{OpKind::get, 1, std::nullopt}, Value::bot());
    CHECK(get_outputs(*obj, s, 2) == std::vector<Value>{Value::bot()});
  }
}

TEST_CASE("solo exchanger participant can only get bot") {
  auto obj = adhoc_exchanger_object({1});
  ObjectState s = step_to(*obj, obj->initial_state(), set_inv(1), std::nullopt);
  CHECK(get_outputs(*obj, s, 1) == std::vector<Value>{Value::bot()});
}

TEST_CASE("response-determinism is enforced") {
  Branch a{ObjectState{{"x", 1}}, Response{OpKind::get, 1, kStop}};
  Branch b{ObjectState{{"x", 2}}, Response{OpKind::get, 1, kStop}};
  CHECK_THROWS_AS(finalize_branches({a, b}), Error);
  CHECK(finalize_branches({a, a}).size() == 1);
}

TEST_CASE("sspec of the solo splitter") {
  auto obj = adhoc_splitter_object({1});
  ExecSet sspec = sspec_enumerate(*obj);
  CHECK(sspec.count(SeqExecution{}) == 1);
  CHECK(sspec.size() == 3);  // empty, set, set-then-stop
  SeqExecution full{
      SeqStep{set_inv(1), Response{OpKind::set, 1, std::nullopt}},
      SeqStep{Invocation{OpKind::get, 1, std::nullopt}, Response{OpKind::get, 1, kStop}},
  };
  CHECK(sspec.count(full) == 1);
}

TEST_CASE("sspec of the two-process exchanger contains the swap") {
  auto obj = adhoc_exchanger_object({1, 2});
  ExecSet sspec = sspec_enumerate(*obj);
  SeqExecution swap{
      SeqStep{set_inv(1), Response{OpKind::set, 1, std::nullopt}},
      SeqStep{set_inv(2), Response{OpKind::set, 2, std::nullopt}},
      SeqStep{Invocation{OpKind::get, 1, std::nullopt}, Response{OpKind::get, 1, Value(2)}},
      SeqStep{Invocation{OpKind::get, 2, std::nullopt}, Response{OpKind::get, 2, Value(1)}},
  };
  CHECK(sspec.count(swap) == 1);
}

TEST_CASE("sspec enumeration is prefix-closed") {
  auto obj = adhoc_splitter_object({1, 2});
  ExecSet sspec = sspec_enumerate(*obj);
  for (const SeqExecution& exec : sspec) {
    SeqExecution prefix = exec;
    while (!prefix.empty()) {
      prefix.pop_back();
      CHECK(sspec.count(prefix) == 1);
    }
  }
}

TEST_CASE("objects are equivalent to themselves") {
  auto obj = adhoc_splitter_object({1, 2});
  CHECK(objects_equivalent(*obj, *obj).equivalent);
}

TEST_CASE("adhoc splitter matches the generic construction") {
  for (int n = 1; n <= 3; ++n) {
    auto pids = first_pids(n);
    auto adhoc = adhoc_splitter_object(pids);
    auto generic = generic_setget_object(splitter_task(pids));
    auto result = objects_equivalent(*adhoc, *generic);
    CHECK(result.equivalent);
  }
}

TEST_CASE("adhoc exchanger matches the generic construction") {
  for (int n = 1; n <= 3; ++n) {
    auto pids = first_pids(n);
    auto result = objects_equivalent(*adhoc_exchanger_object(pids),
                                     *generic_setget_object(exchanger_task(pids)));
    CHECK(result.equivalent);
  }
}

TEST_CASE("splitter and exchanger differ, with a shortest counterexample") {
  auto splitter = adhoc_splitter_object({1, 2});
  auto exchanger = adhoc_exchanger_object({1, 2});
  auto result = objects_equivalent(*splitter, *exchanger);
  CHECK_FALSE(result.equivalent);
  REQUIRE(result.counterexample.has_value());
  CHECK(result.counterexample->size() <= 4);
}

TEST_CASE("the generic object is correct w.r.t. its task") {
  for (int n = 1; n <= 3; ++n) {
    auto pids = first_pids(n);
    for (const Task& t : {splitter_task(pids), exchanger_task(pids),
                          test_and_set_task(pids), adaptive_renaming_task(pids)}) {
      auto result = correct_wrt_task(*generic_setget_object(t), t);
      CHECK(result.correct);
    }
  }
}

TEST_CASE("an object that always answers stop is incorrect for the splitter") {
  Task t = splitter_task({1, 2});
  auto liar = constant_answer_object({1, 2}, kStop);
  auto result = correct_wrt_task(*liar, t);
  CHECK_FALSE(result.correct);
  REQUIRE(result.counterexample.has_value());
  // the offending execution ends with a second stop
  int stops = 0;
  for (const SeqStep& step : *result.counterexample)
    stops += step.res.output == std::optional<Value>(kStop) ? 1 : 0;
  CHECK(stops == 2);
}

TEST_CASE("reachable generic states keep sigma in inputs and tau in delta(sigma)") {
  for (int n = 1; n <= 3; ++n) {
    auto pids = first_pids(n);
    for (const Task& t :
         {splitter_task(pids), exchanger_task(pids), test_and_set_task(pids)}) {
      auto obj = generic_setget_object(t);
      for (const ObjectState& s : reachable_states(*obj)) {
        Simplex sigma = simplex_from_json(s.at("sigma"));
        Simplex tau = simplex_from_json(s.at("tau"));
        if (!sigma.empty()) CHECK(t.inputs.contains(sigma));
        CHECK(t.delta_contains(sigma, tau));
        for (Pid id : tau.ids()) CHECK(sigma.has_pid(id));
      }
    }
  }
}
