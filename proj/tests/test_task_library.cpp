#include <doctest.h>

#include <algorithm>

#include "taskcheck/errors.hpp"
#include "taskcheck/task_library.hpp"

using namespace taskcheck;

namespace {

Simplex own_ids(std::vector<Pid> pids) {
  std::vector<Vertex> verts;
  for (Pid p : pids) verts.push_back({p, Value(p)});
  return Simplex(verts);
}

std::vector<Pid> first_pids(int n) {
  std::vector<Pid> pids;
  for (int i = 1; i <= n; ++i) pids.push_back(i);
  return pids;
}

}  // namespace

TEST_CASE("every library task passes validation up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    auto pids = first_pids(n);
    CHECK(validate_task(splitter_task(pids)).valid());
    CHECK(validate_task(exchanger_task(pids)).valid());
    CHECK(validate_task(test_and_set_task(pids)).valid());
    CHECK(validate_task(adaptive_renaming_task(pids)).valid());
    CHECK(validate_task(k_set_agreement_task(pids, 1, {Value(1), Value(2)})).valid());
    if (n >= 2)
      CHECK(validate_task(k_set_agreement_task(pids, 2, {Value(1), Value(2), Value(3)}))
                .valid());
  }
}

TEST_CASE("constructors reject an empty pid set") {
  CHECK_THROWS_AS(splitter_task({}), EmptyPidsError);
  CHECK_THROWS_AS(exchanger_task({}), EmptyPidsError);
  CHECK_THROWS_AS(test_and_set_task({}), EmptyPidsError);
  CHECK_THROWS_AS(adaptive_renaming_task({}), EmptyPidsError);
  CHECK_THROWS_AS(k_set_agreement_task({}, 1, {Value(1)}), EmptyPidsError);
}

TEST_CASE("splitter: solo run must stop") {
  Task t = splitter_task({1});
  const Complex& image = t.delta_at(own_ids({1}));
  CHECK(image.maximal_simplexes() == std::vector<Simplex>{Simplex{{1, kStop}}});
}

TEST_CASE("splitter: all-right triangle is not an output") {
  Task t = splitter_task({1, 2, 3});
  CHECK_FALSE(t.outputs.contains(Simplex{{1, kRight}, {2, kRight}, {3, kRight}}));
  CHECK_FALSE(t.outputs.contains(Simplex{{1, kDown}, {2, kDown}, {3, kDown}}));
  CHECK(t.outputs.contains(Simplex{{1, kDown}, {2, kDown}, {3, kRight}}));
}

TEST_CASE("splitter: the down-down-right triangle is a valid concurrent output") {
  Task t = splitter_task({1, 2, 3});
  CHECK(t.delta_contains(own_ids({1, 2, 3}),
                         Simplex{{1, kDown}, {2, kDown}, {3, kRight}}));
}

TEST_CASE("splitter predicate is monotone in the participant count") {
  // every maximal member of delta over a face stays inside delta over the
  // full simplex (direct A3 witness)
  Task t = splitter_task({1, 2, 3});
  Simplex full = own_ids({1, 2, 3});
  for (const auto& [sigma, image] : t.delta) {
    for (const auto& tau : image.simplexes()) CHECK(t.delta_contains(full, tau));
  }
}

TEST_CASE("exchanger: solo gets bot, pairs match mutually") {
  Task solo = exchanger_task({1});
  CHECK(solo.delta_at(own_ids({1})).maximal_simplexes() ==
        std::vector<Simplex>{Simplex{{1, Value::bot()}}});

  Task t = exchanger_task({1, 2});
  auto maximal = t.delta_at(own_ids({1, 2})).maximal_simplexes();
  std::vector<Simplex> expected{
      Simplex{{1, Value::bot()}, {2, Value::bot()}},
      Simplex{{1, Value(2)}, {2, Value(1)}},
  };
  std::sort(maximal.begin(), maximal.end());
  std::sort(expected.begin(), expected.end());
  CHECK(maximal == expected);
}

TEST_CASE("exchanger: unreciprocated matches are excluded") {
  Task t = exchanger_task({1, 2, 3});
  CHECK_FALSE(t.outputs.contains(Simplex{{1, Value(2)}, {2, Value(3)}}));
  CHECK(t.outputs.contains(Simplex{{1, Value(2)}, {2, Value(1)}}));
  CHECK_FALSE(t.outputs.has_vertex({1, Value(1)}));  // no self-matches
}

TEST_CASE("test&set: exactly one winner") {
  Task solo = test_and_set_task({1});
  CHECK(solo.delta_at(own_ids({1})).maximal_simplexes() ==
        std::vector<Simplex>{Simplex{{1, Value(0)}}});

  Task t = test_and_set_task({1, 2});
  Simplex edge = own_ids({1, 2});
  CHECK_FALSE(t.outputs.contains(Simplex{{1, Value(0)}, {2, Value(0)}}));
  // all-losers is not a full-dimensional member of delta(edge)
  auto maximal = t.delta_at(edge).maximal_simplexes();
  for (const auto& m : maximal) {
    int winners = 0;
    for (const auto& v : m.vertices()) winners += v.value == Value(0) ? 1 : 0;
    CHECK(winners == 1);
  }
  CHECK(t.delta_contains(edge, Simplex{{1, Value(1)}, {2, Value(0)}}));
}

TEST_CASE("renaming: solo name is forced to 1") {
  Task t = adaptive_renaming_task({1, 2});
  CHECK(t.delta_at(own_ids({1})).maximal_simplexes() ==
        std::vector<Simplex>{Simplex{{1, Value(1)}}});
}

TEST_CASE("renaming with f(p) = 2p-1 on two processes") {
  Task t = adaptive_renaming_task({1, 2}, [](int p) { return 2 * p - 1; });
  auto maximal = t.delta_at(own_ids({1, 2})).maximal_simplexes();
  CHECK(maximal.size() == 6);  // injective pairs over {1,2,3}
  CHECK_FALSE(t.outputs.contains(Simplex{{1, Value(2)}, {2, Value(2)}}));
}

TEST_CASE("renaming rejects non-monotone bounds") {
  CHECK_THROWS_AS(adaptive_renaming_task({1, 2}, [](int) { return 2; }),
                  InvalidAdaptiveBound);
  CHECK_THROWS_AS(adaptive_renaming_task({1, 2, 3},
                                         [](int p) { return p == 3 ? 1 : p; }),
                  InvalidAdaptiveBound);
}

TEST_CASE("consensus: maximal outputs agree on one proposed value") {
  Task t = k_set_agreement_task({1, 2}, 1, {Value("a"), Value("b")});
  Simplex inputs{{1, Value("a")}, {2, Value("b")}};
  auto maximal = t.delta_at(inputs).maximal_simplexes();
  std::vector<Simplex> expected{
      Simplex{{1, Value("a")}, {2, Value("a")}},
      Simplex{{1, Value("b")}, {2, Value("b")}},
  };
  std::sort(maximal.begin(), maximal.end());
  std::sort(expected.begin(), expected.end());
  CHECK(maximal == expected);
}

TEST_CASE("2-set agreement admits two distinct decisions, not three") {
  Task t = k_set_agreement_task({1, 2, 3}, 2, {Value("a"), Value("b"), Value("c")});
  Simplex inputs{{1, Value("a")}, {2, Value("b")}, {3, Value("c")}};
  CHECK(t.delta_contains(inputs, Simplex{{1, Value("a")}, {2, Value("b")}, {3, Value("a")}}));
  CHECK_FALSE(
      t.delta_contains(inputs, Simplex{{1, Value("a")}, {2, Value("b")}, {3, Value("c")}}));
  // decided values come from the participants' inputs
  CHECK_FALSE(t.delta_contains(Simplex{{1, Value("a")}, {2, Value("a")}},
                               Simplex{{1, Value("b")}}));
}

TEST_CASE("k-set agreement parameter checks") {
  CHECK_THROWS_AS(k_set_agreement_task({1, 2}, 0, {Value(1)}), InvalidParameter);
  CHECK_THROWS_AS(k_set_agreement_task({1, 2}, 3, {Value(1)}), InvalidParameter);
  CHECK_THROWS_AS(k_set_agreement_task({1, 2}, 1, {}), InvalidParameter);
}

TEST_CASE("task families are adaptive: smaller instances embed in larger ones") {
  auto check_family = [](auto&& make) {
    Task small = make(first_pids(2));
    Task large = make(first_pids(3));
    for (const auto& [sigma, image] : small.delta) {
      CHECK(large.inputs.contains(sigma));
      CHECK(image == large.delta_at(sigma));
    }
    for (const auto& s : small.inputs.simplexes()) CHECK(large.inputs.contains(s));
  };
  check_family([](std::vector<Pid> p) { return splitter_task(p); });
  check_family([](std::vector<Pid> p) { return exchanger_task(p); });
  check_family([](std::vector<Pid> p) { return test_and_set_task(p); });
  check_family([](std::vector<Pid> p) { return adaptive_renaming_task(p); });
  check_family([](std::vector<Pid> p) {
    return k_set_agreement_task(p, 1, {Value(1), Value(2)});
  });
}
