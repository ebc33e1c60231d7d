#include <doctest.h>

#include "taskcheck/complex.hpp"
#include "taskcheck/errors.hpp"
#include "taskcheck/task.hpp"
#include "taskcheck/task_library.hpp"

using namespace taskcheck;

namespace {

Simplex own_ids(std::vector<Pid> pids) {
  std::vector<Vertex> verts;
  for (Pid p : pids) verts.push_back({p, Value(p)});
  return Simplex(verts);
}

}  // namespace

TEST_CASE("simplex ordering, dimension and chromaticity") {
  Simplex empty;
  CHECK(empty.dim() == -1);

  Simplex edge{{1, Value("a")}, {2, Value("b")}};
  CHECK(edge.dim() == 1);
  CHECK(edge.ids() == std::vector<Pid>{1, 2});
  CHECK(edge.value_of(2) == Value("b"));

  // vertices are stored sorted by pid regardless of construction order
  Simplex flipped{{2, Value("b")}, {1, Value("a")}};
  CHECK(edge == flipped);

  CHECK_THROWS_AS(Simplex({{1, Value("a")}, {1, Value("b")}}), ChromaticityError);
  try {
    Simplex({{3, Value("a")}, {3, Value("b")}});
  } catch (const ChromaticityError& e) {
    CHECK(e.pid == 3);
  }
}

TEST_CASE("closure of nothing is the empty complex") {
  Complex c = closure({});
  CHECK(c.empty());
  CHECK(c.dimension() == -1);
  CHECK(is_pure(c, 0));
  CHECK(is_pure(c, 7));
  // the empty simplex belongs to every complex
  CHECK(c.contains(Simplex{}));
}

TEST_CASE("closure of one edge has the edge and both vertices") {
  Simplex edge{{1, Value("a")}, {2, Value("b")}};
  Complex c = closure({edge});
  CHECK(c.size() == 3);
  CHECK(c.contains(edge));
  CHECK(c.contains(Simplex{{1, Value("a")}}));
  CHECK(c.contains(Simplex{{2, Value("b")}}));
  CHECK_FALSE(c.contains(Simplex{{1, Value("b")}}));
}

TEST_CASE("closure of a triangle is its full face lattice") {
  Complex c = closure({own_ids({1, 2, 3})});
  CHECK(c.size() == 7);  // 1 triangle + 3 edges + 3 vertices
  CHECK(c.dimension() == 2);
  CHECK(c.is_pure(2));
  CHECK(c.maximal_simplexes().size() == 1);
}

TEST_CASE("closure is idempotent") {
  Complex once = closure({own_ids({1, 2, 3}), Simplex{{4, Value("x")}}});
  std::vector<Simplex> members(once.simplexes().begin(), once.simplexes().end());
  CHECK(closure(members) == once);
}

TEST_CASE("purity detects a stray vertex") {
  Simplex edge{{1, Value("a")}, {2, Value("b")}};
  CHECK(is_pure(closure({edge}), 1));
  Complex with_stray = closure({edge, Simplex{{3, Value("c")}}});
  CHECK_FALSE(is_pure(with_stray, 1));
}

TEST_CASE("validate_task accepts the splitter and reports mutations") {
  Task t = splitter_task({1, 2, 3});
  CHECK(validate_task(t).valid());

  SUBCASE("solo input mapped to an edge violates A1") {
    Task broken = t;
    Simplex solo = own_ids({1});
    broken.delta.at(solo) =
        closure({Simplex{{1, kStop}, {2, kDown}}});
    auto report = validate_task(broken);
    CHECK_FALSE(report.valid());
    bool found_a1 = false;
    for (const auto& v : report.violations) found_a1 |= v.rule == "A1";
    CHECK(found_a1);
  }

  SUBCASE("solo input mapped to another pid's vertex violates A2") {
    Task broken = t;
    Simplex solo = own_ids({1});
    broken.delta.at(solo) = closure({Simplex{{2, kStop}}});
    auto report = validate_task(broken);
    bool found_a2 = false;
    for (const auto& v : report.violations) found_a2 |= v.rule == "A2";
    CHECK(found_a2);
  }

  SUBCASE("removing a vertex from delta(full) violates A3") {
    Task broken = t;
    Simplex full = own_ids({1, 2, 3});
    // drop every simplex containing (1, stop) from delta(full); the result
    // is still a closed pure complex, but delta(solo 1) no longer fits
    std::set<Simplex> kept;
    for (const auto& s : broken.delta.at(full).simplexes())
      if (!(s.has_pid(1) && s.value_of(1) == kStop)) kept.insert(s);
    broken.delta.at(full) = Complex::from_simplexes_unchecked(kept);
    auto report = validate_task(broken);
    bool found_a3 = false;
    for (const auto& v : report.violations) found_a3 |= v.rule == "A3";
    CHECK(found_a3);
  }

  SUBCASE("a non-closed complex is reported") {
    Task broken = t;
    Simplex full = own_ids({1, 2, 3});
    std::set<Simplex> holes = broken.delta.at(full).simplexes();
    holes.erase(Simplex{{1, kStop}});
    broken.delta.at(full) = Complex::from_simplexes_unchecked(holes);
    auto report = validate_task(broken);
    bool found = false;
    for (const auto& v : report.violations) found |= v.rule == "closure";
    CHECK(found);
  }

  SUBCASE("a missing carrier entry is reported") {
    Task broken = t;
    broken.delta.erase(own_ids({2}));
    auto report = validate_task(broken);
    bool found = false;
    for (const auto& v : report.violations) found |= v.rule == "carrier-domain";
    CHECK(found);
  }
}

TEST_CASE("delta lookups outside the input complex are errors") {
  Task t = splitter_task({1, 2});
  CHECK_THROWS_AS(t.delta_at(Simplex{{9, Value(9)}}), DeltaLookupError);
  // the empty simplex is a member of every delta image
  CHECK(t.delta_contains(own_ids({1, 2}), Simplex{}));
  CHECK(t.delta_contains(Simplex{}, Simplex{}));
}

TEST_CASE("carrier images never mention ids outside their input") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Pid> pids;
    for (int i = 1; i <= n; ++i) pids.push_back(i);
    for (const Task& t : {splitter_task(pids), exchanger_task(pids),
                          test_and_set_task(pids), adaptive_renaming_task(pids)}) {
      for (const auto& [sigma, image] : t.delta) {
        auto sigma_ids = sigma.ids();
        for (const auto& tau : image.simplexes()) {
          for (Pid id : tau.ids()) {
            bool inside = std::find(sigma_ids.begin(), sigma_ids.end(), id) !=
                          sigma_ids.end();
            CHECK(inside);
          }
        }
      }
    }
  }
}
