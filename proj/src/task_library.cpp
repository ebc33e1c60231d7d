#include "taskcheck/task_library.hpp"

#include <algorithm>
#include <set>

#include "taskcheck/errors.hpp"

namespace taskcheck {

const Value kStop("stop");
const Value kDown("down");
const Value kRight("right");

int triangular_bound(int p) { return p * (p + 1) / 2; }

namespace {

std::vector<Pid> checked_pids(std::vector<Pid> pids) {
  if (pids.empty()) throw EmptyPidsError();
  std::sort(pids.begin(), pids.end());
  if (std::adjacent_find(pids.begin(), pids.end()) != pids.end())
    throw InvalidParameter("pid set contains duplicates");
  return pids;
}

// All total assignments of `values` to `ids`, as simplexes.
void assignments(const std::vector<Pid>& ids,
                 const std::function<std::vector<Value>(Pid)>& values_for,
                 std::vector<Vertex>& partial, std::vector<Simplex>& out) {
  if (partial.size() == ids.size()) {
    out.emplace_back(partial);
    return;
  }
  Pid pid = ids[partial.size()];
  for (const Value& v : values_for(pid)) {
    partial.push_back({pid, v});
    assignments(ids, values_for, partial, out);
    partial.pop_back();
  }
}

std::vector<Simplex> all_assignments(
    const std::vector<Pid>& ids,
    const std::function<std::vector<Value>(Pid)>& values_for) {
  std::vector<Simplex> out;
  std::vector<Vertex> partial;
  assignments(ids, values_for, partial, out);
  return out;
}

// Input complex whose only maximal simplex assigns each pid its own id.
Complex own_id_inputs(const std::vector<Pid>& pids) {
  std::vector<Vertex> verts;
  for (Pid p : pids) verts.push_back({p, Value(p)});
  return Complex::closure({Simplex(verts)});
}

// Builds a task from a per-cardinality predicate: delta(sigma) is the
// closure of all full assignments over ID(sigma) satisfying the predicate
// at k = |sigma|, and the outputs are the k = n instance over all pids.
Task predicate_task(std::string name, const std::vector<Pid>& pids,
                    Complex inputs,
                    const std::function<std::vector<Value>(Pid)>& values_for,
                    const std::function<bool(const Simplex&, int)>& pred) {
  Task t;
  t.name = std::move(name);
  t.pids = pids;
  t.inputs = std::move(inputs);

  std::vector<Simplex> output_maximal;
  for (const auto& tau : all_assignments(pids, values_for))
    if (pred(tau, static_cast<int>(pids.size()))) output_maximal.push_back(tau);
  t.outputs = Complex::closure(output_maximal);

  for (const auto& sigma : t.inputs.simplexes()) {
    const int k = static_cast<int>(sigma.size());
    std::vector<Simplex> image;
    for (const auto& tau : all_assignments(sigma.ids(), values_for))
      if (pred(tau, k)) image.push_back(tau);
    t.delta.emplace(sigma, Complex::closure(image));
  }
  return t;
}

}  // namespace

Task splitter_task(std::vector<Pid> pids) {
  auto sorted = checked_pids(std::move(pids));
  auto values_for = [](Pid) { return std::vector<Value>{kStop, kDown, kRight}; };
  auto sp = [](const Simplex& tau, int k) {
    int stop = 0, down = 0, right = 0;
    for (const auto& v : tau.vertices()) {
      if (v.value == kStop) ++stop;
      if (v.value == kDown) ++down;
      if (v.value == kRight) ++right;
    }
    return stop <= 1 && down <= k - 1 && right <= k - 1;
  };
  return predicate_task("splitter", sorted, own_id_inputs(sorted), values_for, sp);
}

Task exchanger_task(std::vector<Pid> pids) {
  auto sorted = checked_pids(std::move(pids));
  auto values_for = [&sorted](Pid self) {
    std::vector<Value> vals{Value::bot()};
    for (Pid q : sorted)
      if (q != self) vals.push_back(Value(q));
    return vals;
  };
  // Matches are mutual, within the simplex, and never with oneself.
  auto ex = [](const Simplex& tau, int /*k*/) {
    for (const auto& v : tau.vertices()) {
      if (v.value.is_bot()) continue;
      Pid partner = static_cast<Pid>(v.value.as_int());
      if (partner == v.pid) return false;
      if (!tau.has_pid(partner)) return false;
      if (!(tau.value_of(partner) == Value(v.pid))) return false;
    }
    return true;
  };
  return predicate_task("exchanger", sorted, own_id_inputs(sorted), values_for, ex);
}

Task test_and_set_task(std::vector<Pid> pids) {
  auto sorted = checked_pids(std::move(pids));
  auto values_for = [](Pid) { return std::vector<Value>{Value(0), Value(1)}; };
  auto one_winner = [](const Simplex& tau, int /*k*/) {
    int winners = 0;
    for (const auto& v : tau.vertices())
      if (v.value == Value(0)) ++winners;
    return winners == 1;
  };
  return predicate_task("test-and-set", sorted, own_id_inputs(sorted), values_for,
                        one_winner);
}

Task adaptive_renaming_task(std::vector<Pid> pids, const NameBound& f) {
  auto sorted = checked_pids(std::move(pids));
  const int n = static_cast<int>(sorted.size());
  if (f(1) != 1)
    throw InvalidAdaptiveBound("adaptive bound must satisfy f(1) = 1, got " +
                               std::to_string(f(1)));
  for (int p = 2; p <= n; ++p) {
    if (!(p - 1 <= f(p - 1) && f(p - 1) <= f(p)))
      throw InvalidAdaptiveBound("adaptive bound must satisfy p-1 <= f(p-1) <= f(p) at p=" +
                                 std::to_string(p));
  }
  auto values_for = [&f, n](Pid) {
    std::vector<Value> vals;
    for (int name = 1; name <= f(n); ++name) vals.push_back(Value(name));
    return vals;
  };
  // New names are distinct and drawn from [1..f(k)] for k participants.
  auto renamed = [&f](const Simplex& tau, int k) {
    std::set<Value> seen;
    for (const auto& v : tau.vertices()) {
      if (v.value.as_int() < 1 || v.value.as_int() > f(k)) return false;
      if (!seen.insert(v.value).second) return false;
    }
    return true;
  };
  return predicate_task("renaming", sorted, own_id_inputs(sorted), values_for, renamed);
}

Task adaptive_renaming_task(std::vector<Pid> pids) {
  return adaptive_renaming_task(std::move(pids), triangular_bound);
}

Task k_set_agreement_task(std::vector<Pid> pids, int k, std::vector<Value> domain) {
  auto sorted = checked_pids(std::move(pids));
  if (k < 1 || k > static_cast<int>(sorted.size()))
    throw InvalidParameter("k must satisfy 1 <= k <= number of pids");
  if (domain.empty()) throw InvalidParameter("input domain must be nonempty");
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());

  Task t;
  t.name = std::to_string(k) + "-set-agreement";
  t.pids = sorted;
  auto any_input = [&domain](Pid) { return domain; };
  t.inputs = Complex::closure(all_assignments(sorted, any_input));

  // Decisions valid for some input assignment: at most k distinct values.
  auto few_values = [k](const Simplex& tau) {
    std::set<Value> seen;
    for (const auto& v : tau.vertices()) seen.insert(v.value);
    return static_cast<int>(seen.size()) <= k;
  };
  std::vector<Simplex> output_maximal;
  for (const auto& tau : all_assignments(sorted, any_input))
    if (few_values(tau)) output_maximal.push_back(tau);
  t.outputs = Complex::closure(output_maximal);

  for (const auto& sigma : t.inputs.simplexes()) {
    std::vector<Value> proposals;
    for (const auto& v : sigma.vertices()) proposals.push_back(v.value);
    std::sort(proposals.begin(), proposals.end());
    proposals.erase(std::unique(proposals.begin(), proposals.end()), proposals.end());
    auto proposed = [&proposals](Pid) { return proposals; };
    std::vector<Simplex> image;
    for (const auto& tau : all_assignments(sigma.ids(), proposed))
      if (few_values(tau)) image.push_back(tau);
    t.delta.emplace(sigma, Complex::closure(image));
  }
  return t;
}

}  // namespace taskcheck
