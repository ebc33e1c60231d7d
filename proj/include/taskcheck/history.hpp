#ifndef TASKCHECK_HISTORY_HPP
#define TASKCHECK_HISTORY_HPP

#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "taskcheck/seq_object.hpp"
#include "taskcheck/task.hpp"

namespace taskcheck {

enum class EventType { invocation, response };

// One invocation or response event of a concurrent history. Task histories
// use op = task_op; histories over two-operation objects carry set/get.
struct Event {
  EventType type{};
  OpKind op{OpKind::task_op};
  Pid pid{};
  std::optional<Value> value{};  // input on invocations, output on responses

  friend bool operator==(const Event&, const Event&) = default;
  friend std::strong_ordering operator<=>(const Event&, const Event&) = default;
};

using History = std::vector<Event>;

Event inv_event(Pid pid, Value input, OpKind op = OpKind::task_op);
Event resp_event(Pid pid, Value output, OpKind op = OpKind::task_op);
Event inv_event_noarg(Pid pid, OpKind op);
Event resp_event_void(Pid pid, OpKind op);

// Length-first, then lexicographic. Minimal counterexamples come first.
struct HistLess {
  bool operator()(const History& a, const History& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};
using HistSet = std::set<History, HistLess>;

// Index of the first event breaking the per-process alternation
// (invocation, then matching response, then possibly another invocation).
std::optional<std::size_t> first_ill_formed_event(const History& h);
bool is_well_formed(const History& h);

// At most one invocation per process, and for set/get histories the order
// set-then-get per process.
std::optional<std::size_t> first_discipline_violation(const History& h);

// Participation and decision simplexes of a task history: invocations feed
// sigma, responses feed tau. Throws WellFormednessError on a malformed or
// multi-shot history.
std::pair<Simplex, Simplex> extract_simplexes(const History& h);

struct SatisfiesResult {
  bool satisfies = false;
  // Length of the shortest violating prefix; history length when satisfied.
  std::size_t failing_prefix = 0;
};

// Prefix-by-prefix check that tau_{E'} lies in delta(sigma_{E'}).
// Invocation values must be input vertices of the task
// (UnknownInputVertex otherwise).
SatisfiesResult satisfies_task(const History& h, const Task& t);

}  // namespace taskcheck

#endif
