#ifndef TASKCHECK_ENUMERATE_HPP
#define TASKCHECK_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <set>

#include "taskcheck/seq_object.hpp"
#include "taskcheck/task.hpp"

namespace taskcheck {

using ExecSet = std::set<SeqExecution, ExecLess>;

inline constexpr std::uint64_t kDefaultCap = 20'000'000;

// All complete sequential executions of `o` reachable from its initial
// state. With wellformed_only, each pid performs at most one set followed
// by at most one get (or a single task op for one-operation objects). The
// result is prefix-closed and includes the empty execution.
// Throws ExplosionError past `cap` executions.
ExecSet sspec_enumerate(const SeqObject& o, bool wellformed_only = true,
                        std::uint64_t cap = kDefaultCap);

// Distinct states reachable under the well-formed one-shot discipline,
// initial state included.
std::vector<ObjectState> reachable_states(const SeqObject& o,
                                          std::uint64_t cap = kDefaultCap);

struct EquivalenceResult {
  bool equivalent = false;
  // Shortest execution in the symmetric difference, lexicographically
  // smallest among ties; present iff not equivalent.
  std::optional<SeqExecution> counterexample;
  std::string counterexample_side;  // "left-only" or "right-only"
};

// Compares the sequential specifications of two objects as sets.
EquivalenceResult objects_equivalent(const SeqObject& a, const SeqObject& b,
                                     std::uint64_t cap = kDefaultCap);

struct CorrectnessResult {
  bool correct = false;
  std::optional<SeqExecution> counterexample;
};

// A set/get object is correct w.r.t. a task when every execution's
// registered inputs sigma and produced outputs tau satisfy tau in
// delta(sigma).
CorrectnessResult correct_wrt_task(const SeqObject& o, const Task& t,
                                   std::uint64_t cap = kDefaultCap);

}  // namespace taskcheck

#endif
