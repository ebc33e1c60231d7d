#ifndef TASKCHECK_SYNTHESIS_HPP
#define TASKCHECK_SYNTHESIS_HPP

#include <memory>

#include "taskcheck/ve.hpp"

namespace taskcheck {

// The state-per-valid-execution object of a task: one state per member of
// VE(t), rooted at the empty history. An invocation event of some valid
// extension becomes a set transition, a response event a get transition.
// Its sequential executions are exactly the valid executions of the task.
std::shared_ptr<SeqObject> state_per_execution_object(const Task& t,
                                           std::uint64_t cap = kDefaultCap);

// Sequential execution induced by a task history: invocations become
// completed sets, responses completed gets, in event order.
SeqExecution setget_execution_of(const History& h);
// Inverse direction, defined on well-formed set/get executions.
History history_of_setget_execution(const SeqExecution& exec);

struct CompletenessResult {
  bool complete = false;
  std::optional<History> counterexample;  // valid execution the object misses
};

// A set/get object is complete w.r.t. a task when every valid execution of
// the task, turned into a sequential execution, is one of the object's.
CompletenessResult complete_wrt_task(const SeqObject& o, const Task& t,
                                     std::uint64_t cap = kDefaultCap);

struct BijectionResult {
  bool bijection = false;
  std::optional<History> unmatched_history;        // in VE(t), missing from SSpec
  std::optional<SeqExecution> unmatched_execution; // in SSpec, missing from VE(t)
};

// Checks that mapping invocations to completed sets and responses to
// completed gets is a bijection between VE(t) and the well-formed
// sequential executions of the object.
BijectionResult check_bijection(const Task& t, const SeqObject& o,
                                std::uint64_t cap = kDefaultCap);

struct SequentializabilityVerdict {
  bool sequential = false;
  // The canonical single-operation candidate: the object whose sequential
  // executions are exactly the sequential members of VE(t). Always built.
  std::shared_ptr<SeqObject> candidate;
  std::optional<History> counterexample;  // present iff not sequential
  std::string counterexample_side;        // "task-only" or "object-only"
};

// Decides whether the task admits a single-operation sequential object with
// the same valid executions. Any such object agrees with the canonical
// candidate on sequential executions, so comparing VE(t) with VE(candidate)
// settles the question. On a NO, the reported witness prefers the fully
// concurrent full-participation form (all invocations first, responses in
// pid order) and falls back to the shortest member of the symmetric
// difference.
SequentializabilityVerdict sequentializable_single_op(const Task& t,
                                                      std::uint64_t cap = kDefaultCap);

}  // namespace taskcheck

#endif
