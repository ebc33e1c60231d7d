#ifndef TASKCHECK_VE_HPP
#define TASKCHECK_VE_HPP

#include <cstdint>
#include <map>

#include "taskcheck/enumerate.hpp"
#include "taskcheck/history.hpp"

namespace taskcheck {

// All well-formed one-shot histories over the task's pids that satisfy the
// task, pending invocations included. Prefix-closed by construction: the
// prefix condition makes pruning on the first bad prefix sound.
HistSet enumerate_VE_task(const Task& t, std::uint64_t cap = kDefaultCap);

// A successful linearization: the witness execution and where each
// operation of the history landed in it, keyed by the index of the
// operation's invocation event.
struct LinWitness {
  SeqExecution sequence;
  std::map<std::size_t, std::size_t> op_position;
};

struct LinResult {
  bool linearizable = false;
  std::optional<LinWitness> witness;
};

// Exhaustive linearizability check of a history against a sequential
// object. The witness must contain every completed operation with matching
// outputs and may complete pending invocations with any output the object
// admits. Real-time order is respected: an operation whose response
// precedes another operation's invocation is linearized first, and that
// constraint applies to included pending operations through their
// invocation position as well. Without the latter a witness could let an
// operation observe an invocation that had not happened yet.
LinResult linearizable(const History& h, const SeqObject& o);

// All well-formed one-shot histories over the object's operations that are
// linearizable w.r.t. it.
HistSet enumerate_VE_obj(const SeqObject& o, std::uint64_t cap = kDefaultCap);

}  // namespace taskcheck

#endif
