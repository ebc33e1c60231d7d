#ifndef TASKCHECK_OBJECTS_HPP
#define TASKCHECK_OBJECTS_HPP

#include <memory>

#include "taskcheck/seq_object.hpp"
#include "taskcheck/task.hpp"

namespace taskcheck {

// The generic two-operation object of a task. States are pairs
// (sigma, tau): sigma records the participants registered by set so far,
// tau the outputs produced by get so far. get(id) branches over every
// output y with tau + (id, y) inside delta(sigma).
// The task must be valid; construction checks it.
std::shared_ptr<SeqObject> generic_setget_object(Task t);

// Splitter object over explicit Participants/Stop/Down/Right sets. A get
// picks any direction whose count bound still has room.
enum class SplitterObjectMutation {
  none,
  allow_extra_stop,  // stop stays available even when someone already stopped
};
std::shared_ptr<SeqObject> adhoc_splitter_object(
    std::vector<Pid> pids,
    SplitterObjectMutation mutation = SplitterObjectMutation::none);

// Exchanger object over a Participants set and a Matching of unordered
// pairs. A get either returns the partner recorded by an earlier match, or
// nondeterministically matches with a free participant or bot.
std::shared_ptr<SeqObject> adhoc_exchanger_object(std::vector<Pid> pids);

// An object that answers every get with the same fixed value, regardless of
// state. Deliberately wrong for most tasks; used to exercise the checkers.
std::shared_ptr<SeqObject> constant_answer_object(std::vector<Pid> pids, Value answer);

}  // namespace taskcheck

#endif
