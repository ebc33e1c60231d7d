#ifndef TASKCHECK_TASK_LIBRARY_HPP
#define TASKCHECK_TASK_LIBRARY_HPP

#include <functional>
#include <vector>

#include "taskcheck/task.hpp"

namespace taskcheck {

// Name-space bound of an adaptive renaming task, as a function of the
// number of participants.
using NameBound = std::function<int(int)>;

// p(p+1)/2, the bound achieved by the splitter half-grid.
int triangular_bound(int p);

// Splitter: of k participants at most one stops, at most k-1 go down and
// at most k-1 go right. Inputs are each process's own id.
Task splitter_task(std::vector<Pid> pids);

// Exchanger: participants are matched in pairs and swap ids; unmatched
// participants obtain bot. Matches are mutual and within the participants.
Task exchanger_task(std::vector<Pid> pids);

// One-shot test&set: exactly one participant obtains 0, the rest obtain 1.
Task test_and_set_task(std::vector<Pid> pids);

// Adaptive renaming: k participants obtain distinct names in [1..f(k)].
// f must satisfy f(1) = 1 and p-1 <= f(p-1) <= f(p); otherwise
// InvalidAdaptiveBound is thrown.
Task adaptive_renaming_task(std::vector<Pid> pids, const NameBound& f);
Task adaptive_renaming_task(std::vector<Pid> pids);  // f = triangular_bound

// k-set agreement: every decided value is some participant's input and at
// most k distinct values are decided. Inputs range over `domain`.
Task k_set_agreement_task(std::vector<Pid> pids, int k, std::vector<Value> domain);

// Splitter output tokens.
extern const Value kStop;
extern const Value kDown;
extern const Value kRight;

}  // namespace taskcheck

#endif
