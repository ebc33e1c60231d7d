#ifndef TASKCHECK_TASK_HPP
#define TASKCHECK_TASK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taskcheck/complex.hpp"

namespace taskcheck {

// A one-shot concurrent task: an input complex, an output complex and a
// carrier map delta from input simplexes to subcomplexes of the outputs.
// delta is stored exactly on the nonempty simplexes of `inputs`; querying
// anything else is an error rather than an empty complex, so that missing
// carrier entries surface instead of silently passing checks.
struct Task {
  std::string name;
  std::vector<Pid> pids;  // sorted, distinct
  Complex inputs;
  Complex outputs;
  std::map<Simplex, Complex> delta;

  const Complex& delta_at(const Simplex& s) const;
  bool delta_contains(const Simplex& input, const Simplex& output) const;

  friend bool operator==(const Task& a, const Task& b) {
    return a.pids == b.pids && a.inputs == b.inputs && a.outputs == b.outputs &&
           a.delta == b.delta;
  }
};

// One violated requirement, with enough context to locate it.
struct TaskViolation {
  std::string rule;     // "A1", "A2", "A3", "input-complex", "output-complex",
                        // "carrier-domain", "carrier-range", "closure"
  std::string message;
  std::optional<Simplex> witness;
  std::optional<Simplex> second_witness;
};

struct ValidityReport {
  std::vector<TaskViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Checks the three carrier-map axioms plus the structural requirements on
// the input/output complexes. Violations are report entries, not exceptions.
ValidityReport validate_task(const Task& t);

}  // namespace taskcheck

#endif
