#ifndef TASKCHECK_RENAMING_HPP
#define TASKCHECK_RENAMING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taskcheck/enumerate.hpp"
#include "taskcheck/history.hpp"
#include "taskcheck/objects.hpp"

namespace taskcheck {

// Position in the splitter half-grid: r rights and d downs taken so far.
// Valid positions satisfy r + d <= n - 1.
struct GridPos {
  int r = 0;
  int d = 0;
  friend bool operator==(const GridPos&, const GridPos&) = default;
};

enum class GridLabeling { adaptive, original };

// The half-grid of n(n+1)/2 splitters with its name labeling. The adaptive
// labeling numbers splitters diagonal by diagonal, so a process deciding
// after m moves holds a name at most (m+1)(m+2)/2; the original labeling is
// plain row-major.
class Grid {
 public:
  Grid(int n, GridLabeling labeling);

  int n() const { return n_; }
  GridLabeling labeling() const { return labeling_; }
  int position_count() const { return n_ * (n_ + 1) / 2; }
  bool in_grid(GridPos p) const {
    return p.r >= 0 && p.d >= 0 && p.r + p.d <= n_ - 1;
  }
  int index_of(GridPos p) const;
  GridPos pos_at(int index) const { return positions_[static_cast<std::size_t>(index)]; }
  int name_at(GridPos p) const;
  const std::vector<GridPos>& positions() const { return positions_; }

 private:
  int n_;
  GridLabeling labeling_;
  std::vector<GridPos> positions_;  // row-major: d ascending, then r
};

enum class McVariant { setget, registers };

// Seeded faults for the read/write splitter, used to show the checker
// catches broken implementations.
enum class RwMutation { none, skip_closed_write, skip_last_check };

struct McOptions {
  int n = 2;
  McVariant variant = McVariant::setget;
  bool crashes = false;
  bool subsets = true;
  GridLabeling labeling = GridLabeling::adaptive;
  SplitterObjectMutation splitter_mutation = SplitterObjectMutation::none;
  RwMutation register_mutation = RwMutation::none;
  std::uint64_t state_cap = kDefaultCap;
};

struct McTraceStep {
  Pid pid{};
  std::string action;

  friend bool operator==(const McTraceStep&, const McTraceStep&) = default;
};

struct McPropertyResult {
  std::string property;
  bool pass = true;

  friend bool operator==(const McPropertyResult&, const McPropertyResult&) = default;
};

struct McViolation {
  std::string property;
  std::vector<McTraceStep> trace;
  // Induced history at the splitter where the violation fired, when the
  // violated property concerns a single splitter.
  std::optional<History> splitter_history;
};

struct McSubsetReport {
  std::vector<Pid> participants;
  std::uint64_t states_explored = 0;
  int max_depth = 0;
  std::vector<McPropertyResult> properties;
  std::optional<McViolation> violation;  // first violation in DFS order
  std::vector<McViolation> violations;   // first violation per failed property

  bool pass() const;
};

struct McReport {
  std::string check;  // "renaming" or "rw-splitter"
  int n = 0;
  std::string variant;
  bool crashes = false;
  std::string labeling;
  std::string mutation;
  std::uint64_t states_explored = 0;
  int max_depth = 0;
  std::vector<McPropertyResult> properties;  // aggregated over runs
  std::optional<McViolation> violation;      // first across runs
  std::vector<McSubsetReport> runs;

  bool pass() const;
  // First recorded violation of one property, searched across runs.
  const McViolation* find_violation(const std::string& property) const;
};

// Exhaustive interleaving exploration of the splitter-grid renaming
// algorithm for processes 1..n. Checks, on every reachable state: name
// validity, uniqueness, the adaptive bound p(p+1)/2, per-splitter
// splitting, the depth bound of decided processes, and that every maximal
// schedule completes all never-crashed processes. The full participant set
// runs first; with `subsets` every smaller nonempty subset runs as well.
McReport model_check_renaming(const McOptions& opts);

// Exhaustive interleaving check of n processes running the read/write
// splitter on one shared splitter: every interleaving's induced history
// must satisfy the splitter task.
McReport check_rw_splitter(int n, RwMutation mutation = RwMutation::none,
                           std::uint64_t state_cap = kDefaultCap);

// Drives one renaming run step by step: applies the scripted actions from
// the initial state (matching the labels that appear in traces, e.g.
// "set@(0,0)" or "get@(0,0)->down") and returns the actions enabled next.
// Nondeterministic actions appear once per outcome. Used by tests to pin
// the step relation.
std::vector<McTraceStep> mc_enabled_after(const McOptions& opts,
                                          const std::vector<McTraceStep>& script);

}  // namespace taskcheck

#endif
