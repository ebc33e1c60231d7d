#include "taskcheck/renaming.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "taskcheck/errors.hpp"
#include "taskcheck/task_library.hpp"

namespace taskcheck {

Grid::Grid(int n, GridLabeling labeling) : n_(n), labeling_(labeling) {
  if (n < 1) throw InvalidParameter("grid requires n >= 1");
  for (int d = 0; d < n; ++d)
    for (int r = 0; r + d <= n - 1; ++r) positions_.push_back(GridPos{r, d});
}

int Grid::index_of(GridPos p) const {
  // Row d starts after rows 0..d-1 of sizes n, n-1, ...
  int offset = 0;
  for (int d = 0; d < p.d; ++d) offset += n_ - d;
  return offset + p.r;
}

int Grid::name_at(GridPos p) const {
  if (labeling_ == GridLabeling::adaptive) {
    const int m = p.r + p.d;
    return m * (m + 1) / 2 + p.d + 1;
  }
  return index_of(p) + 1;
}

bool McSubsetReport::pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const McPropertyResult& p) { return p.pass; });
}

bool McReport::pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const McPropertyResult& p) { return p.pass; });
}

const McViolation* McReport::find_violation(const std::string& property) const {
  for (const auto& run : runs)
    for (const auto& v : run.violations)
      if (v.property == property) return &v;
  return nullptr;
}

namespace {

// Per-process phase. The first four double as the program counter of the
// read/write splitter; the set/get variant only uses the first two.
enum Phase : std::uint8_t {
  ph_to_set = 0,  // setget: about to set;  registers: about to write LAST
  ph_to_get = 1,  // setget: about to get;  registers: about to read CLOSED
  ph_write_closed = 2,
  ph_read_last = 3,
  ph_decided = 4,
  ph_crashed = 5,
};

struct ProcState {
  std::uint8_t phase = ph_to_set;
  std::uint8_t pos = 0;  // grid index
  bool stepped = false;  // took at least one non-crash step
};

struct SplitterCell {
  std::uint8_t participants = 0;  // bitmasks over process indices
  std::uint8_t stop = 0;
  std::uint8_t down = 0;
  std::uint8_t right = 0;
};

struct RegCell {
  std::uint8_t last = 0;  // 0 = none, otherwise process index + 1
  bool closed = false;
};

struct McState {
  std::vector<ProcState> procs;
  std::vector<SplitterCell> cells;
  std::vector<RegCell> regs;  // registers variant only

  std::string key() const {
    std::string k;
    k.reserve(procs.size() * 2 + cells.size() * 4 + regs.size() * 2);
    for (const auto& p : procs) {
      k.push_back(static_cast<char>(p.phase | (p.stepped ? 0x40 : 0)));
      k.push_back(static_cast<char>(p.pos));
    }
    for (const auto& c : cells) {
      k.push_back(static_cast<char>(c.participants));
      k.push_back(static_cast<char>(c.stop));
      k.push_back(static_cast<char>(c.down));
      k.push_back(static_cast<char>(c.right));
    }
    for (const auto& r : regs) {
      k.push_back(static_cast<char>(r.last));
      k.push_back(static_cast<char>(r.closed ? 1 : 0));
    }
    return k;
  }
};

std::string pos_str(GridPos p) {
  return "(" + std::to_string(p.r) + "," + std::to_string(p.d) + ")";
}

int popcount8(std::uint8_t v) { return __builtin_popcount(v); }

// One exhaustive DFS over the interleavings of one participant set.
class Explorer {
 public:
  Explorer(const McOptions& opts, const Grid& grid, std::vector<Pid> participants,
           bool single_splitter)
      : opts_(opts),
        grid_(grid),
        pids_(std::move(participants)),
        single_splitter_(single_splitter),
        splitter_task_(splitter_task(pids_)) {
    if (single_splitter_) {
      property_order_ = {"task-conformance", "splitting", "termination"};
    } else {
      property_order_ = {"validity", "uniqueness"};
      if (opts_.labeling == GridLabeling::adaptive)
        property_order_.push_back("adaptive-bound");
      property_order_.push_back("splitting");
      if (opts_.variant == McVariant::registers)
        property_order_.push_back("task-conformance");
      property_order_.insert(property_order_.end(),
                             {"depth-bound", "grid-bounds", "termination"});
    }
  }

  McState initial_state() const {
    McState init;
    init.procs.resize(pids_.size());
    const std::size_t ncells =
        single_splitter_ ? 1 : static_cast<std::size_t>(grid_.position_count());
    init.cells.resize(ncells);
    if (opts_.variant == McVariant::registers) init.regs.resize(ncells);
    return init;
  }

  // All transitions out of `s`, one entry per nondeterministic outcome,
  // crash steps included when enabled. Does not touch exploration state.
  std::vector<std::pair<McTraceStep, McState>> transitions(const McState& s) {
    std::vector<std::pair<McTraceStep, McState>> out;
    for (std::size_t proc = 0; proc < s.procs.size(); ++proc) {
      const std::uint8_t phase = s.procs[proc].phase;
      if (phase == ph_decided || phase == ph_crashed) continue;
      auto succs = opts_.variant == McVariant::setget ? successors_setget(s, proc)
                                                      : successors_registers(s, proc);
      for (auto& succ : succs) out.emplace_back(succ.step, std::move(succ.state));
      if (opts_.crashes) {
        McState crashed = s;
        crashed.procs[proc].phase = ph_crashed;
        out.emplace_back(McTraceStep{pids_[proc], "crash"}, std::move(crashed));
      }
    }
    return out;
  }

  McSubsetReport run() {
    McState init = initial_state();
    histories_.assign(init.cells.size(), History{});

    dfs(init, 0);

    McSubsetReport report;
    report.participants = pids_;
    report.states_explored = states_;
    report.max_depth = max_depth_;
    for (const auto& name : property_order_) {
      report.properties.push_back({name, violations_.count(name) == 0});
      auto it = violations_.find(name);
      if (it != violations_.end()) report.violations.push_back(it->second);
    }
    if (!violation_order_.empty())
      report.violation = violations_.at(violation_order_.front());
    return report;
  }

 private:
  static constexpr std::size_t no_cell = static_cast<std::size_t>(-1);

  // A transition plus the checks and history event it triggers at visit time.
  struct Successor {
    McState state;
    McTraceStep step;
    std::size_t cell = no_cell;
    std::optional<Event> induced;        // appended to the cell history
    bool check_splitting = false;
    bool check_conformance = false;
    std::optional<GridPos> decided_at;   // run decision checks for this position
    bool grid_overflow = false;          // direction led off the half-grid
    std::size_t proc = 0;
  };

  void record_violation(const std::string& property, std::size_t cell_index) {
    if (std::find(property_order_.begin(), property_order_.end(), property) ==
        property_order_.end())
      return;  // not tracked in this mode
    if (violations_.count(property)) return;
    McViolation v;
    v.property = property;
    v.trace = path_;
    if (cell_index != no_cell) v.splitter_history = histories_[cell_index];
    violation_order_.push_back(property);
    violations_.emplace(property, std::move(v));
  }

  int participants_so_far(const McState& s) const {
    int p = 0;
    for (const auto& proc : s.procs) p += proc.stepped ? 1 : 0;
    return p;
  }

  void check_decide(const McState& next, std::size_t proc, GridPos pos,
                    std::size_t cell_index) {
    const int name = grid_.name_at(pos);
    const int p = participants_so_far(next);
    const int total_names = grid_.n() * (grid_.n() + 1) / 2;
    if (name < 1 || name > total_names) record_violation("validity", cell_index);
    if (opts_.labeling == GridLabeling::adaptive && name > p * (p + 1) / 2)
      record_violation("adaptive-bound", cell_index);
    if (pos.r + pos.d > p - 1) record_violation("depth-bound", cell_index);
    for (std::size_t q = 0; q < next.procs.size(); ++q) {
      if (q == proc || next.procs[q].phase != ph_decided) continue;
      if (grid_.name_at(grid_.pos_at(next.procs[q].pos)) == name)
        record_violation("uniqueness", cell_index);
    }
  }

  void check_splitting(const SplitterCell& cell, std::size_t cell_index) {
    const int k = popcount8(cell.participants);
    if (popcount8(cell.stop) > 1 || popcount8(cell.down) > k - 1 ||
        popcount8(cell.right) > k - 1)
      record_violation("splitting", cell_index);
  }

  // The induced history at the splitter must still satisfy the splitter task.
  void check_conformance(std::size_t cell_index) {
    auto result = satisfies_task(histories_[cell_index], splitter_task_);
    if (!result.satisfies) record_violation("task-conformance", cell_index);
  }

  // Applies a direction obtained at `pos`: stop decides, down/right move.
  void apply_direction(Successor& succ, GridPos pos, const Value& dir) {
    SplitterCell& cell = succ.state.cells[succ.cell];
    const std::uint8_t bit = static_cast<std::uint8_t>(1u << succ.proc);
    if (dir == kStop) cell.stop |= bit;
    if (dir == kDown) cell.down |= bit;
    if (dir == kRight) cell.right |= bit;
    succ.induced = resp_event(pids_[succ.proc], dir);
    succ.check_splitting = true;
    succ.check_conformance = opts_.variant == McVariant::registers;

    ProcState& p = succ.state.procs[succ.proc];
    if (dir == kStop) {
      p.phase = ph_decided;
      if (!single_splitter_) succ.decided_at = pos;
      return;
    }
    if (single_splitter_) {
      p.phase = ph_decided;  // returned a direction; this run is over
      return;
    }
    GridPos target{pos.r + (dir == kRight ? 1 : 0), pos.d + (dir == kDown ? 1 : 0)};
    if (!grid_.in_grid(target)) {
      succ.grid_overflow = true;
      return;
    }
    p.pos = static_cast<std::uint8_t>(grid_.index_of(target));
    p.phase = ph_to_set;
  }

  std::vector<Successor> successors_setget(const McState& s, std::size_t proc) {
    std::vector<Successor> out;
    const ProcState& p = s.procs[proc];
    const std::uint8_t bit = static_cast<std::uint8_t>(1u << proc);
    const std::size_t ci = single_splitter_ ? 0 : p.pos;
    const GridPos pos = single_splitter_ ? GridPos{0, 0} : grid_.pos_at(p.pos);

    if (p.phase == ph_to_set) {
      Successor succ;
      succ.state = s;
      succ.step = {pids_[proc], "set@" + pos_str(pos)};
      succ.cell = ci;
      succ.proc = proc;
      if (!(s.cells[ci].participants & bit))
        succ.induced = inv_event(pids_[proc], Value(pids_[proc]));
      succ.state.cells[ci].participants |= bit;
      succ.state.procs[proc].phase = ph_to_get;
      succ.state.procs[proc].stepped = true;
      out.push_back(std::move(succ));
      return out;
    }
    if (p.phase != ph_to_get) return out;

    const SplitterCell& cell = s.cells[ci];
    const int others = popcount8(cell.participants) - 1;
    std::vector<Value> dirs;
    if (cell.stop == 0 ||
        opts_.splitter_mutation == SplitterObjectMutation::allow_extra_stop)
      dirs.push_back(kStop);
    if (popcount8(cell.down) < others) dirs.push_back(kDown);
    if (popcount8(cell.right) < others) dirs.push_back(kRight);
    for (const Value& dir : dirs) {
      Successor succ;
      succ.state = s;
      succ.step = {pids_[proc], "get@" + pos_str(pos) + "->" + dir.str()};
      succ.cell = ci;
      succ.proc = proc;
      apply_direction(succ, pos, dir);
      out.push_back(std::move(succ));
    }
    return out;
  }

  std::vector<Successor> successors_registers(const McState& s, std::size_t proc) {
    std::vector<Successor> out;
    const ProcState& p = s.procs[proc];
    const std::uint8_t bit = static_cast<std::uint8_t>(1u << proc);
    const std::size_t ci = single_splitter_ ? 0 : p.pos;
    const GridPos pos = single_splitter_ ? GridPos{0, 0} : grid_.pos_at(p.pos);

    switch (p.phase) {
      case ph_to_set: {  // LAST <- my id; doubles as the induced invocation
        Successor succ;
        succ.state = s;
        succ.step = {pids_[proc], "write-last@" + pos_str(pos)};
        succ.cell = ci;
        succ.proc = proc;
        if (!(s.cells[ci].participants & bit))
          succ.induced = inv_event(pids_[proc], Value(pids_[proc]));
        succ.state.cells[ci].participants |= bit;
        succ.state.regs[ci].last = static_cast<std::uint8_t>(proc + 1);
        succ.state.procs[proc].phase = ph_to_get;
        succ.state.procs[proc].stepped = true;
        out.push_back(std::move(succ));
        break;
      }
      case ph_to_get: {  // read CLOSED
        const bool closed = s.regs[ci].closed;
        Successor succ;
        succ.state = s;
        succ.step = {pids_[proc], "read-closed@" + pos_str(pos) + "->" +
                                  std::string(closed ? "true" : "false")};
        succ.cell = ci;
        succ.proc = proc;
        if (closed)
          apply_direction(succ, pos, kRight);
        else
          succ.state.procs[proc].phase = ph_write_closed;
        out.push_back(std::move(succ));
        break;
      }
      case ph_write_closed: {
        Successor succ;
        succ.state = s;
        succ.step = {pids_[proc], "write-closed@" + pos_str(pos)};
        succ.cell = ci;
        succ.proc = proc;
        if (opts_.register_mutation != RwMutation::skip_closed_write)
          succ.state.regs[ci].closed = true;
        succ.state.procs[proc].phase = ph_read_last;
        out.push_back(std::move(succ));
        break;
      }
      case ph_read_last: {
        const bool mine = opts_.register_mutation == RwMutation::skip_last_check ||
                          s.regs[ci].last == proc + 1;
        Successor succ;
        succ.state = s;
        succ.step = {pids_[proc], "read-last@" + pos_str(pos) + "->" +
                                  std::string(mine ? "stop" : "down")};
        succ.cell = ci;
        succ.proc = proc;
        apply_direction(succ, pos, mine ? kStop : kDown);
        out.push_back(std::move(succ));
        break;
      }
      default:
        break;
    }
    return out;
  }

  void visit(Successor& succ, int depth) {
    path_.push_back(succ.step);
    if (succ.induced) histories_[succ.cell].push_back(*succ.induced);
    if (succ.check_splitting) check_splitting(succ.state.cells[succ.cell], succ.cell);
    if (succ.check_conformance) check_conformance(succ.cell);
    if (succ.decided_at) check_decide(succ.state, succ.proc, *succ.decided_at, succ.cell);
    if (succ.grid_overflow)
      record_violation("grid-bounds", succ.cell);
    else
      dfs(succ.state, depth + 1);
    if (succ.induced) histories_[succ.cell].pop_back();
    path_.pop_back();
  }

  void dfs(const McState& s, int depth) {
    if (!visited_.insert(s.key()).second) return;
    if (++states_ > opts_.state_cap) throw ExplosionError(states_, opts_.state_cap);
    max_depth_ = std::max(max_depth_, depth);

    bool any_live = false;
    for (std::size_t proc = 0; proc < s.procs.size(); ++proc) {
      const std::uint8_t phase = s.procs[proc].phase;
      if (phase == ph_decided || phase == ph_crashed) continue;
      any_live = true;

      auto succs = opts_.variant == McVariant::setget ? successors_setget(s, proc)
                                                      : successors_registers(s, proc);
      for (Successor& succ : succs) visit(succ, depth);

      if (opts_.crashes) {
        McState crashed = s;
        crashed.procs[proc].phase = ph_crashed;
        path_.push_back({pids_[proc], "crash"});
        dfs(crashed, depth + 1);
        path_.pop_back();
      }
    }

    if (!any_live) {
      // Maximal schedule: every never-crashed process must have decided.
      for (const auto& proc : s.procs)
        if (proc.phase != ph_decided && proc.phase != ph_crashed)
          record_violation("termination", no_cell);
    }
  }

  const McOptions& opts_;
  const Grid& grid_;
  std::vector<Pid> pids_;
  bool single_splitter_;
  Task splitter_task_;

  std::vector<std::string> property_order_;
  std::unordered_set<std::string> visited_;
  std::uint64_t states_ = 0;
  int max_depth_ = 0;
  std::vector<McTraceStep> path_;
  std::vector<History> histories_;  // per cell, along the current DFS path
  std::map<std::string, McViolation> violations_;  // first per property
  std::vector<std::string> violation_order_;       // chronological
};

std::string labeling_name(GridLabeling l) {
  return l == GridLabeling::adaptive ? "adaptive" : "original";
}

std::string mutation_name(const McOptions& opts) {
  if (opts.variant == McVariant::setget) {
    return opts.splitter_mutation == SplitterObjectMutation::allow_extra_stop
               ? "allow-extra-stop"
               : "none";
  }
  switch (opts.register_mutation) {
    case RwMutation::skip_closed_write: return "skip-closed-write";
    case RwMutation::skip_last_check: return "skip-last-check";
    default: return "none";
  }
}

void aggregate(McReport& report, const McSubsetReport& run) {
  report.states_explored += run.states_explored;
  report.max_depth = std::max(report.max_depth, run.max_depth);
  if (report.properties.empty()) {
    report.properties = run.properties;
  } else {
    for (std::size_t i = 0; i < report.properties.size(); ++i)
      report.properties[i].pass = report.properties[i].pass && run.properties[i].pass;
  }
  if (!report.violation && run.violation) report.violation = run.violation;
  report.runs.push_back(run);
}

}  // namespace

McReport model_check_renaming(const McOptions& opts) {
  if (opts.n < 1) throw InvalidParameter("model check requires n >= 1");
  Grid grid(opts.n, opts.labeling);
  std::vector<Pid> all;
  for (int i = 1; i <= opts.n; ++i) all.push_back(i);

  McReport report;
  report.check = "renaming";
  report.n = opts.n;
  report.variant = opts.variant == McVariant::setget ? "setget" : "registers";
  report.crashes = opts.crashes;
  report.labeling = labeling_name(opts.labeling);
  report.mutation = mutation_name(opts);

  // Full participation first, then smaller subsets by decreasing size.
  std::vector<std::vector<Pid>> participant_sets{all};
  if (opts.subsets) {
    for (int size = opts.n - 1; size >= 1; --size) {
      for (unsigned mask = 1; mask < (1u << opts.n); ++mask) {
        if (__builtin_popcount(mask) != size) continue;
        std::vector<Pid> subset;
        for (int i = 0; i < opts.n; ++i)
          if (mask & (1u << i)) subset.push_back(all[static_cast<std::size_t>(i)]);
        participant_sets.push_back(std::move(subset));
      }
    }
  }

  for (auto& subset : participant_sets) {
    Explorer explorer(opts, grid, subset, /*single_splitter=*/false);
    aggregate(report, explorer.run());
  }
  return report;
}

std::vector<McTraceStep> mc_enabled_after(const McOptions& opts,
                                          const std::vector<McTraceStep>& script) {
  if (opts.n < 1) throw InvalidParameter("probe requires n >= 1");
  Grid grid(opts.n, opts.labeling);
  std::vector<Pid> all;
  for (int i = 1; i <= opts.n; ++i) all.push_back(i);
  Explorer explorer(opts, grid, all, /*single_splitter=*/false);
  McState state = explorer.initial_state();
  for (const auto& wanted : script) {
    bool found = false;
    for (auto& [step, next] : explorer.transitions(state)) {
      if (step == wanted) {
        state = std::move(next);
        found = true;
        break;
      }
    }
    if (!found)
      throw InvalidParameter("scripted action not enabled: p" +
                             std::to_string(wanted.pid) + " " + wanted.action);
  }
  std::vector<McTraceStep> out;
  for (auto& [step, next] : explorer.transitions(state)) out.push_back(step);
  return out;
}

McReport check_rw_splitter(int n, RwMutation mutation, std::uint64_t state_cap) {
  if (n < 1 || n > 4) throw InvalidParameter("rw-splitter check requires 1 <= n <= 4");
  McOptions opts;
  opts.n = n;
  opts.variant = McVariant::registers;
  opts.register_mutation = mutation;
  opts.state_cap = state_cap;
  opts.subsets = false;
  Grid grid(n, GridLabeling::adaptive);
  std::vector<Pid> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);

  McReport report;
  report.check = "rw-splitter";
  report.n = n;
  report.variant = "registers";
  report.crashes = false;
  report.labeling = "adaptive";
  report.mutation = mutation == RwMutation::none
                        ? "none"
                        : (mutation == RwMutation::skip_closed_write ? "skip-closed-write"
                                                                     : "skip-last-check");

  Explorer explorer(opts, grid, all, /*single_splitter=*/true);
  aggregate(report, explorer.run());
  return report;
}

}  // namespace taskcheck
