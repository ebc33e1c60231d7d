#include "taskcheck/synthesis.hpp"

#include <algorithm>

#include "taskcheck/errors.hpp"
#include "taskcheck/json_core.hpp"

namespace taskcheck {

namespace {

std::map<Pid, std::vector<Value>> vertex_values_by_pid(const Complex& c) {
  std::map<Pid, std::vector<Value>> out;
  for (const auto& v : c.vertex_set()) out[v.pid].push_back(v.value);
  return out;
}

// States are valid executions of the task, encoded as history JSON.
class StatePerExecutionObject final : public SeqObject {
 public:
  StatePerExecutionObject(const Task& t, std::uint64_t cap)
      : name_(t.name),
        pids_(t.pids),
        ve_(enumerate_VE_task(t, cap)),
        inputs_(vertex_values_by_pid(t.inputs)),
        outputs_(vertex_values_by_pid(t.outputs)) {}

  std::string kind() const override { return "state-per-execution(" + name_ + ")"; }
  std::vector<Pid> pids() const override { return pids_; }
  std::vector<OpKind> op_kinds() const override { return {OpKind::set, OpKind::get}; }
  ObjectState initial_state() const override { return history_to_json(History{}); }

  std::vector<Branch> step(const ObjectState& state, const Invocation& inv) const override {
    History e = history_from_json(state);
    std::vector<Branch> branches;
    if (inv.op == OpKind::set && inv.input.has_value()) {
      e.push_back(inv_event(inv.pid, *inv.input));
      if (ve_.count(e))
        branches.push_back(
            {history_to_json(e), Response{OpKind::set, inv.pid, std::nullopt}});
    } else if (inv.op == OpKind::get) {
      auto it = outputs_.find(inv.pid);
      if (it != outputs_.end()) {
        for (const Value& y : it->second) {
          e.push_back(resp_event(inv.pid, y));
          if (ve_.count(e))
            branches.push_back({history_to_json(e), Response{OpKind::get, inv.pid, y}});
          e.pop_back();
        }
      }
    }
    return finalize_branches(std::move(branches));
  }

  std::vector<Value> inputs_for(Pid pid) const override {
    auto it = inputs_.find(pid);
    return it == inputs_.end() ? std::vector<Value>{} : it->second;
  }

  std::vector<Value> outputs_for(OpKind op, Pid pid) const override {
    if (op != OpKind::get) return {};
    auto it = outputs_.find(pid);
    return it == outputs_.end() ? std::vector<Value>{} : it->second;
  }

 private:
  std::string name_;
  std::vector<Pid> pids_;
  HistSet ve_;
  std::map<Pid, std::vector<Value>> inputs_;
  std::map<Pid, std::vector<Value>> outputs_;
};

// Single-operation object whose sequential executions are exactly the
// complete sequential histories of a given set. States are those histories.
class SequentialCandidateObject final : public SeqObject {
 public:
  SequentialCandidateObject(std::string task_name, std::vector<Pid> pids,
                            HistSet sequential_members,
                            std::map<Pid, std::vector<Value>> inputs,
                            std::map<Pid, std::vector<Value>> outputs)
      : name_(std::move(task_name)),
        pids_(std::move(pids)),
        members_(std::move(sequential_members)),
        inputs_(std::move(inputs)),
        outputs_(std::move(outputs)) {}

  std::string kind() const override { return "sequential-candidate(" + name_ + ")"; }
  std::vector<Pid> pids() const override { return pids_; }
  std::vector<OpKind> op_kinds() const override { return {OpKind::task_op}; }
  ObjectState initial_state() const override { return history_to_json(History{}); }

  std::vector<Branch> step(const ObjectState& state, const Invocation& inv) const override {
    if (inv.op != OpKind::task_op || !inv.input.has_value()) return {};
    History e = history_from_json(state);
    e.push_back(inv_event(inv.pid, *inv.input));
    std::vector<Branch> branches;
    auto it = outputs_.find(inv.pid);
    if (it != outputs_.end()) {
      for (const Value& y : it->second) {
        e.push_back(resp_event(inv.pid, y));
        if (members_.count(e))
          branches.push_back(
              {history_to_json(e), Response{OpKind::task_op, inv.pid, y}});
        e.pop_back();
      }
    }
    return finalize_branches(std::move(branches));
  }

  std::vector<Value> inputs_for(Pid pid) const override {
    auto it = inputs_.find(pid);
    return it == inputs_.end() ? std::vector<Value>{} : it->second;
  }

  std::vector<Value> outputs_for(OpKind op, Pid pid) const override {
    if (op != OpKind::task_op) return {};
    auto it = outputs_.find(pid);
    return it == outputs_.end() ? std::vector<Value>{} : it->second;
  }

 private:
  std::string name_;
  std::vector<Pid> pids_;
  HistSet members_;
  std::map<Pid, std::vector<Value>> inputs_;
  std::map<Pid, std::vector<Value>> outputs_;
};

bool is_sequential_complete(const History& h) {
  if (h.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < h.size(); i += 2) {
    if (h[i].type != EventType::invocation || h[i + 1].type != EventType::response ||
        h[i].pid != h[i + 1].pid)
      return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<SeqObject> state_per_execution_object(const Task& t, std::uint64_t cap) {
  return std::make_shared<StatePerExecutionObject>(t, cap);
}

SeqExecution setget_execution_of(const History& h) {
  SeqExecution exec;
  for (const Event& e : h) {
    if (e.type == EventType::invocation) {
      exec.push_back(SeqStep{Invocation{OpKind::set, e.pid, e.value},
                             Response{OpKind::set, e.pid, std::nullopt}});
    } else {
      exec.push_back(SeqStep{Invocation{OpKind::get, e.pid, std::nullopt},
                             Response{OpKind::get, e.pid, e.value}});
    }
  }
  return exec;
}

History history_of_setget_execution(const SeqExecution& exec) {
  History h;
  for (const SeqStep& step : exec) {
    if (step.inv.op == OpKind::set) {
      if (!step.inv.input.has_value())
        throw Error("set step without an input value cannot induce a history");
      h.push_back(inv_event(step.inv.pid, *step.inv.input));
    } else if (step.inv.op == OpKind::get) {
      if (!step.res.output.has_value())
        throw Error("get step without an output value cannot induce a history");
      h.push_back(resp_event(step.res.pid, *step.res.output));
    } else {
      throw Error("task-operation step has no set/get reading");
    }
  }
  return h;
}

CompletenessResult complete_wrt_task(const SeqObject& o, const Task& t,
                                     std::uint64_t cap) {
  CompletenessResult result;
  ExecSet sspec = sspec_enumerate(o, true, cap);
  for (const History& e : enumerate_VE_task(t, cap)) {
    if (sspec.count(setget_execution_of(e)) == 0) {
      result.counterexample = e;
      return result;
    }
  }
  result.complete = true;
  return result;
}

BijectionResult check_bijection(const Task& t, const SeqObject& o, std::uint64_t cap) {
  BijectionResult result;
  HistSet ve = enumerate_VE_task(t, cap);
  ExecSet sspec = sspec_enumerate(o, true, cap);
  // The mapping is injective by construction (the history is recoverable
  // from its image), so matching both directions settles bijectivity.
  for (const History& e : ve) {
    if (sspec.count(setget_execution_of(e)) == 0) {
      result.unmatched_history = e;
      return result;
    }
  }
  for (const SeqExecution& s : sspec) {
    if (ve.count(history_of_setget_execution(s)) == 0) {
      result.unmatched_execution = s;
      return result;
    }
  }
  result.bijection = true;
  return result;
}

SequentializabilityVerdict sequentializable_single_op(const Task& t, std::uint64_t cap) {
  SequentializabilityVerdict verdict;
  HistSet vt = enumerate_VE_task(t, cap);

  HistSet sequential_members;
  for (const History& e : vt)
    if (is_sequential_complete(e)) sequential_members.insert(e);
  verdict.candidate = std::make_shared<SequentialCandidateObject>(
      t.name, t.pids, std::move(sequential_members), vertex_values_by_pid(t.inputs),
      vertex_values_by_pid(t.outputs));

  HistSet vx = enumerate_VE_obj(*verdict.candidate, cap);
  if (vt == vx) {
    verdict.sequential = true;
    return verdict;
  }

  // Preferred witness: full participation, all invocations first, then all
  // responses, both in pid order. This is the shape that exhibits inherent
  // concurrency; shorter witnesses with partial participation exist but
  // already show up at smaller n.
  std::vector<std::vector<Value>> input_choices, output_choices;
  auto inputs = vertex_values_by_pid(t.inputs);
  auto outputs = vertex_values_by_pid(t.outputs);
  for (Pid pid : t.pids) {
    input_choices.push_back(inputs[pid]);
    output_choices.push_back(outputs[pid]);
  }
  std::vector<std::size_t> xi(t.pids.size(), 0), yi(t.pids.size(), 0);
  auto advance = [](std::vector<std::size_t>& idx,
                    const std::vector<std::vector<Value>>& choices) {
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < choices[i].size()) return true;
      idx[i] = 0;
    }
    return false;
  };
  do {
    std::fill(yi.begin(), yi.end(), 0);
    do {
      History e;
      for (std::size_t i = 0; i < t.pids.size(); ++i)
        e.push_back(inv_event(t.pids[i], input_choices[i][xi[i]]));
      for (std::size_t i = 0; i < t.pids.size(); ++i)
        e.push_back(resp_event(t.pids[i], output_choices[i][yi[i]]));
      const bool in_task = vt.count(e) > 0;
      const bool in_obj = vx.count(e) > 0;
      if (in_task != in_obj) {
        verdict.counterexample = e;
        verdict.counterexample_side = in_task ? "task-only" : "object-only";
        return verdict;
      }
    } while (advance(yi, output_choices));
  } while (advance(xi, input_choices));

  // Fallback: shortest member of the symmetric difference.
  std::vector<History> task_only, obj_only;
  std::set_difference(vt.begin(), vt.end(), vx.begin(), vx.end(),
                      std::back_inserter(task_only), HistLess{});
  std::set_difference(vx.begin(), vx.end(), vt.begin(), vt.end(),
                      std::back_inserter(obj_only), HistLess{});
  HistLess less;
  if (obj_only.empty() || (!task_only.empty() && less(task_only.front(), obj_only.front()))) {
    verdict.counterexample = task_only.front();
    verdict.counterexample_side = "task-only";
  } else {
    verdict.counterexample = obj_only.front();
    verdict.counterexample_side = "object-only";
  }
  return verdict;
}

}  // namespace taskcheck
