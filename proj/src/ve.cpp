#include "taskcheck/ve.hpp"

#include <algorithm>
#include <set>

#include "taskcheck/errors.hpp"

namespace taskcheck {

namespace {

struct VeTaskWalker {
  const Task& task;
  std::uint64_t cap;
  HistSet out;
  std::map<Pid, std::vector<Value>> input_values;
  std::map<Pid, std::vector<Value>> output_values;

  explicit VeTaskWalker(const Task& t, std::uint64_t cap) : task(t), cap(cap) {
    for (const auto& v : t.inputs.vertex_set()) input_values[v.pid].push_back(v.value);
    for (const auto& v : t.outputs.vertex_set()) output_values[v.pid].push_back(v.value);
  }

  void walk(History& h, Simplex& sigma, Simplex& tau, std::set<Pid>& invoked,
            std::set<Pid>& responded) {
    out.insert(h);
    if (out.size() > cap) throw ExplosionError(out.size(), cap);

    for (Pid pid : task.pids) {
      if (invoked.count(pid)) continue;
      auto it = input_values.find(pid);
      if (it == input_values.end()) continue;
      for (const Value& x : it->second) {
        Simplex grown = sigma.with_vertex({pid, x});
        if (!task.inputs.contains(grown)) continue;
        if (!task.delta_contains(grown, tau)) continue;
        h.push_back(inv_event(pid, x));
        invoked.insert(pid);
        std::swap(sigma, grown);
        walk(h, sigma, tau, invoked, responded);
        std::swap(sigma, grown);
        invoked.erase(pid);
        h.pop_back();
      }
    }
    for (Pid pid : task.pids) {
      if (!invoked.count(pid) || responded.count(pid)) continue;
      auto it = output_values.find(pid);
      if (it == output_values.end()) continue;
      for (const Value& y : it->second) {
        Simplex grown = tau.with_vertex({pid, y});
        if (!task.delta_contains(sigma, grown)) continue;
        h.push_back(resp_event(pid, y));
        responded.insert(pid);
        std::swap(tau, grown);
        walk(h, sigma, tau, invoked, responded);
        std::swap(tau, grown);
        responded.erase(pid);
        h.pop_back();
      }
    }
  }
};

// One operation instance of a history.
struct OpInstance {
  Invocation inv;
  std::optional<Response> response;  // set iff completed
  std::size_t inv_index = 0;
  std::size_t resp_index = 0;  // valid iff completed

  bool completed() const { return response.has_value(); }
};

std::vector<OpInstance> parse_ops(const History& h) {
  if (auto bad = first_ill_formed_event(h)) throw WellFormednessError(*bad);
  std::vector<OpInstance> ops;
  std::map<Pid, std::size_t> open;  // pid -> index into ops
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Event& e = h[i];
    if (e.type == EventType::invocation) {
      OpInstance op;
      op.inv = Invocation{e.op, e.pid, e.value};
      op.inv_index = i;
      open[e.pid] = ops.size();
      ops.push_back(std::move(op));
    } else {
      OpInstance& op = ops[open.at(e.pid)];
      op.response = Response{e.op, e.pid, e.value};
      op.resp_index = i;
    }
  }
  return ops;
}

struct LinSearch {
  const SeqObject& object;
  const std::vector<OpInstance>& ops;
  std::vector<std::vector<std::size_t>> must_precede;  // op -> ops that must come first
  std::set<std::pair<std::string, std::uint64_t>> failed;
  std::uint64_t completed_mask = 0;

  LinSearch(const SeqObject& o, const std::vector<OpInstance>& ops) : object(o), ops(ops) {
    must_precede.resize(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (ops[i].completed()) completed_mask |= std::uint64_t{1} << i;
      for (std::size_t j = 0; j < ops.size(); ++j) {
        // Real-time order: j's response precedes i's invocation.
        if (ops[j].completed() && ops[j].resp_index < ops[i].inv_index)
          must_precede[i].push_back(j);
      }
    }
  }

  bool search(const ObjectState& state, std::uint64_t done, SeqExecution& seq,
              std::vector<std::size_t>& chosen) {
    if ((done & completed_mask) == completed_mask) return true;
    auto key = std::make_pair(state.dump(), done);
    if (failed.count(key)) return false;

    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (done & (std::uint64_t{1} << i)) continue;
      bool ready = true;
      for (std::size_t j : must_precede[i])
        if (!(done & (std::uint64_t{1} << j))) ready = false;
      if (!ready) continue;

      for (const Branch& br : object.step(state, ops[i].inv)) {
        if (ops[i].completed() && !(br.response == *ops[i].response)) continue;
        seq.push_back(SeqStep{ops[i].inv, br.response});
        chosen.push_back(i);
        if (search(br.next, done | (std::uint64_t{1} << i), seq, chosen)) return true;
        chosen.pop_back();
        seq.pop_back();
      }
    }
    failed.insert(std::move(key));
    return false;
  }
};

}  // namespace

HistSet enumerate_VE_task(const Task& t, std::uint64_t cap) {
  VeTaskWalker walker(t, cap);
  History h;
  Simplex sigma, tau;
  std::set<Pid> invoked, responded;
  walker.walk(h, sigma, tau, invoked, responded);
  return std::move(walker.out);
}

LinResult linearizable(const History& h, const SeqObject& o) {
  auto ops = parse_ops(h);
  if (ops.size() > 60) throw ExplosionError(ops.size(), 60);
  LinSearch search(o, ops);
  SeqExecution seq;
  std::vector<std::size_t> chosen;
  LinResult result;
  if (!search.search(o.initial_state(), 0, seq, chosen)) return result;
  result.linearizable = true;
  LinWitness witness;
  witness.sequence = seq;
  for (std::size_t pos = 0; pos < chosen.size(); ++pos)
    witness.op_position[ops[chosen[pos]].inv_index] = pos;
  result.witness = std::move(witness);
  return result;
}

namespace {

struct VeObjWalker {
  const SeqObject& object;
  std::uint64_t cap;
  HistSet out;
  bool single_op = false;

  VeObjWalker(const SeqObject& o, std::uint64_t cap) : object(o), cap(cap) {
    auto kinds = o.op_kinds();
    single_op = kinds.size() == 1 && kinds.front() == OpKind::task_op;
  }

  // stage per pid: 0 none, 1 first op pending, 2 first done,
  // 3 second pending, 4 done. Task objects use stages 0, 3, 4.
  void walk(History& h, std::map<Pid, int>& stage) {
    out.insert(h);
    if (out.size() > cap) throw ExplosionError(out.size(), cap);

    for (Pid pid : object.pids()) {
      int s = stage.at(pid);
      std::vector<Event> candidates;
      if (single_op) {
        if (s == 0) {
          for (const Value& x : object.inputs_for(pid))
            candidates.push_back(inv_event(pid, x));
        } else if (s == 3) {
          for (const Value& y : object.outputs_for(OpKind::task_op, pid))
            candidates.push_back(resp_event(pid, y));
        }
      } else {
        if (s == 0) {
          for (const Value& x : object.inputs_for(pid))
            candidates.push_back(inv_event(pid, x, OpKind::set));
        } else if (s == 1) {
          candidates.push_back(resp_event_void(pid, OpKind::set));
        } else if (s == 2) {
          candidates.push_back(inv_event_noarg(pid, OpKind::get));
        } else if (s == 3) {
          for (const Value& y : object.outputs_for(OpKind::get, pid))
            candidates.push_back(resp_event(pid, y, OpKind::get));
        }
      }
      for (const Event& e : candidates) {
        h.push_back(e);
        int next_stage;
        if (e.type == EventType::invocation)
          next_stage = (single_op || e.op == OpKind::get) ? 3 : 1;
        else
          next_stage = (single_op || e.op == OpKind::get) ? 4 : 2;
        // Extensions of a non-linearizable history stay non-linearizable,
        // so pruning here loses nothing.
        if (linearizable(h, object).linearizable) {
          int saved = s;
          stage[pid] = next_stage;
          walk(h, stage);
          stage[pid] = saved;
        }
        h.pop_back();
      }
    }
  }
};

}  // namespace

HistSet enumerate_VE_obj(const SeqObject& o, std::uint64_t cap) {
  VeObjWalker walker(o, cap);
  History h;
  std::map<Pid, int> stage;
  for (Pid pid : o.pids()) stage[pid] = 0;
  walker.walk(h, stage);
  return std::move(walker.out);
}

}  // namespace taskcheck
