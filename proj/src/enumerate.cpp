#include "taskcheck/enumerate.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "taskcheck/errors.hpp"

namespace taskcheck {

namespace {

// Per-pid progress under the one-shot discipline.
enum Progress : std::uint8_t { fresh = 0, set_done = 1, get_done = 2 };

struct Frame {
  ObjectState state;
  std::map<Pid, Progress> progress;
  SeqExecution exec;
};

// Candidate invocations in canonical order for one frame.
std::vector<Invocation> candidate_invocations(const SeqObject& o, const Frame& f,
                                              bool wellformed_only) {
  std::vector<Invocation> out;
  const bool single_op =
      o.op_kinds().size() == 1 && o.op_kinds().front() == OpKind::task_op;
  for (Pid pid : o.pids()) {
    const Progress p = f.progress.at(pid);
    if (single_op) {
      if (wellformed_only && p != fresh) continue;
      for (const Value& x : o.inputs_for(pid))
        out.push_back(Invocation{OpKind::task_op, pid, x});
    } else {
      if (!wellformed_only || p == fresh)
        for (const Value& x : o.inputs_for(pid))
          out.push_back(Invocation{OpKind::set, pid, x});
      if (!wellformed_only || p == set_done)
        out.push_back(Invocation{OpKind::get, pid, std::nullopt});
    }
  }
  return out;
}

Progress bump(OpKind op) { return op == OpKind::set ? set_done : get_done; }

}  // namespace

ExecSet sspec_enumerate(const SeqObject& o, bool wellformed_only, std::uint64_t cap) {
  ExecSet result;
  Frame root{o.initial_state(), {}, {}};
  for (Pid pid : o.pids()) root.progress[pid] = fresh;

  std::vector<Frame> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    result.insert(f.exec);
    if (result.size() > cap) throw ExplosionError(result.size(), cap);

    // Push in reverse so canonical order is explored first; the result is a
    // set, so only the cap check can observe the ordering.
    auto invs = candidate_invocations(o, f, wellformed_only);
    for (auto it = invs.rbegin(); it != invs.rend(); ++it) {
      for (const Branch& br : o.step(f.state, *it)) {
        Frame next{br.next, f.progress, f.exec};
        next.progress[it->pid] = bump(it->op);
        next.exec.push_back(SeqStep{*it, br.response});
        stack.push_back(std::move(next));
      }
    }
  }
  return result;
}

std::vector<ObjectState> reachable_states(const SeqObject& o, std::uint64_t cap) {
  std::set<std::string> seen;
  std::vector<ObjectState> out;
  struct Node {
    ObjectState state;
    std::map<Pid, Progress> progress;
  };
  std::vector<Node> stack;
  Node root{o.initial_state(), {}};
  for (Pid pid : o.pids()) root.progress[pid] = fresh;
  stack.push_back(root);
  Frame probe;  // reused for candidate generation
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(n.state.dump()).second) continue;
    out.push_back(n.state);
    if (out.size() > cap) throw ExplosionError(out.size(), cap);
    probe.state = n.state;
    probe.progress = n.progress;
    for (const Invocation& inv : candidate_invocations(o, probe, true)) {
      for (const Branch& br : o.step(n.state, inv)) {
        Node next{br.next, n.progress};
        next.progress[inv.pid] = bump(inv.op);
        stack.push_back(std::move(next));
      }
    }
  }
  return out;
}

EquivalenceResult objects_equivalent(const SeqObject& a, const SeqObject& b,
                                     std::uint64_t cap) {
  ExecSet sa = sspec_enumerate(a, true, cap);
  ExecSet sb = sspec_enumerate(b, true, cap);
  EquivalenceResult result;
  if (sa == sb) {
    result.equivalent = true;
    return result;
  }
  std::vector<SeqExecution> left_only, right_only;
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                      std::back_inserter(left_only), ExecLess{});
  std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                      std::back_inserter(right_only), ExecLess{});
  ExecLess less;
  if (right_only.empty() ||
      (!left_only.empty() && less(left_only.front(), right_only.front()))) {
    result.counterexample = left_only.front();
    result.counterexample_side = "left-only";
  } else {
    result.counterexample = right_only.front();
    result.counterexample_side = "right-only";
  }
  return result;
}

CorrectnessResult correct_wrt_task(const SeqObject& o, const Task& t,
                                   std::uint64_t cap) {
  CorrectnessResult result;
  for (const SeqExecution& exec : sspec_enumerate(o, true, cap)) {
    Simplex sigma, tau;
    for (const SeqStep& step : exec) {
      if (step.inv.op == OpKind::set && step.inv.input.has_value())
        sigma = sigma.with_vertex({step.inv.pid, *step.inv.input});
      if (step.inv.op == OpKind::get && step.res.output.has_value())
        tau = tau.with_vertex({step.res.pid, *step.res.output});
    }
    bool ok;
    if (sigma.empty()) {
      ok = tau.empty();
    } else {
      ok = t.inputs.contains(sigma) && t.delta_contains(sigma, tau);
    }
    if (!ok) {
      result.counterexample = exec;  // first in (length, lex) order
      return result;
    }
  }
  result.correct = true;
  return result;
}

}  // namespace taskcheck
