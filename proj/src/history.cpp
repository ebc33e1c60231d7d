#include "taskcheck/history.hpp"

#include <map>

#include "taskcheck/errors.hpp"

namespace taskcheck {

Event inv_event(Pid pid, Value input, OpKind op) {
  return Event{EventType::invocation, op, pid, std::move(input)};
}

Event resp_event(Pid pid, Value output, OpKind op) {
  return Event{EventType::response, op, pid, std::move(output)};
}

Event inv_event_noarg(Pid pid, OpKind op) {
  return Event{EventType::invocation, op, pid, std::nullopt};
}

Event resp_event_void(Pid pid, OpKind op) {
  return Event{EventType::response, op, pid, std::nullopt};
}

std::optional<std::size_t> first_ill_formed_event(const History& h) {
  std::map<Pid, std::optional<OpKind>> pending;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Event& e = h[i];
    auto& p = pending[e.pid];
    if (e.type == EventType::invocation) {
      if (p.has_value()) return i;  // invoked while an op is pending
      p = e.op;
    } else {
      if (!p.has_value() || *p != e.op) return i;  // response out of thin air
      p.reset();
    }
  }
  return std::nullopt;
}

bool is_well_formed(const History& h) { return !first_ill_formed_event(h).has_value(); }

std::optional<std::size_t> first_discipline_violation(const History& h) {
  if (auto bad = first_ill_formed_event(h)) return bad;
  // Count completed-or-pending ops per pid and kind; enforce the one-shot
  // order: one task op, or one set followed by one get.
  std::map<Pid, int> stage;  // 0 none, 1 set started, 2 set done, 3 get started, 4 done
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Event& e = h[i];
    int& s = stage[e.pid];
    if (e.op == OpKind::task_op) {
      if (e.type == EventType::invocation) {
        if (s != 0) return i;
        s = 3;
      } else {
        s = 4;
      }
      continue;
    }
    if (e.type == EventType::invocation && e.op == OpKind::set) {
      if (s != 0) return i;
      s = 1;
    } else if (e.type == EventType::response && e.op == OpKind::set) {
      s = 2;
    } else if (e.type == EventType::invocation && e.op == OpKind::get) {
      if (s != 2) return i;
      s = 3;
    } else if (e.type == EventType::response && e.op == OpKind::get) {
      s = 4;
    }
  }
  return std::nullopt;
}

std::pair<Simplex, Simplex> extract_simplexes(const History& h) {
  if (auto bad = first_discipline_violation(h)) throw WellFormednessError(*bad);
  Simplex sigma, tau;
  for (const Event& e : h) {
    if (!e.value.has_value())
      throw WellFormednessError(static_cast<std::size_t>(&e - h.data()));
    if (e.type == EventType::invocation)
      sigma = sigma.with_vertex({e.pid, *e.value});
    else
      tau = tau.with_vertex({e.pid, *e.value});
  }
  return {sigma, tau};
}

SatisfiesResult satisfies_task(const History& h, const Task& t) {
  if (auto bad = first_discipline_violation(h)) throw WellFormednessError(*bad);
  Simplex sigma, tau;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Event& e = h[i];
    if (!e.value.has_value()) throw WellFormednessError(i);
    if (e.type == EventType::invocation) {
      Vertex v{e.pid, *e.value};
      if (!t.inputs.has_vertex(v))
        throw UnknownInputVertex("(" + std::to_string(e.pid) + "," + e.value->str() +
                                 ") is not an input vertex of task '" + t.name + "'");
      sigma = sigma.with_vertex(v);
      if (!t.inputs.contains(sigma) || !t.delta_contains(sigma, tau))
        return {false, i + 1};
    } else {
      tau = tau.with_vertex({e.pid, *e.value});
      if (!t.delta_contains(sigma, tau)) return {false, i + 1};
    }
  }
  return {true, h.size()};
}

}  // namespace taskcheck
