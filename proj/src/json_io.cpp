#include "taskcheck/json_io.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace taskcheck {

namespace {

Json simplex_list_json(const std::vector<Simplex>& simplexes) {
  std::vector<Simplex> sorted = simplexes;
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const auto& s : sorted) out.push_back(simplex_to_json(s));
  return out;
}

std::vector<Simplex> simplex_list_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<Simplex> out;
  for (const auto& s : j) out.push_back(simplex_from_json(s));
  return out;
}

}  // namespace

Json task_to_json(const Task& t) {
  Json delta = Json::array();
  for (const auto& [sigma, image] : t.delta) {
    delta.push_back(Json{{"input", simplex_to_json(sigma)},
                         {"output_maximal", simplex_list_json(image.maximal_simplexes())}});
  }
  return Json{{"name", t.name},
              {"pids", t.pids},
              {"input_maximal", simplex_list_json(t.inputs.maximal_simplexes())},
              {"output_maximal", simplex_list_json(t.outputs.maximal_simplexes())},
              {"delta", delta}};
}

Task task_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("task file must contain a JSON object");
  for (const char* field : {"pids", "input_maximal", "output_maximal", "delta"})
    if (!j.contains(field))
      throw SchemaError(std::string("task file is missing the '") + field + "' field");
  Task t;
  t.name = j.value("name", std::string("task"));
  for (const auto& p : j.at("pids")) t.pids.push_back(p.get<Pid>());
  std::sort(t.pids.begin(), t.pids.end());
  t.inputs = Complex::closure(simplex_list_from_json(j.at("input_maximal"), "input_maximal"));
  t.outputs =
      Complex::closure(simplex_list_from_json(j.at("output_maximal"), "output_maximal"));
  for (const auto& entry : j.at("delta")) {
    if (!entry.is_object() || !entry.contains("input") || !entry.contains("output_maximal"))
      throw SchemaError("each delta entry needs 'input' and 'output_maximal'");
    Simplex sigma = simplex_from_json(entry.at("input"));
    Complex image =
        Complex::closure(simplex_list_from_json(entry.at("output_maximal"), "output_maximal"));
    if (!t.delta.emplace(sigma, std::move(image)).second)
      throw SchemaError("duplicate delta entry for simplex " + sigma.str());
  }
  for (const auto& sigma : t.inputs.simplexes()) {
    if (t.delta.count(sigma) == 0)
      throw SchemaError("delta entry missing for input simplex " + sigma.str());
  }
  return t;
}

Json validity_report_to_json(const ValidityReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json entry{{"rule", v.rule}, {"message", v.message}};
    if (v.witness) entry["witness"] = simplex_to_json(*v.witness);
    if (v.second_witness) entry["second_witness"] = simplex_to_json(*v.second_witness);
    violations.push_back(std::move(entry));
  }
  return Json{{"valid", r.valid()}, {"violations", violations}};
}

ValidityReport validity_report_from_json(const Json& j) {
  ValidityReport r;
  for (const auto& entry : j.at("violations")) {
    TaskViolation v;
    v.rule = entry.at("rule").get<std::string>();
    v.message = entry.at("message").get<std::string>();
    if (entry.contains("witness")) v.witness = simplex_from_json(entry.at("witness"));
    if (entry.contains("second_witness"))
      v.second_witness = simplex_from_json(entry.at("second_witness"));
    r.violations.push_back(std::move(v));
  }
  return r;
}

Json invocation_to_json(const Invocation& inv) {
  Json out{{"op", op_kind_name(inv.op)}, {"pid", inv.pid}};
  if (inv.input) out["input"] = value_to_json(*inv.input);
  return out;
}

Invocation invocation_from_json(const Json& j) {
  Invocation inv;
  inv.op = op_kind_from_name(j.at("op").get<std::string>());
  inv.pid = j.at("pid").get<Pid>();
  if (j.contains("input")) inv.input = value_from_json(j.at("input"));
  return inv;
}

Json response_to_json(const Response& res) {
  Json out{{"op", op_kind_name(res.op)}, {"pid", res.pid}};
  if (res.output) out["output"] = value_to_json(*res.output);
  return out;
}

Response response_from_json(const Json& j) {
  Response res;
  res.op = op_kind_from_name(j.at("op").get<std::string>());
  res.pid = j.at("pid").get<Pid>();
  if (j.contains("output")) res.output = value_from_json(j.at("output"));
  return res;
}

Json seq_execution_to_json(const SeqExecution& exec) {
  Json out = Json::array();
  for (const SeqStep& step : exec) {
    Json entry{{"op", op_kind_name(step.inv.op)}, {"pid", step.inv.pid}};
    if (step.inv.input) entry["input"] = value_to_json(*step.inv.input);
    if (step.res.output) entry["output"] = value_to_json(*step.res.output);
    out.push_back(std::move(entry));
  }
  return out;
}

SeqExecution seq_execution_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("execution must be an array of steps");
  SeqExecution exec;
  for (const auto& entry : j) {
    SeqStep step;
    step.inv.op = op_kind_from_name(entry.at("op").get<std::string>());
    step.inv.pid = entry.at("pid").get<Pid>();
    if (entry.contains("input")) step.inv.input = value_from_json(entry.at("input"));
    step.res.op = step.inv.op;
    step.res.pid = step.inv.pid;
    if (entry.contains("output")) step.res.output = value_from_json(entry.at("output"));
    exec.push_back(std::move(step));
  }
  return exec;
}

namespace {

// Table-driven automaton rebuilt from an exported file.
class TableObject final : public SeqObject {
 public:
  explicit TableObject(const Json& j) {
    kind_ = j.at("kind").get<std::string>();
    for (const auto& p : j.at("pids")) pids_.push_back(p.get<Pid>());
    for (const auto& op : j.at("ops")) op_kinds_.push_back(op_kind_from_name(op));
    for (const auto& s : j.at("states")) states_.push_back(s);
    initial_ = j.at("initial").get<std::size_t>();
    for (const auto& tr : j.at("transitions")) {
      const std::size_t from = tr.at("from").get<std::size_t>();
      Invocation inv = invocation_from_json(tr.at("inv"));
      Response res = response_from_json(tr.at("resp"));
      const std::size_t to = tr.at("to").get<std::size_t>();
      table_[states_[from].dump()].push_back({inv, res, to});
    }
    for (const auto& [pid, values] : j.at("inputs").items())
      for (const auto& v : values) inputs_[std::stoi(pid)].push_back(value_from_json(v));
    for (const auto& [op, per_pid] : j.at("outputs").items())
      for (const auto& [pid, values] : per_pid.items())
        for (const auto& v : values)
          outputs_[{op_kind_from_name(op), std::stoi(pid)}].push_back(value_from_json(v));
  }

  std::string kind() const override { return kind_; }
  std::vector<Pid> pids() const override { return pids_; }
  std::vector<OpKind> op_kinds() const override { return op_kinds_; }
  ObjectState initial_state() const override { return states_[initial_]; }

  std::vector<Branch> step(const ObjectState& state, const Invocation& inv) const override {
    auto it = table_.find(state.dump());
    if (it == table_.end()) return {};
    std::vector<Branch> branches;
    for (const auto& row : it->second)
      if (row.inv == inv) branches.push_back({states_[row.to], row.res});
    return finalize_branches(std::move(branches));
  }

  std::vector<Value> inputs_for(Pid pid) const override {
    auto it = inputs_.find(pid);
    return it == inputs_.end() ? std::vector<Value>{} : it->second;
  }

  std::vector<Value> outputs_for(OpKind op, Pid pid) const override {
    auto it = outputs_.find({op, pid});
    return it == outputs_.end() ? std::vector<Value>{} : it->second;
  }

 private:
  struct Row {
    Invocation inv;
    Response res;
    std::size_t to;
  };
  std::string kind_;
  std::vector<Pid> pids_;
  std::vector<OpKind> op_kinds_;
  std::vector<ObjectState> states_;
  std::size_t initial_ = 0;
  std::map<std::string, std::vector<Row>> table_;
  std::map<Pid, std::vector<Value>> inputs_;
  std::map<std::pair<OpKind, Pid>, std::vector<Value>> outputs_;
};

}  // namespace

Json automaton_to_json(const SeqObject& o, std::uint64_t cap) {
  // Breadth-first discovery under the one-shot discipline so state ids are
  // stable across exports.
  const bool single_op =
      o.op_kinds().size() == 1 && o.op_kinds().front() == OpKind::task_op;
  struct NodeProgress {
    std::map<Pid, int> stage;  // 0 fresh, 1 set done, 2 done
  };
  std::map<std::string, std::size_t> ids;
  std::vector<ObjectState> states;
  Json transitions = Json::array();
  // Progress differs per path; explore (state, progress) pairs but number
  // states by their first appearance.
  std::set<std::string> visited;
  std::deque<std::pair<ObjectState, NodeProgress>> queue;

  NodeProgress init;
  for (Pid pid : o.pids()) init.stage[pid] = 0;
  queue.push_back({o.initial_state(), init});

  auto state_id = [&](const ObjectState& s) {
    auto [it, inserted] = ids.emplace(s.dump(), states.size());
    if (inserted) states.push_back(s);
    return it->second;
  };
  state_id(o.initial_state());

  std::set<std::string> transition_keys;  // dedup across progress contexts
  while (!queue.empty()) {
    auto [state, progress] = queue.front();
    queue.pop_front();
    std::string visit_key = state.dump();
    for (Pid pid : o.pids()) visit_key += "|" + std::to_string(progress.stage.at(pid));
    if (!visited.insert(visit_key).second) continue;
    if (visited.size() > cap) throw ExplosionError(visited.size(), cap);

    std::vector<Invocation> invs;
    for (Pid pid : o.pids()) {
      const int stage = progress.stage.at(pid);
      if (single_op) {
        if (stage == 0)
          for (const Value& x : o.inputs_for(pid))
            invs.push_back(Invocation{OpKind::task_op, pid, x});
      } else {
        if (stage == 0)
          for (const Value& x : o.inputs_for(pid))
            invs.push_back(Invocation{OpKind::set, pid, x});
        if (stage == 1) invs.push_back(Invocation{OpKind::get, pid, std::nullopt});
      }
    }
    for (const Invocation& inv : invs) {
      for (const Branch& br : o.step(state, inv)) {
        const std::size_t from = state_id(state);
        const std::size_t to = state_id(br.next);
        Json tr{{"from", from},
                {"inv", invocation_to_json(inv)},
                {"resp", response_to_json(br.response)},
                {"to", to}};
        if (transition_keys.insert(tr.dump()).second) transitions.push_back(tr);
        NodeProgress next = progress;
        next.stage[inv.pid] = progress.stage.at(inv.pid) + 1;
        queue.push_back({br.next, next});
      }
    }
  }

  Json states_json = Json::array();
  for (const auto& s : states) states_json.push_back(s);
  Json inputs = Json::object();
  for (Pid pid : o.pids()) {
    Json values = Json::array();
    for (const Value& v : o.inputs_for(pid)) values.push_back(value_to_json(v));
    inputs[std::to_string(pid)] = values;
  }
  Json outputs = Json::object();
  for (OpKind op : o.op_kinds()) {
    Json per_pid = Json::object();
    bool any = false;
    for (Pid pid : o.pids()) {
      Json values = Json::array();
      for (const Value& v : o.outputs_for(op, pid)) values.push_back(value_to_json(v));
      if (!values.empty()) any = true;
      per_pid[std::to_string(pid)] = values;
    }
    if (any) outputs[op_kind_name(op)] = per_pid;
  }
  Json ops = Json::array();
  for (OpKind op : o.op_kinds()) ops.push_back(op_kind_name(op));

  return Json{{"kind", o.kind()},   {"pids", o.pids()},     {"ops", ops},
              {"initial", 0},       {"states", states_json}, {"transitions", transitions},
              {"inputs", inputs},   {"outputs", outputs}};
}

std::shared_ptr<SeqObject> automaton_from_json(const Json& j) {
  return std::make_shared<TableObject>(j);
}

namespace {

Json optional_history_json(const std::optional<History>& h) {
  return h ? history_to_json(*h) : Json(nullptr);
}

Json optional_exec_json(const std::optional<SeqExecution>& e) {
  return e ? seq_execution_to_json(*e) : Json(nullptr);
}

}  // namespace

Json equivalence_to_json(const EquivalenceResult& r) {
  Json out{{"equivalent", r.equivalent}};
  out["counterexample"] = optional_exec_json(r.counterexample);
  if (r.counterexample) out["side"] = r.counterexample_side;
  return out;
}

EquivalenceResult equivalence_from_json(const Json& j) {
  EquivalenceResult r;
  r.equivalent = j.at("equivalent").get<bool>();
  if (!j.at("counterexample").is_null()) {
    r.counterexample = seq_execution_from_json(j.at("counterexample"));
    r.counterexample_side = j.value("side", std::string());
  }
  return r;
}

Json correctness_to_json(const CorrectnessResult& r) {
  return Json{{"correct", r.correct},
              {"counterexample", optional_exec_json(r.counterexample)}};
}

CorrectnessResult correctness_from_json(const Json& j) {
  CorrectnessResult r;
  r.correct = j.at("correct").get<bool>();
  if (!j.at("counterexample").is_null())
    r.counterexample = seq_execution_from_json(j.at("counterexample"));
  return r;
}

Json completeness_to_json(const CompletenessResult& r) {
  return Json{{"complete", r.complete},
              {"counterexample", optional_history_json(r.counterexample)}};
}

CompletenessResult completeness_from_json(const Json& j) {
  CompletenessResult r;
  r.complete = j.at("complete").get<bool>();
  if (!j.at("counterexample").is_null())
    r.counterexample = history_from_json(j.at("counterexample"));
  return r;
}

Json bijection_to_json(const BijectionResult& r) {
  return Json{{"bijection", r.bijection},
              {"unmatched_history", optional_history_json(r.unmatched_history)},
              {"unmatched_execution", optional_exec_json(r.unmatched_execution)}};
}

BijectionResult bijection_from_json(const Json& j) {
  BijectionResult r;
  r.bijection = j.at("bijection").get<bool>();
  if (!j.at("unmatched_history").is_null())
    r.unmatched_history = history_from_json(j.at("unmatched_history"));
  if (!j.at("unmatched_execution").is_null())
    r.unmatched_execution = seq_execution_from_json(j.at("unmatched_execution"));
  return r;
}

Json satisfies_to_json(const SatisfiesResult& r) {
  return Json{{"satisfies", r.satisfies}, {"failing_prefix", r.failing_prefix}};
}

SatisfiesResult satisfies_from_json(const Json& j) {
  return SatisfiesResult{j.at("satisfies").get<bool>(),
                         j.at("failing_prefix").get<std::size_t>()};
}

Json ve_to_json(const HistSet& histories) {
  Json out = Json::array();
  for (const History& h : histories) out.push_back(history_to_json(h));
  return Json{{"count", histories.size()}, {"histories", out}};
}

HistSet ve_from_json(const Json& j) {
  HistSet out;
  for (const auto& h : j.at("histories")) out.insert(history_from_json(h));
  return out;
}

Json sequentializability_to_json(const SequentializabilityVerdict& v) {
  Json out{{"sequential", v.sequential}};
  out["counterexample"] = optional_history_json(v.counterexample);
  if (v.counterexample) out["side"] = v.counterexample_side;
  return out;
}

SequentializabilityVerdict sequentializability_from_json(const Json& j) {
  SequentializabilityVerdict v;
  v.sequential = j.at("sequential").get<bool>();
  if (!j.at("counterexample").is_null()) {
    v.counterexample = history_from_json(j.at("counterexample"));
    v.counterexample_side = j.value("side", std::string());
  }
  return v;
}

namespace {

Json trace_to_json(const std::vector<McTraceStep>& trace) {
  Json out = Json::array();
  for (const auto& step : trace)
    out.push_back(Json{{"pid", step.pid}, {"action", step.action}});
  return out;
}

std::vector<McTraceStep> trace_from_json(const Json& j) {
  std::vector<McTraceStep> out;
  for (const auto& step : j)
    out.push_back({step.at("pid").get<Pid>(), step.at("action").get<std::string>()});
  return out;
}

Json properties_to_json(const std::vector<McPropertyResult>& props) {
  Json out = Json::array();
  for (const auto& p : props)
    out.push_back(Json{{"property", p.property}, {"pass", p.pass}});
  return out;
}

std::vector<McPropertyResult> properties_from_json(const Json& j) {
  std::vector<McPropertyResult> out;
  for (const auto& p : j)
    out.push_back({p.at("property").get<std::string>(), p.at("pass").get<bool>()});
  return out;
}

Json violation_to_json(const std::optional<McViolation>& v) {
  if (!v) return nullptr;
  Json out{{"property", v->property}, {"trace", trace_to_json(v->trace)}};
  out["splitter_history"] = optional_history_json(v->splitter_history);
  return out;
}

std::optional<McViolation> violation_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  McViolation v;
  v.property = j.at("property").get<std::string>();
  v.trace = trace_from_json(j.at("trace"));
  if (!j.at("splitter_history").is_null())
    v.splitter_history = history_from_json(j.at("splitter_history"));
  return v;
}

}  // namespace

Json mc_report_to_json(const McReport& r) {
  Json runs = Json::array();
  for (const auto& run : r.runs) {
    Json violations = Json::array();
    for (const auto& v : run.violations)
      violations.push_back(violation_to_json(std::optional<McViolation>(v)));
    runs.push_back(Json{{"participants", run.participants},
                        {"states_explored", run.states_explored},
                        {"max_depth", run.max_depth},
                        {"properties", properties_to_json(run.properties)},
                        {"violation", violation_to_json(run.violation)},
                        {"violations", violations}});
  }
  return Json{{"check", r.check},
              {"n", r.n},
              {"variant", r.variant},
              {"crashes", r.crashes},
              {"labeling", r.labeling},
              {"mutation", r.mutation},
              {"pass", r.pass()},
              {"states_explored", r.states_explored},
              {"max_depth", r.max_depth},
              {"properties", properties_to_json(r.properties)},
              {"violation", violation_to_json(r.violation)},
              {"runs", runs}};
}

McReport mc_report_from_json(const Json& j) {
  McReport r;
  r.check = j.at("check").get<std::string>();
  r.n = j.at("n").get<int>();
  r.variant = j.at("variant").get<std::string>();
  r.crashes = j.at("crashes").get<bool>();
  r.labeling = j.at("labeling").get<std::string>();
  r.mutation = j.at("mutation").get<std::string>();
  r.states_explored = j.at("states_explored").get<std::uint64_t>();
  r.max_depth = j.at("max_depth").get<int>();
  r.properties = properties_from_json(j.at("properties"));
  r.violation = violation_from_json(j.at("violation"));
  for (const auto& run : j.at("runs")) {
    McSubsetReport s;
    for (const auto& p : run.at("participants")) s.participants.push_back(p.get<Pid>());
    s.states_explored = run.at("states_explored").get<std::uint64_t>();
    s.max_depth = run.at("max_depth").get<int>();
    s.properties = properties_from_json(run.at("properties"));
    s.violation = violation_from_json(run.at("violation"));
    for (const auto& v : run.at("violations"))
      if (auto parsed = violation_from_json(v)) s.violations.push_back(*parsed);
    r.runs.push_back(std::move(s));
  }
  return r;
}

}  // namespace taskcheck
