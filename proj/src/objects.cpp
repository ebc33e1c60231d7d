#include "taskcheck/objects.hpp"

#include <algorithm>
#include <set>

#include "taskcheck/errors.hpp"
#include "taskcheck/json_core.hpp"
#include "taskcheck/task_library.hpp"

namespace taskcheck {

namespace {

Json pid_list_json(const std::vector<Pid>& pids) {
  Json out = Json::array();
  for (Pid p : pids) out.push_back(p);
  return out;
}

std::vector<Pid> pid_list_from_json(const Json& j) {
  std::vector<Pid> out;
  for (const auto& e : j) out.push_back(e.get<Pid>());
  return out;
}

class GenericSetGetObject final : public SeqObject {
 public:
  explicit GenericSetGetObject(Task t) : task_(std::move(t)) {
    auto report = validate_task(task_);
    if (!report.valid())
      throw InvalidParameter("generic object requires a valid task; '" + task_.name +
                             "' violates " + report.violations.front().rule);
  }

  std::string kind() const override { return "generic-setget(" + task_.name + ")"; }
  std::vector<Pid> pids() const override { return task_.pids; }
  std::vector<OpKind> op_kinds() const override { return {OpKind::set, OpKind::get}; }

  ObjectState initial_state() const override {
    return Json{{"sigma", simplex_to_json(Simplex{})}, {"tau", simplex_to_json(Simplex{})}};
  }

  std::vector<Branch> step(const ObjectState& state, const Invocation& inv) const override {
    Simplex sigma = simplex_from_json(state.at("sigma"));
    Simplex tau = simplex_from_json(state.at("tau"));
    std::vector<Branch> branches;

    if (inv.op == OpKind::set) {
      if (!inv.input.has_value() || sigma.has_pid(inv.pid)) return {};
      Simplex grown = sigma.with_vertex({inv.pid, *inv.input});
      if (!task_.inputs.contains(grown)) return {};
      branches.push_back(
          {Json{{"sigma", simplex_to_json(grown)}, {"tau", simplex_to_json(tau)}},
           Response{OpKind::set, inv.pid, std::nullopt}});
    } else if (inv.op == OpKind::get) {
      if (!sigma.has_pid(inv.pid) || tau.has_pid(inv.pid)) return {};
      const Complex& image = task_.delta_at(sigma);
      for (const Value& y : outputs_for(OpKind::get, inv.pid)) {
        Simplex grown = tau.with_vertex({inv.pid, y});
        if (!image.contains(grown)) continue;
        branches.push_back(
            {Json{{"sigma", simplex_to_json(sigma)}, {"tau", simplex_to_json(grown)}},
             Response{OpKind::get, inv.pid, y}});
      }
    }
    return finalize_branches(std::move(branches));
  }

  std::vector<Value> inputs_for(Pid pid) const override {
    std::vector<Value> out;
    for (const auto& v : task_.inputs.vertex_set())
      if (v.pid == pid) out.push_back(v.value);
    return out;
  }

  std::vector<Value> outputs_for(OpKind op, Pid pid) const override {
    if (op != OpKind::get) return {};
    std::vector<Value> out;
    for (const auto& v : task_.outputs.vertex_set())
      if (v.pid == pid) out.push_back(v.value);
    return out;
  }

 private:
  Task task_;
};

class AdhocSplitterObject final : public SeqObject {
 public:
  AdhocSplitterObject(std::vector<Pid> pids, SplitterObjectMutation mutation)
      : pids_(std::move(pids)), mutation_(mutation) {
    std::sort(pids_.begin(), pids_.end());
  }

  std::string kind() const override { return "adhoc-splitter"; }
  std::vector<Pid> pids() const override { return pids_; }
  std::vector<OpKind> op_kinds() const override { return {OpKind::set, OpKind::get}; }

  ObjectState initial_state() const override {
    return Json{{"participants", Json::array()},
                {"stop", Json::array()},
                {"down", Json::array()},
                {"right", Json::array()}};
  }

  std::vector<Branch> step(const ObjectState& state, const Invocation& inv) const override {
    auto participants = pid_list_from_json(state.at("participants"));
    auto stop = pid_list_from_json(state.at("stop"));
    auto down = pid_list_from_json(state.at("down"));
    auto right = pid_list_from_json(state.at("right"));
    auto has = [](const std::vector<Pid>& s, Pid p) {
      return std::find(s.begin(), s.end(), p) != s.end();
    };
    std::vector<Branch> branches;

    if (inv.op == OpKind::set) {
      // A process registers with its own id.
      if (inv.input != std::optional<Value>(Value(inv.pid))) return {};
      if (has(participants, inv.pid) || !std::binary_search(pids_.begin(), pids_.end(), inv.pid))
        return {};
      auto grown = participants;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), inv.pid), inv.pid);
      branches.push_back({make_state(grown, stop, down, right),
                          Response{OpKind::set, inv.pid, std::nullopt}});
    } else if (inv.op == OpKind::get) {
      if (!has(participants, inv.pid) || has(stop, inv.pid) || has(down, inv.pid) ||
          has(right, inv.pid))
        return {};
      const int others = static_cast<int>(participants.size()) - 1;
      auto add_sorted = [](std::vector<Pid> s, Pid p) {
        s.insert(std::upper_bound(s.begin(), s.end(), p), p);
        return s;
      };
      if (stop.empty() || mutation_ == SplitterObjectMutation::allow_extra_stop) {
        branches.push_back({make_state(participants, add_sorted(stop, inv.pid), down, right),
                            Response{OpKind::get, inv.pid, kStop}});
      }
      if (static_cast<int>(down.size()) < others) {
        branches.push_back({make_state(participants, stop, add_sorted(down, inv.pid), right),
                            Response{OpKind::get, inv.pid, kDown}});
      }
      if (static_cast<int>(right.size()) < others) {
        branches.push_back({make_state(participants, stop, down, add_sorted(right, inv.pid)),
                            Response{OpKind::get, inv.pid, kRight}});
      }
    }
    return finalize_branches(std::move(branches));
  }

  std::vector<Value> inputs_for(Pid pid) const override { return {Value(pid)}; }

  std::vector<Value> outputs_for(OpKind op, Pid) const override {
    if (op != OpKind::get) return {};
    return {kStop, kDown, kRight};
  }

 private:
  static ObjectState make_state(const std::vector<Pid>& participants,
                                const std::vector<Pid>& stop,
                                const std::vector<Pid>& down,
                                const std::vector<Pid>& right) {
    return Json{{"participants", pid_list_json(participants)},
                {"stop", pid_list_json(stop)},
                {"down", pid_list_json(down)},
                {"right", pid_list_json(right)}};
  }

  std::vector<Pid> pids_;
  SplitterObjectMutation mutation_;
};

class AdhocExchangerObject final : public SeqObject {
 public:
  explicit AdhocExchangerObject(std::vector<Pid> pids) : pids_(std::move(pids)) {
    std::sort(pids_.begin(), pids_.end());
  }

  std::string kind() const override { return "adhoc-exchanger"; }
  std::vector<Pid> pids() const override { return pids_; }
  std::vector<OpKind> op_kinds() const override { return {OpKind::set, OpKind::get}; }

  ObjectState initial_state() const override {
    return Json{{"participants", Json::array()}, {"matching", Json::array()}};
  }

  std::vector<Branch> step(const ObjectState& state, const Invocation& inv) const override {
    auto participants = pid_list_from_json(state.at("participants"));
    const Json& matching = state.at("matching");
    auto has = [](const std::vector<Pid>& s, Pid p) {
      return std::find(s.begin(), s.end(), p) != s.end();
    };
    std::vector<Branch> branches;

    if (inv.op == OpKind::set) {
      if (inv.input != std::optional<Value>(Value(inv.pid))) return {};
      if (has(participants, inv.pid) || !std::binary_search(pids_.begin(), pids_.end(), inv.pid))
        return {};
      auto grown = participants;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), inv.pid), inv.pid);
      branches.push_back({Json{{"participants", pid_list_json(grown)}, {"matching", matching}},
                          Response{OpKind::set, inv.pid, std::nullopt}});
      return finalize_branches(std::move(branches));
    }
    if (inv.op != OpKind::get || !has(participants, inv.pid)) return {};

    // Matched already (by a partner's get): report the recorded partner
    // without touching the state.
    std::set<Pid> matched;
    for (const auto& pair : matching) {
      for (const auto& side : pair)
        if (!side.is_null()) matched.insert(side.get<Pid>());
    }
    if (matched.count(inv.pid) > 0) {
      for (const auto& pair : matching) {
        bool mine = false;
        for (const auto& side : pair)
          if (!side.is_null() && side.get<Pid>() == inv.pid) mine = true;
        if (!mine) continue;
        Value partner = Value::bot();
        for (const auto& side : pair)
          if (side.is_null())
            partner = Value::bot();
          else if (side.get<Pid>() != inv.pid)
            partner = Value(side.get<Pid>());
        branches.push_back({state, Response{OpKind::get, inv.pid, partner}});
        break;
      }
      return finalize_branches(std::move(branches));
    }

    // Free to match: any unmatched participant other than oneself, or bot.
    auto with_pair = [&](const Json& pair) {
      Json grown = matching;
      grown.push_back(pair);
      std::sort(grown.begin(), grown.end(),
                [](const Json& a, const Json& b) { return a.dump() < b.dump(); });
      return Json{{"participants", pid_list_json(participants)}, {"matching", grown}};
    };
    branches.push_back({with_pair(Json::array({inv.pid, nullptr})),
                        Response{OpKind::get, inv.pid, Value::bot()}});
    for (Pid q : participants) {
      if (q == inv.pid || matched.count(q) > 0) continue;
      Json pair = Json::array({std::min(q, inv.pid), std::max(q, inv.pid)});
      branches.push_back({with_pair(pair), Response{OpKind::get, inv.pid, Value(q)}});
    }
    return finalize_branches(std::move(branches));
  }

  std::vector<Value> inputs_for(Pid pid) const override { return {Value(pid)}; }

  std::vector<Value> outputs_for(OpKind op, Pid pid) const override {
    if (op != OpKind::get) return {};
    std::vector<Value> out{Value::bot()};
    for (Pid q : pids_)
      if (q != pid) out.push_back(Value(q));
    return out;
  }

 private:
  std::vector<Pid> pids_;
};

// get(id) always answers `answer`; set just records the caller.
class ConstantAnswerObject final : public SeqObject {
 public:
  ConstantAnswerObject(std::vector<Pid> pids, Value answer)
      : pids_(std::move(pids)), answer_(std::move(answer)) {
    std::sort(pids_.begin(), pids_.end());
  }

  std::string kind() const override { return "constant-answer"; }
  std::vector<Pid> pids() const override { return pids_; }
  std::vector<OpKind> op_kinds() const override { return {OpKind::set, OpKind::get}; }

  ObjectState initial_state() const override {
    return Json{{"set", Json::array()}, {"got", Json::array()}};
  }

  std::vector<Branch> step(const ObjectState& state, const Invocation& inv) const override {
    auto set_pids = pid_list_from_json(state.at("set"));
    auto got_pids = pid_list_from_json(state.at("got"));
    auto has = [](const std::vector<Pid>& s, Pid p) {
      return std::find(s.begin(), s.end(), p) != s.end();
    };
    auto add_sorted = [](std::vector<Pid> s, Pid p) {
      s.insert(std::upper_bound(s.begin(), s.end(), p), p);
      return s;
    };
    std::vector<Branch> branches;
    if (inv.op == OpKind::set) {
      if (inv.input != std::optional<Value>(Value(inv.pid)) || has(set_pids, inv.pid))
        return {};
      branches.push_back({Json{{"set", pid_list_json(add_sorted(set_pids, inv.pid))},
                               {"got", pid_list_json(got_pids)}},
                          Response{OpKind::set, inv.pid, std::nullopt}});
    } else if (inv.op == OpKind::get) {
      if (!has(set_pids, inv.pid) || has(got_pids, inv.pid)) return {};
      branches.push_back({Json{{"set", pid_list_json(set_pids)},
                               {"got", pid_list_json(add_sorted(got_pids, inv.pid))}},
                          Response{OpKind::get, inv.pid, answer_}});
    }
    return finalize_branches(std::move(branches));
  }

  std::vector<Value> inputs_for(Pid pid) const override { return {Value(pid)}; }

  std::vector<Value> outputs_for(OpKind op, Pid) const override {
    if (op != OpKind::get) return {};
    return {answer_};
  }

 private:
  std::vector<Pid> pids_;
  Value answer_;
};

}  // namespace

std::shared_ptr<SeqObject> generic_setget_object(Task t) {
  return std::make_shared<GenericSetGetObject>(std::move(t));
}

std::shared_ptr<SeqObject> adhoc_splitter_object(std::vector<Pid> pids,
                                                 SplitterObjectMutation mutation) {
  return std::make_shared<AdhocSplitterObject>(std::move(pids), mutation);
}

std::shared_ptr<SeqObject> adhoc_exchanger_object(std::vector<Pid> pids) {
  return std::make_shared<AdhocExchangerObject>(std::move(pids));
}

std::shared_ptr<SeqObject> constant_answer_object(std::vector<Pid> pids, Value answer) {
  return std::make_shared<ConstantAnswerObject>(std::move(pids), std::move(answer));
}

}  // namespace taskcheck
