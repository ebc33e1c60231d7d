#include "taskcheck/seq_object.hpp"

#include <algorithm>

#include "taskcheck/errors.hpp"

namespace taskcheck {

std::string op_kind_name(OpKind k) {
  switch (k) {
    case OpKind::set: return "set";
    case OpKind::get: return "get";
    case OpKind::task_op: return "task";
  }
  return "?";
}

OpKind op_kind_from_name(const std::string& name) {
  if (name == "set") return OpKind::set;
  if (name == "get") return OpKind::get;
  if (name == "task") return OpKind::task_op;
  throw SchemaError("unknown operation kind '" + name + "'");
}

std::vector<Branch> SeqObject::step_or_throw(const ObjectState& state,
                                             const Invocation& inv) const {
  auto branches = step(state, inv);
  if (branches.empty()) {
    throw PreconditionError("invocation " + op_kind_name(inv.op) + "(pid " +
                            std::to_string(inv.pid) + ") disabled in state " +
                            state.dump());
  }
  return branches;
}

std::vector<Branch> finalize_branches(std::vector<Branch> branches) {
  std::sort(branches.begin(), branches.end(),
            [](const Branch& a, const Branch& b) { return a.response < b.response; });
  for (std::size_t i = 1; i < branches.size(); ++i) {
    if (branches[i - 1].response == branches[i].response &&
        branches[i - 1].next != branches[i].next) {
      throw Error("object violates response-determinism: response " +
                  op_kind_name(branches[i].response.op) + " of pid " +
                  std::to_string(branches[i].response.pid) +
                  " leads to two distinct states");
    }
  }
  // Collapse exact duplicates so enumeration never double-counts a branch.
  branches.erase(std::unique(branches.begin(), branches.end(),
                             [](const Branch& a, const Branch& b) {
                               return a.response == b.response && a.next == b.next;
                             }),
                 branches.end());
  return branches;
}

}  // namespace taskcheck
