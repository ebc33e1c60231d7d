#ifndef TASKCHECK_SEQ_OBJECT_HPP
#define TASKCHECK_SEQ_OBJECT_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "taskcheck/value.hpp"

namespace taskcheck {

// Operations a sequential object may expose. Two-operation objects use
// set/get; single-operation candidates (built by the sequentializability
// check) use task_op.
enum class OpKind { set, get, task_op };

std::string op_kind_name(OpKind k);
OpKind op_kind_from_name(const std::string& name);

struct Invocation {
  OpKind op{};
  Pid pid{};
  std::optional<Value> input{};  // sets and task ops carry one, gets do not

  friend bool operator==(const Invocation&, const Invocation&) = default;
  friend std::strong_ordering operator<=>(const Invocation&, const Invocation&) = default;
};

struct Response {
  OpKind op{};
  Pid pid{};
  std::optional<Value> output{};  // nullopt encodes void (set responses)

  friend bool operator==(const Response&, const Response&) = default;
  friend std::strong_ordering operator<=>(const Response&, const Response&) = default;
};

// One completed operation of a sequential execution.
struct SeqStep {
  Invocation inv;
  Response res;

  friend bool operator==(const SeqStep&, const SeqStep&) = default;
  friend std::strong_ordering operator<=>(const SeqStep&, const SeqStep&) = default;
};

// A sequential execution in_0,r_0,...,in_m,r_m. States are implicit: the
// response at each step determines the successor state.
using SeqExecution = std::vector<SeqStep>;

// Orders executions by length first, then lexicographically. Shortest
// counterexamples come first under this order.
struct ExecLess {
  bool operator()(const SeqExecution& a, const SeqExecution& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Object states are canonical JSON values; concrete objects choose their own
// encoding. Keeping states serializable makes automaton export and state
// deduplication uniform across object kinds.
using ObjectState = nlohmann::json;

struct Branch {
  ObjectState next;
  Response response;
};

// A possibly nondeterministic Mealy automaton over invocations/responses.
// Partiality is expressed by step() returning no branches; callers that want
// the failure surfaced use step_or_throw().
class SeqObject {
 public:
  virtual ~SeqObject() = default;

  virtual std::string kind() const = 0;
  virtual std::vector<Pid> pids() const = 0;
  virtual std::vector<OpKind> op_kinds() const = 0;
  virtual ObjectState initial_state() const = 0;

  // All enabled branches for `inv` in `state`, sorted by response. The next
  // state is uniquely determined by the response; implementations are
  // checked for that as branches are produced.
  virtual std::vector<Branch> step(const ObjectState& state,
                                   const Invocation& inv) const = 0;

  // Candidate input values for an invocation-carrying op of `pid`.
  virtual std::vector<Value> inputs_for(Pid pid) const = 0;
  // Candidate output values an op of `pid` may produce.
  virtual std::vector<Value> outputs_for(OpKind op, Pid pid) const = 0;

  // Like step(), but a disabled invocation raises PreconditionError.
  std::vector<Branch> step_or_throw(const ObjectState& state,
                                    const Invocation& inv) const;
};

// Sorts branches by response and verifies response-determinism.
std::vector<Branch> finalize_branches(std::vector<Branch> branches);

}  // namespace taskcheck

#endif
