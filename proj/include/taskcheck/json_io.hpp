#ifndef TASKCHECK_JSON_IO_HPP
#define TASKCHECK_JSON_IO_HPP

// File formats for every artifact the toolkit produces: tasks, automata,
// histories, executions and check reports. Loading an emitted artifact
// yields a value that re-serializes to the same JSON.

#include <memory>

#include "taskcheck/json_core.hpp"
#include "taskcheck/renaming.hpp"
#include "taskcheck/synthesis.hpp"

namespace taskcheck {

// Tasks. Maximal simplexes on disk; closure is applied on load, and every
// input simplex must carry a delta entry.
Json task_to_json(const Task& t);
Task task_from_json(const Json& j);

Json validity_report_to_json(const ValidityReport& r);
ValidityReport validity_report_from_json(const Json& j);

// Sequential executions: arrays of {"op", "pid", "input"?, "output"?}.
Json seq_execution_to_json(const SeqExecution& exec);
SeqExecution seq_execution_from_json(const Json& j);

Json invocation_to_json(const Invocation& inv);
Invocation invocation_from_json(const Json& j);
Json response_to_json(const Response& res);
Response response_from_json(const Json& j);

// Automata: the reachable part of an object under the one-shot discipline,
// states listed in discovery order, transitions labeled with
// invocation/response pairs. Imported automata replay the table.
Json automaton_to_json(const SeqObject& o, std::uint64_t cap = kDefaultCap);
std::shared_ptr<SeqObject> automaton_from_json(const Json& j);

Json equivalence_to_json(const EquivalenceResult& r);
EquivalenceResult equivalence_from_json(const Json& j);
Json correctness_to_json(const CorrectnessResult& r);
CorrectnessResult correctness_from_json(const Json& j);
Json completeness_to_json(const CompletenessResult& r);
CompletenessResult completeness_from_json(const Json& j);
Json bijection_to_json(const BijectionResult& r);
BijectionResult bijection_from_json(const Json& j);
Json satisfies_to_json(const SatisfiesResult& r);
SatisfiesResult satisfies_from_json(const Json& j);

Json ve_to_json(const HistSet& histories);
HistSet ve_from_json(const Json& j);

// The candidate automaton is a separate artifact; the verdict JSON carries
// the answer and, on NO, the witness history.
Json sequentializability_to_json(const SequentializabilityVerdict& v);
SequentializabilityVerdict sequentializability_from_json(const Json& j);

Json mc_report_to_json(const McReport& r);
McReport mc_report_from_json(const Json& j);

}  // namespace taskcheck

#endif
