#ifndef TASKCHECK_JSON_CORE_HPP
#define TASKCHECK_JSON_CORE_HPP

// JSON encodings of the core value types. Artifact files (tasks, automata,
// histories, reports) build on these in json_io.

#include <json.hpp>

#include "taskcheck/complex.hpp"
#include "taskcheck/errors.hpp"
#include "taskcheck/history.hpp"
#include "taskcheck/seq_object.hpp"

namespace taskcheck {

using Json = nlohmann::json;

inline Json value_to_json(const Value& v) {
  if (v.is_bot()) return nullptr;
  if (v.is_int()) return v.as_int();
  return v.as_symbol();
}

inline Value value_from_json(const Json& j) {
  if (j.is_null()) return Value::bot();
  if (j.is_number_integer()) return Value(j.get<std::int64_t>());
  if (j.is_string()) return Value(j.get<std::string>());
  throw SchemaError("value must be null, integer or string, got " + j.dump());
}

inline Json vertex_to_json(const Vertex& v) {
  return Json::array({v.pid, value_to_json(v.value)});
}

inline Vertex vertex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer())
    throw SchemaError("vertex must be a [pid, value] pair, got " + j.dump());
  return Vertex{j[0].get<Pid>(), value_from_json(j[1])};
}

inline Json simplex_to_json(const Simplex& s) {
  Json out = Json::array();
  for (const auto& v : s.vertices()) out.push_back(vertex_to_json(v));
  return out;
}

inline Simplex simplex_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("simplex must be an array of vertices");
  std::vector<Vertex> verts;
  for (const auto& v : j) verts.push_back(vertex_from_json(v));
  return Simplex(std::move(verts));
}

// Events serialize as {"type": "inv"|"resp", "pid": n, "value": v}; the
// "op" field appears only for set/get histories, task histories omit it.
inline Json event_to_json(const Event& e) {
  Json out{{"type", e.type == EventType::invocation ? "inv" : "resp"}, {"pid", e.pid}};
  if (e.op != OpKind::task_op) out["op"] = op_kind_name(e.op);
  if (e.value.has_value()) out["value"] = value_to_json(*e.value);
  return out;
}

inline Event event_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("pid"))
    throw SchemaError("event must be an object with type and pid, got " + j.dump());
  Event e;
  const std::string type = j.at("type").get<std::string>();
  if (type == "inv")
    e.type = EventType::invocation;
  else if (type == "resp")
    e.type = EventType::response;
  else
    throw SchemaError("event type must be 'inv' or 'resp', got '" + type + "'");
  e.op = j.contains("op") ? op_kind_from_name(j.at("op").get<std::string>())
                          : OpKind::task_op;
  e.pid = j.at("pid").get<Pid>();
  if (j.contains("value") && !j.at("value").is_null())
    e.value = value_from_json(j.at("value"));
  else if (j.contains("value"))
    e.value = Value::bot();
  return e;
}

inline Json history_to_json(const History& h) {
  Json out = Json::array();
  for (const Event& e : h) out.push_back(event_to_json(e));
  return out;
}

inline History history_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("history must be an array of events");
  History h;
  for (const auto& e : j) h.push_back(event_from_json(e));
  return h;
}

}  // namespace taskcheck

#endif
