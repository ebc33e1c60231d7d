#ifndef TASKCHECK_VALUE_HPP
#define TASKCHECK_VALUE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace taskcheck {

// Process identity. Opaque apart from its total order.
using Pid = int;

// A domain value carried by a vertex: either the distinguished "unmatched"
// marker (bot), an integer, or a symbolic token. Totally ordered so that
// simplexes, histories and automata have one canonical form:
// bot < integers < symbols.
class Value {
 public:
  Value() : rep_(Bot{}) {}
  Value(std::int64_t v) : rep_(v) {}
  Value(int v) : rep_(static_cast<std::int64_t>(v)) {}
  Value(std::string v) : rep_(std::move(v)) {}
  Value(const char* v) : rep_(std::string(v)) {}

  static Value bot() { return Value(); }

  bool is_bot() const { return rep_.index() == 0; }
  bool is_int() const { return rep_.index() == 1; }
  bool is_symbol() const { return rep_.index() == 2; }

  std::int64_t as_int() const { return std::get<1>(rep_); }
  const std::string& as_symbol() const { return std::get<2>(rep_); }

  std::string str() const {
    switch (rep_.index()) {
      case 0: return "_|_";
      case 1: return std::to_string(std::get<1>(rep_));
      default: return std::get<2>(rep_);
    }
  }

  friend bool operator==(const Value& a, const Value& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.rep_.index() != b.rep_.index())
      return a.rep_.index() <=> b.rep_.index();
    switch (a.rep_.index()) {
      case 0: return std::strong_ordering::equal;
      case 1: return std::get<1>(a.rep_) <=> std::get<1>(b.rep_);
      default: return std::get<2>(a.rep_) <=> std::get<2>(b.rep_);
    }
  }

 private:
  struct Bot {
    bool operator==(const Bot&) const = default;
  };
  std::variant<Bot, std::int64_t, std::string> rep_;
};

}  // namespace taskcheck

#endif
