#ifndef TASKCHECK_ERRORS_HPP
#define TASKCHECK_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taskcheck {

// Base class for all toolkit errors so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A simplex was given two vertices with the same process id.
struct ChromaticityError : Error {
  explicit ChromaticityError(int pid)
      : Error("duplicated pid " + std::to_string(pid) + " in simplex"), pid(pid) {}
  int pid;
};

struct EmptyPidsError : Error {
  EmptyPidsError() : Error("task constructor requires a nonempty pid set") {}
};

struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& what) : Error(what) {}
};

// The name-space bound of an adaptive renaming task must satisfy
// f(1) = 1 and p-1 <= f(p-1) <= f(p).
struct InvalidAdaptiveBound : Error {
  explicit InvalidAdaptiveBound(const std::string& what) : Error(what) {}
};

// An invocation was attempted in a state where the object's
// pre-condition does not hold.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// An enumeration exceeded its configured state/element cap.
struct ExplosionError : Error {
  ExplosionError(std::uint64_t count, std::uint64_t cap)
      : Error("enumeration exceeded cap: " + std::to_string(count) + " > " +
              std::to_string(cap)),
        count(count),
        cap(cap) {}
  std::uint64_t count;
  std::uint64_t cap;
};

// A history breaks the per-process invocation/response discipline.
struct WellFormednessError : Error {
  explicit WellFormednessError(std::size_t index)
      : Error("history ill-formed at event index " + std::to_string(index)),
        index(index) {}
  std::size_t index;
};

// A history invokes a task with a value that is not an input vertex.
struct UnknownInputVertex : Error {
  explicit UnknownInputVertex(const std::string& what) : Error(what) {}
};

// delta was queried on a simplex that is not part of the input complex.
struct DeltaLookupError : Error {
  explicit DeltaLookupError(const std::string& what) : Error(what) {}
};

// A file did not match the expected JSON schema.
struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error(what) {}
};

}  // namespace taskcheck

#endif
