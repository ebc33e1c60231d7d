#include "taskcheck/task.hpp"

#include <algorithm>

#include "taskcheck/errors.hpp"

namespace taskcheck {

const Complex& Task::delta_at(const Simplex& s) const {
  auto it = delta.find(s);
  if (it == delta.end())
    throw DeltaLookupError("delta undefined on simplex " + s.str());
  return it->second;
}

bool Task::delta_contains(const Simplex& input, const Simplex& output) const {
  if (input.empty()) return output.empty();
  return delta_at(input).contains(output);
}

namespace {

void check_complex_shape(const Complex& c, int want_dim, const std::string& which,
                         ValidityReport& report) {
  if (!c.is_closed_under_containment()) {
    report.violations.push_back(
        {"closure", which + " complex is not closed under containment", {}, {}});
  }
  if (c.dimension() != want_dim) {
    report.violations.push_back(
        {which + "-complex",
         which + " complex has dimension " + std::to_string(c.dimension()) +
             ", expected " + std::to_string(want_dim),
         {}, {}});
  } else if (!c.is_pure(want_dim)) {
    report.violations.push_back(
        {which + "-complex",
         which + " complex is not pure of dimension " + std::to_string(want_dim), {},
         {}});
  }
}

}  // namespace

ValidityReport validate_task(const Task& t) {
  ValidityReport report;
  const int full_dim = static_cast<int>(t.pids.size()) - 1;

  check_complex_shape(t.inputs, full_dim, "input", report);
  check_complex_shape(t.outputs, full_dim, "output", report);

  // Every pid of a member simplex must come from the declared pid set.
  for (const auto& v : t.inputs.vertex_set()) {
    if (!std::binary_search(t.pids.begin(), t.pids.end(), v.pid)) {
      report.violations.push_back(
          {"input-complex", "input vertex uses undeclared pid", Simplex{v}, {}});
    }
  }
  for (const auto& v : t.outputs.vertex_set()) {
    if (!std::binary_search(t.pids.begin(), t.pids.end(), v.pid)) {
      report.violations.push_back(
          {"output-complex", "output vertex uses undeclared pid", Simplex{v}, {}});
    }
  }

  // delta must be defined on exactly the simplexes of the input complex.
  for (const auto& s : t.inputs.simplexes()) {
    if (t.delta.count(s) == 0) {
      report.violations.push_back(
          {"carrier-domain", "delta has no entry for input simplex " + s.str(), s, {}});
    }
  }
  for (const auto& [s, image] : t.delta) {
    if (!t.inputs.contains(s) || s.empty()) {
      report.violations.push_back(
          {"carrier-domain", "delta defined on non-input simplex " + s.str(), s, {}});
      continue;
    }
    if (!image.is_closed_under_containment()) {
      report.violations.push_back(
          {"closure", "delta(" + s.str() + ") is not closed under containment", s, {}});
    }
    if (!image.subcomplex_of(t.outputs)) {
      report.violations.push_back(
          {"carrier-range", "delta(" + s.str() + ") is not a subcomplex of the outputs",
           s, {}});
    }
    // A1: delta(s) is pure of dimension dim(s).
    if (image.dimension() != s.dim() || !image.is_pure(s.dim())) {
      report.violations.push_back(
          {"A1",
           "delta(" + s.str() + ") is not pure of dimension " + std::to_string(s.dim()),
           s, {}});
    }
    // A2: full-dimensional members carry exactly the ids of s.
    for (const auto& tau : image.simplexes()) {
      if (tau.dim() == s.dim() && tau.ids() != s.ids()) {
        report.violations.push_back(
            {"A2", "simplex " + tau.str() + " in delta(" + s.str() +
                       ") has a different id set",
             s, tau});
      }
    }
  }

  // A3: delta is monotone with respect to faces.
  for (const auto& [small, small_image] : t.delta) {
    if (small.empty() || !t.inputs.contains(small)) continue;
    for (const auto& [big, big_image] : t.delta) {
      if (small == big || !small.is_face_of(big)) continue;
      if (!small_image.subcomplex_of(big_image)) {
        report.violations.push_back(
            {"A3", "delta(" + small.str() + ") is not contained in delta(" + big.str() +
                       ")",
             small, big});
      }
    }
  }

  return report;
}

}  // namespace taskcheck
