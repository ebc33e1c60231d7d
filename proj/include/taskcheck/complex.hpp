#ifndef TASKCHECK_COMPLEX_HPP
#define TASKCHECK_COMPLEX_HPP

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "taskcheck/value.hpp"

namespace taskcheck {

// A vertex pairs a process id with an input or output value.
struct Vertex {
  Pid pid{};
  Value value{};

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex&, const Vertex&) = default;
};

// A chromatic simplex: a finite set of vertices with pairwise distinct pids,
// kept sorted by pid. The empty simplex (dimension -1) is a legal value; it
// is used for initial object states and empty history prefixes.
class Simplex {
 public:
  Simplex() = default;
  // Throws ChromaticityError if two vertices share a pid.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const { return verts_; }
  bool empty() const { return verts_.empty(); }
  std::size_t size() const { return verts_.size(); }
  int dim() const { return static_cast<int>(verts_.size()) - 1; }

  std::vector<Pid> ids() const;
  bool has_pid(Pid pid) const;
  // Value carried by `pid`; pid must be present.
  const Value& value_of(Pid pid) const;

  bool is_face_of(const Simplex& other) const;
  Simplex with_vertex(const Vertex& v) const;
  // All nonempty subsets, the empty simplex excluded.
  std::vector<Simplex> proper_and_improper_faces() const;

  std::string str() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.verts_.size() <=> b.verts_.size(); c != 0) return c;
    return a.verts_ <=> b.verts_;
  }

 private:
  std::vector<Vertex> verts_;  // sorted by pid
};

// A finite simplicial complex: a set of nonempty simplexes closed under
// containment. The empty simplex is treated as a member of every complex,
// which matches the convention that an empty output prefix is always valid.
class Complex {
 public:
  Complex() = default;

  // Smallest containment-closed complex containing all given simplexes.
  static Complex closure(const std::vector<Simplex>& maximal);
  // Takes the simplexes as given, without closing them. validate_task
  // reports complexes that are not closed; tests use this to build
  // deliberately broken tasks.
  static Complex from_simplexes_unchecked(std::set<Simplex> simplexes);

  bool contains(const Simplex& s) const {
    return s.empty() || simplexes_.count(s) > 0;
  }
  const std::set<Simplex>& simplexes() const { return simplexes_; }
  std::size_t size() const { return simplexes_.size(); }
  bool empty() const { return simplexes_.empty(); }

  // Largest dimension of a member simplex; -1 for the empty complex.
  int dimension() const;
  // True iff every member is a face of some k-dimensional member.
  bool is_pure(int k) const;
  bool is_closed_under_containment() const;
  // Members not strictly contained in another member.
  std::vector<Simplex> maximal_simplexes() const;
  std::set<Vertex> vertex_set() const;
  bool has_vertex(const Vertex& v) const;
  bool subcomplex_of(const Complex& other) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::set<Simplex> simplexes_;  // nonempty members only
};

// Free-function spellings used throughout checks.
Complex closure(const std::vector<Simplex>& maximal);
bool is_pure(const Complex& c, int k);

}  // namespace taskcheck

#endif
