#include "taskcheck/complex.hpp"

#include <algorithm>

#include "taskcheck/errors.hpp"

namespace taskcheck {

Simplex::Simplex(std::vector<Vertex> vertices) : verts_(std::move(vertices)) {
  std::sort(verts_.begin(), verts_.end());
  for (std::size_t i = 1; i < verts_.size(); ++i) {
    if (verts_[i - 1].pid == verts_[i].pid) throw ChromaticityError(verts_[i].pid);
  }
}

std::vector<Pid> Simplex::ids() const {
  std::vector<Pid> out;
  out.reserve(verts_.size());
  for (const auto& v : verts_) out.push_back(v.pid);
  return out;
}

bool Simplex::has_pid(Pid pid) const {
  for (const auto& v : verts_)
    if (v.pid == pid) return true;
  return false;
}

const Value& Simplex::value_of(Pid pid) const {
  for (const auto& v : verts_)
    if (v.pid == pid) return v.value;
  throw Error("pid " + std::to_string(pid) + " not present in simplex " + str());
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(),
                       verts_.end());
}

Simplex Simplex::with_vertex(const Vertex& v) const {
  std::vector<Vertex> verts = verts_;
  verts.push_back(v);
  return Simplex(std::move(verts));
}

std::vector<Simplex> Simplex::proper_and_improper_faces() const {
  std::vector<Simplex> out;
  const std::size_t n = verts_.size();
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(verts_[i]);
    out.emplace_back(std::move(sub));
  }
  return out;
}

std::string Simplex::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(verts_[i].pid) + "," + verts_[i].value.str() + ")";
  }
  return out + "}";
}

Complex Complex::closure(const std::vector<Simplex>& maximal) {
  Complex c;
  for (const auto& s : maximal) {
    if (s.empty()) continue;
    for (auto& f : s.proper_and_improper_faces()) c.simplexes_.insert(std::move(f));
  }
  return c;
}

Complex Complex::from_simplexes_unchecked(std::set<Simplex> simplexes) {
  Complex c;
  simplexes.erase(Simplex{});
  c.simplexes_ = std::move(simplexes);
  return c;
}

int Complex::dimension() const {
  int d = -1;
  for (const auto& s : simplexes_) d = std::max(d, s.dim());
  return d;
}

bool Complex::is_pure(int k) const {
  // Collect faces of all k-dimensional members, then demand every member
  // shows up there. Linear in the complex rather than quadratic.
  std::set<Simplex> covered;
  for (const auto& s : simplexes_) {
    if (s.dim() != k) continue;
    for (auto& f : s.proper_and_improper_faces()) covered.insert(std::move(f));
  }
  for (const auto& s : simplexes_)
    if (covered.count(s) == 0) return false;
  return true;
}

bool Complex::is_closed_under_containment() const {
  for (const auto& s : simplexes_) {
    if (s.size() <= 1) continue;
    // Dropping one vertex at a time covers all faces transitively.
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
      std::vector<Vertex> sub = s.vertices();
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      if (simplexes_.count(Simplex(std::move(sub))) == 0) return false;
    }
  }
  return true;
}

std::vector<Simplex> Complex::maximal_simplexes() const {
  std::vector<Simplex> out;
  const auto verts = vertex_set();
  for (const auto& s : simplexes_) {
    bool maximal = true;
    for (const auto& v : verts) {
      if (s.has_pid(v.pid)) continue;
      if (simplexes_.count(s.with_vertex(v)) > 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::set<Vertex> Complex::vertex_set() const {
  std::set<Vertex> out;
  for (const auto& s : simplexes_)
    for (const auto& v : s.vertices()) out.insert(v);
  return out;
}

bool Complex::has_vertex(const Vertex& v) const {
  return simplexes_.count(Simplex{v}) > 0;
}

bool Complex::subcomplex_of(const Complex& other) const {
  for (const auto& s : simplexes_)
    if (other.simplexes_.count(s) == 0) return false;
  return true;
}

Complex closure(const std::vector<Simplex>& maximal) { return Complex::closure(maximal); }

bool is_pure(const Complex& c, int k) { return c.is_pure(k); }

}  // namespace taskcheck
