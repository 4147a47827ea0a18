#ifndef QWC_VARIABLE_HPP
#define QWC_VARIABLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qwc {

// A variable is an index into the session-wide registry.  The ordinal
// fixes the term order used everywhere (serialization, canonical forms).
class Var {
public:
  Var() : id_(0) {}
  explicit Var(std::uint32_t id) : id_(id) {}
  std::uint32_t id() const { return id_; }
  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend bool operator!=(Var a, Var b) { return a.id_ != b.id_; }
  friend bool operator<(Var a, Var b) { return a.id_ < b.id_; }

private:
  std::uint32_t id_;
};

// Registry mapping names to ordinals.  Created once per session and
// only appended to; never mutated concurrently with reads.
class VarTable {
public:
  Var intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return Var(it->second);
    std::uint32_t id = static_cast<std::uint32_t>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return Var(id);
  }

  bool contains(const std::string& name) const { return index_.count(name) > 0; }

  const std::string& name(Var v) const {
    if (v.id() >= names_.size()) throw std::out_of_range("unknown variable id");
    return names_[v.id()];
  }

  std::size_t size() const { return names_.size(); }

  static VarTable& global();

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Shorthand for interning into the session registry.
Var var(const std::string& name);

}  // namespace qwc

#endif
