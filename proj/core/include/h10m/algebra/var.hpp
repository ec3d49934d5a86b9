#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace h10m::algebra {

// Interned variable name. Two Vars are equal iff their names are equal.
// Ordering is by name so that variable lists are canonical across runs.
class Var {
 public:
  Var() = default;
  explicit Var(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Var a, Var b);

 private:
  std::uint32_t id_ = 0;
};

// The fixed alphabet used throughout the library.
namespace vars {
Var z();
Var delta();
Var t();
Var t1();
Var t2();
}  // namespace vars

}  // namespace h10m::algebra
