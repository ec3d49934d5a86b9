#include "h10m/algebra/var.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace h10m::algebra {
namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::string> names;  // stable addresses
  std::unordered_map<std::string_view, std::uint32_t> index;

  Registry() { intern(""); }

  std::uint32_t intern(std::string_view name) {
    std::lock_guard lock(mu);
    if (auto it = index.find(name); it != index.end()) return it->second;
    names.emplace_back(name);
    auto id = static_cast<std::uint32_t>(names.size() - 1);
    index.emplace(names.back(), id);
    return id;
  }

  const std::string& name(std::uint32_t id) {
    std::lock_guard lock(mu);
    return names[id];
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Var::Var(std::string_view name) : id_(registry().intern(name)) {}

const std::string& Var::name() const { return registry().name(id_); }

std::strong_ordering operator<=>(Var a, Var b) {
  if (a.id_ == b.id_) return std::strong_ordering::equal;
  int c = a.name().compare(b.name());
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

namespace vars {
Var z() {
  static const Var v("z");
  return v;
}
Var delta() {
  static const Var v("delta");
  return v;
}
Var t() {
  static const Var v("t");
  return v;
}
Var t1() {
  static const Var v("t1");
  return v;
}
Var t2() {
  static const Var v("t2");
  return v;
}
}  // namespace vars

}  // namespace h10m::algebra
