#include "h10m/encoder/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "h10m/encoder/diophantine.hpp"
#include "h10m/errors.hpp"

namespace h10m::encoder {

Var z1() {
  static const Var v("z1");
  return v;
}

Var z2() {
  static const Var v("z2");
  return v;
}

MPoly z_term() { return MPoly(z1()) + 1; }
MPoly delta_term() { return MPoly(z2()) - 2; }

const char* kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::Eq:
      return "eq";
    case AtomKind::Eval:
      return "eval";
    case AtomKind::EvalPair:
      return "eval0";
    case AtomKind::Neq:
      return "neq";
    case AtomKind::InC:
      return "C";
    case AtomKind::CurveSum:
      return "curve_sum";
  }
  return "?";
}

namespace {

std::optional<AtomKind> kind_from_name(const std::string& s) {
  for (AtomKind k : {AtomKind::Eq, AtomKind::Eval, AtomKind::EvalPair, AtomKind::Neq, AtomKind::InC,
                     AtomKind::CurveSum})
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

bool arity_ok(const Atom& a) {
  const std::size_t n = a.args.size();
  switch (a.kind) {
    case AtomKind::Eq:
    case AtomKind::EvalPair:
      return n == 2;
    case AtomKind::Eval:
    case AtomKind::Neq:
    case AtomKind::InC:
      return n == 1;
    case AtomKind::CurveSum:
      return n == 4 || n == 6;
  }
  return false;
}

Node combine(Node::Op op, std::vector<Node> children) {
  Node n;
  n.op = op;
  for (auto& c : children) {
    if (c.op == op) {
      for (auto& g : c.args) n.args.push_back(std::move(g));
    } else {
      n.args.push_back(std::move(c));
    }
  }
  if (n.args.size() == 1) return std::move(n.args.front());
  return n;
}

bool is_constant_symbol(const Var& v) { return v == z1() || v == z2(); }

}  // namespace

Node Node::leaf(Atom a) {
  Node n;
  n.op = Op::Leaf;
  n.atom = std::move(a);
  return n;
}

Node Node::all(std::vector<Node> children) { return combine(Op::And, std::move(children)); }
Node Node::any(std::vector<Node> children) { return combine(Op::Or, std::move(children)); }

void for_each_atom(const Node& n, const std::function<void(const Atom&)>& fn) {
  if (n.op == Node::Op::Leaf) {
    fn(n.atom);
    return;
  }
  for (const auto& c : n.args) for_each_atom(c, fn);
}

Node map_atoms(const Node& n, const std::function<Node(const Atom&)>& fn) {
  if (n.op == Node::Op::Leaf) return fn(n.atom);
  std::vector<Node> kids;
  kids.reserve(n.args.size());
  for (const auto& c : n.args) kids.push_back(map_atoms(c, fn));
  return combine(n.op, std::move(kids));
}

FormulaStats stats(const Formula& f) {
  FormulaStats s;
  std::function<void(const Node&)> walk = [&](const Node& n) {
    switch (n.op) {
      case Node::Op::Leaf:
        ++s.atoms;
        ++s.by_kind[n.atom.kind];
        return;
      case Node::Op::And:
        ++s.and_nodes;
        break;
      case Node::Op::Or:
        ++s.or_nodes;
        break;
    }
    for (const auto& c : n.args) walk(c);
  };
  walk(f.matrix);
  return s;
}

namespace {

std::set<std::string> used_vars(const Formula& f) {
  std::set<std::string> used;
  for_each_atom(f.matrix, [&](const Atom& a) {
    for (const auto& p : a.args)
      for (const auto& v : p.vars())
        if (!is_constant_symbol(v)) used.insert(v.name());
  });
  return used;
}

}  // namespace

std::vector<std::string> undeclared_vars(const Formula& f) {
  std::set<std::string> declared(f.vars.begin(), f.vars.end());
  std::vector<std::string> out;
  for (const auto& v : used_vars(f))
    if (!declared.count(v)) out.push_back(v);
  return out;
}

std::vector<std::string> dead_vars(const Formula& f) {
  auto used = used_vars(f);
  std::vector<std::string> out;
  for (const auto& v : f.vars)
    if (!used.count(v)) out.push_back(v);
  return out;
}

bool is_well_formed(const Formula& f) {
  bool ok = true;
  std::function<void(const Node&)> walk = [&](const Node& n) {
    if (n.op == Node::Op::Leaf) {
      ok &= arity_ok(n.atom);
      return;
    }
    ok &= !n.args.empty();
    for (const auto& c : n.args) walk(c);
  };
  walk(f.matrix);
  std::set<std::string> names(f.vars.begin(), f.vars.end());
  ok &= names.size() == f.vars.size();
  ok &= !names.count("z1") && !names.count("z2");
  return ok;
}

namespace {

std::string atom_text(const Atom& a) {
  auto s = [&](std::size_t i) { return a.args[i].to_string(); };
  switch (a.kind) {
    case AtomKind::Eq:
      return s(0) + " = " + s(1);
    case AtomKind::Eval:
      return "eval(" + s(0) + ")";
    case AtomKind::EvalPair:
      return "eval0(" + s(0) + ", " + s(1) + ")";
    case AtomKind::Neq:
      return s(0) + " != 0";
    case AtomKind::InC:
      return "C(" + s(0) + ")";
    case AtomKind::CurveSum:
      if (a.args.size() == 4) return "(" + s(0) + ", " + s(1) + ") = (" + s(2) + ", " + s(3) + ") (+) inf";
      return "(" + s(0) + ", " + s(1) + ") = (" + s(2) + ", " + s(3) + ") (+) (" + s(4) + ", " + s(5) + ")";
  }
  return "?";
}

void node_text(const Node& n, int depth, std::ostringstream& os) {
  const std::string pad(2 * depth, ' ');
  if (n.op == Node::Op::Leaf) {
    os << pad << atom_text(n.atom) << "\n";
    return;
  }
  os << pad << (n.op == Node::Op::And ? "and" : "or") << "\n";
  for (const auto& c : n.args) node_text(c, depth + 1, os);
}

nlohmann::json node_json(const Node& n) {
  using nlohmann::json;
  if (n.op == Node::Op::Leaf) {
    json args = json::array();
    for (const auto& p : n.atom.args) args.push_back(p.to_string());
    return json{{"kind", kind_name(n.atom.kind)}, {"args", args}};
  }
  json args = json::array();
  for (const auto& c : n.args) args.push_back(node_json(c));
  return json{{"op", n.op == Node::Op::And ? "and" : "or"}, {"args", args}};
}

[[noreturn]] void bad(const std::string& what) { throw ParseError("formula json: " + what, 1, 1); }

Node node_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("node is not an object");
  if (!j.contains("args") || !j["args"].is_array()) bad("node without an args array");
  if (j.contains("op")) {
    const std::string op = j["op"].get<std::string>();
    Node n;
    if (op == "and") n.op = Node::Op::And;
    else if (op == "or") n.op = Node::Op::Or;
    else bad("unknown op '" + op + "'");
    for (const auto& c : j["args"]) n.args.push_back(node_from_json(c));
    if (n.args.empty()) bad("empty " + op);
    return n;
  }
  if (!j.contains("kind")) bad("node is neither an op nor an atom");
  auto k = kind_from_name(j["kind"].get<std::string>());
  if (!k) bad("unknown atom kind");
  Atom a{*k, {}};
  for (const auto& s : j["args"]) {
    if (!s.is_string()) bad("atom argument is not a string");
    a.args.push_back(parse_term(s.get<std::string>()));
  }
  if (!arity_ok(a)) bad(std::string("wrong arity for ") + kind_name(*k));
  return Node::leaf(std::move(a));
}

}  // namespace

std::string render_formula(const Formula& f, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::json j{{"vars", f.vars}, {"matrix", node_json(f.matrix)}};
    return j.dump(1) + "\n";
  }
  std::ostringstream os;
  os << "exists";
  for (std::size_t i = 0; i < f.vars.size(); ++i) os << (i ? ", " : " ") << f.vars[i];
  os << ":\n";
  node_text(f.matrix, 1, os);
  return os.str();
}

Formula parse_formula(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("formula json: ") + e.what(), 1, e.byte);
  }
  if (!j.is_object() || !j.contains("vars") || !j.contains("matrix")) bad("expected {vars, matrix}");
  Formula f;
  try {
    for (const auto& v : j["vars"]) {
      if (!v.is_string()) bad("variable name is not a string");
      f.vars.push_back(v.get<std::string>());
    }
    f.matrix = node_from_json(j["matrix"]);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  return f;
}

}  // namespace h10m::encoder
