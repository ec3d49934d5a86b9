#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "h10m/algebra/mpoly.hpp"

namespace h10m::encoder {

using algebra::MPoly;
using algebra::Rational;
using algebra::Var;

// The two constant symbols of the language: z₁ = z − 1 and z₂ = δ + 2.
Var z1();
Var z2();
MPoly z_term();      // z₁ + 1
MPoly delta_term();  // z₂ − 2

enum class AtomKind {
  Eq,        // args[0] = args[1]
  Eval,      // eval(args[0])
  EvalPair,  // eval₀(args[0], args[1]): args[1] ≠ 0 and eval(args[0]/args[1])
  Neq,       // args[0] ≠ 0
  InC,       // args[0] is a constant function
  CurveSum,  // (args[0], args[1]) = (args[2], args[3]) ⊕ (args[4], args[5]) on
             // the Manin–Denef curve; with four args the second summand is ∞
};

const char* kind_name(AtomKind k);

struct Atom {
  AtomKind kind = AtomKind::Eq;
  std::vector<MPoly> args;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Node {
  enum class Op { And, Or, Leaf };
  Op op = Op::And;
  std::vector<Node> args;
  Atom atom;

  static Node leaf(Atom a);
  // Conjunction/disjunction; children of the same op are spliced in and a
  // lone child is returned as is.
  static Node all(std::vector<Node> children);
  static Node any(std::vector<Node> children);

  friend bool operator==(const Node&, const Node&) = default;
};

// ∃ vars. matrix. Positive-existential by construction: there is no node
// for negation or universal quantification.
struct Formula {
  std::vector<std::string> vars;
  Node matrix;

  friend bool operator==(const Formula&, const Formula&) = default;
};

void for_each_atom(const Node& n, const std::function<void(const Atom&)>& fn);
// Rebuilds the tree, replacing every leaf by fn(atom).
Node map_atoms(const Node& n, const std::function<Node(const Atom&)>& fn);

struct FormulaStats {
  std::size_t atoms = 0;
  std::size_t and_nodes = 0;
  std::size_t or_nodes = 0;
  std::map<AtomKind, std::size_t> by_kind;
};
FormulaStats stats(const Formula& f);

// Variables used in atoms but not declared (constant symbols excluded).
std::vector<std::string> undeclared_vars(const Formula& f);
// Declared variables that no atom uses.
std::vector<std::string> dead_vars(const Formula& f);
// Node ops are and/or, leaves are atoms, and every atom has its arity.
bool is_well_formed(const Formula& f);

enum class RenderFormat { Text, Json };
std::string render_formula(const Formula& f, RenderFormat format);
// Inverse of the JSON rendering. Throws ParseError on malformed input.
Formula parse_formula(const std::string& json);

}  // namespace h10m::encoder
