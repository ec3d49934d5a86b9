#include "h10m/encoder/encoder.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "h10m/errors.hpp"

namespace h10m::encoder {

const char* to_string(Dialect d) {
  switch (d) {
    case Dialect::Meromorphic:
      return "meromorphic";
    case Dialect::Analytic:
      return "analytic";
    case Dialect::EntireCm:
      return "entire-cm";
  }
  return "?";
}

std::optional<Dialect> parse_dialect(const std::string& s) {
  for (Dialect d : {Dialect::Meromorphic, Dialect::Analytic, Dialect::EntireCm})
    if (s == to_string(d)) return d;
  return std::nullopt;
}

namespace {

struct Parsed {
  std::string block, role;
  long counter;
};

// <block>_<role>_<counter>
std::optional<Parsed> parse_name(const std::string& n) {
  auto first = n.find('_');
  auto last = n.rfind('_');
  if (first == std::string::npos || first == last || first == 0) return std::nullopt;
  std::string digits = n.substr(last + 1);
  if (digits.empty() || digits.size() > 9 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    return std::nullopt;
  return Parsed{n.substr(0, first), n.substr(first + 1, last - first - 1), std::stol(digits)};
}

class Names {
 public:
  explicit Names(const std::vector<std::string>& taken) {
    for (const auto& n : taken) note(n);
  }
  void note(const std::string& n) {
    taken_.insert(n);
    if (auto p = parse_name(n)) next_[p->block] = std::max(next_[p->block], p->counter + 1);
  }
  std::string fresh(const std::string& block, const std::string& role) {
    for (;;) {
      std::string n = block + "_" + role + "_" + std::to_string(next_[block]++);
      if (!taken_.count(n)) {
        taken_.insert(n);
        return n;
      }
    }
  }

 private:
  std::set<std::string> taken_;
  std::map<std::string, long> next_;
};

std::string owner_block(const Atom& a) {
  for (const auto& p : a.args)
    for (const auto& v : p.vars())
      if (auto q = parse_name(v.name())) return q->block;
  return "g";
}

MPoly V(const std::string& n) { return MPoly(Var(n)); }

MPoly f_term() {
  const MPoly z = z_term(), d = delta_term();
  return z.pow(3) + d * z.pow(2) + z;
}

Node eq(MPoly l, MPoly r) { return Node::leaf({AtomKind::Eq, {std::move(l), std::move(r)}}); }
Node neq(MPoly u) { return Node::leaf({AtomKind::Neq, {std::move(u)}}); }
Node inc(MPoly u) { return Node::leaf({AtomKind::InC, {std::move(u)}}); }

bool is_plain_var(const MPoly& p) {
  return p.num_terms() == 1 && p.num_vars() == 1 && p.coeff(0) == 1 && p.exponents(0)[0] == 1 &&
         !(p.vars()[0] == z1()) && !(p.vars()[0] == z2());
}

Atom substitute_atom(const Atom& a, Var v, const MPoly& g) {
  Atom out = a;
  for (auto& p : out.args) p = p.substitute(v, g);
  return out;
}

std::string block_name(const std::string& var, std::size_t index, int shift) {
  const bool alnum = std::all_of(var.begin(), var.end(), [](unsigned char c) { return std::isalnum(c); });
  return (alnum ? var : "u" + std::to_string(index)) + "s" + std::to_string(shift);
}

// Symbolic "var − k ∈ S" block before any expansion.
Node s_branch(const std::string& var, const std::string& block, int k, Names& names, std::vector<std::string>& vars) {
  auto mk = [&](const char* role) {
    std::string n = names.fresh(block, role);
    vars.push_back(n);
    return V(n);
  };
  MPoly a = mk("a"), b = mk("b"), x = mk("x"), y = mk("y"), v = mk("v"), p = mk("p"), q = mk("q");
  const MPoly z = z_term(), d = delta_term(), n = V(var);
  return Node::all({
      inc(n),
      eq(f_term() * b.pow(2), a.pow(3) + d * a.pow(2) + a),
      neq(y),
      Node::leaf({AtomKind::CurveSum, {p, q, a, b, a, b}}),
      Node::leaf({AtomKind::CurveSum, {x, y, p, q, z, MPoly(1)}}),
      eq((x - 1).scaled(2), MPoly(z1()) * y * v),
      Node::leaf({AtomKind::Eval, {v - (n - k)}}),
  });
}

Formula curve_ops(const Formula& in, Names& names) {
  Formula f = in;
  // Sums with ∞ first: substitute when possible.
  for (;;) {
    std::optional<Atom> inf;
    for_each_atom(f.matrix, [&](const Atom& a) {
      if (!inf && a.kind == AtomKind::CurveSum && a.args.size() == 4) inf = a;
    });
    if (!inf) break;
    const Atom target = *inf;
    const bool subst = is_plain_var(target.args[0]) && is_plain_var(target.args[1]) &&
                       !(target.args[0] == target.args[1]) && !target.args[2].has_var(target.args[0].vars()[0]) &&
                       !target.args[3].has_var(target.args[1].vars()[0]);
    bool done = false;
    f.matrix = map_atoms(f.matrix, [&](const Atom& a) {
      if (!done && a == target) {
        done = true;
        if (subst) return Node::all({});
        return Node::all({eq(a.args[0], a.args[2]), eq(a.args[1], a.args[3])});
      }
      return Node::leaf(a);
    });
    if (subst) {
      const Var x = target.args[0].vars()[0], y = target.args[1].vars()[0];
      f.matrix = map_atoms(f.matrix, [&](const Atom& a) {
        return Node::leaf(substitute_atom(substitute_atom(a, x, target.args[2]), y, target.args[3]));
      });
      std::erase_if(f.vars, [&](const std::string& s) { return s == x.name() || s == y.name(); });
    }
  }
  const MPoly w = f_term(), d = delta_term();
  f.matrix = map_atoms(f.matrix, [&](const Atom& a) -> Node {
    if (a.kind != AtomKind::CurveSum) return Node::leaf(a);
    const MPoly &x = a.args[0], &y = a.args[1], &a1 = a.args[2], &b1 = a.args[3], &a2 = a.args[4], &b2 = a.args[5];
    std::string mname = names.fresh(owner_block(a), "m");
    f.vars.push_back(mname);
    const MPoly m = V(mname);
    std::vector<Node> out;
    if (a1 == a2 && b1 == b2) {
      out.push_back(eq((w * b1 * m).scaled(2), a1.pow(2).scaled(3) + (d * a1).scaled(2) + 1));
      out.push_back(eq(x * a1 * a2, w * (b1 - a1 * m).pow(2)));
      out.push_back(eq(y, -b1 - m * (x - a1)));
      out.push_back(neq(b1.scaled(2)));
    } else {
      out.push_back(eq(m * (a2 - a1), b2 - b1));
      out.push_back(eq(x * a1 * a2, w * (b1 - a1 * m).pow(2)));
      out.push_back(eq(y, -b1 - m * (x - a1)));
      out.push_back(neq(a2 - a1));
      out.push_back(neq(a1 * a2));
    }
    return Node::all(std::move(out));
  });
  return f;
}

struct Doubling {
  std::map<Var, std::pair<Var, Var>> pairs;  // X ↦ (X_num, X_den)
};

std::string doubled_name(const std::string& n, char suffix) {
  if (auto p = parse_name(n)) return p->block + "_" + p->role + suffix + "_" + std::to_string(p->counter);
  return n + (suffix == 'n' ? "_num" : "_den");
}

// p with every doubled X replaced by X_num/X_den and multiplied through by
// ∏ X_den^D_X.
MPoly clear(const MPoly& p, const Doubling& dbl, const std::map<Var, unsigned>& D) {
  std::vector<Var> vars;
  std::map<Var, std::size_t> col;
  auto column = [&](Var v) {
    auto [it, fresh] = col.emplace(v, vars.size());
    if (fresh) vars.push_back(v);
    return it->second;
  };
  for (const auto& v : p.vars())
    if (!dbl.pairs.count(v)) column(v);
  for (const auto& [X, e] : D) {
    column(dbl.pairs.at(X).first);
    column(dbl.pairs.at(X).second);
  }
  std::vector<std::pair<std::vector<MPoly::Exponent>, Rational>> terms;
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    std::vector<MPoly::Exponent> e(vars.size(), 0);
    auto src = p.exponents(t);
    std::map<Var, unsigned> used;
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
      const Var v = p.vars()[i];
      if (dbl.pairs.count(v)) used[v] = src[i];
      else e[col.at(v)] = src[i];
    }
    for (const auto& [X, deg] : D) {
      unsigned k = used.count(X) ? used[X] : 0;
      e[col.at(dbl.pairs.at(X).first)] = k;
      e[col.at(dbl.pairs.at(X).second)] = deg - k;
    }
    terms.emplace_back(std::move(e), p.coeff(t));
  }
  return MPoly::from_dense_terms(vars, std::move(terms));
}

std::map<Var, unsigned> degrees(const std::vector<const MPoly*>& ps, const Doubling& dbl) {
  std::map<Var, unsigned> D;
  for (const MPoly* p : ps)
    for (const auto& v : p->vars())
      if (dbl.pairs.count(v)) D[v] = std::max<unsigned>(D[v], p->degree(v));
  return D;
}

Formula double_vars(const Formula& in, const std::set<std::string>& constants) {
  Formula f;
  Doubling dbl;
  std::vector<Node> guards;
  for (const auto& n : in.vars) {
    if (constants.count(n)) {
      f.vars.push_back(n);
      continue;
    }
    std::string num = doubled_name(n, 'n'), den = doubled_name(n, 'd');
    f.vars.push_back(num);
    f.vars.push_back(den);
    dbl.pairs.emplace(Var(n), std::pair{Var(num), Var(den)});
    guards.push_back(neq(V(den)));
  }
  Node body = map_atoms(in.matrix, [&](const Atom& a) -> Node {
    switch (a.kind) {
      case AtomKind::Eq: {
        auto D = degrees({&a.args[0], &a.args[1]}, dbl);
        return eq(clear(a.args[0], dbl, D), clear(a.args[1], dbl, D));
      }
      case AtomKind::Neq: {
        auto D = degrees({&a.args[0]}, dbl);
        return neq(clear(a.args[0], dbl, D));
      }
      case AtomKind::Eval: {
        auto D = degrees({&a.args[0]}, dbl);
        MPoly den(1);
        for (const auto& [X, k] : D) den = den * MPoly(dbl.pairs.at(X).second).pow(k);
        return Node::leaf({AtomKind::EvalPair, {clear(a.args[0], dbl, D), den}});
      }
      case AtomKind::InC:
        for (const auto& v : a.args[0].vars())
          if (dbl.pairs.count(v)) throw DomainError("constant test on a function variable " + v.name());
        return Node::leaf(a);
      case AtomKind::EvalPair:
      case AtomKind::CurveSum:
        throw DomainError(std::string("cannot double variables through a ") + kind_name(a.kind) + " atom");
    }
    return Node::leaf(a);
  });
  guards.push_back(std::move(body));
  f.matrix = Node::all(std::move(guards));
  return f;
}

Formula neq_pass(const Formula& in, Dialect d, Names& names) {
  if (d == Dialect::Analytic) return in;
  Formula f = in;
  f.matrix = map_atoms(in.matrix, [&](const Atom& a) -> Node {
    if (a.kind != AtomKind::Neq) return Node::leaf(a);
    const std::string block = owner_block(a);
    auto mk = [&](const char* role) {
      std::string n = names.fresh(block, role);
      f.vars.push_back(n);
      return V(n);
    };
    const MPoly& u = a.args[0];
    if (d == Dialect::Meromorphic) return eq(u * mk("w"), MPoly(1));
    MPoly rho = mk("rho"), tau = mk("tau"), v3 = mk("dv"), v4 = mk("dv");
    return Node::all({eq(tau * v3, MPoly(1)), eq(u - tau, (MPoly(z1()) - rho) * v4), inc(rho), inc(tau)});
  });
  return f;
}

Formula constants_pass(const Formula& in, Dialect d, Names& names) {
  if (d != Dialect::EntireCm) return in;
  Formula f = in;
  f.matrix = map_atoms(in.matrix, [&](const Atom& a) -> Node {
    if (a.kind != AtomKind::InC) return Node::leaf(a);
    std::string c = names.fresh(owner_block(a), "c");
    f.vars.push_back(c);
    return eq(V(c).pow(2), a.args[0].pow(5) - 1);
  });
  return f;
}

Formula pipeline(const Formula& symbolic, const std::set<std::string>& constants, Dialect d, Names& names) {
  Formula f = curve_ops(symbolic, names);
  if (d != Dialect::Meromorphic) {
    f = double_vars(f, constants);
    for (const auto& v : f.vars) names.note(v);
  }
  f = neq_pass(f, d, names);
  return constants_pass(f, d, names);
}

}  // namespace

Formula expand_curve_ops(const Formula& f) {
  Names names(f.vars);
  return curve_ops(f, names);
}

Formula expand_neq(const Formula& f, Dialect d) {
  Names names(f.vars);
  return neq_pass(f, d, names);
}

Formula expand_constant_tests(const Formula& f, Dialect d) {
  Names names(f.vars);
  return constants_pass(f, d, names);
}

Formula encode_system(const DioSystem& sys, Dialect d) {
  for (const auto& u : sys.unknowns)
    if (u == "z1" || u == "z2") throw DomainError("'" + u + "' is a constant symbol, not an unknown");
  Names names(sys.unknowns);
  Formula f;
  f.vars = sys.unknowns;
  std::vector<Node> parts;
  for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
    const std::string& u = sys.unknowns[i];
    std::vector<Node> branches;
    for (int k = 0; k < 4; ++k) branches.push_back(s_branch(u, block_name(u, i, k), k, names, f.vars));
    parts.push_back(Node::any(std::move(branches)));
  }
  for (const auto& e : sys.equations) parts.push_back(eq(e, MPoly()));
  f.matrix = Node::all(std::move(parts));
  return pipeline(f, std::set<std::string>(sys.unknowns.begin(), sys.unknowns.end()), d, names);
}

Formula encode_integer_predicate(const std::string& var, Dialect d) {
  return encode_system(DioSystem{{var}, {}}, d);
}

bool satisfies_dialect(const Formula& f, Dialect d) {
  auto s = stats(f);
  auto count = [&](AtomKind k) { return s.by_kind.count(k) ? s.by_kind.at(k) : 0; };
  if (count(AtomKind::CurveSum)) return false;
  switch (d) {
    case Dialect::Meromorphic:
      return count(AtomKind::EvalPair) == 0 && count(AtomKind::Neq) == 0;
    case Dialect::Analytic:
      return count(AtomKind::Eval) == 0;
    case Dialect::EntireCm:
      return count(AtomKind::Eval) == 0 && count(AtomKind::InC) == 0 && count(AtomKind::Neq) == 0;
  }
  return false;
}

}  // namespace h10m::encoder
