#include "h10m/algebra/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "h10m/errors.hpp"
#include "mpoly_internal.hpp"

namespace h10m::algebra {

int compare_exp(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<Var> union_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Exponent> widen(const MPoly& p, const std::vector<Var>& target) {
  const auto& src = p.vars();
  if (src.size() == target.size()) return MPolyBuilder::exps(p);
  std::vector<std::size_t> pos(src.size());
  for (std::size_t i = 0, j = 0; i < src.size(); ++i) {
    while (!(target[j] == src[i])) ++j;
    pos[i] = j;
  }
  const std::size_t n = target.size();
  std::vector<Exponent> out(p.num_terms() * n, 0);
  const auto& e = MPolyBuilder::exps(p);
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    for (std::size_t i = 0; i < src.size(); ++i) out[t * n + pos[i]] = e[t * src.size() + i];
  }
  return out;
}

MPoly MPolyBuilder::make(std::vector<Var> vars, std::vector<Exponent> exps,
                         std::vector<Rational> coeffs) {
  MPoly p;
  p.vars_ = std::move(vars);
  p.exps_ = std::move(exps);
  p.coeffs_ = std::move(coeffs);
  p.prune_vars();
  return p;
}

void MPoly::prune_vars() {
  const std::size_t n = vars_.size();
  if (n == 0) return;
  if (coeffs_.empty()) {
    vars_.clear();
    exps_.clear();
    return;
  }
  std::vector<bool> used(n, false);
  std::size_t nused = 0;
  for (std::size_t t = 0; t < coeffs_.size() && nused < n; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && exps_[t * n + i] != 0) {
        used[i] = true;
        ++nused;
      }
    }
  }
  if (nused == n) return;
  std::vector<Var> nv;
  for (std::size_t i = 0; i < n; ++i)
    if (used[i]) nv.push_back(vars_[i]);
  std::vector<Exponent> ne;
  ne.reserve(coeffs_.size() * nused);
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    for (std::size_t i = 0; i < n; ++i)
      if (used[i]) ne.push_back(exps_[t * n + i]);
  vars_ = std::move(nv);
  exps_ = std::move(ne);
}

// Sorts columns by variable name, sorts terms, merges duplicates, drops zeros.
void MPoly::canonicalize() {
  const std::size_t n = vars_.size();
  const std::size_t m = coeffs_.size();
  std::vector<std::size_t> col(n);
  std::iota(col.begin(), col.end(), 0);
  std::sort(col.begin(), col.end(), [&](auto a, auto b) { return vars_[a] < vars_[b]; });
  for (std::size_t i = 1; i < n; ++i) {
    if (vars_[col[i]] == vars_[col[i - 1]]) throw DomainError("duplicate variable " + vars_[col[i]].name());
  }
  std::vector<Exponent> e(m * n);
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t i = 0; i < n; ++i) e[t * n + i] = exps_[t * n + col[i]];
  std::vector<Var> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = vars_[col[i]];

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto span_of = [&](std::size_t t) { return std::span<const Exponent>(e.data() + t * n, n); };
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return compare_exp(span_of(a), span_of(b)) > 0; });
  std::vector<Exponent> ne;
  std::vector<Rational> nc;
  ne.reserve(m * n);
  nc.reserve(m);
  for (std::size_t k = 0; k < m;) {
    Rational c = coeffs_[order[k]];
    c.canonicalize();
    std::size_t j = k + 1;
    while (j < m && compare_exp(span_of(order[j]), span_of(order[k])) == 0) {
      Rational x = coeffs_[order[j++]];
      x.canonicalize();
      c += x;
    }
    if (c != 0) {
      auto s = span_of(order[k]);
      ne.insert(ne.end(), s.begin(), s.end());
      nc.push_back(std::move(c));
    }
    k = j;
  }
  vars_ = std::move(v);
  exps_ = std::move(ne);
  coeffs_ = std::move(nc);
  prune_vars();
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

MPoly::MPoly(Var v) : vars_{v}, exps_{1}, coeffs_{Rational(1)} {}

MPoly MPoly::from_terms(const std::vector<Term>& terms) {
  std::vector<Var> vars;
  for (const auto& t : terms)
    for (const auto& [v, e] : t.powers) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  MPoly p;
  p.vars_ = vars;
  const std::size_t n = vars.size();
  for (const auto& t : terms) {
    std::vector<Exponent> e(n, 0);
    for (const auto& [v, k] : t.powers) {
      auto i = std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
      e[i] += k;
    }
    p.exps_.insert(p.exps_.end(), e.begin(), e.end());
    p.coeffs_.push_back(t.coeff);
  }
  p.canonicalize();
  return p;
}

MPoly MPoly::from_dense_terms(std::vector<Var> vars,
                              std::vector<std::pair<std::vector<Exponent>, Rational>> terms) {
  MPoly p;
  p.vars_ = std::move(vars);
  for (auto& [e, c] : terms) {
    if (e.size() != p.vars_.size()) throw DomainError("exponent vector length mismatch");
    p.exps_.insert(p.exps_.end(), e.begin(), e.end());
    p.coeffs_.push_back(std::move(c));
  }
  p.canonicalize();
  return p;
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw DomainError("constant_value of non-constant polynomial");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

bool MPoly::has_var(Var v) const {
  return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

MPoly::Exponent MPoly::degree(Var v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  const std::size_t i = it - vars_.begin(), n = vars_.size();
  Exponent d = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) d = std::max(d, exps_[t * n + i]);
  return d;
}

MPoly::Exponent MPoly::total_degree() const {
  Exponent d = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    auto e = exponents(t);
    d = std::max(d, std::accumulate(e.begin(), e.end(), Exponent{0}));
  }
  return d;
}

Rational MPoly::grlex_leading_coeff() const {
  if (coeffs_.empty()) return 0;
  std::size_t best = 0;
  Exponent bestdeg = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    auto e = exponents(t);
    Exponent d = std::accumulate(e.begin(), e.end(), Exponent{0});
    // terms are lex-descending, so the first of maximal degree wins ties
    if (t == 0 || d > bestdeg) {
      best = t;
      bestdeg = d;
    }
  }
  return coeffs_[best];
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

MPoly add_impl(const MPoly& a, const MPoly& b, bool negate_b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return negate_b ? -b : b;
  auto vars = union_vars(a.vars(), b.vars());
  const std::size_t n = vars.size();
  auto ea = widen(a, vars), eb = widen(b, vars);
  const auto& ca = MPolyBuilder::coeffs(a);
  const auto& cb = MPolyBuilder::coeffs(b);
  std::vector<Exponent> e;
  std::vector<Rational> c;
  e.reserve(ea.size() + eb.size());
  c.reserve(ca.size() + cb.size());
  auto sa = [&](std::size_t i) { return std::span<const Exponent>(ea.data() + i * n, n); };
  auto sb = [&](std::size_t i) { return std::span<const Exponent>(eb.data() + i * n, n); };
  std::size_t i = 0, j = 0;
  while (i < ca.size() || j < cb.size()) {
    int cmp = i == ca.size() ? -1 : j == cb.size() ? 1 : compare_exp(sa(i), sb(j));
    if (cmp > 0) {
      e.insert(e.end(), sa(i).begin(), sa(i).end());
      c.push_back(ca[i++]);
    } else if (cmp < 0) {
      e.insert(e.end(), sb(j).begin(), sb(j).end());
      c.push_back(negate_b ? Rational(-cb[j]) : cb[j]);
      ++j;
    } else {
      Rational s = negate_b ? Rational(ca[i] - cb[j]) : Rational(ca[i] + cb[j]);
      if (s != 0) {
        e.insert(e.end(), sa(i).begin(), sa(i).end());
        c.push_back(std::move(s));
      }
      ++i;
      ++j;
    }
  }
  return MPolyBuilder::make(std::move(vars), std::move(e), std::move(c));
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) { return *this = add_impl(*this, o, false); }
MPoly& MPoly::operator-=(const MPoly& o) { return *this = add_impl(*this, o, true); }
MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

IntPoly to_intpoly(const MPoly& p, const std::vector<Var>& target, Rational& scale,
                   bool primitive) {
  IntPoly r;
  r.nvars = target.size();
  r.exps = widen(p, target);
  const auto& c = MPolyBuilder::coeffs(p);
  Integer l = 1;
  for (const auto& q : c)
    if (q.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  r.coeffs.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (l == 1) {
      r.coeffs[i] = c[i].get_num();
    } else {
      mpz_divexact(r.coeffs[i].get_mpz_t(), l.get_mpz_t(), c[i].get_den_mpz_t());
      r.coeffs[i] *= c[i].get_num();
    }
  }
  Integer g = 1;
  if (primitive && !r.coeffs.empty()) {
    g = intpoly_content(r);
    if (g != 1)
      for (auto& x : r.coeffs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  scale = Rational(g, l);
  scale.canonicalize();
  return r;
}

MPoly from_intpoly(const IntPoly& p, const std::vector<Var>& vars, const Rational& scale) {
  std::vector<Rational> c(p.size());
  const bool int_scale = scale.get_den() == 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (int_scale) {
      c[i] = p.coeffs[i] * scale.get_num();
    } else {
      c[i] = Rational(p.coeffs[i] * scale.get_num(), scale.get_den());
      c[i].canonicalize();
    }
  }
  return MPolyBuilder::make(vars, p.exps, std::move(c));
}

Integer intpoly_content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& x : p.coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.nvars = a.nvars;
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.nvars;
  if (n == 0) {
    r.coeffs.push_back(a.coeffs[0] * b.coeffs[0]);
    return r;
  }
  std::vector<Exponent> da(n, 0), db(n, 0);
  for (std::size_t t = 0; t < a.size(); ++t)
    for (std::size_t i = 0; i < n; ++i) da[i] = std::max(da[i], a.exps[t * n + i]);
  for (std::size_t t = 0; t < b.size(); ++t)
    for (std::size_t i = 0; i < n; ++i) db[i] = std::max(db[i], b.exps[t * n + i]);
  std::vector<std::uint64_t> dim(n), stride(n);
  long double cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    dim[i] = std::uint64_t(da[i]) + db[i] + 1;
    cells *= static_cast<long double>(dim[i]);
  }
  const bool packable = cells < 9.0e18L;
  if (packable) {
    std::uint64_t s = 1;
    for (std::size_t i = n; i-- > 0;) {
      stride[i] = s;
      s *= dim[i];
    }
  }
  auto index = [&](const IntPoly& p, std::size_t t) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k += p.exps[t * n + i] * stride[i];
    return k;
  };
  auto unpack = [&](std::uint64_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      r.exps.push_back(static_cast<Exponent>(k / stride[i]));
      k %= stride[i];
    }
  };
  const long double pairs = static_cast<long double>(a.size()) * b.size();
  if (packable && cells <= (1u << 22) && cells <= std::max<long double>(1 << 16, 8 * pairs)) {
    std::vector<std::uint64_t> ia(a.size()), ib(b.size());
    for (std::size_t t = 0; t < a.size(); ++t) ia[t] = index(a, t);
    for (std::size_t t = 0; t < b.size(); ++t) ib[t] = index(b, t);
    std::vector<mpz_class> acc(static_cast<std::size_t>(cells));
    for (std::size_t i = 0; i < a.size(); ++i) {
      const mpz_srcptr x = a.coeffs[i].get_mpz_t();
      for (std::size_t j = 0; j < b.size(); ++j)
        mpz_addmul(acc[ia[i] + ib[j]].get_mpz_t(), x, b.coeffs[j].get_mpz_t());
    }
    for (std::size_t k = acc.size(); k-- > 0;) {
      if (sgn(acc[k]) != 0) {
        unpack(k);
        r.coeffs.push_back(std::move(acc[k]));
      }
    }
    return r;
  }
  if (packable) {
    std::unordered_map<std::uint64_t, mpz_class> acc;
    acc.reserve(static_cast<std::size_t>(std::min<long double>(pairs, 1 << 24)));
    std::vector<std::uint64_t> ib(b.size());
    for (std::size_t t = 0; t < b.size(); ++t) ib[t] = index(b, t);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ki = index(a, i);
      for (std::size_t j = 0; j < b.size(); ++j)
        mpz_addmul(acc[ki + ib[j]].get_mpz_t(), a.coeffs[i].get_mpz_t(), b.coeffs[j].get_mpz_t());
    }
    std::vector<std::uint64_t> keys;
    keys.reserve(acc.size());
    for (auto& [k, v] : acc)
      if (sgn(v) != 0) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), std::greater<>());
    for (auto k : keys) {
      unpack(k);
      r.coeffs.push_back(std::move(acc[k]));
    }
    return r;
  }
  std::map<std::vector<Exponent>, mpz_class, std::greater<>> acc;
  std::vector<Exponent> e(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t v = 0; v < n; ++v) e[v] = a.exps[i * n + v] + b.exps[j * n + v];
      mpz_addmul(acc[e].get_mpz_t(), a.coeffs[i].get_mpz_t(), b.coeffs[j].get_mpz_t());
    }
  }
  for (auto& [k, v] : acc) {
    if (sgn(v) == 0) continue;
    r.exps.insert(r.exps.end(), k.begin(), k.end());
    r.coeffs.push_back(std::move(v));
  }
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  auto vars = union_vars(a.vars(), b.vars());
  Rational sa, sb;
  auto ia = to_intpoly(a, vars, sa, false);
  auto ib = to_intpoly(b, vars, sb, false);
  return from_intpoly(intpoly_mul(ia, ib), vars, sa * sb);
}

MPoly MPoly::scaled(const Rational& c0) const {
  Rational c = c0;
  c.canonicalize();
  if (c == 0) return MPoly();
  MPoly r = *this;
  if (c != 1)
    for (auto& x : r.coeffs_) x *= c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::derivative(Var v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return MPoly();
  const std::size_t i = it - vars_.begin(), n = vars_.size();
  std::vector<Exponent> e;
  std::vector<Rational> c;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    Exponent k = exps_[t * n + i];
    if (k == 0) continue;
    auto s = exponents(t);
    e.insert(e.end(), s.begin(), s.end());
    e[e.size() - n + i] = k - 1;
    c.push_back(coeffs_[t] * k);
  }
  return MPolyBuilder::make(vars_, std::move(e), std::move(c));
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return {*this};
  const std::size_t i = it - vars_.begin(), n = vars_.size();
  std::vector<Var> rest = vars_;
  rest.erase(rest.begin() + i);
  const Exponent d = degree(v);
  std::vector<std::vector<Exponent>> es(d + 1);
  std::vector<std::vector<Rational>> cs(d + 1);
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    const Exponent k = exps_[t * n + i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) es[k].push_back(exps_[t * n + j]);
    cs[k].push_back(coeffs_[t]);
  }
  std::vector<MPoly> out;
  out.reserve(d + 1);
  for (Exponent k = 0; k <= d; ++k)
    out.push_back(MPolyBuilder::make(rest, std::move(es[k]), std::move(cs[k])));
  return out;
}

MPoly MPoly::evaluate(Var v, const Rational& c) const {
  if (!has_var(v)) return *this;
  auto coeffs = coefficients_in(v);
  MPoly r = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) r = r.scaled(c) + coeffs[k];
  return r;
}

MPoly MPoly::substitute(Var v, const MPoly& g) const {
  if (!has_var(v)) return *this;
  if (g.is_constant()) return evaluate(v, g.constant_value());
  auto coeffs = coefficients_in(v);
  MPoly r = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) r = r * g + coeffs[k];
  return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw ZeroDenominatorError("division by the zero polynomial");
  if (is_zero()) return MPoly();
  if (d.is_constant()) return scaled(1 / d.constant_value());
  for (const auto& v : d.vars_)
    if (!has_var(v)) return std::nullopt;
  for (const auto& v : d.vars_)
    if (degree(v) < d.degree(v)) return std::nullopt;
  const auto& vars = vars_;
  const std::size_t n = vars.size();
  auto de = widen(d, vars);
  std::map<std::vector<Exponent>, Rational, std::greater<>> rem;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    auto s = exponents(t);
    rem.emplace(std::vector<Exponent>(s.begin(), s.end()), coeffs_[t]);
  }
  std::vector<Exponent> qe;
  std::vector<Rational> qc;
  const Rational lcd = d.coeffs_[0];
  std::vector<Exponent> shift(n), e(n);
  while (!rem.empty()) {
    auto top = rem.begin();
    for (std::size_t i = 0; i < n; ++i) {
      if (top->first[i] < de[i]) return std::nullopt;
      shift[i] = top->first[i] - de[i];
    }
    Rational q = top->second / lcd;
    qe.insert(qe.end(), shift.begin(), shift.end());
    qc.push_back(q);
    for (std::size_t t = 0; t < d.coeffs_.size(); ++t) {
      for (std::size_t i = 0; i < n; ++i) e[i] = de[t * n + i] + shift[i];
      auto [it, inserted] = rem.try_emplace(e, 0);
      it->second -= q * d.coeffs_[t];
      if (it->second == 0) rem.erase(it);
    }
  }
  return MPolyBuilder::make(vars, std::move(qe), std::move(qc));
}

std::pair<MPoly, Rational> MPoly::primitive_part() const {
  if (is_zero()) return {MPoly(), Rational(1)};
  Rational scale;
  auto ip = to_intpoly(*this, vars_, scale, true);
  Rational factor = 1 / scale;
  return {from_intpoly(ip, vars_, 1), factor};
}

std::string MPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  const std::size_t n = vars_.size();
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    Rational c = coeffs_[t];
    if (t == 0) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool wrote = false;
    auto e = exponents(t);
    bool monomial = std::any_of(e.begin(), e.end(), [](auto k) { return k != 0; });
    if (c != 1 || !monomial) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i].name();
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

}  // namespace h10m::algebra
