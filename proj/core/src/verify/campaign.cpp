#include "h10m/verify/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "h10m/curve/checks.hpp"
#include "h10m/curve/endo.hpp"
#include "h10m/encoder/encoder.hpp"
#include "h10m/errors.hpp"
#include "h10m/places/orders.hpp"
#include "h10m/series/solvers.hpp"
#include "h10m/uniform/uniformization.hpp"

namespace h10m::verify {

using algebra::MPoly;
using algebra::RatFunc;
using algebra::Rational;
using algebra::Var;

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Undefined:
      return "UNDEFINED";
  }
  return "?";
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s{"curve", "orders", "series", "uniformization", "encoder"};
  return s;
}

std::vector<std::string> parse_suites(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    if (item == "all") return all_suites();
    if (std::find(all_suites().begin(), all_suites().end(), item) == all_suites().end())
      throw DomainError("unknown suite '" + item + "'");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  return out;
}

void CampaignConfig::validate() const {
  if (max_n < 1) throw DomainError("max_n must be at least 1");
  if (trunc < 8) throw DomainError("trunc must be at least 8");
  if (jobs == 0) throw DomainError("jobs must be at least 1");
  for (const auto& s : suites)
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
      throw DomainError("unknown suite '" + s + "'");
}

const std::vector<CheckFamily>& check_families() {
  static const std::vector<CheckFamily> f{
      {"algebra.gcd", "polynomial gcd", "curve", "poly_gcd"},
      {"algebra.ratfunc", "rational functions", "curve", "ratfunc_make, differentiate, substitute, evaluate_partial"},
      {"curve.md", "MD equation", "curve", "multiply_point, check_md, check_md_tilde"},
      {"curve.routes", "addition law", "curve", "add_points, multiply_point"},
      {"lemma.liz", "Liz", "curve", "compute_A"},
      {"lemma.wellknown", "wellknown", "curve", "check_wellknown"},
      {"lemma.productformula", "productformula", "curve", "check_product_formulas"},
      {"lemma.mariac", "mariac", "curve", "check_mariac"},
      {"lemma.quotienttilde", "quotienttilde", "curve", "check_quotienttilde, expand_at"},
      {"lemma.poly", "Poly", "curve", "specialize_tilde"},
      {"lemma.grouplaw.ord", "groupLaw (order)", "orders", "ord_at"},
      {"lemma.grouplaw.alpha", "groupLaw (alpha)", "orders", "compute_alpha, evaluate_partial"},
      {"lemma.sofia", "Sofia", "orders", "alpha_at_singular"},
      {"lemma.alphaA", "alphaA", "orders", "check_alphaA_relation"},
      {"lemma.alla", "Alla", "orders", "derivative_order_check"},
      {"lemma.central0", "central0", "series", "solve_diff1, solve_diff2"},
      {"lemma.representation", "representation", "series", "represent, series_residual"},
      {"lemma.properties", "properties", "uniformization",
       "wp, wp_prime, xi, check_functional_equations, check_oddness, check_injectivity"},
      {"lemma.lawtransfer", "lawtransfer", "uniformization", "check_group_transfer"},
      {"lemma.lemG", "lemG", "uniformization", "G_prime"},
      {"lemma.uniform", "uniform", "uniformization", "check_uniformization_endo"},
      {"lemma.intvallem", "intvallem", "uniformization", "integrality_witness"},
      {"encoder.roundtrip", "encoder (render/parse)", "encoder", "render_formula, parse_formula"},
      {"encoder.dialect", "encoder (dialects)", "encoder",
       "parse_diophantine, encode_system, encode_integer_predicate"},
      {"encoder.curveops", "encoder (curve ops)", "encoder", "expand_curve_ops"},
      {"encoder.neq", "encoder (C and !=)", "encoder", "expand_neq, expand_constant_tests"},
  };
  return f;
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string x = a.substr(i, ie - i), y = b.substr(j, je - j);
      x.erase(0, std::min(x.find_first_not_of('0'), x.size() - 1));
      y.erase(0, std::min(y.find_first_not_of('0'), y.size() - 1));
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

bool any_fail(const std::vector<Certificate>& certs) {
  return std::any_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.status == Status::Fail; });
}

namespace {

struct Outcome {
  Status status;
  std::string residual;
};

Outcome pass() { return {Status::Pass, "0"}; }
Outcome fail(std::string why) { return {Status::Fail, std::move(why)}; }

Outcome from_residual(const RatFunc& r) { return r.is_zero() ? pass() : fail(r.to_string()); }

// Residuals with labels; PASS when every one vanishes.
Outcome from_labelled(const std::vector<std::pair<std::string, RatFunc>>& parts) {
  std::string out;
  for (const auto& [label, r] : parts) {
    if (r.is_zero()) continue;
    if (!out.empty()) out += "; ";
    out += label + ": " + r.to_string();
  }
  return out.empty() ? pass() : fail(out);
}

struct Task {
  std::string family;
  std::map<std::string, std::string> params;
  std::function<Outcome()> run;
};

std::string id_of(const Task& t) {
  std::string id = t.family;
  auto emit = [&](const std::string& key) {
    if (auto it = t.params.find(key); it != t.params.end()) id += "." + key + "=" + it->second;
  };
  emit("n");
  emit("k");
  emit("i");
  emit("case");
  emit("input");
  emit("dialect");
  return id;
}

const CheckFamily& family(const std::string& prefix) {
  for (const auto& f : check_families())
    if (f.prefix == prefix) return f;
  throw std::logic_error("unregistered check family " + prefix);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Per-family stream so that a family's inputs do not depend on which other
// suites run.
std::mt19937_64 rng_for(std::uint64_t seed, const std::string& family) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(fnv1a(family)), static_cast<std::uint32_t>(fnv1a(family) >> 32)};
  return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

Rational small_rational(std::mt19937_64& g) {
  Rational q(uniform(g, -9, 9), uniform(g, 1, 4));
  q.canonicalize();
  return q;
}

MPoly random_poly(std::mt19937_64& g, const std::vector<Var>& vars, int max_deg, int max_terms) {
  std::vector<std::pair<std::vector<MPoly::Exponent>, Rational>> terms;
  for (int i = uniform(g, 1, max_terms); i > 0; --i) {
    std::vector<MPoly::Exponent> e(vars.size());
    for (auto& x : e) x = static_cast<MPoly::Exponent>(uniform(g, 0, max_deg));
    terms.emplace_back(std::move(e), small_rational(g));
  }
  return MPoly::from_dense_terms(vars, std::move(terms));
}

MPoly random_upoly(std::mt19937_64& g, Var v, int deg) {
  std::vector<std::pair<std::vector<MPoly::Exponent>, Rational>> terms;
  for (int k = 0; k <= deg; ++k) terms.push_back({{static_cast<MPoly::Exponent>(k)}, small_rational(g)});
  return MPoly::from_dense_terms({v}, std::move(terms));
}

MPoly nonzero(std::mt19937_64& g, const std::vector<Var>& vars, int max_deg, int max_terms) {
  for (;;) {
    MPoly p = random_poly(g, vars, max_deg, max_terms);
    if (!p.is_zero()) return p;
  }
}

std::string rat(const Rational& q) { return q.get_str(); }

struct Context {
  const CampaignConfig& cfg;
  curve::EndoTable& table;
  curve::EndoTable& slow;
  std::vector<Task> tasks;

  void add(const std::string& fam, std::map<std::string, std::string> params, std::function<Outcome()> run) {
    family(fam);
    tasks.push_back({fam, std::move(params), std::move(run)});
  }
};

std::map<std::string, std::string> with_n(int n) { return {{"n", std::to_string(n)}}; }

constexpr int kRandomTrials = 100;

void algebra_suite(Context& c) {
  const Var z = algebra::vars::z(), d = algebra::vars::delta();
  const std::uint64_t seed = c.cfg.seed;
  c.add("algebra.gcd", {{"trials", "50"}}, [seed, z, d] {
    auto g = rng_for(seed, "algebra.gcd");
    for (int i = 0; i < 50; ++i) {
      MPoly common = nonzero(g, {z, d}, 2, 3);
      MPoly a = common * nonzero(g, {z, d}, 2, 3), b = common * nonzero(g, {z, d}, 2, 3);
      MPoly h = algebra::poly_gcd(a, b);
      if (!a.divide_exact(h) || !b.divide_exact(h)) return fail("gcd does not divide its inputs: " + a.to_string() + ", " + b.to_string());
      if (!h.divide_exact(common)) return fail("gcd misses a common factor: " + a.to_string() + ", " + b.to_string());
    }
    return pass();
  });
  c.add("algebra.ratfunc", {{"trials", "50"}}, [seed, z, d] {
    auto g = rng_for(seed, "algebra.ratfunc");
    for (int i = 0; i < 50; ++i) {
      RatFunc f = RatFunc::make(random_poly(g, {z, d}, 2, 3), nonzero(g, {z, d}, 2, 3));
      RatFunc h = RatFunc::make(random_poly(g, {z, d}, 2, 3), nonzero(g, {z, d}, 2, 3));
      RatFunc leibniz = (f * h).differentiate(z) - (f.differentiate(z) * h + f * h.differentiate(z));
      if (!leibniz.is_zero()) return fail("product rule: " + leibniz.to_string());
      // Substituting z ↦ z + c and then z = 0 agrees with evaluating at c.
      const Rational at = small_rational(g);
      auto lhs = f.substitute(z, RatFunc(MPoly(z) + MPoly(at))).evaluate_partial(z, 0);
      auto rhs = f.evaluate_partial(z, at);
      if (lhs.has_value() != rhs.has_value() || (lhs && !(*lhs - *rhs).is_zero()))
        return fail("substitute/evaluate_partial disagree on " + f.to_string());
    }
    return pass();
  });
}

void curve_suite(Context& c) {
  algebra_suite(c);
  const int M = c.cfg.max_n;
  auto& T = c.table;
  for (int n = 1; n <= M; ++n) {
    c.add("curve.md", with_n(n), [&T, n] {
      auto p = T.get(n);
      auto [xt, yt] = T.tilde(n);
      return from_labelled({{"E_delta", curve::check_md(p.x, p.y)}, {"E~", curve::check_md_tilde(xt, yt)}});
    });
  }
  auto& S = c.slow;
  for (int n = 1; n <= std::min(M, 8); ++n) {
    c.add("curve.routes", with_n(n), [&T, &S, n] {
      auto a = T.get(n), b = S.get(n);
      return from_labelled({{"x", a.x - b.x}, {"y", a.y - b.y}});
    });
  }
  for (int n = -M; n <= M; ++n) {
    if (n == 0) continue;
    c.add("lemma.liz", with_n(n), [&T, n] {
      auto p = T.get(n);
      return from_residual(places::compute_A(p.x, p.y) - RatFunc(n));
    });
    c.add("lemma.mariac", with_n(n), [&T, n] { return from_residual(curve::check_mariac(n, T)); });
    c.add("lemma.poly", with_n(n), [&T, n] {
      try {
        T.tilde(n);
        return pass();
      } catch (const LemmaViolation& e) {
        return fail(e.what());
      }
    });
  }
  for (int n = 1; n <= M; ++n)
    c.add("lemma.wellknown", with_n(n), [&T, n] { return from_residual(curve::check_wellknown(n, T)); });
  for (int n = 2; n <= std::min(M, 8); ++n) {
    for (int k = 1; k < n; ++k) {
      c.add("lemma.productformula", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, [&T, n, k] {
        auto r = curve::check_product_formulas(n, k, T);
        return from_labelled({{"product", r.product}, {"duplication", r.duplication}, {"product~", r.product_tilde}, {"duplication~", r.duplication_tilde}});
      });
    }
  }
  for (int n = 1; n <= std::min(M, 10); ++n) {
    c.add("lemma.quotienttilde", {{"n", std::to_string(n)}, {"order", "8"}}, [&T, n] {
      auto e = curve::check_quotienttilde(n, 8, T);
      if (e.valuation() != 0) return fail("valuation " + std::to_string(e.valuation()));
      RatFunc lead = e.coeff(0) - RatFunc(1);
      return lead.is_zero() ? pass() : fail("constant coefficient minus 1: " + lead.to_string());
    });
  }
}

int expected_ord(int n) { return n % 2 ? 1 : (n % 4 == 0 ? -2 : 0); }

void orders_suite(Context& c) {
  const int M = c.cfg.max_n;
  auto& T = c.table;
  const Var z = algebra::vars::z(), d = algebra::vars::delta();
  for (int n = 1; n <= M; ++n) {
    c.add("lemma.grouplaw.ord", with_n(n), [&T, n] {
      auto o = places::ord_at(T.get(n).x - RatFunc(1), places::Place::z_minus_1());
      const int want = expected_ord(n);
      if (o == places::Order::finite(want)) return pass();
      return fail("ord " + o.to_string() + ", expected " + std::to_string(want));
    });
    c.add("lemma.grouplaw.alpha", with_n(n), [&T, n, z] {
      auto p = T.get(n);
      RatFunc alpha = places::compute_alpha(p.x, p.y);
      auto at = alpha.evaluate_partial(z, 1);
      if (n % 4 == 2) {
        // The stated value is 0; α has a pole along z = 1 instead and it is
        // 1/α that vanishes there.
        if (at) return fail("alpha at z=1 is " + at->to_string() + ", expected a pole");
        auto inv = alpha.inverse().evaluate_partial(z, 1);
        if (!inv || !inv->is_zero()) return fail("1/alpha does not vanish at z=1");
        return Outcome{Status::Undefined, "alpha has a pole at z=1 (1/alpha = 0); the stated value 0 is that of 1/alpha"};
      }
      if (!at) return fail("alpha has a pole at z=1");
      const Rational want = n % 2 ? Rational(n) : Rational(-n, 2);
      return from_residual(*at - RatFunc(want));
    });
    c.add("lemma.alphaA", with_n(n), [&T, n] {
      auto p = T.get(n);
      auto r = places::check_alphaA_relation(p.x, p.y);
      std::string detail = "ord " + r.ord.to_string() + ", alpha " + (r.alpha ? rat(*r.alpha) : "undefined") +
                           ", A " + (r.A ? rat(*r.A) : "undefined");
      switch (r.verdict) {
        case places::Verdict::Pass:
          return pass();
        case places::Verdict::Fail:
          return fail(r.detail + "; " + detail);
        case places::Verdict::Undefined:
          break;
      }
      return Outcome{Status::Undefined, r.detail + "; " + detail};
    });
  }
  for (int n = 1; n <= M; n += 2) {
    c.add("lemma.sofia", with_n(n), [&T, n] {
      auto p = T.get(n);
      auto a = places::alpha_at_singular(p.x, p.y);
      if (!a) return fail("alpha undefined at z=1, delta=-2");
      auto A = places::at_singular_point(places::compute_A(p.x, p.y));
      if (*a != n) return fail("alpha " + rat(*a) + ", expected " + std::to_string(n));
      if (!A || *A != *a) return fail("A at the singular point differs from alpha");
      return pass();
    });
  }
  const std::uint64_t seed = c.cfg.seed;
  const std::vector<places::OrderRule> rules{places::OrderRule::Decrement, places::OrderRule::NonDecrease,
                                             places::OrderRule::NonNegative};
  // One shared fuzz pass; each rule gets its own certificate.
  auto fuzz = std::make_shared<std::vector<std::pair<int, std::string>>>();
  auto once = std::make_shared<std::once_flag>();
  auto run_fuzz = [fuzz, once, seed, z, d] {
    std::call_once(*once, [&] {
      auto g = rng_for(seed, "lemma.alla");
      const MPoly Z(z), D(d);
      const std::vector<MPoly> factors{Z, Z - 1, Z + 1, D + 2, Z.pow(2) + D * Z + 1};
      const std::vector<places::Place> placelist{places::Place::z(), places::Place::z_minus_1(),
                                                 places::Place::make(Z + 1), places::Place::delta_plus_2(),
                                                 places::Place::quadratic()};
      int trials = 0;
      while (trials < 500) {
        MPoly num(uniform(g, 1, 5)), den(1);
        for (const auto& f : factors) {
          int e = uniform(g, -3, 3);
          if (e > 0) num = num * f.pow(e);
          if (e < 0) den = den * f.pow(-e);
        }
        MPoly extra = random_poly(g, {z, d}, 1, 2) + 7;
        if (extra.is_zero()) continue;
        RatFunc h = RatFunc::make(num * extra, den);
        ++trials;
        const auto& p = placelist[uniform(g, 0, static_cast<int>(placelist.size()) - 1)];
        auto r = places::derivative_order_check(h, p);
        fuzz->push_back({static_cast<int>(r.rule), r.holds ? "" : h.to_string() + " at " + p.to_string()});
      }
    });
  };
  for (auto rule : rules) {
    c.add("lemma.alla", {{"case", places::to_string(rule)}, {"trials", "500"}}, [run_fuzz, fuzz, rule] {
      run_fuzz();
      int seen = 0;
      for (const auto& [r, bad] : *fuzz) {
        if (r != static_cast<int>(rule)) continue;
        ++seen;
        if (!bad.empty()) return fail("violated by " + bad);
      }
      if (seen == 0) return fail("case never exercised");
      return pass();
    });
  }
}

void series_suite(Context& c) {
  const std::uint64_t seed = c.cfg.seed;
  const int trunc = c.cfg.trunc;
  const Var z = algebra::vars::z();
  c.add("lemma.central0", {{"i", "1"}, {"trials", std::to_string(kRandomTrials)}}, [seed, trunc, z] {
    auto g = rng_for(seed, "lemma.central0.diff1");
    for (int i = 0; i < kRandomTrials; ++i) {
      auto b = series::series_from_poly(random_upoly(g, z, uniform(g, 0, 12)), z, trunc);
      auto r = series::diff1_residual(b, series::solve_diff1(b));
      if (!r.is_zero()) return fail(r.to_string());
    }
    return pass();
  });
  c.add("lemma.central0", {{"i", "2"}, {"trials", std::to_string(kRandomTrials)}}, [seed, trunc, z] {
    auto g = rng_for(seed, "lemma.central0.diff2");
    for (int i = 0; i < kRandomTrials; ++i) {
      auto b = series::series_from_poly(random_upoly(g, z, uniform(g, 0, 12)), z, trunc);
      auto s = series::solve_diff2(b);
      auto r = series::diff2_residual(b, s.g, s.gamma);
      if (!r.is_zero()) return fail(r.to_string());
    }
    return pass();
  });
  c.add("lemma.representation", {{"trials", std::to_string(kRandomTrials)}, {"trunc", std::to_string(trunc)}},
        [seed, trunc, z] {
          auto g = rng_for(seed, "lemma.representation");
          for (int i = 0; i < kRandomTrials; ++i) {
            const int deg = uniform(g, 0, 8);
            const Rational beta = small_rational(g), gamma = small_rational(g);
            auto h = series::series_from_poly(random_upoly(g, z, deg), z, trunc);
            auto H = series::rebuild(beta, gamma, h);
            auto rep = series::represent(H);
            const std::string tag = "trial " + std::to_string(i) + ": ";
            if (rep.beta != beta) return fail(tag + "beta " + rat(rep.beta) + " != " + rat(beta));
            if (rep.gamma != gamma) return fail(tag + "gamma " + rat(rep.gamma) + " != " + rat(gamma));
            for (int k = 0; k < rep.h.trunc(); ++k)
              if (rep.h.coeff(k) != h.coeff(k)) return fail(tag + "h differs at z^" + std::to_string(k));
            auto r = series::series_residual(H, rep);
            if (!r.is_zero()) return fail(tag + r.to_string());
          }
          return pass();
        });
}

void uniformization_suite(Context& c) {
  auto fe = std::make_shared<std::array<uniform::NamedResidual, 5>>(uniform::check_functional_equations());
  for (std::size_t i = 0; i < fe->size(); ++i)
    c.add("lemma.properties", {{"i", std::to_string(i + 1)}, {"identity", (*fe)[i].name}},
          [fe, i] { return from_residual((*fe)[i].residual); });
  auto odd = std::make_shared<std::array<uniform::NamedResidual, 3>>(uniform::check_oddness());
  for (std::size_t i = 0; i < odd->size(); ++i)
    c.add("lemma.properties", {{"i", std::to_string(fe->size() + i + 1)}, {"identity", (*odd)[i].name}},
          [odd, i] { return from_residual((*odd)[i].residual); });
  c.add("lemma.properties", {{"i", std::to_string(fe->size() + odd->size() + 1)}, {"identity", "injectivity"}}, [] {
    auto r = uniform::check_injectivity();
    if (!r.wp_difference_factors) return fail("wp(t1) - wp(t2) is not c(t1 - t2)(1 - t1 t2)");
    if (!r.reflected_roots_trivial) return fail("reflected branch has extra roots: " + r.reflected_branch.to_string());
    return pass();
  });
  // The transfer residuals depend on the (possibly mutated) addition law, so
  // they are computed inside the task.
  for (std::size_t i = 0; i < 6; ++i)
    c.add("lemma.lawtransfer", {{"i", std::to_string(i + 1)}}, [i] {
      auto r = uniform::check_group_transfer()[i];
      Outcome o = from_residual(r.residual);
      if (o.status != Status::Pass) o.residual = r.name + ": " + o.residual;
      return o;
    });
  const std::uint64_t seed = c.cfg.seed;
  c.add("lemma.lemG", {{"trials", "50"}}, [seed] {
    auto g = rng_for(seed, "lemma.lemG");
    const Var z = algebra::vars::z();
    for (int i = 0; i < 50; ++i) {
      MPoly h = random_upoly(g, z, uniform(g, 0, 4));
      const Rational beta = small_rational(g), gamma = small_rational(g);
      RatFunc r = uniform::G_prime_residual(beta, gamma, h);
      if (!r.is_zero()) return fail("h = " + h.to_string() + ": " + r.to_string());
    }
    return pass();
  });
  auto& T = c.table;
  const int trunc = c.cfg.trunc;
  for (int n = 1; n <= c.cfg.max_n; n += 2) {
    c.add("lemma.uniform", with_n(n), [&T, n] {
      try {
        auto r = uniform::check_uniformization_endo(n, T);
        if (!r.x_identity_ok || !r.y_identity_ok) return fail("identity fails for sigma " + std::to_string(r.sigma));
        return pass();
      } catch (const LemmaViolation& e) {
        return fail(e.what());
      }
    });
    c.add("lemma.intvallem", with_n(n), [&T, n, trunc] {
      try {
        Rational w = uniform::integrality_witness(n, trunc, T);
        return w == n ? pass() : fail("witness " + rat(w) + ", expected " + std::to_string(n));
      } catch (const LemmaViolation& e) {
        return fail(e.what());
      }
    });
  }
}

encoder::Node random_node(std::mt19937_64& g, const std::vector<Var>& vs, int depth) {
  using encoder::AtomKind;
  using encoder::Node;
  if (depth == 0 || uniform(g, 0, 3) == 0) {
    auto p = [&] { return random_poly(g, vs, 2, 3); };
    static const AtomKind kinds[] = {AtomKind::Eq, AtomKind::Eval, AtomKind::EvalPair,
                                     AtomKind::Neq, AtomKind::InC, AtomKind::CurveSum};
    static const int arity[] = {2, 1, 2, 1, 1, 6};
    const int k = uniform(g, 0, 5);
    encoder::Atom a{kinds[k], {}};
    for (int i = 0; i < arity[k]; ++i) a.args.push_back(p());
    return Node::leaf(std::move(a));
  }
  std::vector<Node> kids;
  for (int i = uniform(g, 2, 3); i > 0; --i) kids.push_back(random_node(g, vs, depth - 1));
  return uniform(g, 0, 1) ? Node::all(std::move(kids)) : Node::any(std::move(kids));
}

const std::vector<std::pair<std::string, std::string>>& encoder_inputs() {
  static const std::vector<std::pair<std::string, std::string>> in{
      {"single", "x = 2"}, {"pair", "x*y = 6; x + y = 5"}, {"pythagorean", "a^2 + b^2 = c^2"}};
  return in;
}

void encoder_suite(Context& c) {
  using namespace encoder;
  const std::uint64_t seed = c.cfg.seed;
  c.add("encoder.roundtrip", {{"trials", "200"}}, [seed] {
    auto g = rng_for(seed, "encoder.roundtrip");
    const std::vector<Var> vs{Var("p"), Var("q_r_1"), z1(), z2()};
    for (int i = 0; i < 200; ++i) {
      Formula f{{"p", "q_r_1"}, random_node(g, vs, 3)};
      const std::string json = render_formula(f, RenderFormat::Json);
      if (!(parse_formula(json) == f)) return fail("roundtrip changed formula " + std::to_string(i));
    }
    return pass();
  });
  for (const auto& [name, text] : encoder_inputs()) {
    for (Dialect d : {Dialect::Meromorphic, Dialect::Analytic, Dialect::EntireCm}) {
      c.add("encoder.dialect", {{"input", name}, {"dialect", to_string(d)}}, [text = text, d] {
        Formula f = encode_system(parse_diophantine(text), d);
        std::vector<std::string> problems;
        if (!is_well_formed(f)) problems.push_back("malformed");
        for (const auto& v : undeclared_vars(f)) problems.push_back("undeclared " + v);
        for (const auto& v : dead_vars(f)) problems.push_back("dead " + v);
        if (!satisfies_dialect(f, d)) problems.push_back("dialect invariant broken");
        if (render_formula(f, RenderFormat::Text) !=
            render_formula(encode_system(parse_diophantine(text), d), RenderFormat::Text))
          problems.push_back("nondeterministic");
        if (!(parse_formula(render_formula(f, RenderFormat::Json)) == f)) problems.push_back("roundtrip");
        if (d == Dialect::Meromorphic) {
          Formula p = encode_integer_predicate("n", d);
          if (p.matrix.op != Node::Op::Or || p.matrix.args.size() != 4) problems.push_back("not a 4-way disjunction");
        }
        if (problems.empty()) return pass();
        std::string s;
        for (const auto& p : problems) s += (s.empty() ? "" : "; ") + p;
        return fail(s);
      });
    }
  }
  c.add("encoder.curveops", {}, [] {
    auto V = [](const char* n) { return MPoly(Var(n)); };
    auto counts = [](const Formula& f) {
      auto s = stats(f);
      auto get = [&](AtomKind k) { return s.by_kind.count(k) ? s.by_kind.at(k) : 0; };
      return std::pair{get(AtomKind::Eq), get(AtomKind::Neq)};
    };
    Formula dbl{{"x", "y", "a", "b"},
                Node::leaf({AtomKind::CurveSum, {V("x"), V("y"), V("a"), V("b"), V("a"), V("b")}})};
    if (counts(expand_curve_ops(dbl)) != std::pair<std::size_t, std::size_t>{3, 1})
      return fail("doubling does not give 3 equations and 1 guard");
    Formula gen{{"x", "y", "a", "b", "c", "e"},
                Node::leaf({AtomKind::CurveSum, {V("x"), V("y"), V("a"), V("b"), V("c"), V("e")}})};
    if (counts(expand_curve_ops(gen)) != std::pair<std::size_t, std::size_t>{3, 2})
      return fail("generic sum does not give 3 equations and 2 guards");
    Formula inf{{"x", "y", "a", "b"},
                Node::all({Node::leaf({AtomKind::CurveSum, {V("x"), V("y"), V("a"), V("b")}}),
                           Node::leaf({AtomKind::Eq, {V("x"), V("y")}})})};
    Formula sub = expand_curve_ops(inf);
    if (stats(sub).atoms != 1 || sub.vars.size() != 2) return fail("sum with infinity is not a substitution");
    return pass();
  });
  c.add("encoder.neq", {}, [] {
    const MPoly u(Var("u"));
    Formula f{{"u"}, Node::all({Node::leaf({AtomKind::Neq, {u}}), Node::leaf({AtomKind::InC, {u}})})};
    Formula m = expand_neq(f, Dialect::Meromorphic);
    if (stats(m).atoms != 2 || m.vars.size() != 2) return fail("meromorphic: u != 0 is not one product equation");
    Formula e = expand_constant_tests(expand_neq(f, Dialect::EntireCm), Dialect::EntireCm);
    if (!satisfies_dialect(e, Dialect::EntireCm)) return fail("entire-cm: constant or != atoms remain");
    if (!(expand_neq(f, Dialect::Analytic) == f)) return fail("analytic: != atoms changed");
    return pass();
  });
}

}  // namespace

std::vector<Certificate> run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  struct MutationScope {
    curve::AdditionLawMutation saved = curve::addition_law_mutation();
    explicit MutationScope(bool on) {
      if (on) curve::set_addition_law_mutation(curve::AdditionLawMutation::FlipDoublingDeltaSign);
    }
    ~MutationScope() { curve::set_addition_law_mutation(saved); }
  } scope(cfg.mutate);

  curve::EndoTable& table = curve::shared_endo_table();
  curve::EndoTable slow(curve::MultiplyRoute::RepeatedAddition);
  Context ctx{cfg, table, slow, {}};
  for (const auto& s : cfg.suites) {
    if (s == "curve") curve_suite(ctx);
    else if (s == "orders") orders_suite(ctx);
    else if (s == "series") series_suite(ctx);
    else if (s == "uniformization") uniformization_suite(ctx);
    else if (s == "encoder") encoder_suite(ctx);
  }

  std::vector<Certificate> certs(ctx.tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ctx.tasks.size();) {
      const Task& t = ctx.tasks[i];
      Certificate& c = certs[i];
      c.check_id = id_of(t);
      c.params = t.params;
      c.params["lemma"] = family(t.family).lemma;
      const auto t0 = std::chrono::steady_clock::now();
      Outcome o;
      try {
        o = t.run();
      } catch (const std::exception& e) {
        o = fail(std::string("error: ") + e.what());
      }
      c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      c.status = o.status;
      c.residual = o.residual;
    }
  };
  const unsigned jobs = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(1, ctx.tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::sort(certs.begin(), certs.end(),
            [](const Certificate& a, const Certificate& b) { return natural_less(a.check_id, b.check_id); });
  return certs;
}

}  // namespace h10m::verify
