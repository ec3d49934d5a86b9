// Multivariate gcd with cofactors: dense recursive modular algorithm (Brown)
// over word-size primes, Chinese remaindering over the integers.

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "h10m/errors.hpp"
#include "mpoly_internal.hpp"

namespace h10m::algebra {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kMaxDenseCells = std::size_t{1} << 24;
constexpr std::size_t kMaxPrimes = 4000;

struct Zp {
  u64 p;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a == 0) throw std::logic_error("inverse of zero mod p");
    return pow(a, p - 2);
  }
};

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Zp F{n};
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = F.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = F.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 prime_at(std::size_t i) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard lock(mu);
  u64 cand = primes.empty() ? (u64{1} << 62) : primes.back();
  while (primes.size() <= i) {
    do --cand;
    while (!is_prime_u64(cand));
    primes.push_back(cand);
  }
  return primes[i];
}

// ---- univariate polynomials mod p, low degree first, no trailing zeros ----

using UPoly = std::vector<u64>;

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 ueval(const UPoly& a, u64 x, const Zp& F) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b, const Zp& F) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  utrim(r);
  return r;
}

// a = q*b + r; returns q, leaves r in a.
UPoly udivrem(UPoly& a, const UPoly& b, const Zp& F) {
  if (b.empty()) throw std::logic_error("univariate division by zero mod p");
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1, 0);
  const u64 li = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 c = F.mul(a[k + b.size() - 1], li);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = F.sub(a[k + j], F.mul(c, b[j]));
  }
  utrim(a);
  return q;
}

UPoly umonic(UPoly a, const Zp& F) {
  if (a.empty() || a.back() == 1) return a;
  u64 li = F.inv(a.back());
  for (auto& x : a) x = F.mul(x, li);
  return a;
}

UPoly ugcd(UPoly a, UPoly b, const Zp& F) {
  while (!b.empty()) {
    udivrem(a, b, F);
    std::swap(a, b);
  }
  return umonic(std::move(a), F);
}

UPoly uexact(UPoly a, const UPoly& b, const Zp& F) {
  UPoly q = udivrem(a, b, F);
  if (!a.empty()) throw std::logic_error("inexact univariate division mod p");
  return q;
}

// ---- dense multivariate polynomials mod p, variable 0 outermost ----

struct DPoly {
  std::vector<std::size_t> dims;
  std::vector<u64> c;

  std::size_t inner() const {
    std::size_t s = 1;
    for (std::size_t i = 1; i < dims.size(); ++i) s *= dims[i];
    return s;
  }
};

std::size_t box_size(const std::vector<std::size_t>& dims) {
  std::size_t s = 1;
  for (auto d : dims) s *= d;
  return s;
}

std::vector<std::size_t> unflatten(std::size_t k, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> e(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    e[i] = k % dims[i];
    k /= dims[i];
  }
  return e;
}

std::size_t flatten(const std::vector<std::size_t>& e, const std::vector<std::size_t>& dims) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) k = k * dims[i] + e[i];
  return k;
}

std::optional<std::size_t> lead_index(const DPoly& a) {
  for (std::size_t k = a.c.size(); k-- > 0;)
    if (a.c[k] != 0) return k;
  return std::nullopt;
}

std::vector<std::size_t> leading_monomial(const DPoly& a) {
  return unflatten(*lead_index(a), a.dims);
}

DPoly dtrim(const DPoly& a) {
  std::vector<std::size_t> deg(a.dims.size(), 0);
  bool any = false;
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    if (a.c[k] == 0) continue;
    any = true;
    auto e = unflatten(k, a.dims);
    for (std::size_t i = 0; i < e.size(); ++i) deg[i] = std::max(deg[i], e[i]);
  }
  DPoly r;
  r.dims.resize(a.dims.size());
  for (std::size_t i = 0; i < deg.size(); ++i) r.dims[i] = any ? deg[i] + 1 : 1;
  if (r.dims == a.dims) return a;
  r.c.assign(box_size(r.dims), 0);
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    if (a.c[k] == 0) continue;
    r.c[flatten(unflatten(k, a.dims), r.dims)] = a.c[k];
  }
  return r;
}

DPoly dembed(const DPoly& a, const std::vector<std::size_t>& dims) {
  if (a.dims == dims) return a;
  DPoly r{dims, std::vector<u64>(box_size(dims), 0)};
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    if (a.c[k] == 0) continue;
    auto e = unflatten(k, a.dims);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] >= dims[i]) throw std::logic_error("dense image exceeds its box");
    r.c[flatten(e, dims)] = a.c[k];
  }
  return r;
}

UPoly column(const DPoly& a, std::size_t j) {
  const std::size_t S = a.inner();
  UPoly u(a.dims[0]);
  for (std::size_t i = 0; i < a.dims[0]; ++i) u[i] = a.c[i * S + j];
  utrim(u);
  return u;
}

void set_column(DPoly& a, std::size_t j, const UPoly& u) {
  const std::size_t S = a.inner();
  for (std::size_t i = 0; i < a.dims[0]; ++i) a.c[i * S + j] = i < u.size() ? u[i] : 0;
}

// Inner index of the lex-largest monomial in the inner variables.
std::size_t lead_column(const DPoly& a) {
  const std::size_t S = a.inner();
  for (std::size_t j = S; j-- > 0;)
    for (std::size_t i = 0; i < a.dims[0]; ++i)
      if (a.c[i * S + j] != 0) return j;
  throw std::logic_error("lead_column of zero");
}

UPoly content_outer(const DPoly& a, const Zp& F) {
  UPoly g;
  for (std::size_t j = 0; j < a.inner(); ++j) {
    UPoly u = column(a, j);
    if (u.empty()) continue;
    g = g.empty() ? umonic(u, F) : ugcd(std::move(g), std::move(u), F);
    if (g.size() == 1) break;
  }
  return g;
}

DPoly map_columns(const DPoly& a, std::size_t new_dim0,
                  const std::function<UPoly(UPoly)>& f) {
  DPoly r = a;
  r.dims[0] = new_dim0;
  r.c.assign(box_size(r.dims), 0);
  for (std::size_t j = 0; j < a.inner(); ++j) {
    UPoly u = column(a, j);
    if (u.empty()) continue;
    UPoly v = f(std::move(u));
    if (v.size() > new_dim0) throw std::logic_error("column exceeds box");
    set_column(r, j, v);
  }
  return r;
}

DPoly div_columns(const DPoly& a, const UPoly& d, const Zp& F) {
  if (d.size() == 1 && d[0] == 1) return a;
  return dtrim(map_columns(a, a.dims[0], [&](UPoly u) { return uexact(std::move(u), d, F); }));
}

DPoly mul_columns(const DPoly& a, const UPoly& m, const Zp& F) {
  if (m.size() == 1 && m[0] == 1) return a;
  return map_columns(a, a.dims[0] + m.size() - 1, [&](UPoly u) { return umul(u, m, F); });
}

DPoly eval_outer(const DPoly& a, u64 x, const Zp& F) {
  DPoly r;
  r.dims.assign(a.dims.begin() + 1, a.dims.end());
  const std::size_t S = a.inner();
  r.c.assign(S, 0);
  for (std::size_t i = a.dims[0]; i-- > 0;) {
    for (std::size_t j = 0; j < S; ++j) r.c[j] = F.add(F.mul(r.c[j], x), a.c[i * S + j]);
  }
  return r;
}

DPoly dscale(DPoly a, u64 s, const Zp& F) {
  if (s != 1)
    for (auto& x : a.c) x = F.mul(x, s);
  return a;
}

// Newton interpolation in the outer variable, cell by cell.
DPoly interpolate(const std::vector<u64>& xs, const std::vector<DPoly>& images,
                  const std::vector<std::size_t>& inner_dims, const Zp& F) {
  const std::size_t m = xs.size();
  std::vector<std::vector<u64>> inv(m);
  for (std::size_t j = 1; j < m; ++j) {
    inv[j].resize(m);
    for (std::size_t i = j; i < m; ++i) inv[j][i] = F.inv(F.sub(xs[i], xs[i - j]));
  }
  DPoly r;
  r.dims.push_back(m);
  r.dims.insert(r.dims.end(), inner_dims.begin(), inner_dims.end());
  const std::size_t S = box_size(inner_dims);
  r.c.assign(m * S, 0);
  std::vector<u64> v(m), poly(m);
  for (std::size_t cell = 0; cell < S; ++cell) {
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = images[i].c[cell];
      nonzero |= v[i] != 0;
    }
    if (!nonzero) continue;
    for (std::size_t j = 1; j < m; ++j)
      for (std::size_t i = m - 1; i >= j; --i) v[i] = F.mul(F.sub(v[i], v[i - 1]), inv[j][i]);
    std::fill(poly.begin(), poly.end(), 0);
    poly[0] = v[m - 1];
    std::size_t len = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      // poly = poly * (x - xs[i]) + v[i]
      poly[len] = 0;
      for (std::size_t k = len; k > 0; --k) poly[k] = F.sub(poly[k - 1], F.mul(poly[k], xs[i]));
      poly[0] = F.sub(0, F.mul(poly[0], xs[i]));
      poly[0] = F.add(poly[0], v[i]);
      ++len;
    }
    for (std::size_t i = 0; i < m; ++i) r.c[i * S + cell] = poly[i];
  }
  return r;
}

struct Image {
  DPoly g, abar, bbar;
};

Image normalize(Image im, const Zp& F) {
  u64 lc = im.g.c[*lead_index(im.g)];
  if (lc != 1) {
    im.g = dscale(std::move(im.g), F.inv(lc), F);
    im.abar = dscale(std::move(im.abar), lc, F);
    im.bbar = dscale(std::move(im.bbar), lc, F);
  }
  return im;
}

int outer_degree(const DPoly& a) {
  for (std::size_t i = a.dims[0]; i-- > 0;)
    for (std::size_t j = 0, S = a.inner(); j < S; ++j)
      if (a.c[i * S + j] != 0) return static_cast<int>(i);
  return -1;
}

DPoly from_upoly(const UPoly& u, std::size_t nvars) {
  DPoly r;
  r.dims.assign(nvars, 1);
  r.dims[0] = std::max<std::size_t>(u.size(), 1);
  r.c.assign(r.dims[0], 0);
  std::copy(u.begin(), u.end(), r.c.begin());
  return r;
}

// a, b nonzero with the same number of variables. g is lex-monic and
// g * abar = a, g * bbar = b.
Image gcd_modp(const DPoly& a0, const DPoly& b0, const Zp& F) {
  DPoly a = dtrim(a0), b = dtrim(b0);
  const std::size_t nv = a.dims.size();
  if (nv == 1) {
    UPoly ua = column(a, 0), ub = column(b, 0);
    UPoly g = ugcd(ua, ub, F);
    return {from_upoly(g, 1), from_upoly(uexact(ua, g, F), 1), from_upoly(uexact(ub, g, F), 1)};
  }
  UPoly ca = content_outer(a, F), cb = content_outer(b, F);
  DPoly ap = div_columns(a, ca, F), bp = div_columns(b, cb, F);
  UPoly c = ugcd(ca, cb, F);
  UPoly ca_c = uexact(ca, c, F), cb_c = uexact(cb, c, F);

  auto coprime = [&]() {
    Image im{from_upoly(c, nv), mul_columns(ap, ca_c, F), mul_columns(bp, cb_c, F)};
    return normalize(std::move(im), F);
  };
  if (ap.inner() == 1 || bp.inner() == 1) return coprime();

  UPoly lca = column(ap, lead_column(ap));
  UPoly lcb = column(bp, lead_column(bp));
  UPoly gam = ugcd(lca, lcb, F);
  const std::size_t da = ap.dims[0] - 1, db = bp.dims[0] - 1;
  const std::size_t need = udeg(gam) + std::max(da, db) + 1;
  std::vector<std::size_t> ia(ap.dims.begin() + 1, ap.dims.end());
  std::vector<std::size_t> ib(bp.dims.begin() + 1, bp.dims.end());
  std::vector<std::size_t> ig(ia.size());
  for (std::size_t i = 0; i < ia.size(); ++i) ig[i] = std::min(ia[i], ib[i]);

  std::vector<u64> xs;
  std::vector<DPoly> hs, as, bs;
  std::optional<std::vector<std::size_t>> best;
  for (u64 x = 1; x < F.p; ++x) {
    if (ueval(lca, x, F) == 0 || ueval(lcb, x, F) == 0) continue;
    Image im = gcd_modp(eval_outer(ap, x, F), eval_outer(bp, x, F), F);
    auto lm = leading_monomial(im.g);
    if (std::all_of(lm.begin(), lm.end(), [](auto e) { return e == 0; })) return coprime();
    if (best && lm > *best) continue;
    if (!best || lm < *best) {
      best = lm;
      xs.clear();
      hs.clear();
      as.clear();
      bs.clear();
    }
    xs.push_back(x);
    hs.push_back(dembed(dscale(std::move(im.g), ueval(gam, x, F), F), ig));
    as.push_back(dembed(im.abar, ia));
    bs.push_back(dembed(im.bbar, ib));
    if (xs.size() < need) continue;
    DPoly H = interpolate(xs, hs, ig, F);
    DPoly A = interpolate(xs, as, ia, F);
    DPoly B = interpolate(xs, bs, ib, F);
    const int dH = outer_degree(H), dA = outer_degree(A), dB = outer_degree(B);
    const int m = static_cast<int>(xs.size());
    if (dH + dA >= m || dH + dB >= m) continue;
    H = dtrim(H);
    UPoly kappa = content_outer(H, F);
    DPoly gp = div_columns(H, kappa, F);
    DPoly abar = div_columns(mul_columns(dtrim(A), kappa, F), gam, F);
    DPoly bbar = div_columns(mul_columns(dtrim(B), kappa, F), gam, F);
    Image out{mul_columns(gp, c, F), mul_columns(abar, ca_c, F), mul_columns(bbar, cb_c, F)};
    return normalize(std::move(out), F);
  }
  throw std::logic_error("ran out of evaluation points");
}

// ---- integer layer ----

struct DenseZ {
  std::vector<std::size_t> dims;
  std::vector<Integer> c;
};

DPoly reduce_modp(const IntPoly& a, const std::vector<std::size_t>& dims, u64 p) {
  DPoly r{dims, std::vector<u64>(box_size(dims), 0)};
  std::vector<std::size_t> e(dims.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    auto s = a.exp(t);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = s[i];
    r.c[flatten(e, dims)] = mpz_fdiv_ui(a.coeffs[t].get_mpz_t(), p);
  }
  return r;
}

// Combines x (mod m) with the residue r (mod p) into the symmetric range
// mod m*p. Returns whether x was unchanged.
bool crt_step(Integer& x, const Integer& m, const Integer& half_mp, const Integer& mp, u64 r,
              u64 p, u64 m_inv, const Zp& F) {
  u64 xm = mpz_fdiv_ui(x.get_mpz_t(), p);
  u64 t = F.mul(F.sub(r, xm), m_inv);
  if (t == 0) return true;
  mpz_addmul_ui(x.get_mpz_t(), m.get_mpz_t(), t);
  if (x > half_mp) x -= mp;
  return false;
}

IntPoly dense_to_int(const DenseZ& d) {
  IntPoly r;
  r.nvars = d.dims.size();
  for (std::size_t k = d.c.size(); k-- > 0;) {
    if (sgn(d.c[k]) == 0) continue;
    auto e = unflatten(k, d.dims);
    for (auto x : e) r.exps.push_back(static_cast<Exponent>(x));
    r.coeffs.push_back(d.c[k]);
  }
  return r;
}

Integer norm1(const DenseZ& d) {
  Integer s = 0;
  for (const auto& x : d.c) s += abs(x);
  return s;
}

Integer norm_inf(const std::vector<Integer>& c) {
  Integer s = 0;
  for (const auto& x : c)
    if (abs(x) > s) s = abs(x);
  return s;
}

IntPoly permute(const IntPoly& a, const std::vector<std::size_t>& order) {
  const std::size_t n = a.nvars;
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Exponent> e(a.size() * n);
  for (std::size_t t = 0; t < a.size(); ++t)
    for (std::size_t i = 0; i < n; ++i) e[t * n + i] = a.exps[t * n + order[i]];
  auto sp = [&](std::size_t t) { return std::span<const Exponent>(e.data() + t * n, n); };
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return compare_exp(sp(x), sp(y)) > 0; });
  IntPoly r;
  r.nvars = n;
  for (auto t : idx) {
    auto s = sp(t);
    r.exps.insert(r.exps.end(), s.begin(), s.end());
    r.coeffs.push_back(a.coeffs[t]);
  }
  return r;
}

std::vector<std::size_t> degrees(const IntPoly& a) {
  std::vector<std::size_t> d(a.nvars, 0);
  for (std::size_t t = 0; t < a.size(); ++t)
    for (std::size_t i = 0; i < a.nvars; ++i) d[i] = std::max<std::size_t>(d[i], a.exp(t)[i]);
  return d;
}

struct IntGcd {
  IntPoly h, abar, bbar;  // h * abar = gamma * A, h * bbar = gamma * B
  Integer gamma;
};

// A, B integer-primitive, nonconstant, on the same variables in lex order.
IntGcd gcd_integer(const IntPoly& A, const IntPoly& B) {
  const std::size_t n = A.nvars;
  auto da = degrees(A), db = degrees(B);
  std::vector<std::size_t> boxA(n), boxB(n), boxG(n);
  for (std::size_t i = 0; i < n; ++i) {
    boxA[i] = da[i] + 1;
    boxB[i] = db[i] + 1;
    boxG[i] = std::min(boxA[i], boxB[i]);
  }
  if (box_size(boxA) > kMaxDenseCells || box_size(boxB) > kMaxDenseCells)
    throw DomainError("gcd operands exceed the dense modular algorithm's size limit");
  const Integer& lcA = A.coeffs[0];
  const Integer& lcB = B.coeffs[0];
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), lcA.get_mpz_t(), lcB.get_mpz_t());
  const Integer bound_a = gamma * norm_inf(A.coeffs);
  const Integer bound_b = gamma * norm_inf(B.coeffs);

  DenseZ H{boxG, {}}, Ab{boxA, {}}, Bb{boxB, {}};
  Integer M = 0;
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t i = 0; i < kMaxPrimes; ++i) {
    const u64 p = prime_at(i);
    if (mpz_divisible_ui_p(lcA.get_mpz_t(), p) || mpz_divisible_ui_p(lcB.get_mpz_t(), p)) continue;
    Zp F{p};
    Image im = gcd_modp(reduce_modp(A, boxA, p), reduce_modp(B, boxB, p), F);
    auto lm = leading_monomial(im.g);
    if (std::all_of(lm.begin(), lm.end(), [](auto e) { return e == 0; })) {
      IntPoly one;
      one.nvars = n;
      one.exps.assign(n, 0);
      one.coeffs.push_back(1);
      return {one, A, B, Integer(1)};
    }
    if (best && lm > *best) continue;
    const u64 gp = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    DPoly hp = dembed(dscale(std::move(im.g), gp, F), boxG);
    DPoly ap = dembed(im.abar, boxA), bp = dembed(im.bbar, boxB);
    auto lift = [&](DenseZ& acc, const DPoly& img) {
      acc.c.resize(img.c.size());
      for (std::size_t k = 0; k < img.c.size(); ++k) {
        acc.c[k] = img.c[k];
        if (img.c[k] > p / 2) acc.c[k] -= p;
      }
    };
    if (!best || lm < *best) {
      best = lm;
      M = p;
      lift(H, hp);
      lift(Ab, ap);
      lift(Bb, bp);
      continue;
    }
    const u64 m_inv = F.inv(mpz_fdiv_ui(M.get_mpz_t(), p));
    const Integer mp = M * p;
    const Integer half = mp / 2;
    bool stable = true;
    auto combine = [&](DenseZ& acc, const DPoly& img) {
      for (std::size_t k = 0; k < img.c.size(); ++k)
        stable &= crt_step(acc.c[k], M, half, mp, img.c[k], p, m_inv, F);
    };
    combine(H, hp);
    combine(Ab, ap);
    combine(Bb, bp);
    M = mp;
    if (!stable) continue;
    // H*Abar == gamma*A holds modulo M; it is an identity once M exceeds
    // twice every coefficient on either side.
    const Integer h1 = norm1(H);
    const Integer lhs_a = std::max<Integer>(h1 * norm_inf(Ab.c), bound_a);
    const Integer lhs_b = std::max<Integer>(h1 * norm_inf(Bb.c), bound_b);
    if (2 * lhs_a < M && 2 * lhs_b < M) {
      return {dense_to_int(H), dense_to_int(Ab), dense_to_int(Bb), gamma};
    }
  }
  throw std::runtime_error("modular gcd did not converge");
}

GcdCofactors trivial_gcd(const MPoly& a, const MPoly& b) { return {MPoly(1), a, b}; }

std::optional<GcdCofactors> fast_paths(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return GcdCofactors{MPoly(), MPoly(), MPoly()};
  if (a.is_zero()) {
    Rational l = b.grlex_leading_coeff();
    return GcdCofactors{b.scaled(1 / l), MPoly(), MPoly(l)};
  }
  if (b.is_zero()) {
    Rational l = a.grlex_leading_coeff();
    return GcdCofactors{a.scaled(1 / l), MPoly(l), MPoly()};
  }
  if (a.is_constant() || b.is_constant()) return trivial_gcd(a, b);
  if (a == b) {
    Rational l = a.grlex_leading_coeff();
    return GcdCofactors{a.scaled(1 / l), MPoly(l), MPoly(l)};
  }
  bool share = false;
  for (const auto& v : a.vars())
    if (b.has_var(v)) share = true;
  if (!share) return trivial_gcd(a, b);
  if (a.num_terms() == 1 || b.num_terms() == 1) {
    // gcd with a monomial is the monomial of minimal common exponents
    auto vars = union_vars(a.vars(), b.vars());
    auto ea = widen(a, vars), eb = widen(b, vars);
    const std::size_t n = vars.size();
    std::vector<Exponent> lo(n, ~Exponent{0});
    for (std::size_t t = 0; t < a.num_terms(); ++t)
      for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], ea[t * n + i]);
    for (std::size_t t = 0; t < b.num_terms(); ++t)
      for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], eb[t * n + i]);
    MPoly g = MPoly::from_dense_terms(vars, {{lo, Rational(1)}});
    return GcdCofactors{g, *a.divide_exact(g), *b.divide_exact(g)};
  }
  return std::nullopt;
}

}  // namespace

GcdCofactors poly_gcd_cofactors(const MPoly& a, const MPoly& b) {
  if (auto r = fast_paths(a, b)) return *r;
  auto vars = union_vars(a.vars(), b.vars());
  const std::size_t n = vars.size();
  Rational sa, sb;
  IntPoly A = to_intpoly(a, vars, sa, true);
  IntPoly B = to_intpoly(b, vars, sb, true);
  // Highest-degree variable innermost: it becomes the univariate base case.
  auto deg_a = degrees(A), deg_b = degrees(B);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return deg_a[x] + deg_b[x] < deg_a[y] + deg_b[y];
  });
  std::vector<std::size_t> back(n);
  for (std::size_t i = 0; i < n; ++i) back[order[i]] = i;
  IntGcd r = gcd_integer(permute(A, order), permute(B, order));
  MPoly H = from_intpoly(permute(r.h, back), vars, 1);
  MPoly Ab = from_intpoly(permute(r.abar, back), vars, 1);
  MPoly Bb = from_intpoly(permute(r.bbar, back), vars, 1);
  const Rational lh = H.grlex_leading_coeff();
  const Rational k = lh / Rational(r.gamma);
  return {H.scaled(1 / lh), Ab.scaled(sa * k), Bb.scaled(sb * k)};
}

MPoly poly_gcd(const MPoly& a, const MPoly& b) { return poly_gcd_cofactors(a, b).gcd; }

}  // namespace h10m::algebra
