#include "nonint/detail/zfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace nonint::detail {
namespace {

using u64 = std::uint64_t;
using MPoly = std::vector<u64>;  // coefficients in [0, p)

// ---------------------------------------------------------------------------
// Arithmetic in Z/p[x], p an odd prime below 2^31.

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e != 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

MPoly mp_sub(const MPoly& a, const MPoly& b, const Zp& F) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b, const Zp& F) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

MPoly mp_rem(MPoly a, const MPoly& b, const Zp& F, MPoly* quot = nullptr) {
  const int db = deg(b);
  if (db < 0) throw std::domain_error("division by zero polynomial mod p");
  const u64 inv = F.inv(b.back());
  if (quot != nullptr) quot->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int k = deg(a); k >= db; --k) {
    const u64 c = F.mul(a[k], inv);
    if (c == 0) continue;
    if (quot != nullptr) (*quot)[k - db] = c;
    for (int j = 0; j <= db; ++j) a[k - db + j] = F.sub(a[k - db + j], F.mul(c, b[j]));
  }
  a.resize(std::max(0, std::min(deg(a) + 1, db)));
  trim(a);
  if (quot != nullptr) trim(*quot);
  return a;
}

MPoly mp_monic(MPoly a, const Zp& F) {
  if (a.empty()) return a;
  const u64 inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

MPoly mp_gcd(MPoly a, MPoly b, const Zp& F) {
  while (!b.empty()) {
    MPoly r = mp_rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, F);
}

// s*a + t*b = gcd (monic); deg s < deg b, deg t < deg a for coprime inputs.
void mp_xgcd(const MPoly& a, const MPoly& b, const Zp& F, MPoly& s, MPoly& t) {
  MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    MPoly q;
    MPoly r = mp_rem(r0, r1, F, &q);
    MPoly s2 = mp_sub(s0, mp_mul(q, s1, F), F);
    MPoly t2 = mp_sub(t0, mp_mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = F.inv(r0.back());
  for (auto& c : s0) c = F.mul(c, inv);
  for (auto& c : t0) c = F.mul(c, inv);
  s = s0;
  t = t0;
}

MPoly mp_powmod(MPoly base, const Integer& exp, const MPoly& f, const Zp& F) {
  MPoly result{1};
  base = mp_rem(base, f, F);
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mp_rem(mp_mul(result, result, F), f, F);
    if (mpz_tstbit(exp.get_mpz_t(), i) != 0) result = mp_rem(mp_mul(result, base, F), f, F);
  }
  return result;
}

MPoly mp_deriv(const MPoly& a, const Zp& F) {
  if (a.size() <= 1) return {};
  MPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<MPoly, int>> distinct_degree(MPoly f, const Zp& F) {
  std::vector<std::pair<MPoly, int>> out;
  const MPoly x{0, 1};
  MPoly h = x;
  const Integer p(static_cast<unsigned long>(F.p));
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = mp_powmod(h, p, f, F);
    MPoly g = mp_gcd(f, mp_sub(h, x, F), F);
    if (deg(g) > 0) {
      out.emplace_back(g, i);
      MPoly q;
      mp_rem(f, g, F, &q);
      f = q;
      h = mp_rem(h, f, F);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting.
void equal_degree(const MPoly& g, int d, const Zp& F, std::mt19937_64& rng,
                  std::vector<MPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer exp;
  mpz_ui_pow_ui(exp.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  exp = (exp - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  for (;;) {
    MPoly a(deg(g));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    MPoly b = mp_powmod(a, exp, g, F);
    b = mp_sub(b, MPoly{1}, F);
    MPoly h = mp_gcd(g, b, F);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      MPoly q;
      mp_rem(g, h, F, &q);
      equal_degree(h, d, F, rng, out);
      equal_degree(mp_monic(q, F), d, F, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z/m)[x] with big modulus, for Hensel lifting.

using ZmPoly = std::vector<Integer>;  // coefficients in [0, m)

void ztrim(ZmPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZmPoly zm_reduce(ZmPoly a, const Integer& m) {
  for (auto& c : a) c = mod(c, m);
  ztrim(a);
  return a;
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Integer& m, int sign = 1) {
  ZmPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Integer x = i < a.size() ? a[i] : Integer(0);
    const Integer y = i < b.size() ? b[i] : Integer(0);
    if (sign > 0) {
      r[i] = x + y;
    } else {
      r[i] = x - y;
    }
  }
  return zm_reduce(std::move(r), m);
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZmPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zm_reduce(std::move(r), m);
}

// Division by a monic polynomial modulo m.
void zm_divrem(const ZmPoly& a, const ZmPoly& f, const Integer& m, ZmPoly& q, ZmPoly& r) {
  const int df = static_cast<int>(f.size()) - 1;
  r = a;
  const int da = static_cast<int>(r.size()) - 1;
  q.assign(da >= df ? static_cast<std::size_t>(da - df + 1) : 0, Integer(0));
  for (int k = da; k >= df; --k) {
    const Integer c = mod(r[k], m);
    if (sgn(c) == 0) continue;
    q[k - df] = c;
    for (int j = 0; j <= df; ++j) r[k - df + j] -= c * f[j];
  }
  r.resize(static_cast<std::size_t>(std::max(0, std::min(da + 1, df))));
  r = zm_reduce(std::move(r), m);
  ztrim(q);
}

ZmPoly to_zm(const MPoly& a) {
  ZmPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

struct LiftState {
  ZmPoly f, h, s, t;
};

// One quadratic Hensel step: F = f*h mod m, s*f + t*h = 1 mod m  ->  same mod m^2.
LiftState hensel_step(const ZmPoly& target, const LiftState& st, const Integer& m2) {
  // Invariants: st.f monic, target = f*h and s*f + t*h = 1 modulo the old modulus.
  const ZmPoly e = zm_add(target, zm_mul(st.f, st.h, m2), m2, -1);
  ZmPoly q, r;
  zm_divrem(zm_mul(st.t, e, m2), st.f, m2, q, r);
  LiftState out;
  out.f = zm_add(st.f, r, m2);
  out.h = zm_add(st.h, zm_add(zm_mul(st.s, e, m2), zm_mul(q, st.h, m2), m2), m2);
  const ZmPoly b =
      zm_add(zm_add(zm_mul(st.s, out.f, m2), zm_mul(st.t, out.h, m2), m2), ZmPoly{Integer(1)}, m2, -1);
  ZmPoly c, d;
  zm_divrem(zm_mul(st.t, b, m2), out.f, m2, c, d);
  out.t = zm_add(st.t, d, m2, -1);
  out.s = zm_add(zm_add(st.s, zm_mul(st.s, b, m2), m2, -1), zm_mul(c, out.h, m2), m2, -1);
  return out;
}

// Lifts the monic factorization target = prod(factors) from mod p to mod p^(2^steps).
std::vector<ZmPoly> multifactor_lift(const ZmPoly& target, const std::vector<MPoly>& factors,
                                     const Zp& F, int steps) {
  if (factors.size() == 1) {
    Integer m(static_cast<unsigned long>(F.p));
    for (int i = 0; i < steps; ++i) m *= m;
    return {zm_reduce(target, m)};
  }
  MPoly rest{1};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = mp_mul(rest, factors[i], F);
  MPoly s, t;
  mp_xgcd(factors[0], rest, F, s, t);
  LiftState st{to_zm(factors[0]), to_zm(rest), to_zm(s), to_zm(t)};
  Integer m(static_cast<unsigned long>(F.p));
  for (int i = 0; i < steps; ++i) {
    m *= m;
    st = hensel_step(zm_reduce(target, m), st, m);
  }
  std::vector<ZmPoly> out{st.f};
  const std::vector<MPoly> tail(factors.begin() + 1, factors.end());
  auto lifted = multifactor_lift(st.h, tail, F, steps);
  out.insert(out.end(), lifted.begin(), lifted.end());
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers.

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Integer content(const ZPoly& a) {
  Integer g(0);
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly primitive(ZPoly a) {
  const Integer g = content(a);
  if (sgn(g) == 0) return a;
  for (auto& c : a) c /= g;
  if (!a.empty() && sgn(a.back()) < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

// Exact division over Z; false if b does not divide a.
bool z_divide(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  ZPoly r = a;
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(r.size()) - 1;
  if (da < db) return false;
  quot.assign(da - db + 1, Integer(0));
  for (int k = da; k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    const Integer c = r[k] / b.back();
    quot[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  for (const auto& c : r) {
    if (sgn(c) != 0) return false;
  }
  trim(quot);
  return true;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

MPoly reduce_mod_p(const ZPoly& f, u64 p) {
  MPoly r(f.size());
  const Integer P(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod(f[i], P).get_ui();
  trim(r);
  return r;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_z(const ZPoly& input) {
  ZPoly f = primitive(input);
  trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) throw std::invalid_argument("factor_squarefree_z needs degree >= 1");
  if (n == 1) return {f};

  // Choose a prime with good reduction and few modular factors.
  std::vector<MPoly> best_factors;
  u64 best_p = 0;
  int good_primes = 0;
  std::mt19937_64 rng(0x5eed5eedULL);
  for (u64 p = 3; good_primes < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    const Zp F{p};
    MPoly fp = reduce_mod_p(f, p);
    if (deg(fp) != n) continue;
    if (deg(mp_gcd(fp, mp_deriv(fp, F), F)) != 0) continue;
    ++good_primes;
    std::vector<MPoly> facs;
    for (auto& [g, d] : distinct_degree(mp_monic(fp, F), F)) equal_degree(g, d, F, rng, facs);
    if (best_p == 0 || facs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1) return {f};
  }
  if (best_p == 0) throw std::runtime_error("no prime of good reduction found");

  const Zp F{best_p};
  const Integer lc = f.back();

  // Coefficient bound for factors of lc * f.
  Integer norm1(0);
  for (const auto& c : f) norm1 += abs(c);
  Integer bound = abs(lc) * norm1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= 2;

  int steps = 0;
  Integer modulus(static_cast<unsigned long>(best_p));
  while (modulus <= bound) {
    modulus *= modulus;
    ++steps;
  }

  // Monic target: f / lc mod p^(2^steps).
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZmPoly target(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) target[i] = mod(f[i] * lc_inv, modulus);
  std::vector<ZmPoly> lifted = multifactor_lift(target, best_factors, F, steps);

  // Subset recombination.
  std::vector<ZPoly> result;
  ZPoly g = f;
  const Integer half = modulus / 2;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    for (;;) {
      ZmPoly cand{mod(g.back(), modulus)};
      for (std::size_t i : idx) cand = zm_mul(cand, lifted[i], modulus);
      ZPoly c(cand.begin(), cand.end());
      for (auto& x : c) {
        if (x > half) x -= modulus;
      }
      trim(c);
      c = primitive(c);
      ZPoly q;
      if (c.size() >= 2 && z_divide(g, c, q)) {
        result.push_back(c);
        g = primitive(q);
        std::vector<ZmPoly> remaining;
        for (std::size_t i = 0; i < lifted.size(); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(lifted[i]);
        }
        lifted = std::move(remaining);
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      int pos = static_cast<int>(subset_size) - 1;
      while (pos >= 0 && idx[pos] == lifted.size() - subset_size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++subset_size;
  }
  if (g.size() >= 2) result.push_back(primitive(g));
  return result;
}

}  // namespace nonint::detail
