#include "sst/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "sst/cyclotomic.hpp"
#include "sst/errors.hpp"

namespace sst {

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;  // low to high, trimmed

struct Fp {
  u64 p;

  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  FpPoly reduce(const zx::IntPoly& f) const {
    FpPoly r(f.size());
    mpz_class t;
    for (std::size_t i = 0; i < f.size(); ++i) {
      mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
      r[i] = t.get_ui();
    }
    trim(r);
    return r;
  }

  FpPoly sub(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  FpPoly add(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }

  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  FpPoly monic(const FpPoly& a) const {
    if (a.empty()) return a;
    u64 c = inv(a.back());
    FpPoly r(a);
    for (auto& x : r) x = mul(x, c);
    return r;
  }

  void divrem(const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r) const {
    FpPoly rem(a);
    const std::size_t db = b.size() - 1;
    const u64 binv = inv(b.back());
    FpPoly quo(rem.size() >= b.size() ? rem.size() - db : 0, 0);
    while (rem.size() >= b.size()) {
      const std::size_t shift = rem.size() - b.size();
      const u64 c = mul(rem.back(), binv);
      quo[shift] = c;
      for (std::size_t i = 0; i <= db; ++i) rem[i + shift] = sub(rem[i + shift], mul(c, b[i]));
      trim(rem);
    }
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
  }

  FpPoly mod(const FpPoly& a, const FpPoly& b) const {
    FpPoly r;
    divrem(a, b, nullptr, &r);
    return r;
  }

  FpPoly quo(const FpPoly& a, const FpPoly& b) const {
    FpPoly q;
    divrem(a, b, &q, nullptr);
    trim(q);
    return q;
  }

  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s a + t b = gcd(a, b), gcd monic.
  FpPoly xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const {
    FpPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
      FpPoly q, r;
      divrem(r0, r1, &q, &r);
      trim(q);
      FpPoly s2 = sub(s0, mul(q, s1));
      FpPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 c = inv(r0.back());
    for (auto& x : s0) x = mul(x, c);
    for (auto& x : t0) x = mul(x, c);
    s = s0;
    t = t0;
    return monic(r0);
  }

  FpPoly powmod(FpPoly base, const mpz_class& e, const FpPoly& m) const {
    FpPoly r = {1};
    base = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
  }

  FpPoly derivative(const FpPoly& a) const {
    if (a.size() < 2) return {};
    FpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }

  // Distinct-degree then equal-degree splitting of a monic square-free f.
  std::vector<FpPoly> factor_squarefree(FpPoly f, std::mt19937_64& rng) const {
    std::vector<FpPoly> out;
    FpPoly h = {0, 1};
    const FpPoly x = {0, 1};
    for (int d = 1; f.size() > 1; ++d) {
      if (2 * d > static_cast<int>(f.size()) - 1) {
        out.push_back(monic(f));
        f = {1};
        break;
      }
      h = powmod(h, mpz_class(static_cast<unsigned long>(p)), f);
      FpPoly g = gcd(sub(h, x), f);
      if (g.size() > 1) {
        split_equal_degree(g, d, rng, out);
        f = quo(f, g);
        h = mod(h, f);
      }
    }
    if (f.size() > 1) out.push_back(monic(f));
    return out;
  }

  void split_equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) const {
    const std::size_t n = f.size() - 1;
    if (static_cast<int>(n) == d) {
      out.push_back(f);
      return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coef(0, p - 1);
    while (true) {
      FpPoly a(n);
      for (auto& c : a) c = coef(rng);
      trim(a);
      if (a.size() < 2) continue;
      FpPoly b = sub(powmod(a, e, f), FpPoly{1});
      FpPoly g = gcd(b, f);
      if (g.size() > 1 && g.size() < f.size()) {
        split_equal_degree(g, d, rng, out);
        split_equal_degree(quo(f, g), d, rng, out);
        return;
      }
    }
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

zx::IntPoly to_int(const FpPoly& f) { return zx::IntPoly(f.begin(), f.end()); }

zx::IntPoly reduce_mod(const zx::IntPoly& f, const mpz_class& m) {
  zx::IntPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  zx::trim(r);
  return r;
}

// Lift f = g h (mod p) to (mod p^k) with g monic and lc(h) = lc(f) kept exact.
void hensel_lift(const Fp& fp, const zx::IntPoly& f, zx::IntPoly& g, zx::IntPoly& h, int k) {
  FpPoly gp = fp.reduce(g);
  FpPoly hp = fp.reduce(h);
  FpPoly s, t;
  fp.xgcd(gp, hp, s, t);
  mpz_class pk = fp.p;
  const mpz_class lc = f.back();
  h.back() = lc;
  for (int i = 1; i < k; ++i) {
    zx::IntPoly err = zx::sub(f, zx::mul(g, h));
    err = zx::divexact(err, pk);
    FpPoly e = fp.reduce(err);
    FpPoly te = fp.mul(t, e);
    FpPoly q, dg;
    fp.divrem(te, gp, &q, &dg);
    Fp::trim(q);
    FpPoly dh = fp.add(fp.mul(s, e), fp.mul(hp, q));
    g = zx::add(g, zx::scale(to_int(dg), pk));
    h = zx::add(h, zx::scale(to_int(dh), pk));
    pk *= fp.p;
    h = reduce_mod(h, pk);
    h.resize(f.size() - g.size() + 1);
    h.back() = lc;
    g = reduce_mod(g, pk);
  }
}

zx::IntPoly symmetric(const zx::IntPoly& f, const mpz_class& m) {
  zx::IntPoly r = reduce_mod(f, m);
  const mpz_class half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  zx::trim(r);
  return r;
}

// Factors a primitive square-free integer polynomial of degree >= 2.
std::vector<zx::IntPoly> zassenhaus(const zx::IntPoly& f) {
  const int n = zx::degree(f);
  const mpz_class lc = f.back();
  const zx::IntPoly df = [&] {
    zx::IntPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
    return d;
  }();

  std::mt19937_64 rng(0x5eedULL);
  u64 best_p = 0;
  std::vector<FpPoly> best;
  int tried = 0;
  for (u64 p = 3; tried < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    Fp fp{p};
    FpPoly fm = fp.reduce(f);
    if (fp.gcd(fm, fp.reduce(df)).size() > 1) continue;
    ++tried;
    std::vector<FpPoly> fs = fp.factor_squarefree(fp.monic(fm), rng);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw InvariantError("no suitable prime for factorization");
  if (best.size() == 1) return {f};

  // Coefficient bound for factors scaled by lc: |lc| 2^n ||f||_1.
  mpz_class norm = 0;
  for (const auto& c : f) norm += abs(c);
  mpz_class bound = 2 * abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  int k = 1;
  mpz_class modulus = best_p;
  while (modulus <= bound) {
    modulus *= best_p;
    ++k;
  }

  Fp fp{best_p};
  std::vector<zx::IntPoly> lifted;
  zx::IntPoly target = f;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    zx::IntPoly g = to_int(best[i]);
    FpPoly rest = {fp.reduce(zx::IntPoly{lc})[0]};
    for (std::size_t j = i + 1; j < best.size(); ++j) rest = fp.mul(rest, best[j]);
    zx::IntPoly h = to_int(rest);
    hensel_lift(fp, target, g, h, k);
    lifted.push_back(g);
    target = h;
  }
  // target has leading coefficient lc; make it monic mod p^k.
  mpz_class lc_inv;
  mpz_class lc_mod = lc;
  mpz_fdiv_r(lc_mod.get_mpz_t(), lc_mod.get_mpz_t(), modulus.get_mpz_t());
  mpz_invert(lc_inv.get_mpz_t(), lc_mod.get_mpz_t(), modulus.get_mpz_t());
  lifted.push_back(reduce_mod(zx::scale(target, lc_inv), modulus));

  std::vector<zx::IntPoly> out;
  zx::IntPoly rest = f;
  std::vector<zx::IntPoly> pool = lifted;
  for (std::size_t s = 1; 2 * s <= pool.size();) {
    bool found = false;
    std::vector<int> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
    while (true) {
      zx::IntPoly g = {rest.back()};
      for (int i : idx) g = reduce_mod(zx::mul(g, pool[i]), modulus);
      g = zx::primitive_part(symmetric(g, modulus));
      zx::IntPoly q;
      if (zx::divides(g, rest, &q)) {
        out.push_back(g);
        rest = zx::primitive_part(q);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.erase(pool.begin() + *it);
        found = true;
        break;
      }
      // next combination
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size() - s + i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zx::degree(rest) > 0) out.push_back(rest);
  return out;
}

}  // namespace

std::vector<std::pair<RatPoly, int>> factor(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    RatPoly rest = part;
    if (rest.coeff(0) == 0) {
      out.emplace_back(RatPoly::x(), mult);
      rest = exact_div(rest, RatPoly::x());
    }
    const int limit = cyclotomic_order_limit(rest.degree());
    const std::vector<int> phi = totients(std::max(limit, 1));
    for (int m = 1; m <= limit && rest.degree() > 0; ++m) {
      if (phi[m] > rest.degree()) continue;
      auto [q, r] = divrem(rest, cyclotomic(m));
      if (r.is_zero()) {
        out.emplace_back(cyclotomic(m), mult);
        rest = q;
      }
    }
    if (rest.degree() < 1) continue;
    if (rest.degree() == 1) {
      out.emplace_back(rest.monic(), mult);
      continue;
    }
    for (const auto& f : zassenhaus(rest.to_primitive_int())) out.emplace_back(RatPoly::from_int(f).monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return poly_less(l.first, r.first); });
  return out;
}

std::vector<RatPoly> irreducible_factors(const RatPoly& p) {
  std::vector<RatPoly> out;
  for (auto& [f, m] : factor(p)) out.push_back(std::move(f));
  return out;
}

}  // namespace sst
