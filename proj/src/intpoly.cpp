#include "sst/intpoly.hpp"

#include <algorithm>
#include <utility>

namespace sst::zx {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.empty()) return p;
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  return divexact(p, g);
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

IntPoly scale(const IntPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  IntPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

IntPoly divexact(const IntPoly& a, const mpz_class& c) {
  IntPoly r(a);
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
  if (b.empty()) return a.empty();
  IntPoly r(a);
  const int db = degree(b);
  if (degree(r) < db) {
    if (quotient) quotient->clear();
    return r.empty();
  }
  IntPoly q(static_cast<std::size_t>(degree(r) - db + 1));
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class c = r.back() / b.back();
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  if (!r.empty()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a);
  const int db = degree(b);
  int e = degree(a) - db + 1;
  const mpz_class& lb = b.back();
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    mpz_class lr = r.back();
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
    trim(r);
    --e;
  }
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    r = scale(r, f);
  }
  return r;
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  if (a0.empty()) return primitive_part(b0);
  if (b0.empty()) return primitive_part(a0);
  IntPoly a = primitive_part(a0);
  IntPoly b = primitive_part(b0);
  if (degree(a) < degree(b)) std::swap(a, b);
  mpz_class g = 1;
  mpz_class h = 1;
  while (true) {
    const int delta = degree(a) - degree(b);
    IntPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return {mpz_class(1)};
    a = std::move(b);
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    b = divexact(r, g * hd);
    g = a.back();
    if (delta == 0) continue;
    // h <- g^delta / h^(delta-1)
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return primitive_part(b);
}

}  // namespace sst::zx
