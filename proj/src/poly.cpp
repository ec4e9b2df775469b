#include "sst/poly.hpp"

#include <algorithm>
#include <sstream>

#include "sst/errors.hpp"

namespace sst {

namespace {

void normalize(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize(coeffs_);
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::x() { return RatPoly({0, 1}); }

RatPoly RatPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_roots(const std::vector<Rational>& roots) {
  RatPoly p = constant(1);
  for (const auto& r : roots) p = p * RatPoly({-r, 1});
  return p;
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

const Rational& RatPoly::leading() const {
  if (is_zero()) throw InvariantError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
  std::vector<Rational> r(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) r[i] += rhs.coeffs_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const { return *this + (-rhs); }

RatPoly RatPoly::operator-() const {
  RatPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> r(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rational& c) const {
  if (c == 0) return {};
  RatPoly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::pow(unsigned k) const {
  RatPoly result = constant(1);
  RatPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> RatPoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

zx::IntPoly RatPoly::to_primitive_int() const {
  mpz_class l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  zx::IntPoly r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i].get_num() * (l / coeffs_[i].get_den());
  return zx::primitive_part(r);
}

RatPoly RatPoly::from_int(const zx::IntPoly& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return RatPoly(std::move(c));
}

bool poly_less(const RatPoly& lhs, const RatPoly& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
  for (int i = lhs.degree(); i >= 0; --i) {
    if (lhs.coeffs()[i] != rhs.coeffs()[i]) return lhs.coeffs()[i] < rhs.coeffs()[i];
  }
  return false;
}

PolyDivision divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = r[k + db] * inv;
    if (c == 0) continue;
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[k + i] -= c * b.coeffs()[i];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return RatPoly::from_int(zx::gcd(a.to_primitive_int(), b.to_primitive_int())).monic();
}

RatPoly lcm(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_div(a * b, gcd(a, b)).monic();
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

Rational content(const RatPoly& p) {
  if (p.is_zero()) return 0;
  zx::IntPoly z = p.to_primitive_int();
  Rational c = p.leading() / Rational(z.back());
  return c < 0 ? Rational(-c) : c;
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p0) {
  std::vector<std::pair<RatPoly, int>> out;
  if (p0.degree() < 1) return out;
  RatPoly p = p0.monic();
  RatPoly dp = p.derivative();
  RatPoly a = gcd(p, dp);
  RatPoly b = exact_div(p, a);
  RatPoly c = exact_div(dp, a);
  RatPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    RatPoly f = gcd(b, d);
    b = exact_div(b, f);
    c = exact_div(d, f);
    d = c - b.derivative();
    if (f.degree() >= 1) out.emplace_back(f.monic(), i);
  }
  return out;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() < 1) return p.monic();
  return exact_div(p, gcd(p, p.derivative())).monic();
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ' ';
    s += to_string(p.coeffs()[i]);
  }
  return s;
}

std::string pretty(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeffs()[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    const bool unit = c == 1 && i > 0;
    if (!unit) {
      s += to_string(c);
      if (i > 0 && c.get_den() != 1) s += " ";
    }
    if (i > 0) s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

RatPoly parse_poly(const std::string& text) {
  std::istringstream in(text);
  std::vector<Rational> c;
  std::string tok;
  while (in >> tok) c.push_back(parse_rational(tok));
  return RatPoly(std::move(c));
}

RatFun::RatFun(RatPoly num, RatPoly den) {
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = RatPoly::constant(1);
    return;
  }
  RatPoly g = gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  const Rational l = den.leading();
  num_ = num * Rational(1 / l);
  den_ = den * Rational(1 / l);
}

RatFun RatFun::operator+(const RatFun& rhs) const {
  RatPoly g = gcd(den_, rhs.den_);
  RatPoly l = exact_div(den_, g);
  RatPoly r = exact_div(rhs.den_, g);
  return RatFun(num_ * r + rhs.num_ * l, den_ * r);
}

RatFun RatFun::operator-(const RatFun& rhs) const { return *this + rhs * Rational(-1); }

RatFun RatFun::operator*(const Rational& c) const {
  RatFun f(*this);
  if (c == 0) return RatFun();
  f.num_ = f.num_ * c;
  return f;
}

std::complex<double> RatFun::eval(std::complex<double> x) const { return num_.eval(x) / den_.eval(x); }

std::string to_string(const RatFun& f) { return to_string(f.num()) + " | " + to_string(f.den()); }

}  // namespace sst
