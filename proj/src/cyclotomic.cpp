#include "sst/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "sst/errors.hpp"

namespace sst {

const RatPoly& cyclotomic(int m) {
  if (m < 1) throw InputError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RatPoly>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  RatPoly p = RatPoly::monomial(1, m) - RatPoly::constant(1);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = exact_div(p, cyclotomic(d));
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(m, std::make_unique<RatPoly>(std::move(p)));
  return *it->second;
}

std::vector<int> totients(int limit) {
  std::vector<int> phi(static_cast<std::size_t>(limit) + 1);
  for (int i = 0; i <= limit; ++i) phi[i] = i;
  for (int i = 2; i <= limit; ++i) {
    if (phi[i] != i) continue;
    for (int j = i; j <= limit; j += i) phi[j] -= phi[j] / i;
  }
  return phi;
}

RatPoly sharp(const RatPoly& h) {
  if (h.is_zero()) throw InputError("sharp of the zero polynomial");
  const int d = h.degree();
  const RatPoly q({1, 0, 1});
  RatPoly out;
  RatPoly qi = RatPoly::constant(1);
  for (int i = 0; i <= d; ++i) {
    if (h.coeffs()[i] != 0) {
      mpz_class two;
      mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(d - i));
      out += qi * RatPoly::monomial(h.coeffs()[i] * Rational(two), d - i);
    }
    qi = qi * q;
  }
  return out;
}

int cyclotomic_order_limit(int degree) {
  if (degree < 1) return 0;
  return static_cast<int>(std::ceil(3.0 * std::pow(static_cast<double>(degree), 1.5)));
}

std::optional<std::vector<int>> factor_into_cyclotomics(const RatPoly& p, long m_bound) {
  if (p.is_zero()) return std::nullopt;
  RatPoly rest = p.monic();
  std::vector<int> orders;
  if (rest.degree() == 0) return orders;
  const long deg = rest.degree();
  if (m_bound <= 0) m_bound = 3 * deg * deg * deg;
  const int limit = static_cast<int>(std::min<long>(m_bound, cyclotomic_order_limit(rest.degree())));
  const std::vector<int> phi = totients(limit);
  for (int m = 1; m <= limit && rest.degree() > 0; ++m) {
    if (phi[m] > rest.degree()) continue;
    while (rest.degree() >= phi[m]) {
      auto [q, r] = divrem(rest, cyclotomic(m));
      if (!r.is_zero()) break;
      rest = q;
      orders.push_back(m);
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  return orders;
}

RatPoly cyclotomic_product(const std::vector<int>& orders) {
  RatPoly p = RatPoly::constant(1);
  for (int m : orders) p = p * cyclotomic(m);
  return p;
}

}  // namespace sst
