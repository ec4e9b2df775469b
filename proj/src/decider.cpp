#include "sst/decider.hpp"

#include <algorithm>
#include <numeric>

#include "sst/cyclotomic.hpp"
#include "sst/errors.hpp"
#include "sst/resolvent.hpp"

namespace sst {

namespace {

RatPoly reduced_denominator(const RatFun& f) {
  if (f.num().is_zero()) return RatPoly::constant(1);
  return exact_div(f.den(), gcd(f.num(), f.den())).monic();
}

}  // namespace

PeriodicityVerdict decide_periodicity(const HermitianReduction& red, const std::vector<int>& S) {
  if (S.empty()) throw InputError("clone set S is empty");
  PeriodicityVerdict v;
  v.psi_s = psi(red, S);
  v.g = reduced_denominator(v.psi_s);
  v.g_sharp = sharp(v.g);
  auto orders = factor_into_cyclotomics(v.g_sharp);
  if (!orders) {
    v.reason = "not-cyclotomic";
    return v;
  }
  v.periodic = true;
  v.L_multiset = *orders;
  v.L = *orders;
  v.L.erase(std::unique(v.L.begin(), v.L.end()), v.L.end());
  v.min_period = 1;
  for (int m : v.L) v.min_period = std::lcm(v.min_period, static_cast<long>(m));
  return v;
}

TransferVerdict decide_transfer(const HermitianReduction& red, const std::vector<int>& S, const std::vector<int>& T) {
  TransferVerdict v;
  const RatFun psi_s = psi(red, S);
  if (!(psi_s == psi(red, T))) {
    v.reason = "not-cospectral";
    return v;
  }
  const PeriodicityVerdict period = decide_periodicity(red, S);
  if (!period.periodic) {
    v.reason = "not-periodic";
    return v;
  }
  v.tau = period.min_period;
  if (v.tau % 2 != 0) {
    v.reason = "odd-tau";
    return v;
  }
  for (int m : period.L_multiset) ((v.tau / m) % 2 == 0 ? v.L_plus : v.L_minus).push_back(m);

  const RatFun psi_st = psi(red, S, T);
  v.g_plus = reduced_denominator(psi_s - psi_st);
  v.g_minus = reduced_denominator(psi_s + psi_st);
  const RatPoly sp = sharp(v.g_plus);
  const RatPoly sm = sharp(v.g_minus);
  const RatPoly prod_plus = cyclotomic_product(v.L_plus);
  const RatPoly prod_minus = cyclotomic_product(v.L_minus);
  // g_minus collects the eigenvalues where the S and T components agree; those must be
  // t-th roots of unity for U^t x_a = x_b.
  if (sm == prod_plus && sp == prod_minus) {
    v.gamma = 1;
  } else if (sm == prod_minus && sp == prod_plus) {
    v.gamma = -1;
  } else {
    v.reason = "support-split-fails";
    return v;
  }
  v.occurs = true;
  v.time = v.tau / 2;
  return v;
}

bool decide_pretty_good_special(const Rational& c_squared) {
  if (c_squared <= 0 || c_squared > 1) throw InputError("support is not of the form {0, +c, -c} with 0 < c^2 <= 1");
  static const Rational geodetic[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  return std::find(std::begin(geodetic), std::end(geodetic), c_squared) == std::end(geodetic);
}

bool decide_pretty_good_special(const std::vector<RatPoly>& support) {
  RatPoly prod = RatPoly::constant(1);
  for (const auto& f : support) prod = prod * f.monic();
  const auto& c = prod.coeffs();
  if (prod.degree() != 3 || c[0] != 0 || c[2] != 0 || c[1] >= 0) {
    throw InputError("support is not of the form {0, +c, -c}");
  }
  return decide_pretty_good_special(Rational(-c[1]));
}

std::string format_orders(const std::vector<int>& orders) {
  std::string s = "{";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(orders[i]);
  }
  return s + "}";
}

std::string to_line(const PeriodicityVerdict& v) {
  if (!v.periodic) return "NOT_PERIODIC reason=" + v.reason;
  return "PERIODIC min_period=" + std::to_string(v.min_period) + " L=" + format_orders(v.L);
}

std::string to_line(const TransferVerdict& v) {
  if (!v.occurs) return "NO_TRANSFER stage=" + v.reason;
  return "TRANSFER time=" + std::to_string(v.time) + " gamma=" + (v.gamma > 0 ? "+1" : "-1");
}

}  // namespace sst
