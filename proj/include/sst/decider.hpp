#pragma once

#include <string>
#include <vector>

#include "sst/poly.hpp"
#include "sst/reduction.hpp"

namespace sst {

struct PeriodicityVerdict {
  bool periodic = false;
  long min_period = 0;
  std::vector<int> L;            // distinct orders, ascending
  std::vector<int> L_multiset;   // orders with the multiplicity found in g^sharp
  std::string reason;
  RatFun psi_s;
  RatPoly g;
  RatPoly g_sharp;
};

struct TransferVerdict {
  bool occurs = false;
  long time = 0;
  int gamma = 0;
  long tau = 0;
  std::vector<int> L_plus;   // tau/m even
  std::vector<int> L_minus;  // tau/m odd
  RatPoly g_plus;            // reduced denominator of psi_S - psi_{S,T}
  RatPoly g_minus;           // reduced denominator of psi_S + psi_{S,T}
  std::string reason;        // not-cospectral | not-periodic | odd-tau | support-split-fails
};

/// W-periodicity at the clones S: psi_S = p/q, g = q / gcd(p, q), factor g^sharp into cyclotomics.
PeriodicityVerdict decide_periodicity(const HermitianReduction& red, const std::vector<int>& S);
inline PeriodicityVerdict decide_periodicity(const HermitianReduction& red) { return decide_periodicity(red, red.S); }

/// Pointwise perfect transfer from S to T at an integer step, with the minimal step.
TransferVerdict decide_transfer(const HermitianReduction& red, const std::vector<int>& S, const std::vector<int>& T);
inline TransferVerdict decide_transfer(const HermitianReduction& red) { return decide_transfer(red, red.S, red.T); }

/// Support {0, +c, -c}: pretty good transfer iff arccos(c) is not a rational multiple of pi,
/// i.e. c^2 is none of 1/4, 1/2, 3/4, 1. Throws InputError unless 0 < c^2 <= 1.
bool decide_pretty_good_special(const Rational& c_squared);
/// Same, from the irreducible support factors; they must multiply to x (x^2 - c^2).
bool decide_pretty_good_special(const std::vector<RatPoly>& support);

std::string to_line(const PeriodicityVerdict& v);
std::string to_line(const TransferVerdict& v);
std::string format_orders(const std::vector<int>& orders);

}  // namespace sst
