#pragma once

#include <optional>
#include <vector>

#include "sst/poly.hpp"

namespace sst {

/// Phi_m by recursive exact division, memoized. Throws InputError for m < 1.
const RatPoly& cyclotomic(int m);

/// Euler phi for 0..limit.
std::vector<int> totients(int limit);

/// 2^d x^d h((x + 1/x) / 2) with d = deg h. Throws InputError on the zero polynomial.
RatPoly sharp(const RatPoly& h);

/// Largest order worth trying for a degree-n product of cyclotomics: m <= 3 phi(m)^(3/2) <= 3 n^(3/2).
int cyclotomic_order_limit(int degree);

/// Multiset L (ascending) with monic(p) = prod_{m in L} Phi_m and every m <= m_bound.
/// m_bound <= 0 selects 3 deg(p)^3. Returns nullopt when no such product exists.
std::optional<std::vector<int>> factor_into_cyclotomics(const RatPoly& p, long m_bound = 0);

RatPoly cyclotomic_product(const std::vector<int>& orders);

}  // namespace sst
